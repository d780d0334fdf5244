#include "hardcore/gadget.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace hardcore {

namespace {

constexpr double kGroundTol = 1e-10;
constexpr double kFisEdgeOffset = -10.0 / 9.0;      // identity part of the effective pair term
constexpr double kLaplacianEdgeOffset = 3.0 / 4.0;  // 4/3 (first order) - 7/12 (second order)

std::vector<HopTerm> triangle_hops(const std::array<Mode, 3>& triple, double w) {
    return {{triple[0], triple[1], w}, {triple[1], triple[2], w}, {triple[0], triple[2], w}};
}

/// The six mediator hops of one coupled pair, split as {x,y}-part then z-part.
std::pair<std::vector<HopTerm>, std::vector<HopTerm>> mediator_hops(
    const std::array<Mode, 3>& qi, const std::array<Mode, 3>& qj,
    const std::array<Mode, 3>& med, double w) {
    const auto [i1, i2, i3] = qi;
    const auto [j1, j2, j3] = qj;
    const auto [x, y, z] = med;
    std::vector<HopTerm> v1 = {{i2, x, w}, {j2, x, w}, {i3, y, w}, {j3, y, w}};
    std::vector<HopTerm> v2 = {{i1, z, w}, {j1, z, w}};
    return {std::move(v1), std::move(v2)};
}

/// |ab> = S_{i,a} S_{j,b} |vac> expanded over a 2-particle basis, with the
/// fermionic sign of the creation-operator pair tracked exactly.
Eigen::VectorXd encoded_pair_state(const FockBasis& basis, const std::array<Mode, 3>& qi,
                                   const std::array<Mode, 3>& qj, const Eigen::Vector3d& ci,
                                   const Eigen::Vector3d& cj) {
    Eigen::VectorXd vec = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
    for (int p = 0; p < 3; ++p) {
        for (int q = 0; q < 3; ++q) {
            const auto first = apply_creation(FockState{0}, qj[static_cast<std::size_t>(q)]);
            const auto second = apply_creation(first->state, qi[static_cast<std::size_t>(p)]);
            if (!second)
                throw logic_error("encoded_pair_state: qubit triples overlap");
            const auto idx = basis.index_of(second->state.mask);
            if (!idx)
                throw logic_error("encoded_pair_state: encoded state leaves the basis");
            vec[static_cast<Eigen::Index>(*idx)] +=
                ci[p] * cj[q] * static_cast<double>(first->sign * second->sign);
        }
    }
    return vec;
}

void check_low_basis(const SparseHermitian& h0, const Eigen::MatrixXd& low) {
    if (low.rows() != h0.dim() || low.cols() < 1)
        throw logic_error("sw: low basis shape does not match h0");
    const Eigen::MatrixXd gram = low.transpose() * low;
    if ((gram - Eigen::MatrixXd::Identity(low.cols(), low.cols())).cwiseAbs().maxCoeff() > 1e-10)
        throw logic_error("sw: low basis is not orthonormal");
    const Eigen::MatrixXd h0d = h0.to_dense();
    if ((h0d * low).cwiseAbs().maxCoeff() > kGroundTol)
        throw logic_error("sw: low basis is not an exact ground space of h0");
}

} // namespace

EncodedQubit encode_qubit() {
    const double r3 = std::sqrt(3.0);
    EncodedQubit q;
    q.s0 << -2.0, 1.0 + r3, 1.0 - r3;
    q.s1 << -2.0, 1.0 - r3, 1.0 + r3;
    q.s0 /= 2.0 * r3;
    q.s1 /= 2.0 * r3;
    q.s2 << 1.0, 1.0, 1.0;
    q.s2 /= r3;
    return q;
}

double TargetHamiltonian::coupling_scale() const {
    return flavor == Flavor::fis ? 4.0 / 9.0 : 3.0 / 8.0;
}

PauliSum TargetHamiltonian::to_pauli() const {
    std::vector<PauliTerm> terms;
    const double scale = coupling_scale();
    for (const auto& e : edges) {
        std::string xx(static_cast<std::size_t>(n_qubits), 'I');
        std::string zz = xx;
        xx[static_cast<std::size_t>(e.i)] = xx[static_cast<std::size_t>(e.j)] = 'X';
        zz[static_cast<std::size_t>(e.i)] = zz[static_cast<std::size_t>(e.j)] = 'Z';
        terms.push_back({scale * e.mu, std::move(xx)});
        terms.push_back({scale * e.mu, std::move(zz)});
    }
    return PauliSum::from_terms(n_qubits, std::move(terms));
}

double TargetHamiltonian::min_eigenvalue() const {
    if (edges.empty())
        return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_pauli().to_matrix(),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0];
}

TargetHamiltonian TargetHamiltonian::from_pauli(const PauliSum& sum, Flavor flavor) {
    TargetHamiltonian target;
    target.n_qubits = sum.n_qubits();
    target.flavor = flavor;
    const double scale = target.coupling_scale();

    std::map<std::pair<int, int>, std::pair<double, double>> pair_coeffs; // (xx, zz)
    for (const auto& term : sum.terms()) {
        std::vector<int> support;
        char letter = 'I';
        for (int q = 0; q < sum.n_qubits(); ++q) {
            const char l = term.word[static_cast<std::size_t>(q)];
            if (l == 'I')
                continue;
            support.push_back(q);
            if (letter == 'I')
                letter = l;
            else if (letter != l)
                throw parse_error("target: mixed-letter word " + term.word);
        }
        if (support.size() != 2 || (letter != 'X' && letter != 'Z'))
            throw parse_error("target: word " + term.word +
                              " is not a two-qubit XX or ZZ coupling");
        auto& [xx, zz] = pair_coeffs[{support[0], support[1]}];
        (letter == 'X' ? xx : zz) += term.coeff;
    }
    for (const auto& [pair, coeffs] : pair_coeffs) {
        const auto [xx, zz] = coeffs;
        if (std::abs(xx - zz) > 1e-12)
            throw parse_error("target: XX and ZZ coefficients differ on a qubit pair");
        const double mu = xx / scale;
        if (mu < 0.0)
            throw logic_error("target: negative coupling is unsupported");
        target.edges.push_back({pair.first, pair.second, mu});
    }
    return target;
}

TwoQubitGadget make_two_qubit_gadget(Flavor flavor) {
    GadgetLayout layout = two_qubit_layout();
    ConstraintGraph graph = build_interaction_graph({0, 1}, layout);
    FockBasis basis = enumerate_basis(graph, 2);

    const auto& qi = layout.qubit(0);
    const auto& qj = layout.qubit(1);
    const auto& med = layout.mediator(0, 1);

    std::vector<HopTerm> h0_hops = triangle_hops(qi, 1.0);
    const auto more = triangle_hops(qj, 1.0);
    h0_hops.insert(h0_hops.end(), more.begin(), more.end());
    SparseHermitian h0 = assemble_hop_terms(h0_hops, basis);
    if (flavor == Flavor::fis) {
        // One +I per encoded qubit pins the code space at energy zero.
        h0 = sparse_sum(h0, 1.0, SparseHermitian::identity(h0.dim(), 2.0), 1.0);
    } else {
        std::vector<ProjectorTerm> diag;
        for (Mode m : qi)
            diag.push_back({m, 1.0});
        for (Mode m : qj)
            diag.push_back({m, 1.0});
        h0 = sparse_sum(h0, 1.0, assemble_projector_sum(graph, diag, basis), 1.0);
    }

    const auto [v1_hops, v2_hops] = mediator_hops(qi, qj, med, 1.0);
    SparseHermitian v1 = assemble_hop_terms(v1_hops, basis);
    SparseHermitian v2 = assemble_hop_terms(v2_hops, basis);
    const HopTerm v1p_hop = v1_hops.front();
    SparseHermitian v1_prime = assemble_hop_terms(std::span(&v1p_hop, 1), basis);
    SparseHermitian v_main = sparse_sum(v1, 1.0, v2, 1.0);

    SparseHermitian v_extra = SparseHermitian::from_triplets(static_cast<int>(basis.size()), {});
    if (flavor == Flavor::laplacian) {
        std::vector<ProjectorTerm> med_diag;
        for (Mode m : med)
            med_diag.push_back({m, 1.0});
        v_extra = assemble_projector_sum(graph, med_diag, basis);
    }

    const EncodedQubit enc = encode_qubit();
    Eigen::MatrixXd low(static_cast<Eigen::Index>(basis.size()), 4);
    low.col(0) = encoded_pair_state(basis, qi, qj, enc.s0, enc.s0);
    low.col(1) = encoded_pair_state(basis, qi, qj, enc.s0, enc.s1);
    low.col(2) = encoded_pair_state(basis, qi, qj, enc.s1, enc.s0);
    low.col(3) = encoded_pair_state(basis, qi, qj, enc.s1, enc.s1);

    return TwoQubitGadget{flavor,
                          std::move(graph),
                          std::move(layout),
                          std::move(basis),
                          std::move(h0),
                          std::move(v1_prime),
                          std::move(v1),
                          std::move(v2),
                          std::move(v_main),
                          std::move(v_extra),
                          std::move(low)};
}

Eigen::MatrixXd sw_first_order(const SparseHermitian& h0, const SparseHermitian& v,
                               const Eigen::MatrixXd& low_basis) {
    check_low_basis(h0, low_basis);
    return low_basis.transpose() * v.to_dense() * low_basis;
}

Eigen::MatrixXd sw_second_order(const SparseHermitian& h0, const SparseHermitian& v_main,
                                const SparseHermitian& v_extra,
                                const Eigen::MatrixXd& low_basis) {
    check_low_basis(h0, low_basis);
    const Eigen::Index n_low = low_basis.cols();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h0.to_dense());
    if (solver.info() != Eigen::Success)
        throw numeric_error("sw_second_order: eigendecomposition of h0 failed");
    const auto& evals = solver.eigenvalues();

    Eigen::Index n_kernel = 0;
    while (n_kernel < evals.size() && evals[n_kernel] < 1e-8)
        ++n_kernel;
    if (n_kernel != n_low)
        throw logic_error("sw_second_order: ground degeneracy of h0 does not match the low basis");
    const Eigen::Index n_exc = evals.size() - n_kernel;
    if (n_exc > 0 && evals[n_kernel] <= 1e-12)
        throw numeric_error("sw_second_order: excited block of h0 is singular");

    const Eigen::MatrixXd excited = solver.eigenvectors().rightCols(n_exc);
    const Eigen::VectorXd inv_evals = evals.tail(n_exc).cwiseInverse();

    const Eigen::MatrixXd coupling = excited.transpose() * v_main.to_dense() * low_basis;
    Eigen::MatrixXd effective = low_basis.transpose() * v_extra.to_dense() * low_basis;
    effective -= coupling.transpose() * inv_evals.asDiagonal() * coupling;
    // symmetrize: the two triple products round differently
    return 0.5 * (effective + effective.transpose());
}

GadgetInstance compile_target(const TargetHamiltonian& target, double delta) {
    if (target.n_qubits < 1)
        throw logic_error("compile: target needs at least one qubit");
    if (delta <= 0.0)
        throw logic_error("compile: delta must be positive");
    for (const auto& e : target.edges) {
        if (e.i < 0 || e.j < 0 || e.i >= target.n_qubits || e.j >= target.n_qubits || e.i == e.j)
            throw logic_error("compile: target edge references an unknown qubit");
        if (e.mu < 0.0)
            throw logic_error("compile: negative coupling is unsupported");
    }
    std::vector<TargetEdge> sorted_edges = target.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end(), [](const TargetEdge& a, const TargetEdge& b) {
        return std::pair(std::min(a.i, a.j), std::max(a.i, a.j)) <
               std::pair(std::min(b.i, b.j), std::max(b.i, b.j));
    });

    const int n_qubits = target.n_qubits;
    GadgetLayout layout;
    for (int q = 0; q < n_qubits; ++q)
        layout.qubit_modes.push_back({3 * q, 3 * q + 1, 3 * q + 2});
    Mode next = 3 * n_qubits;
    for (auto& e : sorted_edges) {
        if (e.i > e.j)
            std::swap(e.i, e.j);
        if (layout.mediator_modes.count({e.i, e.j}))
            throw logic_error("compile: duplicate target edge");
        layout.mediator_modes[{e.i, e.j}] = {next, next + 1, next + 2};
        next += 3;
    }
    const Mode n_modes = next;
    layout.validate(n_modes);

    // Per-mode weights: sqrt(delta) on qubit modes, sqrt(mu) on mediators;
    // every hopping weight below is a product of two of them.
    std::vector<double> u(static_cast<std::size_t>(n_modes), std::sqrt(delta));
    for (const auto& e : sorted_edges)
        for (Mode m : layout.mediator(e.i, e.j))
            u[static_cast<std::size_t>(m)] = std::sqrt(e.mu);

    std::vector<std::pair<Mode, Mode>> edges;
    std::vector<double> hop_w;
    auto add_edge = [&](Mode a, Mode b) {
        edges.emplace_back(a, b);
        hop_w.push_back(u[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(b)]);
    };
    for (int q = 0; q < n_qubits; ++q) {
        const auto& t = layout.qubit(q);
        add_edge(t[0], t[1]);
        add_edge(t[1], t[2]);
        add_edge(t[0], t[2]);
    }
    for (const auto& e : sorted_edges) {
        const auto& qi = layout.qubit(e.i);
        const auto& qj = layout.qubit(e.j);
        const auto& med = layout.mediator(e.i, e.j);
        add_edge(qi[1], med[0]);
        add_edge(qj[1], med[0]);
        add_edge(qi[2], med[1]);
        add_edge(qj[2], med[1]);
        add_edge(qi[0], med[2]);
        add_edge(qj[0], med[2]);
    }

    GadgetInstance instance{target.flavor,
                            ConstraintGraph(n_modes, edges, u, hop_w),
                            std::move(layout),
                            n_qubits,
                            delta,
                            0.0,
                            {},
                            sorted_edges};

    for (std::size_t e = 0; e < instance.graph.n_edges(); ++e) {
        const auto [a, b] = instance.graph.edges()[e];
        instance.terms.hops.push_back({a, b, instance.graph.hopping_weight(e)});
    }
    double mu_sum = 0.0;
    for (const auto& e : sorted_edges)
        mu_sum += e.mu;
    if (target.flavor == Flavor::fis) {
        instance.terms.identity = delta * n_qubits;
        instance.offset = kFisEdgeOffset * mu_sum;
    } else {
        for (Mode m = 0; m < n_modes; ++m) {
            const double um = u[static_cast<std::size_t>(m)];
            instance.terms.projectors.push_back({m, um * um});
        }
        instance.offset = kLaplacianEdgeOffset * mu_sum;
    }
    return instance;
}

GadgetInstance compile_target(const PauliSum& target, double delta, Flavor flavor) {
    return compile_target(TargetHamiltonian::from_pauli(target, flavor), delta);
}

SparseHermitian assemble_instance(const GadgetInstance& instance, const FockBasis& basis) {
    if (!basis.graph().same_topology(instance.graph))
        throw logic_error("assemble_instance: basis was built from a different graph");
    SparseHermitian h = assemble_hop_terms(instance.terms.hops, basis);
    if (!instance.terms.projectors.empty())
        h = sparse_sum(h, 1.0,
                       assemble_projector_sum(instance.graph, instance.terms.projectors, basis),
                       1.0);
    if (instance.terms.identity != 0.0)
        h = sparse_sum(h, 1.0, SparseHermitian::identity(h.dim(), instance.terms.identity), 1.0);
    return h;
}

SparseHermitian assemble_instance(const GadgetInstance& instance) {
    return assemble_instance(instance, enumerate_basis(instance.graph, instance.k));
}

bool audit_weight_factorization(const GadgetInstance& instance) {
    const auto& graph = instance.graph;
    for (const auto& hop : instance.terms.hops) {
        const double expected = graph.vertex_weight(hop.a) * graph.vertex_weight(hop.b);
        if (hop.w != expected)
            return false;
    }
    for (std::size_t e = 0; e < graph.n_edges(); ++e) {
        const auto [a, b] = graph.edges()[e];
        if (graph.hopping_weight(e) != graph.vertex_weight(a) * graph.vertex_weight(b))
            return false;
    }
    return true;
}

SimulationReport verify_simulation(const TargetHamiltonian& target,
                                   const std::vector<double>& deltas,
                                   const EigOptions& eig_opts) {
    if (deltas.size() < 3)
        throw logic_error("verify_simulation: need at least 3 delta points");
    for (std::size_t i = 1; i < deltas.size(); ++i)
        if (!(deltas[i] > deltas[i - 1]))
            throw logic_error("verify_simulation: deltas must be strictly increasing");

    const double lambda_target = target.min_eigenvalue();

    SimulationReport report;
    FockBasis basis = enumerate_basis(compile_target(target, deltas.front()).graph,
                                      target.n_qubits);
    for (double delta : deltas) {
        const GadgetInstance instance = compile_target(target, delta);
        const SparseHermitian h = assemble_instance(instance, basis);
        const double lambda_sim = min_eigenvalue(h, eig_opts);
        SimulationPoint point;
        point.delta = delta;
        point.lambda_sim = lambda_sim;
        point.lambda_target = lambda_target;
        point.offset = instance.offset;
        point.error = std::abs(lambda_sim - instance.offset - lambda_target);
        report.points.push_back(point);
    }

    // Least-squares slope of log(error) against log(delta); errors at the
    // floor of double precision are clamped so the fit stays finite.
    const std::size_t n = report.points.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : report.points) {
        const double x = std::log(p.delta);
        const double y = std::log(std::max(p.error, 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    report.exponent = (static_cast<double>(n) * sxy - sx * sy) / denom;
    return report;
}

} // namespace hardcore
