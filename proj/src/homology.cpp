#include "hardcore/homology.hpp"

#include <bit>

#include <Eigen/Eigenvalues>

namespace hardcore {

namespace {

constexpr double kKernelTol = 1e-8;

} // namespace

BoundaryMap boundary_operator(const ConstraintGraph& graph, int k) {
    if (k < 1)
        throw logic_error("boundary_operator: level must be >= 1");
    FockBasis domain = enumerate_basis(graph, k);
    FockBasis codomain = enumerate_basis(graph, k - 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(codomain.size()),
                                              static_cast<Eigen::Index>(domain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const std::uint64_t mask = domain.state(col);
        int position = 0; // 1-based position of v in the ascending vertex order
        for (std::uint64_t rest = mask; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            ++position;
            const std::uint64_t face = mask & ~(std::uint64_t{1} << v);
            const auto row = codomain.index_of(face);
            if (!row)
                throw logic_error("boundary_operator: face missing from the lower level");
            const double sign = (position % 2 == 0) ? 1.0 : -1.0;
            m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) =
                sign * graph.vertex_weight(v);
        }
    }
    return BoundaryMap{k, std::move(domain), std::move(codomain), std::move(m)};
}

Eigen::MatrixXd supercharge(const ConstraintGraph& graph, int k) {
    if (k < 1)
        throw logic_error("supercharge: level must be >= 1");
    const FockBasis domain = enumerate_basis(graph, k);
    const FockBasis codomain = enumerate_basis(graph, k - 1);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(codomain.size()),
                                              static_cast<Eigen::Index>(domain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const FockState s{domain.state(col)};
        for (Mode i = 0; i < graph.n_modes(); ++i) {
            const auto removed = apply_annihilation(s, i);
            if (!removed)
                continue;
            // P_i after a_i: survives only if every neighbor of i is empty.
            if (removed->state.mask & graph.neighbor_mask(i))
                continue;
            const auto row = codomain.index_of(removed->state.mask);
            if (!row)
                continue;
            m(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col)) +=
                graph.vertex_weight(i) * static_cast<double>(removed->sign);
        }
    }
    return m;
}

SparseHermitian laplacian(const ConstraintGraph& graph, int k) {
    if (k < 0)
        throw logic_error("laplacian: level must be >= 0");
    const std::size_t dim = enumerate_basis(graph, k).size();
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    if (k >= 1) {
        const BoundaryMap down = boundary_operator(graph, k);
        acc += down.matrix.transpose() * down.matrix;
    }
    if (k + 1 <= graph.n_modes()) {
        const BoundaryMap up = boundary_operator(graph, k + 1);
        acc += up.matrix * up.matrix.transpose();
    }
    return sparse_from_dense(acc);
}

SparseHermitian build_susy_hamiltonian(const ConstraintGraph& graph, int k, SusyForm form) {
    const FockBasis basis = enumerate_basis(graph, k);

    std::vector<Triplet> triplets;
    for (std::size_t e = 0; e < graph.n_edges(); ++e) {
        const auto [a, b] = graph.edges()[e];
        const double w = graph.vertex_weight(a) * graph.vertex_weight(b);
        if (w == 0.0)
            continue;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            const FockState s{basis.state(col)};
            for (const auto& [from, to] : {std::pair{b, a}, std::pair{a, b}}) {
                std::optional<SignedState> hopped;
                if (form == SusyForm::bare_hopping) {
                    hopped = apply_hop(s, from, to);
                } else {
                    // P_to a_to^dag a_from P_from: each projector checks the
                    // neighbors of its mode on the state it acts on.
                    if (s.mask & graph.neighbor_mask(from))
                        continue;
                    hopped = apply_hop(s, from, to);
                    if (hopped && (hopped->state.mask & graph.neighbor_mask(to)))
                        hopped.reset();
                }
                if (!hopped)
                    continue;
                const auto row = basis.index_of(hopped->state.mask);
                if (!row || *row > col)
                    continue;
                triplets.push_back({static_cast<int>(*row), static_cast<int>(col),
                                    w * static_cast<double>(hopped->sign)});
            }
        }
    }

    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const std::uint64_t mask = basis.state(idx);
        double diag = 0.0;
        for (Mode i = 0; i < graph.n_modes(); ++i) {
            const double u = graph.vertex_weight(i);
            if (u != 0.0 && (mask & graph.neighbor_mask(i)) == 0)
                diag += u * u;
        }
        if (diag != 0.0)
            triplets.push_back({static_cast<int>(idx), static_cast<int>(idx), diag});
    }
    return SparseHermitian::from_triplets(static_cast<int>(basis.size()), std::move(triplets));
}

int betti(const ConstraintGraph& graph, int k) {
    const SparseHermitian lap = laplacian(graph, k);
    if (lap.dim() == 0)
        return 0;
    int kernel = 0;
    for (double ev : dense_spectrum(lap))
        if (ev < kKernelTol)
            ++kernel;
    return kernel;
}

HomologyReport homology_report(const ConstraintGraph& graph, int k) {
    const SparseHermitian lap = laplacian(graph, k);
    HomologyReport report;
    report.dim = lap.dim();
    if (lap.dim() == 0)
        return report;
    const std::vector<double> spectrum = dense_spectrum(lap);
    report.min_eig = spectrum.front();
    const std::size_t head = std::min<std::size_t>(spectrum.size(), 8);
    report.spectrum_head.assign(spectrum.begin(), spectrum.begin() + static_cast<long>(head));
    for (double ev : spectrum)
        if (ev < kKernelTol)
            ++report.betti;
    return report;
}

SimplexBasis::SimplexBasis(const ConstraintGraph& graph) : graph_(graph) {
    levels_.reserve(static_cast<std::size_t>(graph.n_modes()) + 1);
    for (int k = 0; k <= graph.n_modes(); ++k)
        levels_.push_back(enumerate_basis(graph, k));
}

const FockBasis& SimplexBasis::level(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= levels_.size())
        throw logic_error("SimplexBasis: level out of range");
    return levels_[static_cast<std::size_t>(k)];
}

} // namespace hardcore
