#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hardcore/assemble.hpp"
#include "hardcore/fock.hpp"
#include "hardcore/pauli.hpp"
#include "hardcore/sparse.hpp"

namespace hardcore {

enum class Flavor { fis, laplacian };

/// Closed-form coefficient vectors of the triangle-encoded qubit states over
/// the mode triple (1,2,3). s0 and s1 span the zero-energy code space; s2 is
/// the symmetric excited state.
struct EncodedQubit {
    Eigen::Vector3d s0;
    Eigen::Vector3d s1;
    Eigen::Vector3d s2;
};

EncodedQubit encode_qubit();

/// One coupled pair of the target Hamiltonian, coupling strength mu >= 0 on
/// mu * c * (X_i X_j + Z_i Z_j) with c the flavor constant.
struct TargetEdge {
    int i = 0;
    int j = 0;
    double mu = 0.0;
};

/// Two-qubit XZ target in edge-list form. The per-edge coupling is
/// coupling_scale() * mu_ij, with scale 4/9 for the independent-set flavor
/// and 3/8 for the Laplacian flavor.
struct TargetHamiltonian {
    int n_qubits = 1;
    std::vector<TargetEdge> edges;
    Flavor flavor = Flavor::fis;

    double coupling_scale() const;
    PauliSum to_pauli() const;
    double min_eigenvalue() const;

    /// Parses a PauliSum of the required shape; throws on negative couplings
    /// (unsupported) or on any malformed term (Y letters, unequal XX/ZZ
    /// pairs, one-local or >2-local words, identity component).
    static TargetHamiltonian from_pauli(const PauliSum& sum, Flavor flavor);
};

/// Canonical 9-mode two-qubit gadget with every operator assembled on the
/// 2-particle hard-core sector, plus the explicit encoded basis.
struct TwoQubitGadget {
    Flavor flavor = Flavor::fis;
    ConstraintGraph graph;
    GadgetLayout layout;
    FockBasis basis; // k = 2
    SparseHermitian h0;
    SparseHermitian v1_prime; // single hop (i2,x)
    SparseHermitian v1;       // hops through mediators x,y
    SparseHermitian v2;       // hops through mediator z
    SparseHermitian v_main;   // v1 + v2
    SparseHermitian v_extra;  // zero (fis) or P_x + P_y + P_z (laplacian)
    Eigen::MatrixXd low_basis; // columns |00>,|01>,|10>,|11>
};

TwoQubitGadget make_two_qubit_gadget(Flavor flavor);

/// First-order effective Hamiltonian: V projected onto the low basis.
/// Columns of low_basis must be orthonormal and annihilated by h0.
Eigen::MatrixXd sw_first_order(const SparseHermitian& h0, const SparseHermitian& v,
                               const Eigen::MatrixXd& low_basis);

/// Second-order effective Hamiltonian
///   (V_extra)_-- - (V_main)_-+ H0^{-1} (V_main)_+-
/// with H0^{-1} the pseudo-inverse on the orthogonal complement of the low
/// basis. Throws a logic error if the low basis is not an exact ground space
/// of h0, and a numeric error if the excited block is singular.
Eigen::MatrixXd sw_second_order(const SparseHermitian& h0, const SparseHermitian& v_main,
                                const SparseHermitian& v_extra, const Eigen::MatrixXd& low_basis);

/// Term list of a compiled instance. Hopping weights always factorize as
/// products of the per-mode weights stored in the graph.
struct GadgetTerms {
    double identity = 0.0;
    std::vector<HopTerm> hops;
    std::vector<ProjectorTerm> projectors;
};

struct GadgetInstance {
    Flavor flavor = Flavor::fis;
    ConstraintGraph graph;
    GadgetLayout layout;
    int k = 0;           // particle sector = number of logical qubits
    double delta = 0.0;  // interaction strength
    double offset = 0.0; // scalar effective-energy shift, subtracted on verify
    GadgetTerms terms;
    std::vector<TargetEdge> target_edges;
};

/// Compiles an XZ target into a hard-core instance:
///   H = Delta * sum_i H0_i + Delta^{1/2} * sum_e sqrt(mu_e) * Vmain_e
/// plus, for the Laplacian flavor, the diagonal u^2 P terms that make the
/// instance exactly the supersymmetric Hamiltonian of its vertex weights.
GadgetInstance compile_target(const TargetHamiltonian& target, double delta);
GadgetInstance compile_target(const PauliSum& target, double delta, Flavor flavor);

SparseHermitian assemble_instance(const GadgetInstance& instance, const FockBasis& basis);
SparseHermitian assemble_instance(const GadgetInstance& instance);

/// True when every hopping weight equals the product of its endpoint mode
/// weights bit-for-bit.
bool audit_weight_factorization(const GadgetInstance& instance);

struct SimulationPoint {
    double delta = 0.0;
    double lambda_sim = 0.0;
    double lambda_target = 0.0;
    double offset = 0.0;
    double error = 0.0;
};

struct SimulationReport {
    std::vector<SimulationPoint> points;
    double exponent = 0.0; // least-squares slope of log(error) vs log(delta)
};

/// Compiles the target at each delta, computes the offset-corrected
/// ground-energy error against the exact target minimum, and fits the
/// error-decay exponent. Deltas must be strictly increasing, >= 3 points.
SimulationReport verify_simulation(const TargetHamiltonian& target,
                                   const std::vector<double>& deltas,
                                   const EigOptions& eig_opts = {});

} // namespace hardcore
