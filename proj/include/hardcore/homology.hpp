#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hardcore/assemble.hpp"
#include "hardcore/fock.hpp"
#include "hardcore/sparse.hpp"

namespace hardcore {

/// Weighted independence-complex machinery.
///
/// Conventions used throughout this module:
///  * Level k holds the k-vertex independent sets, so the topological
///    dimension of a level-k simplex is k-1. Level 0 is the single empty
///    simplex (the vacuum), which makes the homology reduced: the bottom
///    Betti number of a complex with c components is c-1, not c.
///  * Simplices are oriented by ascending vertex order, and the boundary of
///    a simplex removes its i-th vertex (1-based position) with sign (-1)^i.
///  * Vertex weights enter as one factor u_v per removed vertex; this is the
///    matrix representation in which the weighted inner product is the plain
///    dot product, so adjoints are transposes.

/// Signed, weighted boundary map from level k to level k-1.
struct BoundaryMap {
    int k = 0;
    FockBasis domain;   // level k
    FockBasis codomain; // level k-1
    Eigen::MatrixXd matrix;
};

BoundaryMap boundary_operator(const ConstraintGraph& graph, int k);

/// Matrix of the supercharge Q = sum_i u_i P_i a_i restricted to the
/// hard-core sectors, mapping level k to level k-1. Assembled fermionically;
/// equals minus the boundary matrix.
Eigen::MatrixXd supercharge(const ConstraintGraph& graph, int k);

/// Combinatorial Laplacian d_k^T d_k + d_{k+1} d_{k+1}^T on level k.
SparseHermitian laplacian(const ConstraintGraph& graph, int k);

enum class SusyForm {
    bare_hopping,     // sum u_i u_j (a_i^dag a_j + h.c.) + sum u_i^2 P_i
    projector_dressed // sum u_i u_j (P_i a_i^dag a_j P_j + h.c.) + sum u_i^2 P_i
};

/// Supersymmetric Hamiltonian on the hard-core k-particle basis. Both forms
/// produce identical matrices there.
SparseHermitian build_susy_hamiltonian(const ConstraintGraph& graph, int k,
                                       SusyForm form = SusyForm::bare_hopping);

/// Kernel dimension of the level-k Laplacian (reduced Betti number), via a
/// 1e-8 singular-value threshold.
int betti(const ConstraintGraph& graph, int k);

struct HomologyReport {
    int dim = 0;
    double min_eig = 0.0;
    int betti = 0;
    std::vector<double> spectrum_head;
};

/// Dense summary of the level-k Laplacian (dim, smallest eigenvalue, Betti
/// number, lowest <= 8 eigenvalues).
HomologyReport homology_report(const ConstraintGraph& graph, int k);

/// Cache of the hard-core bases for levels 0..n of one graph.
class SimplexBasis {
public:
    explicit SimplexBasis(const ConstraintGraph& graph);

    const ConstraintGraph& graph() const noexcept { return graph_; }
    int max_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    const FockBasis& level(int k) const;

private:
    ConstraintGraph graph_;
    std::vector<FockBasis> levels_;
};

} // namespace hardcore
