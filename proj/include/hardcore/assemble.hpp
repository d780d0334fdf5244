#pragma once

#include <span>
#include <vector>

#include "hardcore/fock.hpp"
#include "hardcore/sparse.hpp"

namespace hardcore {

/// One hopping term w * (a_a^dag a_b + a_b^dag a_a).
struct HopTerm {
    Mode a = 0;
    Mode b = 0;
    double w = 0.0;
};

/// One diagonal term coeff * P_mode, with P_mode the product of
/// (1 - n_j) over the graph neighbors j of `mode`.
struct ProjectorTerm {
    Mode mode = 0;
    double coeff = 1.0;
};

/// Hopping Hamiltonian sum_{ij in E} w_ij (a_i^dag a_j + a_j^dag a_i) on a
/// hard-core basis. Matrix elements whose endpoint violates a constraint are
/// dropped, which realizes the restriction to the hard-core subspace.
SparseHermitian assemble_hopping(const ConstraintGraph& graph, const FockBasis& basis);

/// Same operator on an explicit sorted state list (used for cross-sector
/// block checks); states need not share a particle number.
SparseHermitian assemble_hopping_on_states(const ConstraintGraph& graph,
                                           std::span<const std::uint64_t> states);

/// Arbitrary hop list on a basis, same drop rule.
SparseHermitian assemble_hop_terms(std::span<const HopTerm> hops, const FockBasis& basis);

/// Diagonal projector P_i = prod_{j | ij in E} (1 - n_j).
SparseHermitian assemble_projector_term(const ConstraintGraph& graph, Mode i,
                                        const FockBasis& basis);

/// Weighted sum of projector terms (single pass over the basis).
SparseHermitian assemble_projector_sum(const ConstraintGraph& graph,
                                       std::span<const ProjectorTerm> terms,
                                       const FockBasis& basis);

/// Diagonal number operator sum_i c_i n_i with c_i the vertex weights.
SparseHermitian assemble_number_weighted(const ConstraintGraph& graph, const FockBasis& basis);

} // namespace hardcore
