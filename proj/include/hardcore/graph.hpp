#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hardcore/error.hpp"

namespace hardcore {

using Mode = int;

/// Undirected constraint graph over fermionic modes. An edge (i,j) means the
/// independence constraint "modes i and j are never occupied together"; the
/// same edge optionally carries a hopping amplitude w_ij. Vertices carry
/// nonnegative weights u_i used both as classical objective coefficients and
/// as supersymmetric vertex weights.
///
/// Graphs are immutable after construction and safe to share across threads.
/// Mode indices are 0-based and capped at 64 so occupation states fit in one
/// machine word.
class ConstraintGraph {
public:
    /// Builds a graph from an edge list. `vertex_weights` defaults to all
    /// ones, `hopping_weights` (aligned with `edges`) to all zeros. Edges are
    /// stored canonically: endpoints ordered, list sorted, duplicates rejected.
    ConstraintGraph(Mode n_modes, std::vector<std::pair<Mode, Mode>> edges,
                    std::vector<double> vertex_weights = {},
                    std::vector<double> hopping_weights = {});

    Mode n_modes() const noexcept { return n_modes_; }
    const std::vector<std::pair<Mode, Mode>>& edges() const noexcept { return edges_; }
    std::size_t n_edges() const noexcept { return edges_.size(); }

    double vertex_weight(Mode i) const { return vertex_weights_.at(static_cast<std::size_t>(i)); }
    const std::vector<double>& vertex_weights() const noexcept { return vertex_weights_; }

    /// Hopping weight of the edge stored at `edge_index` (canonical order).
    double hopping_weight(std::size_t edge_index) const { return hopping_weights_.at(edge_index); }
    const std::vector<double>& hopping_weights() const noexcept { return hopping_weights_; }

    bool has_edge(Mode a, Mode b) const;

    /// Bitmask of the neighbors of mode i.
    std::uint64_t neighbor_mask(Mode i) const { return neighbor_masks_.at(static_cast<std::size_t>(i)); }

    /// True if no two occupied modes of `mask` are adjacent.
    bool is_independent(std::uint64_t mask) const;

    /// Derived copies (the graph itself never mutates).
    ConstraintGraph with_vertex_weights(std::vector<double> w) const;
    ConstraintGraph with_hopping_weights(std::vector<double> w) const;
    ConstraintGraph with_uniform_hopping(double w) const;

    /// Topology comparison: same modes and edge set (weights ignored).
    bool same_topology(const ConstraintGraph& other) const;

    bool operator==(const ConstraintGraph& other) const;

private:
    Mode n_modes_;
    std::vector<std::pair<Mode, Mode>> edges_;
    std::vector<double> vertex_weights_;
    std::vector<double> hopping_weights_;
    std::vector<std::uint64_t> neighbor_masks_;
};

/// Assignment of physical modes to logical qubits and mediator triples.
/// Each logical qubit owns an ordered triple (1,2,3); each coupled pair of
/// qubits owns a mediator triple (x,y,z). All triples must be pairwise
/// disjoint.
struct GadgetLayout {
    std::vector<std::array<Mode, 3>> qubit_modes;
    std::map<std::pair<int, int>, std::array<Mode, 3>> mediator_modes;

    const std::array<Mode, 3>& qubit(int q) const;
    const std::array<Mode, 3>& mediator(int i, int j) const;

    /// Throws a logic error if any triples overlap or a mode is out of range.
    void validate(Mode n_modes) const;
};

/// Result of the brute-force maximum-weight independent set oracle.
struct MaxWeightSet {
    double weight = 0.0;
    std::uint64_t mask = 0; // occupied modes of the optimal set
};

/// The 3-mode complete constraint graph used to encode one qubit.
ConstraintGraph build_triangle_graph();

/// Canonical layout for a single coupled pair: qubit 0 on modes 0..2,
/// qubit 1 on modes 3..5, mediators on modes 6..8.
GadgetLayout two_qubit_layout();

/// Two triangles joined by the six mediator constraint edges
/// (i2,x), (j2,x), (i3,y), (j3,y), (i1,z), (j1,z).
ConstraintGraph build_interaction_graph(std::pair<int, int> qubits, const GadgetLayout& layout);

/// Exhaustive maximum-weight independent set solver. Ties are broken toward
/// the numerically smallest occupation bitmask. Hard cap n_modes <= 24.
MaxWeightSet max_weight_independent_set(const ConstraintGraph& graph);

/// Complement on the same vertex set; vertex weights are preserved, hopping
/// weights of the (new) edges default to zero.
ConstraintGraph complement_graph(const ConstraintGraph& graph);

} // namespace hardcore
