#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hardcore/graph.hpp"

namespace hardcore {

/// Occupation-number state: bit i set means mode i occupied.
struct FockState {
    std::uint64_t mask = 0;

    bool operator==(const FockState&) const = default;
};

/// State together with the fermionic sign picked up by an operator application.
struct SignedState {
    FockState state;
    int sign = 1;
};

/// a_i^dag with the canonical sign (-1)^(# occupied modes below i).
/// Empty result if the mode is already occupied.
std::optional<SignedState> apply_creation(FockState s, Mode mode);

/// a_i with the same sign rule; empty result if the mode is empty.
std::optional<SignedState> apply_annihilation(FockState s, Mode mode);

/// a_to^dag a_from, signs multiplied; empty if either step vanishes.
std::optional<SignedState> apply_hop(FockState s, Mode from, Mode to);

/// Ordered basis of all independence-constrained states with exactly k
/// particles. States are sorted ascending by bitmask value; the basis is
/// immutable once built.
class FockBasis {
public:
    FockBasis(ConstraintGraph graph, int k, std::vector<std::uint64_t> states);

    const ConstraintGraph& graph() const noexcept { return graph_; }
    int particle_number() const noexcept { return k_; }
    std::size_t size() const noexcept { return states_.size(); }
    std::uint64_t state(std::size_t idx) const { return states_.at(idx); }
    const std::vector<std::uint64_t>& states() const noexcept { return states_; }

    /// Position of a bitmask in the basis, or empty if the state is not a
    /// member (e.g. violates a constraint).
    std::optional<std::size_t> index_of(std::uint64_t mask) const;

private:
    ConstraintGraph graph_;
    int k_;
    std::vector<std::uint64_t> states_;
};

/// Enumerates the k-particle hard-core basis of a graph. An empty basis is
/// legal (e.g. k larger than the independence number).
FockBasis enumerate_basis(const ConstraintGraph& graph, int k);

} // namespace hardcore
