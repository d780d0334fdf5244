#include "hardcore/assemble.hpp"

#include <bit>

namespace hardcore {

namespace {

void check_basis(const ConstraintGraph& graph, const FockBasis& basis, const char* who) {
    if (!graph.same_topology(basis.graph()))
        throw logic_error(std::string(who) + ": basis was built from a different graph");
}

void check_mode(const ConstraintGraph& graph, Mode m, const char* who) {
    if (m < 0 || m >= graph.n_modes())
        throw logic_error(std::string(who) + ": mode index out of range");
}

// Accumulates <t| w (a_a^dag a_b + a_b^dag a_a) |s> for every basis state s.
// Hops landing outside the state list contribute nothing.
template <typename IndexOf>
void add_hop(std::vector<Triplet>& out, std::span<const std::uint64_t> states, Mode a, Mode b,
             double w, IndexOf&& index_of) {
    if (w == 0.0)
        return;
    for (std::size_t col = 0; col < states.size(); ++col) {
        const FockState s{states[col]};
        for (const auto& [from, to] : {std::pair{b, a}, std::pair{a, b}}) {
            const auto hopped = apply_hop(s, from, to);
            if (!hopped)
                continue;
            const auto row = index_of(hopped->state.mask);
            if (!row)
                continue;
            // Keep the upper triangle once; the transpose element is implied.
            if (*row <= col)
                out.push_back({static_cast<int>(*row), static_cast<int>(col),
                               w * static_cast<double>(hopped->sign)});
        }
    }
}

} // namespace

SparseHermitian assemble_hopping_on_states(const ConstraintGraph& graph,
                                           std::span<const std::uint64_t> states) {
    std::vector<Triplet> triplets;
    auto index_of = [&](std::uint64_t mask) -> std::optional<std::size_t> {
        auto it = std::lower_bound(states.begin(), states.end(), mask);
        if (it == states.end() || *it != mask)
            return std::nullopt;
        return static_cast<std::size_t>(it - states.begin());
    };
    for (std::size_t e = 0; e < graph.n_edges(); ++e) {
        const auto [a, b] = graph.edges()[e];
        add_hop(triplets, states, a, b, graph.hopping_weight(e), index_of);
    }
    return SparseHermitian::from_triplets(static_cast<int>(states.size()), std::move(triplets));
}

SparseHermitian assemble_hopping(const ConstraintGraph& graph, const FockBasis& basis) {
    check_basis(graph, basis, "assemble_hopping");
    return assemble_hopping_on_states(graph, basis.states());
}

SparseHermitian assemble_hop_terms(std::span<const HopTerm> hops, const FockBasis& basis) {
    std::vector<Triplet> triplets;
    auto index_of = [&](std::uint64_t mask) { return basis.index_of(mask); };
    for (const auto& hop : hops) {
        check_mode(basis.graph(), hop.a, "assemble_hop_terms");
        check_mode(basis.graph(), hop.b, "assemble_hop_terms");
        add_hop(triplets, basis.states(), hop.a, hop.b, hop.w, index_of);
    }
    return SparseHermitian::from_triplets(static_cast<int>(basis.size()), std::move(triplets));
}

SparseHermitian assemble_projector_sum(const ConstraintGraph& graph,
                                       std::span<const ProjectorTerm> terms,
                                       const FockBasis& basis) {
    check_basis(graph, basis, "assemble_projector_sum");
    for (const auto& term : terms)
        check_mode(graph, term.mode, "assemble_projector_sum");
    std::vector<Triplet> triplets;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const std::uint64_t mask = basis.state(idx);
        double diag = 0.0;
        for (const auto& term : terms)
            if ((mask & graph.neighbor_mask(term.mode)) == 0)
                diag += term.coeff;
        if (diag != 0.0)
            triplets.push_back({static_cast<int>(idx), static_cast<int>(idx), diag});
    }
    return SparseHermitian::from_triplets(static_cast<int>(basis.size()), std::move(triplets));
}

SparseHermitian assemble_projector_term(const ConstraintGraph& graph, Mode i,
                                        const FockBasis& basis) {
    const ProjectorTerm term{i, 1.0};
    return assemble_projector_sum(graph, std::span(&term, 1), basis);
}

SparseHermitian assemble_number_weighted(const ConstraintGraph& graph, const FockBasis& basis) {
    check_basis(graph, basis, "assemble_number_weighted");
    std::vector<Triplet> triplets;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        double diag = 0.0;
        for (std::uint64_t rest = basis.state(idx); rest;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            diag += graph.vertex_weight(i);
        }
        if (diag != 0.0)
            triplets.push_back({static_cast<int>(idx), static_cast<int>(idx), diag});
    }
    return SparseHermitian::from_triplets(static_cast<int>(basis.size()), std::move(triplets));
}

} // namespace hardcore
