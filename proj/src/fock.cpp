#include "hardcore/fock.hpp"

#include <algorithm>
#include <bit>

namespace hardcore {

namespace {

inline int parity_sign_below(std::uint64_t mask, Mode mode) {
    const std::uint64_t below = mask & ((std::uint64_t{1} << mode) - 1);
    return (std::popcount(below) & 1) ? -1 : 1;
}

} // namespace

std::optional<SignedState> apply_creation(FockState s, Mode mode) {
    const std::uint64_t bit = std::uint64_t{1} << mode;
    if (s.mask & bit)
        return std::nullopt;
    return SignedState{FockState{s.mask | bit}, parity_sign_below(s.mask, mode)};
}

std::optional<SignedState> apply_annihilation(FockState s, Mode mode) {
    const std::uint64_t bit = std::uint64_t{1} << mode;
    if (!(s.mask & bit))
        return std::nullopt;
    return SignedState{FockState{s.mask & ~bit}, parity_sign_below(s.mask, mode)};
}

std::optional<SignedState> apply_hop(FockState s, Mode from, Mode to) {
    auto removed = apply_annihilation(s, from);
    if (!removed)
        return std::nullopt;
    auto added = apply_creation(removed->state, to);
    if (!added)
        return std::nullopt;
    return SignedState{added->state, removed->sign * added->sign};
}

FockBasis::FockBasis(ConstraintGraph graph, int k, std::vector<std::uint64_t> states)
    : graph_(std::move(graph)), k_(k), states_(std::move(states)) {}

std::optional<std::size_t> FockBasis::index_of(std::uint64_t mask) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), mask);
    if (it == states_.end() || *it != mask)
        return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
}

FockBasis enumerate_basis(const ConstraintGraph& graph, int k) {
    const int n = graph.n_modes();
    std::vector<std::uint64_t> states;
    if (k == 0) {
        states.push_back(0);
    } else if (k > 0 && k <= n) {
        // Gosper's hack walks all n-choose-k masks in increasing order.
        std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        const std::uint64_t last = mask << (n - k);
        while (true) {
            if (graph.is_independent(mask))
                states.push_back(mask);
            if (mask == last)
                break;
            const std::uint64_t c = mask & (~mask + 1);
            const std::uint64_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return FockBasis(graph, k, std::move(states));
}

} // namespace hardcore
