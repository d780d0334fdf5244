#include "hardcore/graph.hpp"

#include <algorithm>
#include <bit>

namespace hardcore {

namespace {

constexpr Mode kModeCapacity = 64;
constexpr Mode kBruteForceCap = 24;

} // namespace

ConstraintGraph::ConstraintGraph(Mode n_modes, std::vector<std::pair<Mode, Mode>> edges,
                                 std::vector<double> vertex_weights,
                                 std::vector<double> hopping_weights)
    : n_modes_(n_modes) {
    if (n_modes < 1)
        throw logic_error("graph: n_modes must be positive");
    if (n_modes > kModeCapacity)
        throw size_error("graph: n_modes exceeds the 64-mode capacity");
    if (!hopping_weights.empty() && hopping_weights.size() != edges.size())
        throw logic_error("graph: hopping_weights must align with the edge list");
    if (!vertex_weights.empty() && vertex_weights.size() != static_cast<std::size_t>(n_modes))
        throw logic_error("graph: vertex_weights must have one entry per mode");

    if (vertex_weights.empty())
        vertex_weights.assign(static_cast<std::size_t>(n_modes), 1.0);
    for (double u : vertex_weights)
        if (!(u >= 0.0))
            throw logic_error("graph: vertex weights must be nonnegative");
    if (hopping_weights.empty())
        hopping_weights.assign(edges.size(), 0.0);

    // Canonicalize: order endpoints, then sort edges together with their weights.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto& [a, b] = edges[e];
        if (a == b)
            throw logic_error("graph: self-loop edge");
        if (a < 0 || b < 0 || a >= n_modes || b >= n_modes)
            throw logic_error("graph: edge endpoint out of range");
        if (a > b)
            std::swap(a, b);
        order[e] = e;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return edges[x] < edges[y]; });

    edges_.reserve(edges.size());
    hopping_weights_.reserve(edges.size());
    for (std::size_t e : order) {
        if (!edges_.empty() && edges_.back() == edges[e])
            throw logic_error("graph: duplicate edge");
        edges_.push_back(edges[e]);
        hopping_weights_.push_back(hopping_weights[e]);
    }
    vertex_weights_ = std::move(vertex_weights);

    neighbor_masks_.assign(static_cast<std::size_t>(n_modes), 0);
    for (const auto& [a, b] : edges_) {
        neighbor_masks_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        neighbor_masks_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
}

bool ConstraintGraph::has_edge(Mode a, Mode b) const {
    if (a > b)
        std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

bool ConstraintGraph::is_independent(std::uint64_t mask) const {
    std::uint64_t rest = mask;
    while (rest) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        if (mask & neighbor_masks_[static_cast<std::size_t>(i)])
            return false;
    }
    return true;
}

ConstraintGraph ConstraintGraph::with_vertex_weights(std::vector<double> w) const {
    return ConstraintGraph(n_modes_, edges_, std::move(w), hopping_weights_);
}

ConstraintGraph ConstraintGraph::with_hopping_weights(std::vector<double> w) const {
    return ConstraintGraph(n_modes_, edges_, vertex_weights_, std::move(w));
}

ConstraintGraph ConstraintGraph::with_uniform_hopping(double w) const {
    return with_hopping_weights(std::vector<double>(edges_.size(), w));
}

bool ConstraintGraph::same_topology(const ConstraintGraph& other) const {
    return n_modes_ == other.n_modes_ && edges_ == other.edges_;
}

bool ConstraintGraph::operator==(const ConstraintGraph& other) const {
    return same_topology(other) && vertex_weights_ == other.vertex_weights_ &&
           hopping_weights_ == other.hopping_weights_;
}

const std::array<Mode, 3>& GadgetLayout::qubit(int q) const {
    if (q < 0 || static_cast<std::size_t>(q) >= qubit_modes.size())
        throw logic_error("layout: unknown logical qubit");
    return qubit_modes[static_cast<std::size_t>(q)];
}

const std::array<Mode, 3>& GadgetLayout::mediator(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    auto it = mediator_modes.find({i, j});
    if (it == mediator_modes.end())
        throw logic_error("layout: no mediator triple for this qubit pair");
    return it->second;
}

void GadgetLayout::validate(Mode n_modes) const {
    std::uint64_t seen = 0;
    auto claim = [&](const std::array<Mode, 3>& triple) {
        for (Mode m : triple) {
            if (m < 0 || m >= n_modes)
                throw logic_error("layout: mode outside the companion graph");
            const std::uint64_t bit = std::uint64_t{1} << m;
            if (seen & bit)
                throw logic_error("layout: overlapping mode triples");
            seen |= bit;
        }
    };
    for (const auto& triple : qubit_modes)
        claim(triple);
    for (const auto& [pair, triple] : mediator_modes)
        claim(triple);
}

ConstraintGraph build_triangle_graph() {
    return ConstraintGraph(3, {{0, 1}, {1, 2}, {0, 2}});
}

GadgetLayout two_qubit_layout() {
    GadgetLayout layout;
    layout.qubit_modes = {{0, 1, 2}, {3, 4, 5}};
    layout.mediator_modes[{0, 1}] = {6, 7, 8};
    return layout;
}

ConstraintGraph build_interaction_graph(std::pair<int, int> qubits, const GadgetLayout& layout) {
    const auto& qi = layout.qubit(qubits.first);
    const auto& qj = layout.qubit(qubits.second);
    const auto& med = layout.mediator(qubits.first, qubits.second);

    Mode n = 0;
    for (Mode m : qi)
        n = std::max(n, m + 1);
    for (Mode m : qj)
        n = std::max(n, m + 1);
    for (Mode m : med)
        n = std::max(n, m + 1);

    GadgetLayout local;
    local.qubit_modes = {qi, qj};
    local.mediator_modes[{0, 1}] = med;
    local.validate(n);

    const auto [i1, i2, i3] = qi;
    const auto [j1, j2, j3] = qj;
    const auto [x, y, z] = med;
    std::vector<std::pair<Mode, Mode>> edges = {
        {i1, i2}, {i2, i3}, {i1, i3},
        {j1, j2}, {j2, j3}, {j1, j3},
        {i2, x},  {j2, x},  {i3, y},  {j3, y}, {i1, z}, {j1, z},
    };
    return ConstraintGraph(n, std::move(edges));
}

MaxWeightSet max_weight_independent_set(const ConstraintGraph& graph) {
    const Mode n = graph.n_modes();
    if (n > kBruteForceCap)
        throw size_error("max_weight_independent_set: graph exceeds the brute-force cap of 24 modes");

    MaxWeightSet best; // empty set, weight 0
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        if (!graph.is_independent(mask))
            continue;
        double w = 0.0;
        for (std::uint64_t rest = mask; rest;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            w += graph.vertex_weight(i);
        }
        // Ascending scan plus strict comparison keeps the smallest bitmask on ties.
        if (w > best.weight) {
            best.weight = w;
            best.mask = mask;
        }
    }
    return best;
}

ConstraintGraph complement_graph(const ConstraintGraph& graph) {
    std::vector<std::pair<Mode, Mode>> edges;
    for (Mode a = 0; a < graph.n_modes(); ++a)
        for (Mode b = a + 1; b < graph.n_modes(); ++b)
            if (!graph.has_edge(a, b))
                edges.emplace_back(a, b);
    return ConstraintGraph(graph.n_modes(), std::move(edges), graph.vertex_weights());
}

} // namespace hardcore
