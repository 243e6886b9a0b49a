#include "fq/serial.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "fq/errors.hpp"

namespace fq::serial {

namespace {

// Fixed assignment order: breadth-first from vertex 0 with neighbors taken
// in generator order. Every vertex after the first has at least one earlier
// neighbor, which keeps the plain consistency scan effective.
std::vector<int> bfs_order(const CayleyGraph& g) {
    int count = int(g.vertex_count());
    std::vector<int> order;
    std::vector<char> seen(size_t(count), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (const Z2Vector& s : g.generators().elements()) {
            int w = int(uint64_t(v) ^ s.word());
            if (!seen[size_t(w)]) {
                seen[size_t(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    return order;
}

struct SerialSearch {
    const CayleyGraph& g;
    int count;
    std::vector<int> order;
    std::vector<int> image;      // indexed by vertex, -1 = unassigned
    std::vector<char> used;      // indexed by image
    std::vector<RawAut> found;

    explicit SerialSearch(const CayleyGraph& graph)
        : g(graph),
          count(int(graph.vertex_count())),
          order(bfs_order(graph)),
          image(size_t(count), -1),
          used(size_t(count), 0) {}

    void run(size_t depth) {
        if (depth == order.size()) {
            std::vector<uint32_t> table(static_cast<size_t>(count));
            for (int v = 0; v < count; ++v) table[size_t(v)] = uint32_t(image[size_t(v)]);
            found.push_back(RawAut(g.dimension(), std::move(table)));
            return;
        }
        int v = order[depth];
        for (int c = 0; c < count; ++c) {
            if (used[size_t(c)]) continue;
            bool ok = true;
            for (size_t k = 0; k < depth; ++k) {
                int w = order[k];
                if (g.adjacent_words(uint64_t(v), uint64_t(w)) !=
                    g.adjacent_words(uint64_t(c), uint64_t(image[size_t(w)]))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[size_t(v)] = c;
            used[size_t(c)] = 1;
            run(depth + 1);
            image[size_t(v)] = -1;
            used[size_t(c)] = 0;
        }
    }
};

}  // namespace

std::vector<RawAut> brute_force_automorphisms(const CayleyGraph& g) {
    if (g.dimension() > 5)
        throw LimitError("serial brute-force enumeration limited to n <= 5, got " +
                         std::to_string(g.dimension()));
    SerialSearch search(g);
    search.run(0);
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

std::map<int, uint64_t> four_cycle_census(const CayleyGraph& g) {
    if (g.dimension() > 7)
        throw LimitError("4-cycle census limited to n <= 7, got " + std::to_string(g.dimension()));
    uint64_t count = g.vertex_count();

    // Sorted neighbor word lists, intersected per endpoint pair.
    std::vector<std::vector<uint64_t>> nbr(static_cast<size_t>(count));
    for (uint64_t v = 0; v < count; ++v) {
        for (const Z2Vector& s : g.generators().elements()) nbr[size_t(v)].push_back(v ^ s.word());
        std::sort(nbr[size_t(v)].begin(), nbr[size_t(v)].end());
    }

    std::map<int, uint64_t> census;
    std::vector<uint64_t> common;
    for (uint64_t mid = 0; mid < count; ++mid) {
        const auto& around = nbr[size_t(mid)];
        for (size_t i = 0; i < around.size(); ++i)
            for (size_t j = i + 1; j < around.size(); ++j) {
                common.clear();
                std::set_intersection(nbr[size_t(around[i])].begin(), nbr[size_t(around[i])].end(),
                                      nbr[size_t(around[j])].begin(), nbr[size_t(around[j])].end(),
                                      std::back_inserter(common));
                int cycles = int(common.size()) - int(std::binary_search(common.begin(),
                                                                         common.end(), mid));
                ++census[cycles];
            }
    }
    return census;
}

namespace {

// Dense-capacity depth-first augmentation on the split digraph.
struct DenseFlow {
    int nodes;
    std::vector<int> cap;  // nodes x nodes
    std::vector<char> visited;

    explicit DenseFlow(int node_count)
        : nodes(node_count), cap(size_t(node_count) * size_t(node_count), 0) {}

    int& at(int a, int b) { return cap[size_t(a) * size_t(nodes) + size_t(b)]; }

    bool push(int from, int sink) {
        if (from == sink) return true;
        visited[size_t(from)] = 1;
        for (int to = 0; to < nodes; ++to) {
            if (visited[size_t(to)] || at(from, to) <= 0) continue;
            if (push(to, sink)) {
                at(from, to) -= 1;
                at(to, from) += 1;
                return true;
            }
        }
        return false;
    }

    int max_flow(int source, int sink) {
        int value = 0;
        for (;;) {
            visited.assign(size_t(nodes), 0);
            if (!push(source, sink)) return value;
            ++value;
        }
    }
};

}  // namespace

int vertex_connectivity(const CayleyGraph& g) {
    int n = g.dimension();
    if (n > 8)
        throw LimitError("connectivity computation limited to n <= 8, got " + std::to_string(n));
    int count = int(g.vertex_count());

    std::vector<uint64_t> sinks;
    for (uint64_t t = 1; t < uint64_t(count); ++t)
        if (!g.adjacent_words(0, t)) sinks.push_back(t);
    if (sinks.empty()) return count - 1;

    int best = count;
    for (uint64_t t : sinks) {
        DenseFlow flow(2 * count);
        for (int v = 0; v < count; ++v) flow.at(2 * v, 2 * v + 1) = 1;
        for (int v = 0; v < count; ++v)
            for (const Z2Vector& s : g.generators().elements())
                flow.at(2 * v + 1, 2 * int(uint64_t(v) ^ s.word())) = 1;
        best = std::min(best, flow.max_flow(1, 2 * int(t)));
    }
    return best;
}

SweepResult verify_all_arc_pairs(int n) {
    if (n < 2) throw std::invalid_argument("arc sweep requires n >= 2");
    if (n > 6) throw LimitError("exhaustive arc sweep limited to n <= 6, got " + std::to_string(n));
    CayleyGraph g(n, true);
    GeneratorSet gens = g.generators();
    uint64_t degree = uint64_t(g.degree());
    uint64_t arcs = g.vertex_count() * degree;

    SweepResult result;
    result.pairs = arcs * arcs;
    for (uint64_t i = 0; i < arcs; ++i) {
        uint64_t u1 = i / degree;
        uint64_t v1 = u1 ^ gens.element(int(i % degree)).word();
        for (uint64_t j = 0; j < arcs; ++j) {
            uint64_t u2 = j / degree;
            uint64_t v2 = u2 ^ gens.element(int(j % degree)).word();
            bool ok = false;
            std::string msg;
            try {
                ArcWitness w = arc_witness(Z2Vector(n, u1), Z2Vector(n, v1), Z2Vector(n, u2),
                                           Z2Vector(n, v2));
                ok = verify(w);
                if (!ok) msg = "witness failed verification";
            } catch (const std::exception& e) {
                msg = e.what();
            }
            if (ok) {
                ++result.verified;
            } else if (result.first_failure.empty()) {
                result.first_failure = msg + " for pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")";
            }
        }
    }
    return result;
}

}  // namespace fq::serial
