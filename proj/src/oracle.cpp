#include "fq/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "fq/errors.hpp"

namespace fq {

// ---------------------------------------------------------------------------
// raw automorphisms

RawAut::RawAut(int n, std::vector<uint32_t> table) : n_(n), table_(std::move(table)) {
    if (n < 1 || n > 16) throw std::invalid_argument("RawAut dimension must be in [1, 16]");
    uint64_t count = uint64_t{1} << n;
    if (table_.size() != count)
        throw std::invalid_argument("RawAut table must have 2^n entries, got " +
                                    std::to_string(table_.size()));
    std::vector<char> seen(count, 0);
    for (uint32_t img : table_) {
        if (img >= count || seen[img])
            throw std::invalid_argument("RawAut table is not a permutation of the vertex set");
        seen[img] = 1;
    }
}

RawAut RawAut::from_affine(const AffineAut& a) {
    int n = a.dim();
    if (n > 16) throw LimitError("RawAut tables are limited to n <= 16, got " + std::to_string(n));
    uint64_t count = uint64_t{1} << n;
    std::vector<uint32_t> table(count);
    for (uint64_t x = 0; x < count; ++x) table[x] = uint32_t(a.apply_word(x));
    return RawAut(n, std::move(table));
}

std::string to_line(const RawAut& p) {
    std::string out = "perm=";
    for (size_t i = 0; i < p.table().size(); ++i) {
        if (i) out += ",";
        out += Z2Vector(p.dim(), p.table()[i]).str();
    }
    return out;
}

RawAut parse_raw_line(std::string_view line) {
    if (line.substr(0, 5) != "perm=")
        throw std::invalid_argument("malformed permutation line: \"" + std::string(line) + "\"");
    line.remove_prefix(5);
    std::vector<uint32_t> table;
    int n = 0;
    while (!line.empty()) {
        size_t comma = line.find(',');
        Z2Vector img = Z2Vector::parse(line.substr(0, comma));
        if (n == 0)
            n = img.dim();
        else if (img.dim() != n)
            throw std::invalid_argument("permutation line mixes bitstring lengths");
        table.push_back(uint32_t(img.word()));
        line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    }
    if (n == 0) throw std::invalid_argument("empty permutation line");
    return RawAut(n, std::move(table));
}

bool is_automorphism(const CayleyGraph& g, const RawAut& p) {
    if (p.dim() != g.dimension())
        throw std::invalid_argument("is_automorphism: dimension mismatch");
    uint64_t count = g.vertex_count();
    for (uint64_t x = 0; x < count; ++x)
        for (const Z2Vector& s : g.generators().elements())
            if (!g.adjacent_words(p.apply_word(x), p.apply_word(x ^ s.word()))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// brute-force enumeration

namespace {

uint64_t vertex_set_mask(int count) {
    return count == 64 ? ~uint64_t{0} : (uint64_t{1} << count) - 1;
}

// Backtracking state for one root branch, sized for at most 64 vertices so
// vertex sets fit in single words. cand[v] is kept consistent with every
// assignment made so far: it contains exactly the images compatible with
// the adjacency pattern of v against all mapped vertices.
struct Backtracker {
    int count;
    const uint64_t* adj;
    std::array<uint8_t, 64> image{};
    uint64_t mapped = 0;
    uint64_t used = 0;
    std::array<uint64_t, 64> cand{};
    std::vector<RawAut> found;
    int dimension;
    std::atomic<bool>* expired = nullptr;
    std::chrono::steady_clock::time_point deadline{};
    uint64_t node_counter = 0;

    Backtracker(int n, int v_count, const uint64_t* adj_rows) : count(v_count), adj(adj_rows) {
        dimension = n;
        cand.fill(vertex_set_mask(count));
    }

    bool assign(int v, int c) {
        image[size_t(v)] = uint8_t(c);
        mapped |= uint64_t{1} << v;
        used |= uint64_t{1} << c;
        // Keep candidate sets consistent with the new pair: images of
        // neighbors of v must be neighbors of c, images of non-neighbors
        // must not be.
        uint64_t rest = ~mapped & vertex_set_mask(count);
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            cand[size_t(w)] &= ((adj[v] >> w) & 1) ? adj[c] : ~adj[c];
            if (!(cand[size_t(w)] & ~used)) return false;
        }
        return true;
    }

    void unassign(int v, int c, const std::array<uint64_t, 64>& saved) {
        cand = saved;
        mapped &= ~(uint64_t{1} << v);
        used &= ~(uint64_t{1} << c);
    }

    bool out_of_budget() {
        if (!expired) return false;
        if (expired->load(std::memory_order_relaxed)) return true;
        if ((node_counter++ & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
            expired->store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void search() {
        if (out_of_budget()) return;
        if (mapped == vertex_set_mask(count)) {
            std::vector<uint32_t> table(static_cast<size_t>(count));
            for (int v = 0; v < count; ++v) table[size_t(v)] = image[size_t(v)];
            found.push_back(RawAut(dimension, std::move(table)));
            return;
        }
        // Most-constrained-first: the unmapped vertex with the largest
        // number of already-mapped neighbors (smallest index on ties).
        int best = -1, best_score = -1;
        uint64_t rest = ~mapped & vertex_set_mask(count);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int score = std::popcount(adj[v] & mapped);
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        uint64_t choices = cand[size_t(best)] & ~used;
        while (choices) {
            int c = std::countr_zero(choices);
            choices &= choices - 1;
            std::array<uint64_t, 64> saved = cand;
            if (assign(best, c)) search();
            unassign(best, c, saved);
        }
    }
};

std::vector<RawAut> brute_force_impl(const CayleyGraph& g, bool budgeted,
                                     std::chrono::milliseconds budget) {
    int n = g.dimension();
    int limit = budgeted ? 6 : 5;
    if (n > limit)
        throw LimitError("brute-force enumeration limited to n <= " + std::to_string(limit) +
                         ", got " + std::to_string(n) +
                         (budgeted ? "" : " (the budgeted form allows n = 6)"));
    int count = int(g.vertex_count());
    std::vector<uint64_t> adj(size_t(count), 0);
    for (int v = 0; v < count; ++v)
        for (const Z2Vector& s : g.generators().elements())
            adj[size_t(v)] |= uint64_t{1} << (uint64_t(v) ^ s.word());

    std::atomic<bool> expired{false};
    auto deadline = std::chrono::steady_clock::now() + budget;
    std::vector<std::vector<RawAut>> per_root(static_cast<size_t>(count));

    // Root branches fix the image of vertex 0 and are independent.
#pragma omp parallel for schedule(dynamic)
    for (int root = 0; root < count; ++root) {
        if (expired.load(std::memory_order_relaxed)) continue;
        Backtracker bt(n, count, adj.data());
        if (budgeted) {
            bt.expired = &expired;
            bt.deadline = deadline;
        }
        if (bt.assign(0, root)) bt.search();
        per_root[size_t(root)] = std::move(bt.found);
    }

    std::vector<RawAut> all;
    for (auto& part : per_root)
        for (auto& p : part) all.push_back(std::move(p));
    if (expired.load())
        throw BudgetExceeded("automorphism search budget of " + std::to_string(budget.count()) +
                             " ms exceeded; " + std::to_string(all.size()) +
                             " automorphisms found before expiry");
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

std::vector<RawAut> brute_force_automorphisms(const CayleyGraph& g) {
    return brute_force_impl(g, false, std::chrono::milliseconds{0});
}

std::vector<RawAut> brute_force_automorphisms(const CayleyGraph& g,
                                              std::chrono::milliseconds budget) {
    return brute_force_impl(g, true, budget);
}

// ---------------------------------------------------------------------------
// affine decomposition

AffineDecomposition decompose_affine(const RawAut& p) {
    int n = p.dim();
    uint64_t count = uint64_t{1} << n;
    uint64_t v = p.apply_word(0);

    std::vector<uint64_t> cols(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        cols[size_t(i - 1)] = p.apply_word(uint64_t{1} << (n - i)) ^ v;

    for (uint64_t x = 0; x < count; ++x) {
        uint64_t expect = 0;
        uint64_t bits = x;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            expect ^= cols[size_t(n - 1 - b)];
        }
        if ((p.apply_word(x) ^ v) != expect) {
            Z2Vector bad(n, x);
            return {std::nullopt, bad, "candidate map is not linear at " + bad.str()};
        }
    }

    GeneratorSet gens(n, true);
    for (int i = 1; i <= n; ++i) {
        if (!gens.contains_word(cols[size_t(i - 1)])) {
            Z2Vector basis = Z2Vector::unit(n, i);
            return {std::nullopt, basis,
                    "image of " + basis.str() + " is outside the connection set"};
        }
    }
    return {AffineAut(Z2Vector(n, v), LinearAut(n, std::move(cols))), Z2Vector::zero(n), ""};
}

// ---------------------------------------------------------------------------
// connectivity via unit-capacity max-flow

namespace {

// Split digraph: vertex v becomes in-node 2v and out-node 2v+1 joined by a
// capacity-1 arc, and each undirected edge {a,b} becomes out(a)->in(b) and
// out(b)->in(a). Max-flow from out(s) to in(t) then counts internally
// vertex-disjoint s-t paths.
struct FlowArc {
    int to;
    int cap;
    size_t rev;
};

struct FlowNet {
    std::vector<std::vector<FlowArc>> arcs;

    explicit FlowNet(int nodes) : arcs(size_t(nodes)) {}

    void add(int from, int to, int cap) {
        arcs[size_t(from)].push_back({to, cap, arcs[size_t(to)].size()});
        arcs[size_t(to)].push_back({from, 0, arcs[size_t(from)].size() - 1});
    }

    // One BFS augmentation of unit value; returns false when the sink is
    // unreachable in the residual graph.
    bool augment(int source, int sink) {
        std::vector<std::pair<int, size_t>> parent(arcs.size(), {-1, 0});
        std::vector<int> queue{source};
        parent[size_t(source)] = {source, 0};
        for (size_t head = 0; head < queue.size(); ++head) {
            int at = queue[head];
            if (at == sink) break;
            for (size_t k = 0; k < arcs[size_t(at)].size(); ++k) {
                const FlowArc& a = arcs[size_t(at)][k];
                if (a.cap <= 0 || parent[size_t(a.to)].first >= 0) continue;
                parent[size_t(a.to)] = {at, k};
                queue.push_back(a.to);
            }
        }
        if (parent[size_t(sink)].first < 0) return false;
        for (int at = sink; at != source;) {
            auto [from, k] = parent[size_t(at)];
            FlowArc& a = arcs[size_t(from)][k];
            a.cap -= 1;
            arcs[size_t(a.to)][a.rev].cap += 1;
            at = from;
        }
        return true;
    }
};

int disjoint_paths_impl(const CayleyGraph& g, uint64_t s, uint64_t t) {
    int count = int(g.vertex_count());
    FlowNet net(2 * count);
    for (int v = 0; v < count; ++v) net.add(2 * v, 2 * v + 1, 1);
    for (int v = 0; v < count; ++v)
        for (const Z2Vector& gen : g.generators().elements()) {
            int w = int(uint64_t(v) ^ gen.word());
            net.add(2 * v + 1, 2 * w, 1);  // out(v) -> in(w); the reverse edge adds the mirror
        }
    int source = 2 * int(s) + 1;
    int sink = 2 * int(t);
    int flow = 0;
    while (net.augment(source, sink)) ++flow;
    return flow;
}

}  // namespace

int max_vertex_disjoint_paths(const CayleyGraph& g, const Z2Vector& s, const Z2Vector& t) {
    if (g.dimension() > 8)
        throw LimitError("disjoint-path computation limited to n <= 8, got " +
                         std::to_string(g.dimension()));
    if (s.dim() != g.dimension() || t.dim() != g.dimension())
        throw std::invalid_argument("endpoint dimension mismatch");
    if (s == t) throw std::invalid_argument("endpoints must be distinct");
    return disjoint_paths_impl(g, s.word(), t.word());
}

int vertex_connectivity(const CayleyGraph& g) {
    int n = g.dimension();
    if (n > 8)
        throw LimitError("connectivity computation limited to n <= 8, got " + std::to_string(n));
    uint64_t count = g.vertex_count();

    // The graph is vertex-transitive, so one endpoint may be fixed at 0;
    // adjacent pairs are excluded per Menger.
    std::vector<uint64_t> sinks;
    for (uint64_t t = 1; t < count; ++t)
        if (!g.adjacent_words(0, t)) sinks.push_back(t);
    if (sinks.empty()) return int(count) - 1;  // complete graph

    int best = int(count);
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (size_t i = 0; i < sinks.size(); ++i) {
        int flow = disjoint_paths_impl(g, 0, sinks[i]);
        if (flow < best) best = flow;
    }
    return best;
}

// ---------------------------------------------------------------------------
// small explicit graphs and isomorphism

SmallGraph SmallGraph::from_cayley(const CayleyGraph& g) {
    if (g.dimension() > 4)
        throw LimitError("explicit graphs are limited to 16 vertices; dimension " +
                         std::to_string(g.dimension()) + " has " +
                         std::to_string(g.vertex_count()));
    SmallGraph out;
    out.V = int(g.vertex_count());
    out.adj.assign(size_t(out.V), 0);
    for (int v = 0; v < out.V; ++v)
        for (const Z2Vector& s : g.generators().elements())
            out.adj[size_t(v)] |= uint16_t(1u << (uint64_t(v) ^ s.word()));
    return out;
}

SmallGraph SmallGraph::complete(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("complete graph size must be in [1, 16]");
    SmallGraph out;
    out.V = k;
    uint16_t full = uint16_t((uint32_t{1} << k) - 1);
    out.adj.assign(size_t(k), 0);
    for (int v = 0; v < k; ++v) out.adj[size_t(v)] = uint16_t(full & ~(1u << v));
    return out;
}

SmallGraph SmallGraph::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1 || a + b > 16)
        throw std::invalid_argument("bipartite graph sides must be positive with at most 16 total");
    SmallGraph out;
    out.V = a + b;
    out.adj.assign(size_t(out.V), 0);
    uint16_t left = uint16_t((uint32_t{1} << a) - 1);
    uint16_t right = uint16_t(((uint32_t{1} << (a + b)) - 1) & ~uint32_t(left));
    for (int v = 0; v < a; ++v) out.adj[size_t(v)] = right;
    for (int v = a; v < out.V; ++v) out.adj[size_t(v)] = left;
    return out;
}

namespace {

bool extend_mapping(const SmallGraph& a, const SmallGraph& b, std::vector<int>& map,
                    uint32_t& used, int v) {
    if (v == a.V) return true;
    for (int c = 0; c < b.V; ++c) {
        if ((used >> c) & 1) continue;
        if (std::popcount(uint32_t(a.adj[size_t(v)])) != std::popcount(uint32_t(b.adj[size_t(c)])))
            continue;
        bool ok = true;
        for (int w = 0; w < v; ++w) {
            if (a.edge(v, w) != b.edge(c, map[size_t(w)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[size_t(v)] = c;
        used |= uint32_t{1} << c;
        if (extend_mapping(a, b, map, used, v + 1)) return true;
        used &= ~(uint32_t{1} << c);
    }
    return false;
}

}  // namespace

IsomorphismResult find_isomorphism(const SmallGraph& a, const SmallGraph& b) {
    IsomorphismResult result;
    if (a.V != b.V) return result;
    auto degrees = [](const SmallGraph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.V; ++v) d.push_back(std::popcount(uint32_t(g.adj[size_t(v)])));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(a) != degrees(b)) return result;
    std::vector<int> map(size_t(a.V), -1);
    uint32_t used = 0;
    if (extend_mapping(a, b, map, used, 0)) {
        result.isomorphic = true;
        result.mapping = std::move(map);
    }
    return result;
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    return find_isomorphism(a, b).isomorphic;
}

// ---------------------------------------------------------------------------
// 4-cycle census

std::map<int, uint64_t> four_cycle_census(const CayleyGraph& g) {
    int n = g.dimension();
    if (n > 7)
        throw LimitError("4-cycle census limited to n <= 7, got " + std::to_string(n));
    int64_t count = int64_t(g.vertex_count());
    std::vector<Z2Vector> gens = g.generators().elements();
    int degree = int(gens.size());

    std::map<int, uint64_t> census;
#pragma omp parallel
    {
        std::map<int, uint64_t> local;
#pragma omp for schedule(static)
        for (int64_t mid = 0; mid < count; ++mid) {
            for (int i = 0; i < degree; ++i) {
                uint64_t t = uint64_t(mid) ^ gens[size_t(i)].word();
                for (int j = i + 1; j < degree; ++j) {
                    uint64_t u = uint64_t(mid) ^ gens[size_t(j)].word();
                    // Count common neighbors x != mid of the endpoints:
                    // each closes the 2-path t - mid - u into a 4-cycle.
                    int cycles = 0;
                    for (int k = 0; k < degree; ++k) {
                        uint64_t x = t ^ gens[size_t(k)].word();
                        if (x != uint64_t(mid) && g.adjacent_words(x, u)) ++cycles;
                    }
                    ++local[cycles];
                }
            }
        }
#pragma omp critical
        for (auto [multiplicity, paths] : local) census[multiplicity] += paths;
    }
    return census;
}

}  // namespace fq
