#include "fq/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <ostream>
#include <stdexcept>

#include "fq/errors.hpp"

namespace fq {

namespace {
constexpr int kMaterializeCap = 24;

void require_dim(const CayleyGraph& g, const Z2Vector& v, const char* what) {
    if (v.dim() != g.dimension())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch, expected " +
                                    std::to_string(g.dimension()) + ", got " +
                                    std::to_string(v.dim()));
}
}  // namespace

CayleyGraph::CayleyGraph(int n, bool folded) : n_(n), gens_(n, folded) {}

uint64_t CayleyGraph::edge_count() const {
    return (uint64_t{1} << (n_ - 1)) * uint64_t(degree());
}

bool CayleyGraph::adjacent(const Z2Vector& a, const Z2Vector& b) const {
    require_dim(*this, a, "adjacent");
    require_dim(*this, b, "adjacent");
    return adjacent_words(a.word(), b.word());
}

bool CayleyGraph::adjacent_words(uint64_t a, uint64_t b) const {
    return gens_.contains_word(a ^ b);
}

std::vector<Z2Vector> CayleyGraph::neighbors(const Z2Vector& v) const {
    require_dim(*this, v, "neighbors");
    std::vector<Z2Vector> out;
    out.reserve(size_t(degree()));
    for (int k = 0; k < degree(); ++k) out.push_back(v + gens_.element(k));
    return out;
}

std::string CayleyGraph::name() const {
    return (folded() ? "FQ_" : "Q_") + std::to_string(n_);
}

TwoPath::TwoPath(const CayleyGraph& g, const Z2Vector& u_, const Z2Vector& mid_,
                 const Z2Vector& w_)
    : u(u_), mid(mid_), w(w_) {
    require_dim(g, u, "TwoPath");
    require_dim(g, mid, "TwoPath");
    require_dim(g, w, "TwoPath");
    if (u == w) throw std::invalid_argument("TwoPath endpoints coincide: " + u.str());
    if (!g.adjacent(u, mid))
        throw std::invalid_argument("TwoPath: not an edge: " + u.str() + "," + mid.str());
    if (!g.adjacent(mid, w))
        throw std::invalid_argument("TwoPath: not an edge: " + mid.str() + "," + w.str());
}

FourCycle::FourCycle(const CayleyGraph& g, const Z2Vector& a, const Z2Vector& b,
                     const Z2Vector& c, const Z2Vector& d)
    : v{a, b, c, d} {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[size_t(i)] == v[size_t(j)])
                throw std::invalid_argument("FourCycle vertices not distinct: " +
                                            v[size_t(i)].str());
    for (int i = 0; i < 4; ++i)
        if (!g.adjacent(v[size_t(i)], v[size_t((i + 1) % 4)]))
            throw std::invalid_argument("FourCycle: not an edge: " + v[size_t(i)].str() + "," +
                                        v[size_t((i + 1) % 4)].str());
}

Z2Vector fourth_vertex(const TwoPath& p) { return p.u + p.mid + p.w; }

std::vector<FourCycle> cycles_through_path(const CayleyGraph& g, const TwoPath& p) {
    std::vector<FourCycle> out;
    for (int k = 0; k < g.degree(); ++k) {
        Z2Vector x = p.u + g.generators().element(k);
        if (x == p.mid) continue;
        if (g.adjacent_words(x.word(), p.w.word())) out.emplace_back(g, p.u, p.mid, p.w, x);
    }
    return out;
}

int distance(const CayleyGraph& g, const Z2Vector& a, const Z2Vector& b) {
    require_dim(g, a, "distance");
    require_dim(g, b, "distance");
    if (a == b) return 0;
    int n = g.dimension();
    if (n > kMaterializeCap)
        throw LimitError("distance materializes 2^n visit flags; n <= " +
                         std::to_string(kMaterializeCap) + " required, got " + std::to_string(n));

    std::vector<uint64_t> gens;
    for (int k = 0; k < g.degree(); ++k) gens.push_back(g.generators().element(k).word());

    std::vector<int> dist(size_t(1) << n, -1);
    std::deque<uint64_t> queue;
    dist[a.word()] = 0;
    queue.push_back(a.word());
    while (!queue.empty()) {
        uint64_t v = queue.front();
        queue.pop_front();
        for (uint64_t s : gens) {
            uint64_t w = v ^ s;
            if (dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            if (w == b.word()) return dist[w];
            queue.push_back(w);
        }
    }
    throw std::logic_error("distance: target unreachable in a connected graph");
}

namespace {

// Shared guard for every edge-enumerating entry point, checked before any
// output is produced so a failed call emits nothing.
void require_enumerable(const CayleyGraph& g) {
    if (g.dimension() > kMaterializeCap)
        throw LimitError("edge enumeration limited to n <= " + std::to_string(kMaterializeCap) +
                         ", got " + std::to_string(g.dimension()));
}

}  // namespace

void for_each_edge(const CayleyGraph& g,
                   const std::function<void(const Z2Vector&, const Z2Vector&)>& fn) {
    int n = g.dimension();
    require_enumerable(g);
    std::vector<uint64_t> gens;
    for (int k = 0; k < g.degree(); ++k) gens.push_back(g.generators().element(k).word());

    uint64_t count = g.vertex_count();
    std::vector<uint64_t> incident;
    for (uint64_t v = 0; v < count; ++v) {
        incident.clear();
        for (uint64_t s : gens) {
            uint64_t w = v ^ s;
            if (w > v) incident.push_back(w);
        }
        std::sort(incident.begin(), incident.end());
        for (uint64_t w : incident) fn(Z2Vector(n, v), Z2Vector(n, w));
    }
}

std::vector<std::pair<Z2Vector, Z2Vector>> edge_list(const CayleyGraph& g) {
    std::vector<std::pair<Z2Vector, Z2Vector>> out;
    // the size check belongs to for_each_edge; only reserve once it can pass
    if (g.dimension() <= kMaterializeCap) out.reserve(g.edge_count());
    for_each_edge(g, [&](const Z2Vector& a, const Z2Vector& b) { out.emplace_back(a, b); });
    return out;
}

void write_edge_list(std::ostream& os, const CayleyGraph& g) {
    require_enumerable(g);
    os << "# mode=" << (g.folded() ? "folded" : "hypercube") << " n=" << g.dimension()
       << " vertices=" << g.vertex_count() << " edges=" << g.edge_count() << "\n";
    for_each_edge(g, [&](const Z2Vector& a, const Z2Vector& b) {
        os << a.str() << " " << b.str() << "\n";
    });
}

void write_dot(std::ostream& os, const CayleyGraph& g) {
    require_enumerable(g);
    os << "graph " << g.name() << " {\n";
    for_each_edge(g, [&](const Z2Vector& a, const Z2Vector& b) {
        os << "  \"" << a.str() << "\" -- \"" << b.str() << "\";\n";
    });
    os << "}\n";
}

}  // namespace fq
