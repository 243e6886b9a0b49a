#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "fq/z2.hpp"

namespace fq {

// The hypercube Q_n or folded hypercube FQ_n as an implicit Cayley graph
// over Z_2^n: two vertices are adjacent iff their sum lies in the connection
// set. Adjacency is computed on demand; nothing is materialized except in
// the explicitly bounded operations below.
class CayleyGraph {
public:
    CayleyGraph(int n, bool folded);

    int dimension() const { return n_; }
    bool folded() const { return gens_.folded(); }
    const GeneratorSet& generators() const { return gens_; }
    int degree() const { return gens_.size(); }
    uint64_t vertex_count() const { return uint64_t{1} << n_; }
    uint64_t edge_count() const;

    bool adjacent(const Z2Vector& a, const Z2Vector& b) const;
    bool adjacent_words(uint64_t a, uint64_t b) const;

    // Neighbors in generator order: v + e_1, ..., v + e_n (, v + u).
    std::vector<Z2Vector> neighbors(const Z2Vector& v) const;

    std::string name() const;  // "FQ_4" or "Q_4"

private:
    int n_;
    GeneratorSet gens_;
};

// Path u - mid - w on three distinct vertices. Construction validates both
// adjacencies against the graph.
struct TwoPath {
    Z2Vector u, mid, w;
    TwoPath(const CayleyGraph& g, const Z2Vector& u, const Z2Vector& mid, const Z2Vector& w);
};

// Vertex quadruple in cyclic order with consecutive pairs adjacent and all
// four vertices distinct.
struct FourCycle {
    std::array<Z2Vector, 4> v;
    FourCycle(const CayleyGraph& g, const Z2Vector& a, const Z2Vector& b, const Z2Vector& c,
              const Z2Vector& d);
};

// The sum u + mid + w, which closes the 2-path into a 4-cycle: it is always
// adjacent to both endpoints. For folded graphs with n > 3 it is the only
// vertex besides mid with that property.
Z2Vector fourth_vertex(const TwoPath& p);

// All 4-cycles containing the 2-path, one per common neighbor x != mid of
// the endpoints, in generator order of x - u.
std::vector<FourCycle> cycles_through_path(const CayleyGraph& g, const TwoPath& p);

// Breadth-first shortest-path length. Materializes a 2^n visit table, so the
// dimension is capped at 24.
int distance(const CayleyGraph& g, const Z2Vector& a, const Z2Vector& b);

// Undirected edges, each once, lexicographically sorted with the smaller
// endpoint first. Capped at n <= 24; the streaming form visits edges in the
// same order without materializing the list.
std::vector<std::pair<Z2Vector, Z2Vector>> edge_list(const CayleyGraph& g);
void for_each_edge(const CayleyGraph& g,
                   const std::function<void(const Z2Vector&, const Z2Vector&)>& fn);

// Text formats. Edge-list files carry the header line
//   # mode=<folded|hypercube> n=<n> vertices=<2^n> edges=<count>
// followed by one "<bits> <bits>" line per edge in edge_list order. DOT
// output is an undirected graph with bitstring node names and no layout
// attributes.
void write_edge_list(std::ostream& os, const CayleyGraph& g);
void write_dot(std::ostream& os, const CayleyGraph& g);

}  // namespace fq
