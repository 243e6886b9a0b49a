#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fq/affine.hpp"
#include "fq/graph.hpp"
#include "fq/z2.hpp"

namespace fq {

// Automorphism as a bare permutation of vertex words: table[x] is the image
// of vertex x, vertices indexed in lexicographic (= word) order. Carries no
// algebraic structure; this is the form the brute-force oracle produces.
class RawAut {
public:
    RawAut(int n, std::vector<uint32_t> table);  // rejects non-bijective tables
    static RawAut from_affine(const AffineAut& a);

    int dim() const { return n_; }
    const std::vector<uint32_t>& table() const { return table_; }
    uint64_t apply_word(uint64_t x) const { return table_[size_t(x)]; }

    auto operator<=>(const RawAut&) const = default;

private:
    int n_;
    std::vector<uint32_t> table_;
};

// Line format "perm=<img_0>,<img_1>,..." with images as bitstrings; input
// vertices implicit in lexicographic order. Round-trips losslessly.
std::string to_line(const RawAut& p);
RawAut parse_raw_line(std::string_view line);

// True iff p preserves adjacency on every edge. Because p is a bijection
// and preserving all of a finite graph's edges forces equal edge counts,
// non-adjacency is then preserved automatically.
bool is_automorphism(const CayleyGraph& g, const RawAut& p);

// Every automorphism of g, each exactly once, sorted by table: backtracking
// over partial vertex maps with adjacency-consistency pruning. Root branches
// (the image of vertex 0) run independently. The plain form is capped at
// n <= 5; the budgeted form allows n = 6 and raises BudgetExceeded (with the
// partial count in the message) instead of returning silently truncated
// results.
std::vector<RawAut> brute_force_automorphisms(const CayleyGraph& g);
std::vector<RawAut> brute_force_automorphisms(const CayleyGraph& g,
                                              std::chrono::milliseconds budget);

// Outcome of writing a raw automorphism as translation-after-linear. On
// failure, `failure_vertex` is the first vertex (in word order) where the
// candidate map breaks linearity, or the basis vector whose image leaves the
// connection set.
struct AffineDecomposition {
    std::optional<AffineAut> aut;
    Z2Vector failure_vertex;
    std::string failure_reason;  // empty on success

    bool ok() const { return aut.has_value(); }
};

// Tries to express p as x -> v + phi(x) with v = p(0) and phi linear with
// all basis images in the folded connection set. Succeeds iff the candidate
// phi(x) = p(x) + v is linear on every vertex (checked exhaustively) and
// every phi(e_i) is a generator; on success the result reproduces p on all
// of Z_2^n. p is assumed to be a verified automorphism.
AffineDecomposition decompose_affine(const RawAut& p);

// Maximum number of internally vertex-disjoint s-t paths: unit-capacity
// max-flow on the split digraph (each vertex becomes an in/out arc of
// capacity one).
int max_vertex_disjoint_paths(const CayleyGraph& g, const Z2Vector& s, const Z2Vector& t);

// Vertex connectivity: the minimum of max_vertex_disjoint_paths(0, t) over
// vertices t not adjacent to 0 (one endpoint may be fixed because the graph
// is vertex-transitive); V - 1 when no non-adjacent pair exists. Capped at
// n <= 8.
int vertex_connectivity(const CayleyGraph& g);

// Explicit graph on at most 16 vertices, adjacency as bitmask rows.
struct SmallGraph {
    int V = 0;
    std::vector<uint16_t> adj;

    static SmallGraph from_cayley(const CayleyGraph& g);  // n <= 4
    static SmallGraph complete(int k);                    // K_k
    static SmallGraph complete_bipartite(int a, int b);   // K_{a,b}

    bool edge(int x, int y) const { return (adj[size_t(x)] >> y) & 1; }
};

// Backtracking isomorphism search; `mapping[v of a] = vertex of b` is a
// certificate bijection when `isomorphic` is true.
struct IsomorphismResult {
    bool isomorphic = false;
    std::vector<int> mapping;
};
IsomorphismResult find_isomorphism(const SmallGraph& a, const SmallGraph& b);
bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

// For every 2-path of g, the number of 4-cycles containing it, returned as
// a histogram {multiplicity -> number of 2-paths}. Capped at n <= 7.
std::map<int, uint64_t> four_cycle_census(const CayleyGraph& g);

}  // namespace fq
