#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fq/graph.hpp"
#include "fq/oracle.hpp"
#include "fq/witness.hpp"

// Single-threaded reference implementations of the oracle kernels, written
// with deliberately different algorithmic choices (static vertex order
// instead of dynamic selection, neighbor-list intersection instead of
// generator scans, dense Ford-Fulkerson instead of arc lists). They exist to
// cross-check the parallel kernels in tests and to serve as the baseline in
// benchmarks; results must match the parallel versions exactly.
namespace fq::serial {

// Backtracking over a fixed breadth-first vertex order from vertex 0, with
// plain adjacency-consistency scans against all earlier assignments. Same
// output contract as the parallel kernel: every automorphism exactly once,
// sorted by table. Capped at n <= 5.
std::vector<RawAut> brute_force_automorphisms(const CayleyGraph& g);

// Histogram of 4-cycle multiplicities over all 2-paths, counted by sorted
// neighbor-list intersection. Capped at n <= 7.
std::map<int, uint64_t> four_cycle_census(const CayleyGraph& g);

// Minimum over non-adjacent pairs (0, t) of vertex-disjoint path counts,
// computed by depth-first Ford-Fulkerson on a dense capacity matrix over
// the split digraph. Capped at n <= 8.
int vertex_connectivity(const CayleyGraph& g);

// Arc-pair sweep over all ordered pairs of ordered arcs, one pair at a
// time. Capped at n <= 6.
SweepResult verify_all_arc_pairs(int n);

}  // namespace fq::serial
