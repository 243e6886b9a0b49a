#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fq/affine.hpp"
#include "fq/graph.hpp"
#include "fq/z2.hpp"

namespace fq {

// Certificate that the automorphism g carries the ordered arc (u1, v1) of
// the folded graph onto (u2, v2). Instances returned by arc_witness have
// already passed their self-check.
struct ArcWitness {
    Z2Vector u1, v1, u2, v2;
    AffineAut g;
};

// Transcript of the neighborhood-rigidity argument: starting from the base
// vertex and its closed neighborhood, each round forces the fourth vertex of
// every 2-path whose three vertices are already determined and which lies in
// exactly one 4-cycle. rounds[0] is the seed set; later rounds list the
// vertices newly forced in that pass.
struct RigidityReport {
    int n = 0;
    Z2Vector base;
    std::vector<std::vector<Z2Vector>> rounds;
    bool all_determined = false;
    // When a scanned 2-path sits in several 4-cycles the forcing step is
    // ambiguous; the first multiplicity seen is recorded here (0 = never).
    int stalled_multiplicity = 0;

    uint64_t determined_count() const;
};

// The translation by a + b, which maps a to b (and b to a).
AffineAut vertex_witness(const Z2Vector& a, const Z2Vector& b);

// Explicit automorphism of the folded graph mapping one ordered arc to
// another: with s1 = u1 + v1 and s2 = u2 + v2 both in the connection set,
// the linear part extends the transposition swapping s1 and s2 (identity if
// they coincide) and the translation places the image of u1 at u2. The
// result is verified before being returned: exact images, generator-set
// preservation, and a deterministic random edge sample; a violation is an
// internal error. Rejects non-edge input.
ArcWitness arc_witness(const Z2Vector& u1, const Z2Vector& v1, const Z2Vector& u2,
                       const Z2Vector& v2);

// Arc witness for a deterministic orientation of two unordered edges (both
// oriented smaller endpoint first); maps the vertex set of e1 onto that of
// e2.
AffineAut edge_witness(const std::pair<Z2Vector, Z2Vector>& e1,
                       const std::pair<Z2Vector, Z2Vector>& e2);

// Re-checks every certificate condition from scratch: both arcs are edges,
// g maps (u1, v1) exactly onto (u2, v2), and the linear part permutes the
// connection set.
bool verify(const ArcWitness& w);

// Three-line report: the two arcs, the automorphism line, and a verified
// field recomputed from scratch.
std::string to_report(const ArcWitness& w);

// Runs the rigidity argument on the folded graph of dimension n from base
// vertex v: seeds {v} and its neighbors, then propagates until no 2-path
// forces a new vertex. Succeeds iff every vertex becomes determined; the
// report is honest about stalls (dimension 3 stalls immediately because
// every 2-path lies in three 4-cycles). Capped at n <= 16.
RigidityReport rigidity_propagate(int n, const Z2Vector& v);

// Aggregate result of an arc-pair sweep. Failures never throw out of the
// sweep; the lowest-index failure is described instead.
struct SweepResult {
    uint64_t pairs = 0;
    uint64_t verified = 0;
    std::string first_failure;  // empty when verified == pairs

    bool all_verified() const { return verified == pairs && pairs > 0; }
};

// Builds and verifies a witness for every ordered pair of ordered arcs of
// the folded graph of dimension n: (2^n * (n+1))^2 pairs, capped at n <= 6.
SweepResult verify_all_arc_pairs(int n);

// Same check over `count` pseudo-random arc pairs; pair i is derived from
// (seed, i) alone, so the sample is reproducible and independent of thread
// schedule.
SweepResult verify_random_arc_pairs(int n, uint64_t count, uint64_t seed);

}  // namespace fq
