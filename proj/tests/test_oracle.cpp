#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fq/affine.hpp"
#include "fq/errors.hpp"
#include "fq/graph.hpp"
#include "fq/oracle.hpp"
#include "fq/serial.hpp"
#include "fq/witness.hpp"

using fq::AffineAut;
using fq::CayleyGraph;
using fq::RawAut;
using fq::SmallGraph;
using fq::Z2Vector;

namespace {

Z2Vector v(const char* s) { return Z2Vector::parse(s); }

// Count of brute-force automorphisms fixing every vertex of `fixed`.
uint64_t count_fixing(const std::vector<RawAut>& auts, const std::vector<uint64_t>& fixed) {
    uint64_t c = 0;
    for (const RawAut& p : auts) {
        bool ok = true;
        for (uint64_t x : fixed)
            if (p.apply_word(x) != x) {
                ok = false;
                break;
            }
        if (ok) ++c;
    }
    return c;
}

bool valid_certificate(const SmallGraph& a, const SmallGraph& b, const std::vector<int>& map) {
    std::vector<int> seen(size_t(b.V), 0);
    for (int x : map) {
        if (x < 0 || x >= b.V || seen[size_t(x)]) return false;
        seen[size_t(x)] = 1;
    }
    for (int x = 0; x < a.V; ++x)
        for (int y = x + 1; y < a.V; ++y)
            if (a.edge(x, y) != b.edge(map[size_t(x)], map[size_t(y)])) return false;
    return true;
}

}  // namespace

TEST_CASE("raw automorphism tables") {
    RawAut id(2, {0, 1, 2, 3});
    CHECK(id.dim() == 2);
    for (uint64_t x = 0; x < 4; ++x) CHECK(id.apply_word(x) == x);

    CHECK_THROWS_AS(RawAut(2, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RawAut(2, {0, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(RawAut(2, {0, 1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(RawAut(0, {}), std::invalid_argument);

    RawAut rho = RawAut::from_affine(fq::translation_aut(v("10")));
    CHECK(rho.table() == std::vector<uint32_t>{2, 3, 0, 1});
}

TEST_CASE("raw automorphism line format") {
    RawAut rho = RawAut::from_affine(fq::translation_aut(v("10")));
    CHECK(fq::to_line(rho) == "perm=10,11,00,01");
    CHECK(fq::parse_raw_line(fq::to_line(rho)) == rho);

    for (const AffineAut& a : fq::enumerate_affine_group(3)) {
        RawAut p = RawAut::from_affine(a);
        CHECK(fq::parse_raw_line(fq::to_line(p)) == p);
    }

    CHECK_THROWS_AS(fq::parse_raw_line("prm=00,01,10,11"), std::invalid_argument);
    CHECK_THROWS_AS(fq::parse_raw_line("perm="), std::invalid_argument);
    CHECK_THROWS_AS(fq::parse_raw_line("perm=00,01,10"), std::invalid_argument);
    CHECK_THROWS_AS(fq::parse_raw_line("perm=00,01,10,011"), std::invalid_argument);
    CHECK_THROWS_AS(fq::parse_raw_line("perm=00,01,10,10"), std::invalid_argument);
}

TEST_CASE("automorphism predicate") {
    CayleyGraph fq4(4, true);
    std::vector<uint32_t> ident(16);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(fq::is_automorphism(fq4, RawAut(4, ident)));

    // every affine element acts as an automorphism
    for (const AffineAut& a : fq::enumerate_affine_group(3))
        CHECK(fq::is_automorphism(CayleyGraph(3, true), RawAut::from_affine(a)));

    // swapping 0000 and 1000 while fixing the rest breaks adjacency
    std::vector<uint32_t> bad = ident;
    std::swap(bad[0], bad[8]);
    CHECK_FALSE(fq::is_automorphism(fq4, RawAut(4, bad)));

    CHECK_THROWS_AS(fq::is_automorphism(CayleyGraph(3, true), RawAut(4, ident)),
                    std::invalid_argument);
}

TEST_CASE("brute-force counts for folded graphs") {
    std::vector<RawAut> a2 = fq::brute_force_automorphisms(CayleyGraph(2, true));
    CHECK(a2.size() == 24);  // K_4

    std::vector<RawAut> a3 = fq::brute_force_automorphisms(CayleyGraph(3, true));
    CHECK(a3.size() == 1152);  // K_{4,4}: 2 * (4!)^2

    std::vector<RawAut> a4 = fq::brute_force_automorphisms(CayleyGraph(4, true));
    CHECK(a4.size() == 1920);  // 5! * 2^4

    for (const auto* list : {&a2, &a3, &a4}) {
        CHECK(std::is_sorted(list->begin(), list->end()));
        CHECK(std::adjacent_find(list->begin(), list->end()) == list->end());
    }
    for (const RawAut& p : a3) CHECK(fq::is_automorphism(CayleyGraph(3, true), p));
}

TEST_CASE("brute-force count for the dimension-5 folded graph") {
    std::vector<RawAut> a5 = fq::brute_force_automorphisms(CayleyGraph(5, true));
    CHECK(a5.size() == 23040);  // 6! * 2^5
    CHECK(std::is_sorted(a5.begin(), a5.end()));
}

TEST_CASE("brute-force counts for hypercubes") {
    CHECK(fq::brute_force_automorphisms(CayleyGraph(2, false)).size() == 8);    // 2! * 2^2
    CHECK(fq::brute_force_automorphisms(CayleyGraph(3, false)).size() == 48);   // 3! * 2^3
    CHECK(fq::brute_force_automorphisms(CayleyGraph(4, false)).size() == 384);  // 4! * 2^4
}

TEST_CASE("serial and parallel enumeration agree") {
    for (bool folded : {true, false})
        for (int n : {2, 3, 4}) {
            CayleyGraph g(n, folded);
            CHECK(fq::serial::brute_force_automorphisms(g) == fq::brute_force_automorphisms(g));
        }
    CHECK_THROWS_AS(fq::serial::brute_force_automorphisms(CayleyGraph(6, true)), fq::LimitError);
}

TEST_CASE("affine subgroup containment and the dimension-4 coincidence") {
    // dimension 3: the affine elements form a proper subgroup (192 of 1152)
    std::vector<RawAut> brute3 = fq::brute_force_automorphisms(CayleyGraph(3, true));
    std::vector<AffineAut> affine3 = fq::enumerate_affine_group(3);
    CHECK(affine3.size() < brute3.size());
    for (const AffineAut& a : affine3)
        CHECK(std::binary_search(brute3.begin(), brute3.end(), RawAut::from_affine(a)));

    // dimension 4: the affine elements are the whole group
    std::vector<RawAut> brute4 = fq::brute_force_automorphisms(CayleyGraph(4, true));
    std::vector<RawAut> affine4;
    for (const AffineAut& a : fq::enumerate_affine_group(4))
        affine4.push_back(RawAut::from_affine(a));
    std::sort(affine4.begin(), affine4.end());
    CHECK(affine4 == brute4);
}

TEST_CASE("vertex stabilizers are uniform") {
    std::vector<RawAut> a3 = fq::brute_force_automorphisms(CayleyGraph(3, true));
    for (uint64_t x = 0; x < 8; ++x) CHECK(count_fixing(a3, {x}) == 144);

    std::vector<RawAut> a4 = fq::brute_force_automorphisms(CayleyGraph(4, true));
    for (uint64_t x = 0; x < 16; ++x) CHECK(count_fixing(a4, {x}) == 120);
}

TEST_CASE("neighborhood restriction bounds the stabilizer") {
    // |stab(0)| <= |kernel fixing 0 and N(0) pointwise| * degree!, since the
    // restriction of the stabilizer to the neighborhood of 0 is a
    // homomorphism into its symmetric group.
    for (int n : {3, 4}) {
        CayleyGraph g(n, true);
        std::vector<RawAut> auts = fq::brute_force_automorphisms(g);
        std::vector<uint64_t> zero_and_neighbors{0};
        for (const Z2Vector& s : g.generators().elements())
            zero_and_neighbors.push_back(s.word());

        uint64_t stab = count_fixing(auts, {0});
        uint64_t kernel = count_fixing(auts, zero_and_neighbors);
        uint64_t factorial = 1;
        for (int i = 2; i <= g.degree(); ++i) factorial *= uint64_t(i);
        CHECK(stab <= kernel * factorial);

        if (n == 3) {
            CHECK(kernel == 6);  // free permutation of the 3 co-side vertices
            CHECK(stab == 144);
        } else {
            CHECK(kernel == 1);  // matches the 4-cycle propagation result
            CHECK(stab == 120);
        }
    }
}

TEST_CASE("affine decomposition of translation tables") {
    RawAut rho = RawAut::from_affine(fq::translation_aut(v("1010")));
    fq::AffineDecomposition dec = fq::decompose_affine(rho);
    REQUIRE(dec.ok());
    CHECK(dec.aut->translation() == v("1010"));
    CHECK(dec.aut->linear().is_identity());
    CHECK(dec.failure_reason.empty());
}

TEST_CASE("affine decomposition across whole groups") {
    // dimension 4: every automorphism decomposes, and the decomposition
    // reproduces the table
    std::vector<RawAut> a4 = fq::brute_force_automorphisms(CayleyGraph(4, true));
    uint64_t ok4 = 0;
    for (const RawAut& p : a4) {
        fq::AffineDecomposition dec = fq::decompose_affine(p);
        if (!dec.ok()) continue;
        ++ok4;
        CHECK(RawAut::from_affine(*dec.aut) == p);
    }
    CHECK(ok4 == a4.size());

    // dimension 3: exactly the affine subgroup decomposes
    std::vector<RawAut> a3 = fq::brute_force_automorphisms(CayleyGraph(3, true));
    uint64_t ok3 = 0;
    for (const RawAut& p : a3) {
        fq::AffineDecomposition dec = fq::decompose_affine(p);
        if (dec.ok()) {
            ++ok3;
            CHECK(RawAut::from_affine(*dec.aut) == p);
        } else {
            CHECK_FALSE(dec.failure_reason.empty());
        }
    }
    CHECK(ok3 == 192);
}

TEST_CASE("affine decomposition failure reporting") {
    // swapping two same-parity vertices of the dimension-3 graph is an
    // automorphism (complete bipartite), but it is not linear
    std::vector<uint32_t> table(8);
    std::iota(table.begin(), table.end(), 0);
    std::swap(table[0b011], table[0b101]);
    RawAut p(3, table);
    REQUIRE(fq::is_automorphism(CayleyGraph(3, true), p));

    fq::AffineDecomposition dec = fq::decompose_affine(p);
    CHECK_FALSE(dec.ok());
    CHECK(dec.failure_vertex == v("011"));
    CHECK(dec.failure_reason == "candidate map is not linear at 011");

    // a linear bijection whose basis images leave the connection set (not an
    // automorphism; the decomposition reports which image is at fault)
    RawAut shear(3, {0, 1, 2, 3, 6, 7, 4, 5});  // 100 -> 110, others fixed
    fq::AffineDecomposition dec2 = fq::decompose_affine(shear);
    CHECK_FALSE(dec2.ok());
    CHECK(dec2.failure_vertex == v("100"));
    CHECK(dec2.failure_reason == "image of 100 is outside the connection set");
}

TEST_CASE("enumeration size caps") {
    CHECK_THROWS_WITH_AS(fq::brute_force_automorphisms(CayleyGraph(6, true)),
                         "brute-force enumeration limited to n <= 5, got 6 (the budgeted form "
                         "allows n = 6)",
                         fq::LimitError);
    CHECK_THROWS_AS(
        fq::brute_force_automorphisms(CayleyGraph(7, true), std::chrono::milliseconds{1000}),
        fq::LimitError);
}

TEST_CASE("enumeration budget") {
    // a zero budget expires on the first node of every branch
    try {
        fq::brute_force_automorphisms(CayleyGraph(5, true), std::chrono::milliseconds{0});
        FAIL("expected BudgetExceeded");
    } catch (const fq::BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("budget of 0 ms exceeded") != std::string::npos);
        CHECK(std::string(e.what()).find("before expiry") != std::string::npos);
    }

    // a generous budget changes nothing
    CayleyGraph g(4, true);
    CHECK(fq::brute_force_automorphisms(g, std::chrono::minutes{10}) ==
          fq::brute_force_automorphisms(g));
}

TEST_CASE("vertex-disjoint path counts") {
    CayleyGraph fq4(4, true);
    CHECK(fq::max_vertex_disjoint_paths(fq4, v("0000"), v("1100")) == 5);
    CHECK(fq::max_vertex_disjoint_paths(fq4, v("0000"), v("1000")) == 5);  // adjacent pair
    CHECK(fq::max_vertex_disjoint_paths(CayleyGraph(3, false), v("000"), v("111")) == 3);

    CHECK_THROWS_AS(fq::max_vertex_disjoint_paths(fq4, v("0000"), v("0000")),
                    std::invalid_argument);
    CHECK_THROWS_AS(fq::max_vertex_disjoint_paths(fq4, v("000"), v("1000")),
                    std::invalid_argument);
    CHECK_THROWS_AS(fq::max_vertex_disjoint_paths(CayleyGraph(9, true), Z2Vector::zero(9),
                                                  Z2Vector(9, 3)),
                    fq::LimitError);
}

TEST_CASE("vertex connectivity equals the degree") {
    CHECK(fq::vertex_connectivity(CayleyGraph(2, true)) == 3);  // K_4: V - 1
    CHECK(fq::vertex_connectivity(CayleyGraph(3, true)) == 4);
    CHECK(fq::vertex_connectivity(CayleyGraph(4, true)) == 5);
    CHECK(fq::vertex_connectivity(CayleyGraph(5, true)) == 6);
    CHECK(fq::vertex_connectivity(CayleyGraph(6, true)) == 7);
    CHECK(fq::vertex_connectivity(CayleyGraph(3, false)) == 3);
    CHECK(fq::vertex_connectivity(CayleyGraph(4, false)) == 4);
    CHECK_THROWS_AS(fq::vertex_connectivity(CayleyGraph(9, true)), fq::LimitError);
}

TEST_CASE("serial and parallel connectivity agree") {
    for (bool folded : {true, false})
        for (int n : {2, 3, 4, 5}) {
            CayleyGraph g(n, folded);
            CHECK(fq::serial::vertex_connectivity(g) == fq::vertex_connectivity(g));
        }
    CHECK_THROWS_AS(fq::serial::vertex_connectivity(CayleyGraph(9, true)), fq::LimitError);
}

TEST_CASE("small explicit graphs") {
    SmallGraph k4 = SmallGraph::complete(4);
    CHECK(k4.V == 4);
    CHECK(k4.edge(0, 3));
    CHECK_FALSE(k4.edge(2, 2));

    SmallGraph k44 = SmallGraph::complete_bipartite(4, 4);
    CHECK(k44.V == 8);
    CHECK(k44.edge(0, 4));
    CHECK_FALSE(k44.edge(0, 1));
    CHECK_FALSE(k44.edge(5, 6));

    SmallGraph q2 = SmallGraph::from_cayley(CayleyGraph(2, false));
    CHECK(q2.V == 4);
    CHECK(q2.edge(0, 1));
    CHECK_FALSE(q2.edge(0, 3));

    CHECK_THROWS_AS(SmallGraph::from_cayley(CayleyGraph(5, true)), fq::LimitError);
    CHECK_THROWS_AS(SmallGraph::complete(0), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph::complete(17), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph::complete_bipartite(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph::complete_bipartite(9, 8), std::invalid_argument);
}

TEST_CASE("isomorphism certificates for the degenerate dimensions") {
    // dimension 2 folded graph is K_4
    SmallGraph fq2 = SmallGraph::from_cayley(CayleyGraph(2, true));
    fq::IsomorphismResult to_k4 = fq::find_isomorphism(fq2, SmallGraph::complete(4));
    REQUIRE(to_k4.isomorphic);
    CHECK(valid_certificate(fq2, SmallGraph::complete(4), to_k4.mapping));

    // dimension 3 folded graph is K_{4,4}
    SmallGraph fq3 = SmallGraph::from_cayley(CayleyGraph(3, true));
    fq::IsomorphismResult to_k44 = fq::find_isomorphism(fq3, SmallGraph::complete_bipartite(4, 4));
    REQUIRE(to_k44.isomorphic);
    CHECK(valid_certificate(fq3, SmallGraph::complete_bipartite(4, 4), to_k44.mapping));

    // the dimension-2 hypercube is the 4-cycle K_{2,2}
    CHECK(fq::is_isomorphic(SmallGraph::from_cayley(CayleyGraph(2, false)),
                            SmallGraph::complete_bipartite(2, 2)));
}

TEST_CASE("isomorphism rejections") {
    SmallGraph fq3 = SmallGraph::from_cayley(CayleyGraph(3, true));
    SmallGraph q3 = SmallGraph::from_cayley(CayleyGraph(3, false));
    CHECK_FALSE(fq::is_isomorphic(fq3, q3));
    CHECK_FALSE(fq::is_isomorphic(SmallGraph::from_cayley(CayleyGraph(4, true)),
                                  SmallGraph::from_cayley(CayleyGraph(4, false))));
    CHECK_FALSE(fq::is_isomorphic(SmallGraph::complete(4), SmallGraph::complete_bipartite(2, 2)));
    CHECK_FALSE(fq::is_isomorphic(SmallGraph::complete(4), SmallGraph::complete(5)));
}

TEST_CASE("4-cycle census") {
    using Census = std::map<int, uint64_t>;
    CHECK(fq::four_cycle_census(CayleyGraph(2, true)) == Census{{1, 12}});
    CHECK(fq::four_cycle_census(CayleyGraph(3, true)) == Census{{3, 48}});
    CHECK(fq::four_cycle_census(CayleyGraph(4, true)) == Census{{1, 160}});
    CHECK(fq::four_cycle_census(CayleyGraph(5, true)) == Census{{1, 480}});
    CHECK(fq::four_cycle_census(CayleyGraph(7, true)) == Census{{1, 3584}});

    CHECK(fq::four_cycle_census(CayleyGraph(2, false)) == Census{{1, 4}});
    CHECK(fq::four_cycle_census(CayleyGraph(3, false)) == Census{{1, 24}});
    CHECK(fq::four_cycle_census(CayleyGraph(4, false)) == Census{{1, 96}});

    CHECK_THROWS_AS(fq::four_cycle_census(CayleyGraph(8, true)), fq::LimitError);
}

TEST_CASE("serial and parallel census agree") {
    for (bool folded : {true, false})
        for (int n : {2, 3, 4, 6}) {
            CayleyGraph g(n, folded);
            CHECK(fq::serial::four_cycle_census(g) == fq::four_cycle_census(g));
        }
    CHECK_THROWS_AS(fq::serial::four_cycle_census(CayleyGraph(8, true)), fq::LimitError);
}
