#include "fq/witness.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fq/errors.hpp"

namespace fq {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void require_edge(const GeneratorSet& gens, const Z2Vector& a, const Z2Vector& b) {
    if (a.dim() != b.dim() || a.dim() != gens.dimension())
        throw std::invalid_argument("arc endpoints must share the graph dimension");
    if (!gens.contains_word(a.word() ^ b.word()))
        throw std::invalid_argument("not an edge: " + a.str() + "," + b.str());
}

// Certificate self-check: exact images, connection-set preservation, and a
// small deterministic sample of edges checked for edge preservation. Any
// violation means the construction itself is broken.
void self_check(const ArcWitness& w, const GeneratorSet& gens) {
    if (w.g.apply(w.u1) != w.u2 || w.g.apply(w.v1) != w.v2)
        throw std::logic_error("arc witness self-check failed: wrong arc image");
    if (!w.g.linear().maps_generators(gens))
        throw std::logic_error("arc witness self-check failed: connection set not preserved");
    int n = gens.dimension();
    uint64_t mask = word_mask(n);
    uint64_t state = (uint64_t(n) << 56) ^ w.u1.word() ^ (w.v1.word() << 16) ^
                     (w.u2.word() << 32) ^ (w.v2.word() << 48);
    for (int i = 0; i < 8; ++i) {
        uint64_t x = splitmix64(state) & mask;
        uint64_t s = gens.element(int(splitmix64(state) % uint64_t(gens.size()))).word();
        if (!gens.contains_word(w.g.apply_word(x) ^ w.g.apply_word(x ^ s)))
            throw std::logic_error("arc witness self-check failed: edge not preserved");
    }
}

}  // namespace

uint64_t RigidityReport::determined_count() const {
    uint64_t c = 0;
    for (const auto& r : rounds) c += r.size();
    return c;
}

AffineAut vertex_witness(const Z2Vector& a, const Z2Vector& b) {
    return translation_aut(a + b);
}

ArcWitness arc_witness(const Z2Vector& u1, const Z2Vector& v1, const Z2Vector& u2,
                       const Z2Vector& v2) {
    int n = u1.dim();
    GeneratorSet gens(n, true);
    require_edge(gens, u1, v1);
    require_edge(gens, u2, v2);

    int i1 = gens.index_of_word(u1.word() ^ v1.word());
    int i2 = gens.index_of_word(u2.word() ^ v2.word());
    GeneratorPermutation pi = i1 == i2
                                  ? GeneratorPermutation::identity(gens.size())
                                  : GeneratorPermutation::transposition(gens.size(), i1, i2);
    // rho_{u2} . phi . rho_{u1}, collapsed to canonical (translation, linear).
    AffineAut phi = extend_generator_permutation(gens, pi);
    AffineAut g = translation_aut(u2).compose(phi).compose(translation_aut(u1));

    ArcWitness w{u1, v1, u2, v2, g};
    self_check(w, gens);
    return w;
}

AffineAut edge_witness(const std::pair<Z2Vector, Z2Vector>& e1,
                       const std::pair<Z2Vector, Z2Vector>& e2) {
    auto orient = [](const std::pair<Z2Vector, Z2Vector>& e) {
        return e.first < e.second ? e : std::pair(e.second, e.first);
    };
    auto a = orient(e1);
    auto b = orient(e2);
    return arc_witness(a.first, a.second, b.first, b.second).g;
}

bool verify(const ArcWitness& w) {
    int n = w.u1.dim();
    if (w.v1.dim() != n || w.u2.dim() != n || w.v2.dim() != n || w.g.dim() != n) return false;
    GeneratorSet gens(n, true);
    return gens.contains_word(w.u1.word() ^ w.v1.word()) &&
           gens.contains_word(w.u2.word() ^ w.v2.word()) &&
           w.g.apply_word(w.u1.word()) == w.u2.word() &&
           w.g.apply_word(w.v1.word()) == w.v2.word() && w.g.linear().maps_generators(gens);
}

std::string to_report(const ArcWitness& w) {
    std::string out;
    out += "from=" + w.u1.str() + "," + w.v1.str() + " to=" + w.u2.str() + "," + w.v2.str() + "\n";
    out += to_line(w.g) + "\n";
    out += std::string("verified=") + (verify(w) ? "true" : "false") + "\n";
    return out;
}

RigidityReport rigidity_propagate(int n, const Z2Vector& v) {
    if (n < 2) throw std::invalid_argument("rigidity propagation requires n >= 2");
    if (n > 16) throw LimitError("rigidity propagation limited to n <= 16, got " + std::to_string(n));
    if (v.dim() != n) throw std::invalid_argument("base vertex dimension mismatch");

    CayleyGraph g(n, true);
    uint64_t count = g.vertex_count();
    std::vector<char> determined(count, 0);

    RigidityReport report;
    report.n = n;
    report.base = v;

    std::vector<Z2Vector> seed{v};
    determined[v.word()] = 1;
    for (const Z2Vector& w : g.neighbors(v)) {
        determined[w.word()] = 1;
        seed.push_back(w);
    }
    report.rounds.push_back(std::move(seed));

    // Each round scans every 2-path whose three vertices were determined in
    // earlier rounds; when the path lies in exactly one 4-cycle, that cycle's
    // fourth vertex is forced. Vertices forced within a round only join the
    // determined set when the round ends, so the rounds are the waves of the
    // induction on distance from the base vertex. Rounds repeat until a
    // fixed point.
    for (;;) {
        std::vector<Z2Vector> fresh;
        std::vector<char> forced(count, 0);
        for (uint64_t mid = 0; mid < count; ++mid) {
            if (!determined[mid]) continue;
            Z2Vector m(n, mid);
            std::vector<Z2Vector> nb = g.neighbors(m);
            for (size_t i = 0; i < nb.size(); ++i) {
                if (!determined[nb[i].word()]) continue;
                for (size_t j = i + 1; j < nb.size(); ++j) {
                    if (!determined[nb[j].word()]) continue;
                    TwoPath path(g, nb[i], m, nb[j]);
                    int multiplicity = int(cycles_through_path(g, path).size());
                    if (multiplicity != 1) {
                        if (report.stalled_multiplicity == 0)
                            report.stalled_multiplicity = multiplicity;
                        continue;
                    }
                    Z2Vector f = fourth_vertex(path);
                    if (!determined[f.word()] && !forced[f.word()]) {
                        forced[f.word()] = 1;
                        fresh.push_back(f);
                    }
                }
            }
        }
        if (fresh.empty()) break;
        for (const Z2Vector& f : fresh) determined[f.word()] = 1;
        std::sort(fresh.begin(), fresh.end());
        report.rounds.push_back(std::move(fresh));
    }

    report.all_determined = report.determined_count() == count;
    return report;
}

namespace {

struct Arc {
    uint64_t u, v;
};

// Verifies the witness for one ordered pair of arcs, reporting a failure
// description instead of letting exceptions escape (the sweeps run inside
// parallel loops).
bool check_pair(int n, const Arc& a, const Arc& b, std::string& failure) {
    try {
        ArcWitness w = arc_witness(Z2Vector(n, a.u), Z2Vector(n, a.v), Z2Vector(n, b.u),
                                   Z2Vector(n, b.v));
        if (verify(w)) return true;
        failure = "witness failed verification";
    } catch (const std::exception& e) {
        failure = e.what();
    }
    failure += " for (" + Z2Vector(n, a.u).str() + "," + Z2Vector(n, a.v).str() + ") -> (" +
               Z2Vector(n, b.u).str() + "," + Z2Vector(n, b.v).str() + ")";
    return false;
}

SweepResult run_sweep(uint64_t pairs, const std::function<bool(uint64_t, std::string&)>& check) {
    SweepResult result;
    result.pairs = pairs;
    uint64_t failed = 0;
    uint64_t first_bad = pairs;
    std::string first_msg;
#pragma omp parallel
    {
        uint64_t local_failed = 0;
        uint64_t local_first = pairs;
        std::string local_msg;
#pragma omp for schedule(static)
        for (int64_t i = 0; i < int64_t(pairs); ++i) {
            std::string msg;
            if (!check(uint64_t(i), msg)) {
                ++local_failed;
                if (uint64_t(i) < local_first) {
                    local_first = uint64_t(i);
                    local_msg = msg;
                }
            }
        }
#pragma omp critical
        {
            failed += local_failed;
            if (local_first < first_bad) {
                first_bad = local_first;
                first_msg = local_msg;
            }
        }
    }
    result.verified = pairs - failed;
    result.first_failure = first_msg;
    return result;
}

}  // namespace

SweepResult verify_all_arc_pairs(int n) {
    if (n < 2) throw std::invalid_argument("arc sweep requires n >= 2");
    if (n > 6) throw LimitError("exhaustive arc sweep limited to n <= 6, got " + std::to_string(n));
    CayleyGraph g(n, true);
    uint64_t degree = uint64_t(g.degree());
    uint64_t arcs = g.vertex_count() * degree;
    GeneratorSet gens = g.generators();

    auto arc_at = [&](uint64_t idx) {
        uint64_t u = idx / degree;
        uint64_t s = gens.element(int(idx % degree)).word();
        return Arc{u, u ^ s};
    };
    return run_sweep(arcs * arcs, [&](uint64_t i, std::string& msg) {
        return check_pair(n, arc_at(i / arcs), arc_at(i % arcs), msg);
    });
}

SweepResult verify_random_arc_pairs(int n, uint64_t count, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("arc sweep requires n >= 2");
    GeneratorSet gens(n, true);
    uint64_t mask = word_mask(n);
    uint64_t degree = uint64_t(gens.size());

    return run_sweep(count, [&](uint64_t i, std::string& msg) {
        uint64_t state = seed + i * 0x9E3779B97F4A7C15ULL;
        auto arc = [&] {
            uint64_t u = splitmix64(state) & mask;
            uint64_t s = gens.element(int(splitmix64(state) % degree)).word();
            return Arc{u, u ^ s};
        };
        Arc a = arc();
        Arc b = arc();
        return check_pair(n, a, b, msg);
    });
}

}  // namespace fq
