#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fq/z2.hpp"

namespace fq {

// Invertible GF(2)-linear map given by the images of the basis vectors:
// column k is the image of e_{k+1}, packed as a word. Construction rejects
// dependent columns.
class LinearAut {
public:
    LinearAut(int n, std::vector<uint64_t> columns);
    static LinearAut identity(int n);

    int dim() const { return n_; }
    const std::vector<uint64_t>& columns() const { return cols_; }

    uint64_t apply_word(uint64_t x) const;
    Z2Vector apply(const Z2Vector& x) const;

    LinearAut compose(const LinearAut& rhs) const;  // rhs applied first
    LinearAut inverse() const;

    bool is_identity() const;
    // True when every column lies in the connection set (the map then
    // permutes the set and preserves edges).
    bool maps_generators(const GeneratorSet& gens) const;

    bool operator==(const LinearAut&) const = default;

private:
    int n_;
    std::vector<uint64_t> cols_;
};

// Automorphism in canonical form x -> translation + linear(x), the
// translation applied last. Elements of the translation subgroup have
// identity linear part; the stabilizer of 0 has zero translation.
class AffineAut {
public:
    AffineAut(Z2Vector translation, LinearAut linear);
    static AffineAut identity(int n);

    int dim() const { return linear_.dim(); }
    const Z2Vector& translation() const { return translation_; }
    const LinearAut& linear() const { return linear_; }

    uint64_t apply_word(uint64_t x) const;
    Z2Vector apply(const Z2Vector& x) const;

    AffineAut compose(const AffineAut& rhs) const;  // rhs applied first
    AffineAut inverse() const;

    bool is_identity() const;

    // Equality is on the canonical pair; it coincides with equality of
    // action tables (a tested property).
    bool operator==(const AffineAut&) const = default;

private:
    Z2Vector translation_;
    LinearAut linear_;
};

// The translation x -> v + x.
AffineAut translation_aut(const Z2Vector& v);

// Permutation of the generator index set {0, ..., k-1}; index i < n stands
// for e_{i+1} and, in folded mode, index n stands for the all-ones vector.
class GeneratorPermutation {
public:
    explicit GeneratorPermutation(std::vector<int> images);
    static GeneratorPermutation identity(int k);
    static GeneratorPermutation transposition(int k, int i, int j);

    int size() const { return int(images_.size()); }
    int image(int i) const { return images_[size_t(i)]; }
    const std::vector<int>& images() const { return images_; }

    GeneratorPermutation compose(const GeneratorPermutation& rhs) const;  // rhs first
    GeneratorPermutation inverse() const;

    bool operator==(const GeneratorPermutation&) const = default;

private:
    std::vector<int> images_;
};

// Linear extension of a bijection from the basis into the connection set:
// images[k] becomes the image of e_{k+1}. Any n distinct generators are a
// basis, so the extension is invertible, and it maps the connection set onto
// itself: the image of the all-ones vector is the one generator missing from
// images (or the all-ones vector itself when images is exactly the basis).
LinearAut extend_bijection(const GeneratorSet& gens, const std::vector<Z2Vector>& images);

// The automorphism whose restriction to the connection set realizes the
// given index permutation exactly.
AffineAut extend_generator_permutation(const GeneratorSet& gens, const GeneratorPermutation& p);

// |Aut| of the folded hypercube. The generic regime is (n+1)! * 2^n; the two
// small dimensions are exceptional: FQ_2 is a complete graph and FQ_3 a
// complete bipartite one, with strictly larger automorphism groups.
enum class OrderRegime { complete, complete_bipartite, semidirect };
struct GroupOrder {
    uint64_t value;
    OrderRegime regime;
};
GroupOrder group_order(int n);               // throws std::overflow_error for n > 15
std::string group_order_digits(int n);       // exact decimal for any n in [2, 64]
const char* regime_name(OrderRegime r);

// Size of the translation-by-linear subgroup, 2^n * k! for k generators.
uint64_t affine_group_size(const GeneratorSet& gens);

// Every element of the semidirect product, each exactly once: all pairs of a
// translation and an extended generator permutation. Permutations run in
// lexicographic order, translations in word order inside each. Capped at
// n <= 6.
std::vector<AffineAut> enumerate_affine_group(const GeneratorSet& gens);
std::vector<AffineAut> enumerate_affine_group(int n);  // folded

// Line format "v=<bits> phi=<col1>,...,<coln>"; parse/format round-trips
// losslessly.
std::string to_line(const AffineAut& a);
AffineAut parse_affine_line(std::string_view line);

}  // namespace fq
