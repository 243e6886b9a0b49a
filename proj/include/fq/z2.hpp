#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fq {

// Element of Z_2^n for n <= 64. Serves both as a vertex label and as a group
// element; addition is coordinatewise XOR.
//
// Coordinate convention: the textual form is the bitstring x_1...x_n with
// coordinate 1 leftmost. Coordinate i is stored in bit (n - i) of the packed
// word, so the integer order of words equals the lexicographic order of
// bitstrings and a vertex's word is also its index in lexicographic vertex
// enumerations.
class Z2Vector {
public:
    Z2Vector() = default;
    Z2Vector(int n, uint64_t bits);

    static Z2Vector zero(int n);
    static Z2Vector unit(int n, int i);  // e_i, i in [1, n]
    static Z2Vector all_ones(int n);
    static Z2Vector parse(std::string_view s);

    int dim() const { return n_; }
    uint64_t word() const { return bits_; }
    bool coord(int i) const;  // x_i, i in [1, n]
    int weight() const;
    bool is_zero() const { return bits_ == 0; }
    std::string str() const;

    friend Z2Vector operator+(const Z2Vector& a, const Z2Vector& b);
    auto operator<=>(const Z2Vector&) const = default;

private:
    int n_ = 0;
    uint64_t bits_ = 0;
};

// All-ones mask for an n-bit word.
uint64_t word_mask(int n);

// Ordered connection set of the Cayley graph: [e_1, ..., e_n] plus the
// all-ones vector last when folded. All elements are involutions, the
// identity is excluded, and any n distinct elements are linearly
// independent over GF(2).
class GeneratorSet {
public:
    GeneratorSet(int n, bool folded);

    int dimension() const { return n_; }
    bool folded() const { return folded_; }
    int size() const { return folded_ ? n_ + 1 : n_; }

    Z2Vector element(int k) const;  // 0-based, k < size()
    std::vector<Z2Vector> elements() const;

    bool contains(const Z2Vector& x) const;
    bool contains_word(uint64_t w) const;
    // Position of x in the ordered set, or -1.
    int index_of(const Z2Vector& x) const;
    int index_of_word(uint64_t w) const;

private:
    int n_;
    bool folded_;
};

}  // namespace fq
