#include "fq/z2.hpp"

#include <bit>
#include <stdexcept>

namespace fq {

uint64_t word_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

Z2Vector::Z2Vector(int n, uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("Z2Vector dimension must be in [1, 64], got " +
                                    std::to_string(n));
    if ((bits & ~word_mask(n)) != 0)
        throw std::invalid_argument("Z2Vector bits exceed dimension " + std::to_string(n));
}

Z2Vector Z2Vector::zero(int n) { return Z2Vector(n, 0); }

Z2Vector Z2Vector::unit(int n, int i) {
    if (i < 1 || i > n)
        throw std::invalid_argument("unit vector index out of range: " + std::to_string(i));
    return Z2Vector(n, uint64_t{1} << (n - i));
}

Z2Vector Z2Vector::all_ones(int n) { return Z2Vector(n, word_mask(n)); }

Z2Vector Z2Vector::parse(std::string_view s) {
    if (s.empty() || s.size() > 64)
        throw std::invalid_argument("bitstring length must be in [1, 64]");
    uint64_t bits = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring may contain only 0 and 1: \"" +
                                        std::string(s) + "\"");
        bits = (bits << 1) | uint64_t(c - '0');
    }
    return Z2Vector(int(s.size()), bits);
}

bool Z2Vector::coord(int i) const {
    if (i < 1 || i > n_)
        throw std::invalid_argument("coordinate index out of range: " + std::to_string(i));
    return (bits_ >> (n_ - i)) & 1;
}

int Z2Vector::weight() const { return std::popcount(bits_); }

std::string Z2Vector::str() const {
    std::string s(size_t(n_), '0');
    for (int i = 0; i < n_; ++i)
        if ((bits_ >> (n_ - 1 - i)) & 1) s[size_t(i)] = '1';
    return s;
}

Z2Vector operator+(const Z2Vector& a, const Z2Vector& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.n_) + " vs " +
                                    std::to_string(b.n_));
    return Z2Vector(a.n_, a.bits_ ^ b.bits_);
}

GeneratorSet::GeneratorSet(int n, bool folded) : n_(n), folded_(folded) {
    if (n < 2)
        throw std::invalid_argument("dimension must be at least 2, got " + std::to_string(n));
    if (n > 64)
        throw std::invalid_argument("dimension must be at most 64, got " + std::to_string(n));
}

Z2Vector GeneratorSet::element(int k) const {
    if (k < 0 || k >= size())
        throw std::invalid_argument("generator index out of range: " + std::to_string(k));
    return k < n_ ? Z2Vector::unit(n_, k + 1) : Z2Vector::all_ones(n_);
}

std::vector<Z2Vector> GeneratorSet::elements() const {
    std::vector<Z2Vector> out;
    out.reserve(size_t(size()));
    for (int k = 0; k < size(); ++k) out.push_back(element(k));
    return out;
}

bool GeneratorSet::contains(const Z2Vector& x) const {
    return x.dim() == n_ && contains_word(x.word());
}

bool GeneratorSet::contains_word(uint64_t w) const {
    int wt = std::popcount(w);
    return wt == 1 || (folded_ && w == word_mask(n_));
}

int GeneratorSet::index_of(const Z2Vector& x) const {
    if (x.dim() != n_) return -1;
    return index_of_word(x.word());
}

int GeneratorSet::index_of_word(uint64_t w) const {
    if (folded_ && w == word_mask(n_)) return n_;
    if (std::popcount(w) == 1) return n_ - 1 - std::countr_zero(w);
    return -1;
}

}  // namespace fq
