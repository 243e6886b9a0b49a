#include "fq/affine.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "fq/errors.hpp"

namespace fq {

namespace {

// XOR-basis rank over GF(2).
bool independent(const std::vector<uint64_t>& vecs) {
    uint64_t pivots[64] = {};
    for (uint64_t v : vecs) {
        while (v) {
            int h = 63 - std::countl_zero(v);
            if (!pivots[h]) {
                pivots[h] = v;
                break;
            }
            v ^= pivots[h];
        }
        if (!v) return false;
    }
    return true;
}

}  // namespace

LinearAut::LinearAut(int n, std::vector<uint64_t> columns) : n_(n), cols_(std::move(columns)) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("LinearAut dimension must be in [1, 64]");
    if (int(cols_.size()) != n)
        throw std::invalid_argument("LinearAut needs exactly " + std::to_string(n) +
                                    " columns, got " + std::to_string(cols_.size()));
    uint64_t mask = word_mask(n);
    for (uint64_t c : cols_)
        if (c & ~mask) throw std::invalid_argument("LinearAut column exceeds dimension");
    if (!independent(cols_))
        throw std::invalid_argument("LinearAut columns are linearly dependent");
}

LinearAut LinearAut::identity(int n) {
    std::vector<uint64_t> cols;
    cols.reserve(size_t(n));
    for (int i = 1; i <= n; ++i) cols.push_back(uint64_t{1} << (n - i));
    return LinearAut(n, std::move(cols));
}

uint64_t LinearAut::apply_word(uint64_t x) const {
    uint64_t y = 0;
    while (x) {
        int b = std::countr_zero(x);
        x &= x - 1;
        y ^= cols_[size_t(n_ - 1 - b)];
    }
    return y;
}

Z2Vector LinearAut::apply(const Z2Vector& x) const {
    if (x.dim() != n_)
        throw std::invalid_argument("LinearAut::apply: dimension mismatch");
    return Z2Vector(n_, apply_word(x.word()));
}

LinearAut LinearAut::compose(const LinearAut& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("LinearAut::compose: dimension mismatch");
    std::vector<uint64_t> cols;
    cols.reserve(size_t(n_));
    for (uint64_t c : rhs.cols_) cols.push_back(apply_word(c));
    return LinearAut(n_, std::move(cols));
}

LinearAut LinearAut::inverse() const {
    // Column Gauss-Jordan on [A; I]: column operations reducing A to the
    // identity turn the augmented identity into A^{-1}.
    std::vector<uint64_t> a = cols_;
    std::vector<uint64_t> inv = identity(n_).columns();
    for (int i = 1; i <= n_; ++i) {
        uint64_t bit = uint64_t{1} << (n_ - i);
        int k = i - 1;
        while (k < n_ && !(a[size_t(k)] & bit)) ++k;
        if (k == n_) throw std::logic_error("LinearAut::inverse: singular matrix");
        std::swap(a[size_t(k)], a[size_t(i - 1)]);
        std::swap(inv[size_t(k)], inv[size_t(i - 1)]);
        for (int j = 0; j < n_; ++j) {
            if (j == i - 1 || !(a[size_t(j)] & bit)) continue;
            a[size_t(j)] ^= a[size_t(i - 1)];
            inv[size_t(j)] ^= inv[size_t(i - 1)];
        }
    }
    return LinearAut(n_, std::move(inv));
}

bool LinearAut::is_identity() const { return *this == identity(n_); }

bool LinearAut::maps_generators(const GeneratorSet& gens) const {
    if (gens.dimension() != n_) return false;
    for (uint64_t c : cols_)
        if (!gens.contains_word(c)) return false;
    return true;
}

AffineAut::AffineAut(Z2Vector translation, LinearAut linear)
    : translation_(std::move(translation)), linear_(std::move(linear)) {
    if (translation_.dim() != linear_.dim())
        throw std::invalid_argument("AffineAut: translation and linear part disagree on dimension");
}

AffineAut AffineAut::identity(int n) {
    return AffineAut(Z2Vector::zero(n), LinearAut::identity(n));
}

uint64_t AffineAut::apply_word(uint64_t x) const {
    return translation_.word() ^ linear_.apply_word(x);
}

Z2Vector AffineAut::apply(const Z2Vector& x) const {
    if (x.dim() != dim()) throw std::invalid_argument("AffineAut::apply: dimension mismatch");
    return Z2Vector(dim(), apply_word(x.word()));
}

AffineAut AffineAut::compose(const AffineAut& rhs) const {
    if (rhs.dim() != dim()) throw std::invalid_argument("AffineAut::compose: dimension mismatch");
    Z2Vector t(dim(), translation_.word() ^ linear_.apply_word(rhs.translation_.word()));
    return AffineAut(std::move(t), linear_.compose(rhs.linear_));
}

AffineAut AffineAut::inverse() const {
    // (t, A)^{-1} = (A^{-1} t, A^{-1}); compute the translation before the
    // matrix is moved into the result.
    LinearAut inv = linear_.inverse();
    Z2Vector t(dim(), inv.apply_word(translation_.word()));
    return AffineAut(std::move(t), std::move(inv));
}

bool AffineAut::is_identity() const {
    return translation_.is_zero() && linear_.is_identity();
}

AffineAut translation_aut(const Z2Vector& v) {
    return AffineAut(v, LinearAut::identity(v.dim()));
}

GeneratorPermutation::GeneratorPermutation(std::vector<int> images)
    : images_(std::move(images)) {
    int k = int(images_.size());
    if (k < 1) throw std::invalid_argument("GeneratorPermutation must be nonempty");
    std::vector<char> seen(size_t(k), 0);
    for (int v : images_) {
        if (v < 0 || v >= k || seen[size_t(v)])
            throw std::invalid_argument("GeneratorPermutation images are not a bijection");
        seen[size_t(v)] = 1;
    }
}

GeneratorPermutation GeneratorPermutation::identity(int k) {
    std::vector<int> img(static_cast<size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    return GeneratorPermutation(std::move(img));
}

GeneratorPermutation GeneratorPermutation::transposition(int k, int i, int j) {
    if (i < 0 || i >= k || j < 0 || j >= k)
        throw std::invalid_argument("transposition index out of range");
    std::vector<int> img(static_cast<size_t>(k));
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[size_t(i)], img[size_t(j)]);
    return GeneratorPermutation(std::move(img));
}

GeneratorPermutation GeneratorPermutation::compose(const GeneratorPermutation& rhs) const {
    if (rhs.size() != size())
        throw std::invalid_argument("GeneratorPermutation::compose: size mismatch");
    std::vector<int> img(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) img[size_t(i)] = image(rhs.image(i));
    return GeneratorPermutation(std::move(img));
}

GeneratorPermutation GeneratorPermutation::inverse() const {
    std::vector<int> img(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) img[size_t(image(i))] = i;
    return GeneratorPermutation(std::move(img));
}

LinearAut extend_bijection(const GeneratorSet& gens, const std::vector<Z2Vector>& images) {
    int n = gens.dimension();
    if (int(images.size()) != n)
        throw std::invalid_argument("extend_bijection needs " + std::to_string(n) +
                                    " images, got " + std::to_string(images.size()));
    std::vector<uint64_t> cols;
    cols.reserve(size_t(n));
    for (const Z2Vector& img : images) {
        if (!gens.contains(img))
            throw std::invalid_argument("image is not a generator: " + img.str());
        for (uint64_t prev : cols)
            if (prev == img.word())
                throw std::invalid_argument("repeated image: " + img.str());
        cols.push_back(img.word());
    }
    return LinearAut(n, std::move(cols));
}

AffineAut extend_generator_permutation(const GeneratorSet& gens, const GeneratorPermutation& p) {
    if (p.size() != gens.size())
        throw std::invalid_argument("permutation degree " + std::to_string(p.size()) +
                                    " does not match generator count " +
                                    std::to_string(gens.size()));
    std::vector<Z2Vector> images;
    images.reserve(size_t(gens.dimension()));
    for (int i = 0; i < gens.dimension(); ++i) images.push_back(gens.element(p.image(i)));
    return AffineAut(Z2Vector::zero(gens.dimension()), extend_bijection(gens, images));
}

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
    uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("group order exceeds 64 bits; use group_order_digits");
    return r;
}

uint64_t semidirect_order_u64(int n, int k) {
    uint64_t v = uint64_t{1} << n;
    for (int i = 2; i <= k; ++i) v = checked_mul(v, uint64_t(i));
    return v;
}

// Little base-10^9 bignum, enough for 65! * 2^64.
std::string big_product_digits(int n, int k) {
    std::vector<uint64_t> limbs{1};
    auto mul_small = [&](uint64_t m) {
        uint64_t carry = 0;
        for (uint64_t& limb : limbs) {
            uint64_t cur = limb * m + carry;
            limb = cur % 1000000000;
            carry = cur / 1000000000;
        }
        while (carry) {
            limbs.push_back(carry % 1000000000);
            carry /= 1000000000;
        }
    };
    for (int i = 2; i <= k; ++i) mul_small(uint64_t(i));
    for (int i = 0; i < n; ++i) mul_small(2);
    std::string out = std::to_string(limbs.back());
    for (size_t i = limbs.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

}  // namespace

GroupOrder group_order(int n) {
    if (n < 2) throw std::invalid_argument("group_order requires n >= 2");
    if (n == 2) return {24, OrderRegime::complete};
    if (n == 3) return {1152, OrderRegime::complete_bipartite};
    return {semidirect_order_u64(n, n + 1), OrderRegime::semidirect};
}

std::string group_order_digits(int n) {
    if (n < 2 || n > 64) throw std::invalid_argument("group_order_digits requires n in [2, 64]");
    if (n == 2) return "24";
    if (n == 3) return "1152";
    return big_product_digits(n, n + 1);
}

const char* regime_name(OrderRegime r) {
    switch (r) {
        case OrderRegime::complete: return "complete-graph";
        case OrderRegime::complete_bipartite: return "complete-bipartite";
        case OrderRegime::semidirect: return "semidirect";
    }
    return "?";
}

uint64_t affine_group_size(const GeneratorSet& gens) {
    return semidirect_order_u64(gens.dimension(), gens.size());
}

std::vector<AffineAut> enumerate_affine_group(const GeneratorSet& gens) {
    int n = gens.dimension();
    if (n > 6)
        throw LimitError("affine group enumeration limited to n <= 6, got " + std::to_string(n));
    std::vector<AffineAut> out;
    out.reserve(affine_group_size(gens));
    std::vector<int> perm(static_cast<size_t>(gens.size()));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t count = uint64_t{1} << n;
    do {
        AffineAut linear_part =
            extend_generator_permutation(gens, GeneratorPermutation(perm));
        for (uint64_t v = 0; v < count; ++v)
            out.push_back(AffineAut(Z2Vector(n, v), linear_part.linear()));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<AffineAut> enumerate_affine_group(int n) {
    return enumerate_affine_group(GeneratorSet(n, true));
}

std::string to_line(const AffineAut& a) {
    std::string out = "v=" + a.translation().str() + " phi=";
    int n = a.dim();
    for (int i = 0; i < n; ++i) {
        if (i) out += ",";
        out += Z2Vector(n, a.linear().columns()[size_t(i)]).str();
    }
    return out;
}

AffineAut parse_affine_line(std::string_view line) {
    auto fail = [&] {
        throw std::invalid_argument("malformed automorphism line: \"" + std::string(line) + "\"");
    };
    if (line.substr(0, 2) != "v=") fail();
    size_t sp = line.find(' ');
    if (sp == std::string_view::npos) fail();
    Z2Vector t = Z2Vector::parse(line.substr(2, sp - 2));
    std::string_view rest = line.substr(sp + 1);
    if (rest.substr(0, 4) != "phi=") fail();
    rest.remove_prefix(4);
    std::vector<uint64_t> cols;
    while (!rest.empty()) {
        size_t comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        Z2Vector col = Z2Vector::parse(tok);
        if (col.dim() != t.dim()) fail();
        cols.push_back(col.word());
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (int(cols.size()) != t.dim()) fail();
    return AffineAut(t, LinearAut(t.dim(), std::move(cols)));
}

}  // namespace fq
