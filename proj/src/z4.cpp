#include "hychroma/z4.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hychroma/errors.hpp"
#include "parallel.hpp"

namespace hychroma::z4 {

namespace {

constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;

int mod4(int v) { return ((v % 4) + 4) % 4; }

std::uint64_t packed_scale(std::uint64_t a, int s) {
    switch (mod4(s)) {
    case 0: return 0;
    case 1: return a;
    case 2: return (a & kLowBits) << 1;
    default: return packed_neg(a);
    }
}

void require_same_length(const Z4Vector& a, const Z4Vector& b, const char* op) {
    if (a.length() != b.length())
        throw UsageError(std::string(op) + ": length mismatch (" + std::to_string(a.length()) + " vs " +
                         std::to_string(b.length()) + ")");
}

}  // namespace

// ---------------------------------------------------------------------------
// Packed kernels

std::uint64_t packed_add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t alo = a & kLowBits, ahi = (a >> 1) & kLowBits;
    const std::uint64_t blo = b & kLowBits, bhi = (b >> 1) & kLowBits;
    const std::uint64_t lo = alo ^ blo;
    const std::uint64_t hi = ahi ^ bhi ^ (alo & blo);
    return lo | (hi << 1);
}

std::uint64_t packed_neg(std::uint64_t a) {
    const std::uint64_t lo = a & kLowBits;
    const std::uint64_t hi = ((a >> 1) & kLowBits) ^ lo;
    return lo | (hi << 1);
}

std::uint64_t packed_gray(std::uint64_t a) {
    const std::uint64_t lo = a & kLowBits;
    const std::uint64_t hi = (a >> 1) & kLowBits;
    return hi | ((hi ^ lo) << 1);
}

std::uint64_t packed_gray_inverse(std::uint64_t bits) {
    const std::uint64_t first = bits & kLowBits;
    const std::uint64_t second = (bits >> 1) & kLowBits;
    return (first ^ second) | (first << 1);
}

// ---------------------------------------------------------------------------
// Z4Vector

Z4Vector::Z4Vector(int length, std::uint64_t packed) : length_(length), packed_(packed) {
    if (length < 1 || length > kMaxLength)
        throw UsageError("Z4Vector length must be in 1..32, got " + std::to_string(length));
    if ((packed & ~low_mask(2 * length)) != 0) throw UsageError("Z4Vector has entries beyond its length");
}

Z4Vector Z4Vector::from_entries(std::span<const int> entries) {
    const int n = static_cast<int>(entries.size());
    if (n < 1 || n > kMaxLength) throw UsageError("Z4Vector length must be in 1..32");
    std::uint64_t packed = 0;
    for (int i = 0; i < n; ++i)
        packed |= static_cast<std::uint64_t>(mod4(entries[static_cast<std::size_t>(i)])) << (2 * i);
    return Z4Vector(n, packed);
}

Z4Vector Z4Vector::from_entries(std::initializer_list<int> entries) {
    return from_entries(std::span<const int>(entries.begin(), entries.size()));
}

Z4Vector Z4Vector::from_string(std::string_view digits) {
    std::vector<int> entries;
    for (char ch : digits) {
        if (ch < '0' || ch > '3') throw ParseError(std::string("invalid Z4 digit '") + ch + "'");
        entries.push_back(ch - '0');
    }
    if (entries.empty() || entries.size() > static_cast<std::size_t>(kMaxLength))
        throw ParseError("Z4 word length must be in 1..32");
    return from_entries(entries);
}

Z4Vector Z4Vector::unit(int length, int i, int value) {
    if (i < 0 || i >= length) throw UsageError("Z4 unit index out of range");
    return Z4Vector(length, static_cast<std::uint64_t>(mod4(value)) << (2 * i));
}

Z4Vector Z4Vector::from_binary(const gf2::BitVector& v) {
    std::uint64_t packed = 0;
    for (int i = 0; i < v.length(); ++i)
        if (v[i]) packed |= std::uint64_t{1} << (2 * i);
    return Z4Vector(v.length(), packed);
}

Z4Vector Z4Vector::with_entry(int i, int value) const {
    if (i < 0 || i >= length_) throw UsageError("Z4 entry index out of range");
    const std::uint64_t cleared = packed_ & ~(std::uint64_t{3} << (2 * i));
    return Z4Vector(length_, cleared | (static_cast<std::uint64_t>(mod4(value)) << (2 * i)));
}

Z4Vector Z4Vector::operator+(const Z4Vector& other) const {
    require_same_length(*this, other, "z4 add");
    return Z4Vector(length_, packed_add(packed_, other.packed_));
}

Z4Vector Z4Vector::operator-(const Z4Vector& other) const {
    require_same_length(*this, other, "z4 sub");
    return Z4Vector(length_, packed_add(packed_, packed_neg(other.packed_)));
}

Z4Vector Z4Vector::operator-() const { return Z4Vector(length_, packed_neg(packed_)); }

Z4Vector Z4Vector::scaled(int s) const { return Z4Vector(length_, packed_scale(packed_, s)); }

std::string Z4Vector::to_string() const {
    std::string s;
    for (int i = 0; i < length_; ++i) s.push_back(static_cast<char>('0' + (*this)[i]));
    return s;
}

std::ostream& operator<<(std::ostream& os, const Z4Vector& v) { return os << v.to_string(); }

int lee_weight(const Z4Vector& x) { return std::popcount(packed_gray(x.packed())); }

int lee_distance(const Z4Vector& x, const Z4Vector& y) { return lee_weight(x - y); }

gf2::BitVector gray_map(const Z4Vector& x) { return gf2::BitVector(2 * x.length(), packed_gray(x.packed())); }

Z4Vector gray_inverse(const gf2::BitVector& v) {
    if (v.length() % 2 != 0) throw UsageError("gray_inverse needs an even length, got " + std::to_string(v.length()));
    return Z4Vector(v.length() / 2, packed_gray_inverse(v.bits()));
}

gf2::BitVector alpha_map(const Z4Vector& x) {
    std::uint64_t bits = 0;
    for (int i = 0; i < x.length(); ++i)
        if (x[i] & 1) bits |= std::uint64_t{1} << i;
    return gf2::BitVector(x.length(), bits);
}

int inner_product(const Z4Vector& x, const Z4Vector& y) {
    require_same_length(x, y, "inner_product");
    int sum = 0;
    for (int i = 0; i < x.length(); ++i) sum += x[i] * y[i];
    return sum % 4;
}

// ---------------------------------------------------------------------------
// Z4Polynomial

Z4Polynomial::Z4Polynomial(std::vector<int> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c = mod4(c);
    trim();
}

void Z4Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Z4Polynomial Z4Polynomial::monomial(int degree, int coefficient) {
    std::vector<int> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coefficient;
    return Z4Polynomial(std::move(c));
}

Z4Polynomial Z4Polynomial::x_pow_minus_one(int m) { return monomial(m) - monomial(0); }

int Z4Polynomial::coefficient(int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : 0;
}

Z4Polynomial Z4Polynomial::operator+(const Z4Polynomial& other) const {
    std::vector<int> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coefficient(static_cast<int>(i)) + other.coefficient(static_cast<int>(i));
    return Z4Polynomial(std::move(c));
}

Z4Polynomial Z4Polynomial::operator-(const Z4Polynomial& other) const { return *this + other.scaled(3); }

Z4Polynomial Z4Polynomial::operator*(const Z4Polynomial& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<int> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] = (c[i + j] + coeffs_[i] * other.coeffs_[j]) % 4;
    return Z4Polynomial(std::move(c));
}

Z4Polynomial Z4Polynomial::scaled(int s) const {
    std::vector<int> c = coeffs_;
    for (auto& v : c) v *= s;
    return Z4Polynomial(std::move(c));
}

Z4Polynomial Z4Polynomial::mod2() const {
    std::vector<int> c = coeffs_;
    for (auto& v : c) v &= 1;
    return Z4Polynomial(std::move(c));
}

std::string Z4Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const int c = coefficient(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Z4DivMod divmod(const Z4Polynomial& a, const Z4Polynomial& b) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    const int lead = b.coefficient(b.degree());
    if (lead % 2 == 0) throw UsageError("divisor leading coefficient must be a unit mod 4");
    const int inv = lead;  // 1*1 = 3*3 = 1 mod 4
    std::vector<int> rem = a.coefficients();
    std::vector<int> quot(std::max(0, a.degree() - b.degree() + 1), 0);
    for (int i = a.degree(); i >= b.degree(); --i) {
        const int c = (rem[static_cast<std::size_t>(i)] * inv) % 4;
        if (c == 0) continue;
        const int shift = i - b.degree();
        quot[static_cast<std::size_t>(shift)] = c;
        for (int j = 0; j <= b.degree(); ++j) {
            auto& r = rem[static_cast<std::size_t>(shift + j)];
            r = mod4(r - c * b.coefficient(j));
        }
    }
    return {Z4Polynomial(std::move(quot)), Z4Polynomial(std::move(rem))};
}

namespace {

// Binary polynomials packed into a word, bit i = coefficient of x^i.
using BinPoly = std::uint64_t;

int bin_degree(BinPoly p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

BinPoly bin_mod(BinPoly a, BinPoly b) {
    const int db = bin_degree(b);
    for (int da = bin_degree(a); da >= db; da = bin_degree(a)) a ^= b << (da - db);
    return a;
}

BinPoly bin_gcd(BinPoly a, BinPoly b) {
    while (b != 0) {
        a = bin_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

BinPoly to_binpoly(const Z4Polynomial& f) {
    const Z4Polynomial r = f.mod2();
    if (r.degree() > 62) throw UsageError("binary polynomial degree above 62");
    BinPoly p = 0;
    for (int i = 0; i <= r.degree(); ++i)
        if (r.coefficient(i)) p |= BinPoly{1} << i;
    return p;
}

}  // namespace

int binary_order_of_x(const Z4Polynomial& f) {
    const BinPoly p = to_binpoly(f);
    const int d = bin_degree(p);
    if (d < 1) throw UsageError("order of x needs a polynomial of degree >= 1");
    if ((p & 1) == 0) throw ConstructionError("x divides " + f.mod2().to_string() + "; x has no finite order");
    if (d == 1) return 1;  // f = x + 1
    BinPoly power = 2;     // x
    const std::uint64_t limit = std::uint64_t{1} << std::min(d, 40);
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (power == 1) return static_cast<int>(m);
        power <<= 1;
        if ((power >> d) & 1U) power ^= p;
    }
    throw IntegrityError("order of x not found");
}

Z4Polynomial hensel_lift(const Z4Polynomial& f) {
    const Z4Polynomial fb = f.mod2();
    const int deg = fb.degree();
    if (deg < 1) throw ConstructionError("hensel_lift needs degree >= 1");
    if (deg > 31) throw UsageError("hensel_lift supports degree <= 31");
    if (fb.coefficient(0) == 0) throw ConstructionError("x divides " + fb.to_string() + "; cannot divide x^m - 1");

    const BinPoly p = to_binpoly(fb);
    BinPoly derivative = 0;
    for (int i = 1; i <= deg; i += 2)
        if ((p >> i) & 1U) derivative |= BinPoly{1} << (i - 1);
    if (derivative == 0 || bin_gcd(p, derivative) != 1)
        throw ConstructionError(fb.to_string() + " is not square-free mod 2");

    std::vector<int> even(static_cast<std::size_t>(deg) + 1, 0), odd(static_cast<std::size_t>(deg) + 1, 0);
    for (int i = 0; i <= deg; ++i) (i % 2 == 0 ? even : odd)[static_cast<std::size_t>(i)] = fb.coefficient(i);
    const Z4Polynomial e(even), o(odd);
    const Z4Polynomial graeffe = e * e - o * o;

    std::vector<int> lifted(static_cast<std::size_t>(deg) + 1, 0);
    const int sign = (deg % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= graeffe.degree(); ++i) {
        if (i % 2 == 1) {
            if (graeffe.coefficient(i) != 0) throw IntegrityError("Graeffe product has an odd-degree term");
            continue;
        }
        lifted[static_cast<std::size_t>(i / 2)] = sign * graeffe.coefficient(i);
    }
    Z4Polynomial h(std::move(lifted));

    const int m = binary_order_of_x(fb);
    if (h.mod2() != fb || !divmod(Z4Polynomial::x_pow_minus_one(m), h).remainder.is_zero())
        throw IntegrityError("Hensel lift of " + fb.to_string() + " does not divide x^" + std::to_string(m) + " - 1");
    return h;
}

Z4Polynomial primitive_polynomial(int r) {
    switch (r) {
    case 3: return Z4Polynomial({1, 1, 0, 1});
    case 5: return Z4Polynomial({1, 0, 1, 0, 0, 1});
    case 7: return Z4Polynomial({1, 1, 0, 0, 0, 0, 0, 1});
    default: throw UsageError("no builtin primitive polynomial of degree " + std::to_string(r));
    }
}

// ---------------------------------------------------------------------------
// Z4LinearCode

Z4LinearCode::Z4LinearCode(int length, int k1, int k2, std::vector<Z4Vector> rows, std::vector<int> order)
    : length_(length), k1_(k1), k2_(k2), rows_(std::move(rows)), column_order_(std::move(order)) {}

Z4LinearCode::Z4LinearCode(const Z4LinearCode& other)
    : length_(other.length_), k1_(other.k1_), k2_(other.k2_), rows_(other.rows_),
      column_order_(other.column_order_), min_lee_(other.min_lee_.load()) {}

Z4LinearCode& Z4LinearCode::operator=(const Z4LinearCode& other) {
    length_ = other.length_;
    k1_ = other.k1_;
    k2_ = other.k2_;
    rows_ = other.rows_;
    column_order_ = other.column_order_;
    min_lee_.store(other.min_lee_.load());
    return *this;
}

std::vector<Z4Vector> Z4LinearCode::standard_matrix() const {
    std::vector<Z4Vector> out;
    for (const auto& r : rows_) {
        std::vector<int> entries(static_cast<std::size_t>(length_));
        for (int j = 0; j < length_; ++j) entries[static_cast<std::size_t>(j)] = r[column_order_[static_cast<std::size_t>(j)]];
        out.push_back(Z4Vector::from_entries(entries));
    }
    return out;
}

bool Z4LinearCode::contains(const Z4Vector& x) const {
    if (x.length() != length_) return false;
    Z4Vector y = x;
    for (int i = 0; i < k1_; ++i) {
        const int a = y[column_order_[static_cast<std::size_t>(i)]];
        if (a != 0) y = y - rows_[static_cast<std::size_t>(i)].scaled(a);
    }
    for (int j = 0; j < k2_; ++j) {
        const int b = y[column_order_[static_cast<std::size_t>(k1_ + j)]];
        if (b == 2)
            y = y - rows_[static_cast<std::size_t>(k1_ + j)];
        else if (b != 0)
            return false;
    }
    return y.packed() == 0;
}

namespace {

// Generators for the Gray-code walk: r_i and 2 r_i for order-4 rows, s_j for
// order-2 rows. Bit patterns over these map bijectively onto the code.
std::vector<std::uint64_t> walk_generators(const Z4LinearCode& c) {
    std::vector<std::uint64_t> g;
    for (int i = 0; i < c.k1(); ++i) {
        const auto w = c.generators()[static_cast<std::size_t>(i)].packed();
        g.push_back(w);
        g.push_back(packed_scale(w, 2));
    }
    for (int j = 0; j < c.k2(); ++j) g.push_back(c.generators()[static_cast<std::size_t>(c.k1() + j)].packed());
    return g;
}

std::uint64_t walk_start(const std::vector<std::uint64_t>& g, std::uint64_t index) {
    const std::uint64_t gray = index ^ (index >> 1);
    std::uint64_t w = 0;
    for (std::size_t b = 0; b < g.size(); ++b)
        if ((gray >> b) & 1U) w = packed_add(w, g[b]);
    return w;
}

std::uint64_t walk_step(const std::vector<std::uint64_t>& g, std::uint64_t w, std::uint64_t index) {
    const int b = std::countr_zero(index);
    const std::uint64_t gray = index ^ (index >> 1);
    const std::uint64_t gen = g[static_cast<std::size_t>(b)];
    return ((gray >> b) & 1U) ? packed_add(w, gen) : packed_add(w, packed_neg(gen));
}

void check_enumeration_guard(const Z4LinearCode& c, bool force) {
    if (c.log2_size() > kEnumerationLimit && !force)
        throw GuardError("Z4 enumeration needs 2*k1+k2 <= " + std::to_string(kEnumerationLimit) + ", got " +
                         std::to_string(c.log2_size()));
}

}  // namespace

std::vector<std::uint64_t> Z4LinearCode::codeword_words(bool force) const {
    check_enumeration_guard(*this, force);
    const auto g = walk_generators(*this);
    const std::uint64_t total = std::uint64_t{1} << g.size();
    std::vector<std::uint64_t> out;
    out.reserve(total);
    std::uint64_t w = 0;
    out.push_back(w);
    for (std::uint64_t i = 1; i < total; ++i) {
        w = walk_step(g, w, i);
        out.push_back(w);
    }
    return out;
}

std::optional<int> Z4LinearCode::cached_min_lee() const {
    const int w = min_lee_.load();
    if (w < 0) return std::nullopt;
    return w;
}

void Z4LinearCode::store_min_lee(int w) const { min_lee_.store(w); }

Z4LinearCode standard_form(int length, std::span<const Z4Vector> input) {
    if (length < 1 || length > kMaxLength) throw UsageError("Z4 code length must be in 1..32");
    using Row = std::vector<int>;
    std::vector<Row> m;
    for (const auto& v : input) {
        if (v.length() != length) throw UsageError("generator length mismatch");
        Row r(static_cast<std::size_t>(length));
        for (int j = 0; j < length; ++j) r[static_cast<std::size_t>(j)] = v[j];
        m.push_back(std::move(r));
    }
    std::vector<int> order(static_cast<std::size_t>(length));
    for (int j = 0; j < length; ++j) order[static_cast<std::size_t>(j)] = j;

    auto at = [&](std::size_t row, int pos) -> int& { return m[row][static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]; };
    auto sub_multiple = [&](std::size_t target, std::size_t source, int factor) {
        for (int j = 0; j < length; ++j) {
            auto& t = m[target][static_cast<std::size_t>(j)];
            t = mod4(t - factor * m[source][static_cast<std::size_t>(j)]);
        }
    };
    // Finds the pivot with the smallest standard position, then the smallest row.
    auto find_pivot = [&](std::size_t first_row, int first_pos, auto accept) -> std::optional<std::pair<std::size_t, int>> {
        for (int pos = first_pos; pos < length; ++pos)
            for (std::size_t r = first_row; r < m.size(); ++r)
                if (accept(at(r, pos))) return std::pair{r, pos};
        return std::nullopt;
    };

    std::size_t k1 = 0;
    while (auto p = find_pivot(k1, static_cast<int>(k1), [](int v) { return v % 2 == 1; })) {
        std::swap(m[k1], m[p->first]);
        std::swap(order[k1], order[static_cast<std::size_t>(p->second)]);
        if (at(k1, static_cast<int>(k1)) == 3)
            for (auto& v : m[k1]) v = mod4(3 * v);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != k1 && at(r, static_cast<int>(k1)) != 0) sub_multiple(r, k1, at(r, static_cast<int>(k1)));
        ++k1;
    }

    std::size_t k2 = 0;
    while (auto p = find_pivot(k1 + k2, static_cast<int>(k1 + k2), [](int v) { return v == 2; })) {
        const std::size_t row = k1 + k2;
        const int pos = static_cast<int>(row);
        std::swap(m[row], m[p->first]);
        std::swap(order[row], order[static_cast<std::size_t>(p->second)]);
        for (std::size_t r = k1; r < m.size(); ++r)
            if (r != row && at(r, pos) == 2) sub_multiple(r, row, 1);
        for (std::size_t t = 0; t < k1; ++t)
            if (at(t, pos) >= 2) sub_multiple(t, row, 1);
        ++k2;
    }

    for (std::size_t r = k1 + k2; r < m.size(); ++r)
        if (std::any_of(m[r].begin(), m[r].end(), [](int v) { return v != 0; }))
            throw IntegrityError("standard_form left a nonzero row after elimination");

    std::vector<Z4Vector> rows;
    for (std::size_t r = 0; r < k1 + k2; ++r) rows.push_back(Z4Vector::from_entries(m[r]));
    return Z4LinearCode(length, static_cast<int>(k1), static_cast<int>(k2), std::move(rows), std::move(order));
}

Z4LinearCode z4_dual(const Z4LinearCode& c) {
    const int n = c.length();
    const int k1 = c.k1(), k2 = c.k2();
    const int rest = n - k1 - k2;
    const auto g = c.standard_matrix();
    auto A = [&](int i, int j) { return g[static_cast<std::size_t>(i)][k1 + j]; };
    auto B = [&](int i, int t) { return g[static_cast<std::size_t>(i)][k1 + k2 + t]; };
    auto C = [&](int j, int t) { return g[static_cast<std::size_t>(k1 + j)][k1 + k2 + t] / 2; };

    const auto& order = c.column_order();
    auto to_original = [&](const std::vector<int>& standard) {
        std::vector<int> entries(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) entries[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])] = standard[static_cast<std::size_t>(s)];
        return Z4Vector::from_entries(entries);
    };

    // Dual of (I A B ; 0 2I 2C) is ( -(B^T + C^T A^T)  C^T  I ; 2A^T  2I  0 ).
    std::vector<Z4Vector> rows;
    for (int t = 0; t < rest; ++t) {
        std::vector<int> s(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < k1; ++i) {
            int v = B(i, t);
            for (int j = 0; j < k2; ++j) v += C(j, t) * A(i, j);
            s[static_cast<std::size_t>(i)] = -v;
        }
        for (int j = 0; j < k2; ++j) s[static_cast<std::size_t>(k1 + j)] = C(j, t);
        s[static_cast<std::size_t>(k1 + k2 + t)] = 1;
        rows.push_back(to_original(s));
    }
    for (int j = 0; j < k2; ++j) {
        std::vector<int> s(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < k1; ++i) s[static_cast<std::size_t>(i)] = 2 * A(i, j);
        s[static_cast<std::size_t>(k1 + j)] = 2;
        rows.push_back(to_original(s));
    }

    Z4LinearCode dual = standard_form(n, rows);
    if (dual.log2_size() + c.log2_size() != 2 * n)
        throw IntegrityError("dual size check failed: |C| * |C_dual| != 4^n");
    for (const auto& x : c.generators())
        for (const auto& y : dual.generators())
            if (inner_product(x, y) != 0)
                throw IntegrityError("dual check failed: <" + x.to_string() + ", " + y.to_string() + "> != 0 mod 4");
    return dual;
}

std::optional<int> min_lee_weight(const Z4LinearCode& c, bool force) {
    if (c.log2_size() == 0) return std::nullopt;
    if (auto cached = c.cached_min_lee()) return cached;
    check_enumeration_guard(c, force);
    const auto g = walk_generators(c);
    const std::uint64_t total = std::uint64_t{1} << g.size();
    std::vector<int> best(detail::max_chunks(), std::numeric_limits<int>::max());
    detail::parallel_chunks(total - 1, [&](detail::ChunkRange r) {
        std::uint64_t i = r.begin + 1;
        std::uint64_t w = walk_start(g, i);
        int local = std::numeric_limits<int>::max();
        for (;;) {
            local = std::min(local, std::popcount(packed_gray(w)));
            if (++i > r.end) break;
            w = walk_step(g, w, i);
        }
        best[r.index] = local;
    });
    const int result = *std::min_element(best.begin(), best.end());
    c.store_min_lee(result);
    return result;
}

// ---------------------------------------------------------------------------
// Kerdock / Preparata

Z4LinearCode kerdock_code(int r) {
    if (r < 3 || r % 2 == 0) throw UsageError("kerdock_code needs odd r >= 3, got " + std::to_string(r));
    const int length = 1 << r;
    if (length > kMaxLength)
        throw UsageError("kerdock_code(" + std::to_string(r) + ") has length " + std::to_string(length) +
                         ", above the supported Z4 length 32");
    const int n = length - 1;
    const Z4Polynomial h = hensel_lift(primitive_polynomial(r));
    const auto [g, rem] = divmod(Z4Polynomial::x_pow_minus_one(n), h);
    if (!rem.is_zero()) throw IntegrityError("lifted polynomial does not divide x^n - 1");

    std::vector<Z4Vector> rows;
    for (int shift = 0; shift < r; ++shift) {
        std::vector<int> entries(static_cast<std::size_t>(length), 0);
        int sum = 0;
        for (int j = 0; j <= g.degree(); ++j) {
            entries[static_cast<std::size_t>(j + shift)] = g.coefficient(j);
            sum += g.coefficient(j);
        }
        entries.back() = -sum;
        rows.push_back(Z4Vector::from_entries(entries));
    }
    rows.push_back(Z4Vector::from_entries(std::vector<int>(static_cast<std::size_t>(length), 1)));

    Z4LinearCode code = standard_form(length, rows);
    if (code.k1() != r + 1 || code.k2() != 0)
        throw IntegrityError("kerdock_code type mismatch: got 4^" + std::to_string(code.k1()) + " 2^" +
                             std::to_string(code.k2()));
    return code;
}

Z4LinearCode preparata_code(int r) {
    Z4LinearCode code = z4_dual(kerdock_code(r));
    const int expected = (1 << r) - r - 1;
    if (code.k1() != expected || code.k2() != 0)
        throw IntegrityError("preparata_code type mismatch: got 4^" + std::to_string(code.k1()) + " 2^" +
                             std::to_string(code.k2()));
    return code;
}

// ---------------------------------------------------------------------------
// Text format

void write_z4_code(std::ostream& os, const Z4LinearCode& c) {
    os << "z4code n=" << c.length() << " k1=" << c.k1() << " k2=" << c.k2() << '\n';
    for (const auto& r : c.generators()) os << r.to_string() << '\n';
}

Z4LinearCode read_z4_code(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing z4code header");
    std::istringstream header(line);
    std::string tag, extra;
    header >> tag;
    if (tag != "z4code") throw ParseError("bad z4code header: '" + line + "'");
    int n = -1, k1 = -1, k2 = -1;
    for (auto [key, dest] : {std::pair{"n=", &n}, std::pair{"k1=", &k1}, std::pair{"k2=", &k2}}) {
        std::string token;
        if (!(header >> token) || token.rfind(key, 0) != 0) throw ParseError("bad z4code header: '" + line + "'");
        try {
            *dest = std::stoi(token.substr(std::string(key).size()));
        } catch (const std::logic_error&) {
            throw ParseError("bad integer in z4code header: '" + token + "'");
        }
    }
    if (header >> extra) throw ParseError("trailing fields in z4code header");
    if (n < 1 || n > kMaxLength || k1 < 0 || k2 < 0 || k1 + k2 > n) throw ParseError("z4code header out of range");
    std::vector<Z4Vector> rows;
    for (int i = 0; i < k1 + k2; ++i) {
        if (!std::getline(is, line)) throw ParseError("z4code truncated after " + std::to_string(i) + " rows");
        if (static_cast<int>(line.size()) != n) throw ParseError("z4code row has wrong length");
        rows.push_back(Z4Vector::from_string(line));
    }
    Z4LinearCode code = standard_form(n, rows);
    if (code.k1() != k1 || code.k2() != k2)
        throw ParseError("z4code rows generate type 4^" + std::to_string(code.k1()) + " 2^" + std::to_string(code.k2()) +
                         ", header says 4^" + std::to_string(k1) + " 2^" + std::to_string(k2));
    return code;
}

}  // namespace hychroma::z4
