#pragma once

// Arithmetic over the integers mod 4: packed vectors, Lee metric, the Gray map,
// linear codes in standard form, Hensel lifting, and the Kerdock/Preparata pair.
//
// Packing: entry i of a Z4Vector occupies bits 2i (low bit) and 2i+1 (high
// bit) of one 64-bit word. The Gray image of entry i occupies binary
// coordinates 2i and 2i+1, so the image of the last entry ends the word.

#include <atomic>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hychroma/gf2.hpp"

namespace hychroma::z4 {

inline constexpr int kMaxLength = 32;
/// Largest 2*k1 + k2 enumerated without `force`.
inline constexpr int kEnumerationLimit = 24;

class Z4Vector {
public:
    Z4Vector() = default;
    /// Throws UsageError unless 1 <= length <= 32 and `packed` fits in 2*length bits.
    Z4Vector(int length, std::uint64_t packed);

    static Z4Vector from_entries(std::span<const int> entries);
    static Z4Vector from_entries(std::initializer_list<int> entries);
    /// Digits '0'..'3', first character is the first entry.
    static Z4Vector from_string(std::string_view digits);
    static Z4Vector zero(int length) { return Z4Vector(length, 0); }
    /// `value` at position i, zero elsewhere.
    static Z4Vector unit(int length, int i, int value = 1);
    /// Entrywise embedding of a binary vector as 0/1 entries.
    static Z4Vector from_binary(const gf2::BitVector& v);

    int length() const { return length_; }
    std::uint64_t packed() const { return packed_; }
    int operator[](int i) const { return static_cast<int>((packed_ >> (2 * i)) & 3U); }
    Z4Vector with_entry(int i, int value) const;

    Z4Vector operator+(const Z4Vector& other) const;
    Z4Vector operator-(const Z4Vector& other) const;
    Z4Vector operator-() const;
    Z4Vector scaled(int s) const;

    std::string to_string() const;

    friend bool operator==(const Z4Vector&, const Z4Vector&) = default;
    friend auto operator<=>(const Z4Vector&, const Z4Vector&) = default;

private:
    int length_ = 0;
    std::uint64_t packed_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Z4Vector& v);

// Packed-word kernels shared by the enumerators (n = vector length).
std::uint64_t packed_add(std::uint64_t a, std::uint64_t b);
std::uint64_t packed_neg(std::uint64_t a);
std::uint64_t packed_gray(std::uint64_t a);
std::uint64_t packed_gray_inverse(std::uint64_t bits);

int lee_weight(const Z4Vector& x);
int lee_distance(const Z4Vector& x, const Z4Vector& y);
/// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10 per entry; result has length 2n.
gf2::BitVector gray_map(const Z4Vector& x);
/// Inverse of gray_map. Throws UsageError for odd length.
Z4Vector gray_inverse(const gf2::BitVector& v);
/// Entrywise reduction mod 2.
gf2::BitVector alpha_map(const Z4Vector& x);
/// Sum of entrywise products, mod 4.
int inner_product(const Z4Vector& x, const Z4Vector& y);

class Z4Polynomial {
public:
    Z4Polynomial() = default;
    /// Coefficients lowest degree first; values are reduced mod 4 (negatives allowed).
    explicit Z4Polynomial(std::vector<int> coefficients);
    static Z4Polynomial monomial(int degree, int coefficient = 1);
    /// x^m - 1
    static Z4Polynomial x_pow_minus_one(int m);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    int coefficient(int i) const;
    const std::vector<int>& coefficients() const { return coeffs_; }

    Z4Polynomial operator+(const Z4Polynomial& other) const;
    Z4Polynomial operator-(const Z4Polynomial& other) const;
    Z4Polynomial operator*(const Z4Polynomial& other) const;
    Z4Polynomial scaled(int s) const;
    Z4Polynomial mod2() const;

    /// e.g. "x^3 + 2x^2 + x + 3"
    std::string to_string() const;

    friend bool operator==(const Z4Polynomial&, const Z4Polynomial&) = default;

private:
    void trim();
    std::vector<int> coeffs_;
};

struct Z4DivMod {
    Z4Polynomial quotient;
    Z4Polynomial remainder;
};

/// Long division by a divisor whose leading coefficient is a unit (1 or 3).
Z4DivMod divmod(const Z4Polynomial& a, const Z4Polynomial& b);

/// Lifts a square-free binary polynomial f (with f(0) = 1) to the unique monic
/// h over Z4 with h = f mod 2 that divides x^m - 1, m the odd order of x mod f.
/// Graeffe step: h(x^2) = (-1)^deg f * (e(x)^2 - o(x)^2), f = e + o split by parity of exponent.
Z4Polynomial hensel_lift(const Z4Polynomial& f);

/// Smallest m >= 1 with f | x^m - 1 over the binary field. Requires f(0) = 1.
int binary_order_of_x(const Z4Polynomial& f);

/// Primitive binary polynomial used for degree r: x^3+x+1, x^5+x^2+1, x^7+x+1.
Z4Polynomial primitive_polynomial(int r);

class Z4LinearCode {
public:
    Z4LinearCode(const Z4LinearCode& other);
    Z4LinearCode& operator=(const Z4LinearCode& other);

    int length() const { return length_; }
    int k1() const { return k1_; }
    int k2() const { return k2_; }
    /// log2 of the code size, 2*k1 + k2.
    int log2_size() const { return 2 * k1_ + k2_; }

    /// Reduced generators in the original coordinates: k1 rows of order 4, then
    /// k2 rows of order 2.
    const std::vector<Z4Vector>& generators() const { return rows_; }
    /// Standard-form column j is original coordinate column_order()[j].
    const std::vector<int>& column_order() const { return column_order_; }
    /// Generators with columns permuted into the block form (I A B ; 0 2I 2C).
    std::vector<Z4Vector> standard_matrix() const;

    bool contains(const Z4Vector& x) const;
    /// Packed words of every codeword. Guarded by kEnumerationLimit.
    std::vector<std::uint64_t> codeword_words(bool force = false) const;

    std::optional<int> cached_min_lee() const;
    void store_min_lee(int w) const;

private:
    Z4LinearCode(int length, int k1, int k2, std::vector<Z4Vector> rows, std::vector<int> order);
    friend Z4LinearCode standard_form(int length, std::span<const Z4Vector> rows);

    int length_;
    int k1_;
    int k2_;
    std::vector<Z4Vector> rows_;
    std::vector<int> column_order_;
    mutable std::atomic<int> min_lee_{-1};
};

/// Gaussian elimination over Z4 separating unit pivots from pivots equal to 2.
/// An empty or all-zero input yields the zero code (k1 = k2 = 0).
Z4LinearCode standard_form(int length, std::span<const Z4Vector> rows);
/// Dual code under the mod-4 inner product; cross-checked before returning.
Z4LinearCode z4_dual(const Z4LinearCode& c);
/// Minimum Lee weight of nonzero codewords (cached); nullopt for the zero code.
std::optional<int> min_lee_weight(const Z4LinearCode& c, bool force = false);

/// Quaternary Kerdock code of length 2^r, type 4^(r+1). Supported r: 3, 5.
Z4LinearCode kerdock_code(int r);
/// Quaternary Preparata code, the dual of kerdock_code(r); type 4^(2^r - r - 1).
Z4LinearCode preparata_code(int r);

// Text format: "z4code n=<n> k1=<k1> k2=<k2>" then k1+k2 rows of digits 0..3.
void write_z4_code(std::ostream& os, const Z4LinearCode& c);
Z4LinearCode read_z4_code(std::istream& is);

}  // namespace hychroma::z4
