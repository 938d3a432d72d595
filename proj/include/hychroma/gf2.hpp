#pragma once

// Bit-packed vectors, matrices and linear codes over the binary field.
//
// Coordinate convention: coordinate i (0-based) of a vector lives at bit i of
// its word, so the first coordinate is the least significant bit. A vertex of
// the n-cube is identified with the integer value of its bits.

#include <atomic>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hychroma {

/// Vertex of the n-cube, identified with its LSB-first bit pattern.
using Vertex = std::uint64_t;

/// A set of vertices stored as a sorted vector.
using Block = std::vector<Vertex>;

/// Mask with the low `n` bits set (n in 0..64).
constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace hychroma

namespace hychroma::gf2 {

inline constexpr int kMaxLength = 64;
/// Largest dimension `min_hamming_weight` enumerates without `force`.
inline constexpr int kMinWeightDimensionLimit = 28;
/// Largest length `enumerate_cosets` materializes without `force`.
inline constexpr int kCosetLengthLimit = 24;

class BitVector {
public:
    BitVector() = default;
    /// Throws UsageError unless 1 <= length <= 64 and no bit at or above `length` is set.
    BitVector(int length, std::uint64_t bits);

    /// Parses a string of '0'/'1'; the first character is the first coordinate.
    static BitVector from_string(std::string_view text);
    /// i-th unit vector (0-based).
    static BitVector unit(int length, int i);
    static BitVector zero(int length) { return BitVector(length, 0); }

    int length() const { return length_; }
    std::uint64_t bits() const { return bits_; }
    Vertex index() const { return bits_; }
    bool operator[](int i) const { return (bits_ >> i) & 1U; }
    int weight() const;

    std::string to_string() const;

    BitVector operator^(const BitVector& other) const;
    BitVector& operator^=(const BitVector& other);
    BitVector operator&(const BitVector& other) const;
    /// Concatenation: this vector's coordinates come first.
    BitVector concat(const BitVector& tail) const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
    int length_ = 0;
    std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitVector& v);

int hamming_weight(const BitVector& v);
/// Number of coordinates in which `a` and `b` differ. Throws UsageError on length mismatch.
int hamming_distance(const BitVector& a, const BitVector& b);

class BinaryMatrix {
public:
    explicit BinaryMatrix(int col_count) : col_count_(col_count) {}
    BinaryMatrix(int col_count, std::vector<BitVector> rows);

    /// Builds an m x n matrix whose j-th column is `columns[j]` (each of length m).
    static BinaryMatrix from_columns(int row_count, std::span<const BitVector> columns);
    static BinaryMatrix identity(int n);

    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return col_count_; }
    const std::vector<BitVector>& rows() const { return rows_; }
    const BitVector& row(int i) const { return rows_.at(static_cast<std::size_t>(i)); }
    BitVector column(int j) const;

    /// Product H v^T, as a vector of length row_count.
    BitVector multiply(const BitVector& v) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

private:
    int col_count_ = 0;
    std::vector<BitVector> rows_;
};

struct RowReduction {
    BinaryMatrix matrix;      ///< nonzero rows of the reduced row-echelon form
    int rank = 0;
    std::vector<int> pivots;  ///< pivot column of each row, increasing
};

/// Reduced row-echelon form over the binary field. Pivots are chosen on the
/// lowest coordinate first; zero rows are dropped.
RowReduction rref(const BinaryMatrix& m);

class BinaryLinearCode {
public:
    /// Code spanned by `generators` (any spanning set; reduced on construction).
    BinaryLinearCode(int length, std::vector<BitVector> generators);
    BinaryLinearCode(const BinaryLinearCode& other);
    BinaryLinearCode& operator=(const BinaryLinearCode& other);

    /// Null space {c : H c^T = 0}.
    static BinaryLinearCode kernel_of(const BinaryMatrix& h);

    int length() const { return length_; }
    int dimension() const { return generator_.row_count(); }
    const BinaryMatrix& generator() const { return generator_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const BitVector& word) const;
    /// Codeword sum of generator rows selected by the bits of `message`.
    BitVector encode(std::uint64_t message) const;
    /// All 2^k codewords in Gray-code enumeration order. Guarded by the dimension limit.
    std::vector<Vertex> codewords(bool force = false) const;

    std::optional<int> cached_min_weight() const;
    void store_min_weight(int w) const;

private:
    int length_;
    BinaryMatrix generator_;
    std::vector<int> pivots_;
    mutable std::atomic<int> min_weight_{-1};
};

struct MinWeightWitness {
    int weight;
    BitVector codeword;
};

/// Lowest-weight nonzero codeword (first in enumeration order among ties);
/// nullopt for the zero code. Throws GuardError if k exceeds the limit and !force.
std::optional<MinWeightWitness> min_weight_codeword(const BinaryLinearCode& c, bool force = false);
/// Minimum Hamming weight of nonzero codewords, cached on the code; nullopt for the zero code.
std::optional<int> min_hamming_weight(const BinaryLinearCode& c, bool force = false);
/// Count of codewords of each weight 0..n.
std::vector<std::uint64_t> weight_distribution(const BinaryLinearCode& c, bool force = false);
/// Some codeword of exactly `weight`, or nullopt if none exists.
std::optional<BitVector> find_codeword_of_weight(const BinaryLinearCode& c, int weight, bool force = false);

/// The 2^(n-k) cosets of `c`, each sorted. Block 0 is the code; blocks are
/// ordered by their minimum vertex, which is the coset representative.
std::vector<Block> enumerate_cosets(const BinaryLinearCode& c, bool force = false);

/// Deletes the last coordinate of each length-n word. Throws IntegrityError if
/// two words collide (i.e. the block had a pair at distance 1 in that coordinate).
Block puncture_last(std::span<const Vertex> block, int n);
std::vector<BitVector> puncture_last(std::span<const BitVector> block);

// Named codes.
BinaryLinearCode zero_code(int n);
BinaryLinearCode full_space(int n);
BinaryLinearCode repetition_code(int n);
BinaryLinearCode even_weight_code(int n);
/// Binary Hamming code of length 2^r - 1 (columns of the check matrix are 1..2^r-1).
BinaryLinearCode hamming_code(int r);
/// Binary Golay code [23,12,7], cyclic with generator x^11+x^10+x^6+x^5+x^4+x^2+1.
BinaryLinearCode golay_code();

// Text format: "code n=<n> k=<k>" then k rows of '0'/'1'.
void write_code(std::ostream& os, const BinaryLinearCode& c);
/// Reads the header and k rows; leaves the stream positioned after the last row.
BinaryLinearCode read_code(std::istream& is);

}  // namespace hychroma::gf2
