#pragma once

// Binary linear codes with no nonzero codeword of one forbidden weight d.
// Their cosets partition V_n into blocks with no pair at distance exactly d.

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "hychroma/gf2.hpp"
#include "hychroma/hypercube.hpp"

namespace hychroma::forbidden {

/// Largest C(n, d) for which validation checks column subsets directly.
inline constexpr std::uint64_t kColumnSubsetLimit = 10'000'000;
/// Largest row count m of a greedy matrix built without `force`.
inline constexpr int kGreedyRowLimit = 28;

/// A binary linear code validated to contain no nonzero word of weight d.
/// Only obtainable through the validating functions below.
class ForbiddenLinearCode {
public:
    const gf2::BinaryLinearCode& base() const { return base_; }
    int forbidden_distance() const { return d_; }
    /// The matrix whose kernel defined the code, when built that way.
    const std::optional<gf2::BinaryMatrix>& parity_check() const { return parity_check_; }
    int length() const { return base_.length(); }
    int dimension() const { return base_.dimension(); }

private:
    ForbiddenLinearCode(gf2::BinaryLinearCode base, int d, std::optional<gf2::BinaryMatrix> h)
        : base_(std::move(base)), d_(d), parity_check_(std::move(h)) {}
    friend ForbiddenLinearCode code_from_parity(const gf2::BinaryMatrix& h, int d, bool force);
    friend ForbiddenLinearCode validate_forbidden(const gf2::BinaryLinearCode& c, int d, bool force);

    gf2::BinaryLinearCode base_;
    int d_;
    std::optional<gf2::BinaryMatrix> parity_check_;
};

/// m = ceil(log2(1 + C(n-1, d-1))), the row count of the greedy matrix.
int greedy_row_count(int n, int d);

/// m x n matrix built column by column: each column is the first candidate that
/// is not a sum of d-1 earlier columns (distinct indices). Candidates run in
/// increasing order from 0, except for d = 2 where 0 is tried last.
/// Requires d even, 2 <= d <= n.
gf2::BinaryMatrix greedy_forbidden_matrix(int n, int d, bool force = false);

/// Kernel of h, validated: no d columns of h sum to zero (checked over column
/// subsets when C(n,d) <= kColumnSubsetLimit, else by a codeword weight scan).
/// Throws ConstructionError naming the offending columns or codeword.
ForbiddenLinearCode code_from_parity(const gf2::BinaryMatrix& h, int d, bool force = false);

/// Validates an existing code by scanning codeword weights.
ForbiddenLinearCode validate_forbidden(const gf2::BinaryLinearCode& c, int d, bool force = false);

/// V_n itself, valid whenever n < d.
ForbiddenLinearCode full_space_forbidden(int n, int d);

struct ExactKd2 {
    int k;
    ForbiddenLinearCode witness;
};

/// k(n, 2) = n - ceil(log2 n) with the greedy code achieving it (n in 2..64).
ExactKd2 exact_k_d2(int n);

/// {(a, b) : a in c1, b in c2} with a on the low coordinates. Needs c1 of
/// minimum distance >= d + 1 and d even.
ForbiddenLinearCode direct_sum(const gf2::BinaryLinearCode& c1, const ForbiddenLinearCode& c2, bool force = false);

/// Cosets of the code as a ForbiddenDistance(d) partition (n <= 24 unless forced).
HypercubePartition forbidden_coset_partition(const ForbiddenLinearCode& c, std::string provenance = {},
                                             bool force = false);

/// Code file format plus a "forbidden d=<d>" trailer line.
void write_forbidden_code(std::ostream& os, const ForbiddenLinearCode& c);
ForbiddenLinearCode read_forbidden_code(std::istream& is, bool force = false);

}  // namespace hychroma::forbidden
