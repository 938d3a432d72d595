#pragma once

// Exhaustive checking of colorings and partitions of V_n, plus exact solvers
// for tiny cubes used as ground truth.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hychroma/hypercube.hpp"

namespace hychroma::verify {

/// Largest n verified without `force`.
inline constexpr int kVerifyLengthLimit = 24;
/// Largest number of distance evaluations attempted without `force`.
inline constexpr std::uint64_t kPairBudget = std::uint64_t{1} << 32;
/// Largest n accepted by exact_chi_small.
inline constexpr int kChromaticOracleLimit = 6;
/// Largest n accepted by exact_A_small / exact_Q_small.
inline constexpr int kIndependenceOracleLimit = 8;

enum class Strategy {
    Auto,      ///< whichever of the two below needs fewer distance evaluations
    Neighbor,  ///< for every vertex, look up all vertices at a constrained distance
    Pairwise,  ///< compare every pair inside each block
};

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

struct Counterexample {
    std::string check;  ///< "distance", "overlap", "uncovered"
    Vertex first = 0;
    std::optional<Vertex> second;
    int distance = -1;
    std::optional<std::size_t> first_block;
    std::optional<std::size_t> second_block;

    std::string describe(int n) const;
};

struct VerificationReport {
    int n = 0;
    std::string constraint;  ///< e.g. "distance in [1,3]" or "distance = 4"
    std::vector<std::string> checks;
    bool passed = false;
    std::optional<Counterexample> counterexample;
    Strategy strategy = Strategy::Auto;  ///< strategy actually used
    std::uint64_t pair_count = 0;        ///< distance evaluations performed
    double wall_ms = 0;
};

/// Throws UsageError for a malformed certificate (wrong size, color id >= L,
/// unused color). Without `force`, throws GuardError for n > kVerifyLengthLimit
/// or when the cheaper strategy exceeds kPairBudget distance evaluations.
VerificationReport verify_coloring(const ColoringCertificate& c, Strategy strategy = Strategy::Auto,
                                   bool force = false);
/// Checks disjointness, cover, then the per-block distance rule.
VerificationReport verify_partition(const HypercubePartition& p, Strategy strategy = Strategy::Auto,
                                    bool force = false);

/// Re-derives a reported violation directly from the certificate.
bool confirms_violation(const ColoringCertificate& c, const Counterexample& x);

enum class ReportFormat { Text, Csv };
void write_report(std::ostream& os, const VerificationReport& r, ReportFormat format);

/// Conflict-graph colorings are checked against this independent set size.
struct IndependentSet {
    int size = 0;
    std::vector<Vertex> witness;
};

/// Chromatic number of V_n under the given distance rule (n <= 6).
int exact_chi_small(int n, int d, ColoringMode mode);
/// A(n, d): largest code in V_n with minimum distance >= d (n <= 8).
IndependentSet exact_A_small(int n, int d);
/// Q(n, d): largest subset of V_n with no pair at distance exactly d (n <= 8).
IndependentSet exact_Q_small(int n, int d);

}  // namespace hychroma::verify
