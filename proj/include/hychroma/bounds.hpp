#pragma once

// Lower and upper bounds on the distance chromatic numbers chi'_d(n) (distance
// at most d) and chi_d(n) (distance exactly d), in exact integer arithmetic.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hychroma/errors.hpp"
#include "hychroma/gf2.hpp"

namespace hychroma::bounds {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow2(unsigned e);
BigInt binomial(int n, int k);
/// Smallest e with 2^e >= x, for x >= 1.
unsigned ceil_log2(const BigInt& x);
BigInt ceil_div(const BigInt& a, const BigInt& b);
/// "256 (2^8)" for powers of two, plain decimal otherwise.
std::string describe(const BigInt& v);

enum class KSource { BuiltinPaper, UserFile, GreedyWitness, ExactOracle };
const char* to_string(KSource s);
KSource parse_k_source(const std::string& name);

/// Dimension k of a binary linear code of length n and minimum distance >= d.
struct KEntry {
    int k = 0;
    KSource source = KSource::UserFile;
    std::optional<gf2::BinaryLinearCode> code;
};

/// Known values of k(n, d), the largest dimension of a binary linear [n, k, d] code.
class KTable {
public:
    /// The three entries k(10,5)=3, k(11,5)=4, k(23,7)=12.
    static KTable builtin();

    /// Records a tabulated value. Sources greedy-witness and exact-oracle are
    /// rejected here: those need a code, see add_witness.
    void set(int n, int d, int k, KSource source);
    /// Records a code after verifying its length and minimum distance.
    void add_witness(int d, gf2::BinaryLinearCode code, KSource source);

    const KEntry* find(int n, int d) const;
    const std::map<std::pair<int, int>, KEntry>& entries() const { return entries_; }

    /// CSV with header "n,d,k,source"; later lines override earlier entries.
    void merge_csv(std::istream& is);
    void write_csv(std::ostream& os) const;

private:
    std::map<std::pair<int, int>, KEntry> entries_;
};

/// Thrown when a rule needs a k-table entry that is absent.
class MissingEntryError : public Error {
public:
    using Error::Error;
};

/// ceil(2^n / A(n, d+1)).
BigInt lower_chi_prime(int n, int d, const BigInt& a_value);
/// ceil(2^n / Q(n, d)).
BigInt lower_chi(int n, int d, const BigInt& q_value);
/// 2^ceil(log2(1 + C(n-1, d-1))), d even.
BigInt theorem2_upper(int n, int d);
/// 2^(n-d+1-k(n-d+1, d+1)), d even, n >= 2d. Throws MissingEntryError.
BigInt theorem3_upper(int n, int d, const KTable& kt);
/// (d+1) * ((d+2)/2)^((d(d+2)/8) * ceil(log2 n)), d even.
BigInt kdp_upper(int n, int d);
/// (chi'_4(2^(r+1) - 1), chi'_5(2^(r+1))) = (2^(2r+1), 4^(r+1)) for odd r >= 3.
std::pair<BigInt, BigInt> theorem1_values(int r);
/// chi'_d(n1) * chi_d(n2) bounds chi_d(n1 + n2), d even.
BigInt product_upper(int n1, int n2, int d, const BigInt& chi_prime_n1, const BigInt& chi_n2);

/// Reference value of A(n, d) when one is known: A(2^(r+1), 6) for odd r >= 3.
/// Odd d is normalized through A(n, d) = A(n+1, d+1).
struct ReferenceValue {
    BigInt value;
    std::string note;
};
std::optional<ReferenceValue> reference_A(int n, int d);

enum class Quantity { Chi, ChiPrime };
const char* to_string(Quantity q);
Quantity parse_quantity(const std::string& name);

struct LowerBound {
    BigInt value;
    std::string rule;
    std::string inputs;
};

struct UpperBound {
    BigInt value;
    std::string rule;
    std::string inputs;
    /// Provenance of a verified certificate or validated code, when constructive.
    std::optional<std::string> witness;
};

struct BoundReport {
    int n = 0;
    int d = 0;
    Quantity quantity = Quantity::Chi;
    std::vector<LowerBound> lower_bounds;
    std::vector<UpperBound> upper_bounds;
    std::optional<BigInt> best_lower;
    std::optional<BigInt> best_upper;
    std::vector<std::string> notes;  ///< rules skipped for missing inputs
};

struct TableOptions {
    /// Exact solvers are consulted for n up to this length.
    int oracle_max_n = 6;
    /// Partitions are built and verified as witnesses up to this length.
    int witness_max_n = 16;
    bool force = false;
};

std::vector<BoundReport> bound_table(Quantity q, int d, const std::vector<int>& ns, const KTable& kt,
                                     const TableOptions& options = {});

void write_table_text(std::ostream& os, const std::vector<BoundReport>& reports);
void write_table_csv(std::ostream& os, const std::vector<BoundReport>& reports);

}  // namespace hychroma::bounds
