#include "hychroma/forbidden.hpp"

#include <array>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "hychroma/errors.hpp"
#include "hychroma/verify.hpp"

namespace hychroma::forbidden {

namespace {

// Binomial coefficients C(n, k) for n <= 64 from Pascal's rule, so no
// intermediate product overflows.
std::uint64_t binomial64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::array<std::uint64_t, 65> row{};
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : 64 - std::countl_zero(x - 1); }

// Word-level bitset over V_m supporting translation by XOR.
class SumSet {
public:
    explicit SumSet(int m) : words_((std::size_t{1} << m) / 64 + 1, 0) {}

    bool test(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(std::uint64_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }

    /// this |= {s ^ v : s in other}
    void merge_translate(const SumSet& other, std::uint64_t v) {
        const std::uint64_t word_shift = v >> 6;
        const unsigned bit_shift = static_cast<unsigned>(v & 63);
        for (std::size_t w = 0; w < other.words_.size(); ++w) {
            const std::uint64_t x = other.words_[w];
            if (x == 0) continue;
            words_[w ^ word_shift] |= permute(x, bit_shift);
        }
    }

private:
    // Maps bit i of x to bit i ^ c.
    static std::uint64_t permute(std::uint64_t x, unsigned c) {
        static constexpr std::array<std::uint64_t, 6> kLow = {
            0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
            0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
        };
        for (unsigned i = 0; i < 6; ++i) {
            if (!((c >> i) & 1U)) continue;
            const unsigned s = 1U << i;
            x = ((x & kLow[i]) << s) | ((x >> s) & kLow[i]);
        }
        return x;
    }

    std::vector<std::uint64_t> words_;
};

std::string column_set(const std::vector<int>& cols) {
    std::string s = "{";
    for (std::size_t i = 0; i < cols.size(); ++i) s += (i ? "," : "") + std::to_string(cols[i] + 1);
    return s + "}";
}

// First d-subset of columns (lexicographic) whose XOR is zero.
bool find_zero_column_sum(const std::vector<std::uint64_t>& cols, int d, int start, std::uint64_t acc,
                          std::vector<int>& chosen) {
    if (static_cast<int>(chosen.size()) == d) return acc == 0;
    const int need = d - static_cast<int>(chosen.size());
    for (int j = start; j + need <= static_cast<int>(cols.size()); ++j) {
        chosen.push_back(j);
        if (find_zero_column_sum(cols, d, j + 1, acc ^ cols[static_cast<std::size_t>(j)], chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

void check_d(int d) {
    if (d < 1) throw UsageError("forbidden distance must be >= 1, got " + std::to_string(d));
}

}  // namespace

int greedy_row_count(int n, int d) { return ceil_log2(1 + binomial64(n - 1, d - 1)); }

gf2::BinaryMatrix greedy_forbidden_matrix(int n, int d, bool force) {
    if (d < 2 || d % 2 != 0) throw UsageError("greedy construction needs even d >= 2, got " + std::to_string(d));
    if (n < d || n > gf2::kMaxLength)
        throw UsageError("greedy construction needs d <= n <= 64, got n=" + std::to_string(n));
    const int m = greedy_row_count(n, d);
    if (m > kGreedyRowLimit && !force)
        throw GuardError("greedy matrix needs m <= " + std::to_string(kGreedyRowLimit) + " rows, got m=" +
                         std::to_string(m));
    if (m > 40) throw UsageError("greedy matrix with m=" + std::to_string(m) + " rows is too large");

    const std::uint64_t space = std::uint64_t{1} << m;
    const std::uint64_t first = d == 2 ? 1 : 0;
    // sums[t] holds every sum of t columns with distinct indices, t = 1..d-1.
    std::vector<SumSet> sums(static_cast<std::size_t>(d), SumSet(m));
    std::vector<gf2::BitVector> columns;
    for (int j = 0; j < n; ++j) {
        const SumSet& blocked = sums[static_cast<std::size_t>(d - 1)];
        std::optional<std::uint64_t> pick;
        for (std::uint64_t step = 0; step < space && !pick; ++step) {
            const std::uint64_t v = (first + step) % space;
            if (!blocked.test(v)) pick = v;
        }
        if (!pick)
            throw IntegrityError("greedy construction found no admissible column " + std::to_string(j + 1) +
                                 " in V_" + std::to_string(m));
        for (int t = d - 1; t >= 2; --t)
            sums[static_cast<std::size_t>(t)].merge_translate(sums[static_cast<std::size_t>(t - 1)], *pick);
        sums[1].set(*pick);
        columns.emplace_back(m, *pick);
    }
    return gf2::BinaryMatrix::from_columns(m, columns);
}

ForbiddenLinearCode code_from_parity(const gf2::BinaryMatrix& h, int d, bool force) {
    check_d(d);
    const int n = h.col_count();
    auto code = gf2::BinaryLinearCode::kernel_of(h);
    if (d > n) return ForbiddenLinearCode(std::move(code), d, h);
    if (binomial64(n, d) <= kColumnSubsetLimit) {
        std::vector<std::uint64_t> cols;
        for (int j = 0; j < n; ++j) cols.push_back(h.row_count() == 0 ? 0 : h.column(j).bits());
        std::vector<int> chosen;
        if (find_zero_column_sum(cols, d, 0, 0, chosen))
            throw ConstructionError("columns " + column_set(chosen) + " sum to zero, giving a codeword of weight " +
                                    std::to_string(d));
        return ForbiddenLinearCode(std::move(code), d, h);
    }
    auto checked = validate_forbidden(code, d, force);
    return ForbiddenLinearCode(checked.base(), d, h);
}

ForbiddenLinearCode validate_forbidden(const gf2::BinaryLinearCode& c, int d, bool force) {
    check_d(d);
    if (auto bad = gf2::find_codeword_of_weight(c, d, force))
        throw ConstructionError("codeword " + bad->to_string() + " has the forbidden weight " + std::to_string(d));
    return ForbiddenLinearCode(c, d, std::nullopt);
}

ForbiddenLinearCode full_space_forbidden(int n, int d) {
    if (n >= d) throw UsageError("V_" + std::to_string(n) + " contains words of weight " + std::to_string(d));
    return validate_forbidden(gf2::full_space(n), d);
}

ExactKd2 exact_k_d2(int n) {
    if (n < 2 || n > gf2::kMaxLength) throw UsageError("exact_k_d2 needs 2 <= n <= 64, got " + std::to_string(n));
    auto witness = code_from_parity(greedy_forbidden_matrix(n, 2), 2);
    const int k = n - ceil_log2(static_cast<std::uint64_t>(n));
    if (witness.dimension() != k)
        throw IntegrityError("greedy witness for k(" + std::to_string(n) + ",2) has dimension " +
                             std::to_string(witness.dimension()) + ", expected " + std::to_string(k));
    return {k, std::move(witness)};
}

ForbiddenLinearCode direct_sum(const gf2::BinaryLinearCode& c1, const ForbiddenLinearCode& c2, bool force) {
    const int d = c2.forbidden_distance();
    if (d % 2 != 0) throw UsageError("direct sum needs an even forbidden distance, got " + std::to_string(d));
    const int n1 = c1.length();
    const int n = n1 + c2.length();
    if (n > gf2::kMaxLength) throw UsageError("direct sum length " + std::to_string(n) + " exceeds 64");
    if (auto lightest = gf2::min_weight_codeword(c1, force); lightest && lightest->weight < d + 1)
        throw ConstructionError("first summand has codeword " + lightest->codeword.to_string() + " of weight " +
                                std::to_string(lightest->weight) + " < d+1 = " + std::to_string(d + 1));
    std::vector<gf2::BitVector> rows;
    for (const auto& r : c1.generator().rows()) rows.emplace_back(n, r.bits());
    for (const auto& r : c2.base().generator().rows()) rows.emplace_back(n, r.bits() << n1);
    return validate_forbidden(gf2::BinaryLinearCode(n, std::move(rows)), d, force);
}

HypercubePartition forbidden_coset_partition(const ForbiddenLinearCode& c, std::string provenance, bool force) {
    const int n = c.length();
    if (n > verify::kVerifyLengthLimit && !force)
        throw GuardError("coset partition materializes V_" + std::to_string(n) + "; limit is n <= " +
                         std::to_string(verify::kVerifyLengthLimit));
    HypercubePartition p;
    p.n = n;
    p.mode = PartitionMode::forbidden_distance(c.forbidden_distance());
    p.blocks = gf2::enumerate_cosets(c.base(), force);
    p.provenance = provenance.empty() ? "forbidden-coset n=" + std::to_string(n) + " k=" +
                                            std::to_string(c.dimension()) + " d=" +
                                            std::to_string(c.forbidden_distance())
                                      : std::move(provenance);
    const auto report = verify::verify_partition(p, verify::Strategy::Auto, force);
    if (!report.passed)
        throw IntegrityError("forbidden coset partition failed verification: " + report.counterexample->describe(n));
    return p;
}

void write_forbidden_code(std::ostream& os, const ForbiddenLinearCode& c) {
    gf2::write_code(os, c.base());
    os << "forbidden d=" << c.forbidden_distance() << '\n';
}

ForbiddenLinearCode read_forbidden_code(std::istream& is, bool force) {
    auto code = gf2::read_code(is);
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing 'forbidden d=<d>' line");
    std::istringstream in(line);
    std::string tag, field, extra;
    in >> tag >> field;
    if (tag != "forbidden" || field.rfind("d=", 0) != 0 || (in >> extra))
        throw ParseError("bad forbidden line: '" + line + "'");
    int d = 0;
    try {
        std::size_t used = 0;
        d = std::stoi(field.substr(2), &used);
        if (used != field.size() - 2) throw ParseError("bad forbidden distance in '" + line + "'");
    } catch (const std::logic_error&) {
        throw ParseError("bad forbidden distance in '" + line + "'");
    }
    if (d < 1) throw ParseError("forbidden distance must be >= 1");
    return validate_forbidden(code, d, force);
}

}  // namespace hychroma::forbidden
