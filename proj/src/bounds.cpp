#include "hychroma/bounds.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "hychroma/forbidden.hpp"
#include "hychroma/partition.hpp"
#include "hychroma/verify.hpp"
#include "hychroma/z4.hpp"

namespace hychroma::bounds {

BigInt pow2(unsigned e) {
    BigInt v = 1;
    return v << e;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

unsigned ceil_log2(const BigInt& x) {
    if (x < 1) throw UsageError("ceil_log2 needs x >= 1");
    if (x == 1) return 0;
    return static_cast<unsigned>(boost::multiprecision::msb(BigInt(x - 1))) + 1;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

std::string describe(const BigInt& v) {
    std::string s = v.str();
    if (v > 1 && (v & (v - 1)) == 0) s += " (2^" + std::to_string(boost::multiprecision::msb(v)) + ")";
    return s;
}

const char* to_string(KSource s) {
    switch (s) {
        case KSource::BuiltinPaper: return "builtin-paper";
        case KSource::UserFile: return "user-file";
        case KSource::GreedyWitness: return "greedy-witness";
        case KSource::ExactOracle: return "exact-oracle";
    }
    return "user-file";
}

KSource parse_k_source(const std::string& name) {
    if (name == "builtin-paper") return KSource::BuiltinPaper;
    if (name == "user-file") return KSource::UserFile;
    if (name == "greedy-witness") return KSource::GreedyWitness;
    if (name == "exact-oracle") return KSource::ExactOracle;
    throw ParseError("unknown k-table source '" + name + "'");
}

// ---------------------------------------------------------------------------
// KTable

KTable KTable::builtin() {
    KTable t;
    t.set(10, 5, 3, KSource::BuiltinPaper);
    t.set(11, 5, 4, KSource::BuiltinPaper);
    t.set(23, 7, 12, KSource::BuiltinPaper);
    // The Golay code realizes k(23,7) = 12; keep it so the entry can back a witness.
    auto golay = gf2::golay_code();
    if (gf2::min_hamming_weight(golay).value_or(0) < 7) throw IntegrityError("Golay code has minimum distance < 7");
    t.entries_[{23, 7}].code = std::move(golay);
    return t;
}

void KTable::set(int n, int d, int k, KSource source) {
    if (n < 1 || d < 1 || k < 0 || k > n)
        throw UsageError("k-table entry out of range: n=" + std::to_string(n) + " d=" + std::to_string(d) +
                         " k=" + std::to_string(k));
    if (source == KSource::GreedyWitness || source == KSource::ExactOracle)
        throw UsageError(std::string("k-table source ") + to_string(source) + " needs an attached code");
    entries_[{n, d}] = KEntry{k, source, std::nullopt};
}

void KTable::add_witness(int d, gf2::BinaryLinearCode code, KSource source) {
    const int n = code.length();
    if (auto w = gf2::min_hamming_weight(code); w && *w < d)
        throw ConstructionError("witness code has minimum distance " + std::to_string(*w) + " < " +
                                std::to_string(d));
    const int k = code.dimension();
    auto it = entries_.find({n, d});
    if (it != entries_.end() && it->second.k > k) return;
    entries_[{n, d}] = KEntry{k, source, std::move(code)};
}

const KEntry* KTable::find(int n, int d) const {
    auto it = entries_.find({n, d});
    return it == entries_.end() ? nullptr : &it->second;
}

void KTable::merge_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty k-table");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,d,k,source") throw ParseError("k-table header must be 'n,d,k,source', got '" + line + "'");
    int line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (fields.size() != 4) throw ParseError("k-table line " + std::to_string(line_no) + ": expected 4 fields");
        int values[3];
        for (int i = 0; i < 3; ++i) {
            try {
                std::size_t used = 0;
                values[i] = std::stoi(fields[static_cast<std::size_t>(i)], &used);
                if (used != fields[static_cast<std::size_t>(i)].size()) throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                throw ParseError("k-table line " + std::to_string(line_no) + ": bad integer '" +
                                 fields[static_cast<std::size_t>(i)] + "'");
            }
        }
        const KSource source = parse_k_source(fields[3]);
        try {
            set(values[0], values[1], values[2], source);
        } catch (const UsageError& e) {
            throw ParseError("k-table line " + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void KTable::write_csv(std::ostream& os) const {
    os << "n,d,k,source\n";
    for (const auto& [key, e] : entries_) os << key.first << ',' << key.second << ',' << e.k << ',' << to_string(e.source) << '\n';
}

// ---------------------------------------------------------------------------
// Closed-form bounds

namespace {

void require_even(int d, const char* what) {
    if (d < 2 || d % 2 != 0) throw UsageError(std::string(what) + " needs even d >= 2, got " + std::to_string(d));
}

bool is_odd_r(int r) { return r >= 3 && r % 2 == 1; }

// r with n = 2^(r+1), r odd >= 3, or -1.
int preparata_r_for_length(int n) {
    if (n < 16 || (n & (n - 1)) != 0) return -1;
    const int r = std::countr_zero(static_cast<unsigned>(n)) - 1;
    return is_odd_r(r) ? r : -1;
}

}  // namespace

BigInt lower_chi_prime(int n, int d, const BigInt& a_value) {
    if (a_value <= 0) throw UsageError("A(n,d+1) must be positive");
    if (n < 1 || d < 0) throw UsageError("lower_chi_prime needs n >= 1, d >= 0");
    return ceil_div(pow2(static_cast<unsigned>(n)), a_value);
}

BigInt lower_chi(int n, int d, const BigInt& q_value) {
    if (q_value <= 0) throw UsageError("Q(n,d) must be positive");
    if (n < 1 || d < 0) throw UsageError("lower_chi needs n >= 1, d >= 0");
    return ceil_div(pow2(static_cast<unsigned>(n)), q_value);
}

BigInt theorem2_upper(int n, int d) {
    require_even(d, "theorem2_upper");
    if (d > n) throw UsageError("theorem2_upper needs d <= n");
    return pow2(ceil_log2(1 + binomial(n - 1, d - 1)));
}

BigInt theorem3_upper(int n, int d, const KTable& kt) {
    require_even(d, "theorem3_upper");
    if (n < 2 * d) throw UsageError("theorem3_upper needs n >= 2d");
    const int len = n - d + 1;
    const KEntry* e = kt.find(len, d + 1);
    if (!e)
        throw MissingEntryError("k(" + std::to_string(len) + "," + std::to_string(d + 1) + ") missing from k-table");
    return pow2(static_cast<unsigned>(len - e->k));
}

BigInt kdp_upper(int n, int d) {
    require_even(d, "kdp_upper");
    if (n < 2) throw UsageError("kdp_upper needs n >= 2");
    const unsigned exponent = static_cast<unsigned>(d * (d + 2) / 8) * ceil_log2(BigInt(n));
    return (d + 1) * boost::multiprecision::pow(BigInt((d + 2) / 2), exponent);
}

std::pair<BigInt, BigInt> theorem1_values(int r) {
    if (!is_odd_r(r)) throw UsageError("theorem1_values needs odd r >= 3, got " + std::to_string(r));
    return {pow2(static_cast<unsigned>(2 * r + 1)), pow2(static_cast<unsigned>(2 * r + 2))};
}

BigInt product_upper(int n1, int n2, int d, const BigInt& chi_prime_n1, const BigInt& chi_n2) {
    require_even(d, "product_upper");
    if (n1 < 1 || n2 < 1) throw UsageError("product_upper needs n1, n2 >= 1");
    if (chi_prime_n1 < 1 || chi_n2 < 1) throw UsageError("product_upper needs positive factors");
    return chi_prime_n1 * chi_n2;
}

std::optional<ReferenceValue> reference_A(int n, int d) {
    if (n < 1 || d < 1) return std::nullopt;
    if (d % 2 == 1) {
        ++n;
        ++d;
    }
    if (d > n) return ReferenceValue{1, "A(" + std::to_string(n) + "," + std::to_string(d) + ")=1, d > n"};
    if (d == 2)
        return ReferenceValue{pow2(static_cast<unsigned>(n - 1)),
                              "A(" + std::to_string(n) + ",2)=2^" + std::to_string(n - 1) + ", even-weight code"};
    if (d == 6) {
        const int r = preparata_r_for_length(n);
        if (r > 0) {
            const unsigned e = static_cast<unsigned>(n - 2 * r - 2);
            return ReferenceValue{pow2(e), "A(" + std::to_string(n) + ",6)=2^" + std::to_string(e) +
                                               " reference, Preparata code optimality (r=" + std::to_string(r) + ")"};
        }
    }
    return std::nullopt;
}

const char* to_string(Quantity q) { return q == Quantity::Chi ? "chi" : "chi_prime"; }

Quantity parse_quantity(const std::string& name) {
    if (name == "chi") return Quantity::Chi;
    if (name == "chi_prime" || name == "chi-prime") return Quantity::ChiPrime;
    throw UsageError("unknown quantity '" + name + "' (expected chi or chi_prime)");
}

// ---------------------------------------------------------------------------
// Tables

namespace {

std::string kv(const std::string& key, const BigInt& v) { return key + "=" + v.str(); }

// Known linear codes of length n and verified minimum distance >= delta:
// k-table entries and the named families.
struct LinearSource {
    int k;
    std::string label;
    std::optional<gf2::BinaryLinearCode> code;
};

std::optional<LinearSource> best_linear_code(int n, int delta, const KTable& kt) {
    std::optional<LinearSource> best;
    auto offer = [&](LinearSource s) {
        if (!best || s.k > best->k) best = std::move(s);
    };
    if (const KEntry* e = kt.find(n, delta))
        offer({e->k, "k(" + std::to_string(n) + "," + std::to_string(delta) + ")=" + std::to_string(e->k) + " [" +
                         to_string(e->source) + "]",
               e->code});
    std::vector<std::pair<gf2::BinaryLinearCode, std::string>> named;
    for (int r = 2; r <= 5; ++r)
        if ((1 << r) - 1 == n) named.emplace_back(gf2::hamming_code(r), "Hamming r=" + std::to_string(r));
    if (n == 23) named.emplace_back(gf2::golay_code(), "Golay");
    if (n >= 2) named.emplace_back(gf2::even_weight_code(n), "even-weight");
    named.emplace_back(gf2::repetition_code(n), "repetition");
    for (auto& [code, name] : named) {
        if (code.dimension() > gf2::kMinWeightDimensionLimit) continue;
        const auto w = gf2::min_hamming_weight(code);
        if (w && *w >= delta) {
            const int k = code.dimension();
            offer({k, name + " [" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(*w) + "]",
                   std::move(code)});
        }
    }
    return best;
}

void add_chi_prime_rows(BoundReport& rep, const KTable& kt, const TableOptions& opt) {
    const int n = rep.n;
    const int d = rep.d;
    if (d < 1) {
        rep.lower_bounds.push_back({1, "no-constraint", "d=0"});
        rep.upper_bounds.push_back({1, "no-constraint", "d=0", "whole cube"});
        return;
    }
    if (d >= n) {
        const BigInt all = pow2(static_cast<unsigned>(n));
        rep.lower_bounds.push_back({all, "complete", "every pair within distance d"});
        rep.upper_bounds.push_back({all, "complete", "singletons", "singletons n=" + std::to_string(n)});
        return;
    }
    rep.lower_bounds.push_back({2, "edge", "adjacent vertices"});
    if (auto a = reference_A(n, d + 1)) {
        rep.lower_bounds.push_back({lower_chi_prime(n, d, a->value), "packing", a->note});
    } else if (n <= opt.oracle_max_n) {
        const auto a_exact = verify::exact_A_small(n, d + 1);
        rep.lower_bounds.push_back({lower_chi_prime(n, d, a_exact.size), "packing",
                                    "A(" + std::to_string(n) + "," + std::to_string(d + 1) + ")=" +
                                        std::to_string(a_exact.size) + " exact oracle"});
    } else {
        rep.notes.push_back("packing: A(" + std::to_string(n) + "," + std::to_string(d + 1) + ") unknown");
    }

    rep.upper_bounds.push_back({pow2(static_cast<unsigned>(n)), "trivial", "singletons",
                                "singletons n=" + std::to_string(n)});
    if (auto lin = best_linear_code(n, d + 1, kt)) {
        UpperBound ub{pow2(static_cast<unsigned>(n - lin->k)), "linear-coset", lin->label, std::nullopt};
        if (lin->code) {
            if (n <= opt.witness_max_n)
                ub.witness = partition::from_binary_linear(*lin->code, d, "", opt.force).provenance;
            else
                ub.witness = "code-level: " + lin->label + " minimum distance verified";
        }
        rep.upper_bounds.push_back(std::move(ub));
    }

    const int r = preparata_r_for_length(n + (d == 4 ? 1 : 0));
    if (r > 0 && (d == 4 || d == 5)) {
        const auto [chi4, chi5] = theorem1_values(r);
        UpperBound ub{d == 4 ? chi4 : chi5, "preparata", "r=" + std::to_string(r), std::nullopt};
        if (n <= opt.witness_max_n) {
            const auto code = z4::preparata_code(r);
            const std::string label = "preparata r=" + std::to_string(r) + (d == 4 ? " punctured" : " coset");
            const auto p = d == 4 ? partition::z4_punctured_partition(code, label, opt.force)
                                  : partition::z4_coset_partition(code, label, opt.force);
            if (BigInt(p.block_count()) != ub.value)
                throw IntegrityError("preparata certificate has " + std::to_string(p.block_count()) + " colors");
            ub.witness = p.provenance;
        }
        rep.upper_bounds.push_back(std::move(ub));
    }
}

// Best constructive upper bound for chi_d(m) used as a product factor.
std::optional<std::pair<BigInt, std::string>> chi_factor(int m, int d) {
    if (m < d) return std::pair{BigInt(1), "chi_" + std::to_string(d) + "(" + std::to_string(m) + ")=1"};
    return std::pair{theorem2_upper(m, d),
                     "chi_" + std::to_string(d) + "(" + std::to_string(m) + ")<=" + theorem2_upper(m, d).str()};
}

void add_chi_rows(BoundReport& rep, const KTable& kt, const TableOptions& opt) {
    const int n = rep.n;
    const int d = rep.d;
    if (d < 1 || d > n) {
        rep.lower_bounds.push_back({1, "no-pair", "no two vertices at distance " + std::to_string(d)});
        rep.upper_bounds.push_back({1, "no-pair", "one color", "whole cube"});
        return;
    }
    rep.lower_bounds.push_back({2, "edge", "a pair at distance d exists"});
    if (d % 2 == 1) {
        UpperBound ub{2, "parity", "parity classes", std::nullopt};
        if (n <= std::min(opt.witness_max_n, 12)) ub.witness = partition::parity_coloring(n, d, opt.force).provenance;
        rep.upper_bounds.push_back(std::move(ub));
        return;
    }
    if (n <= opt.oracle_max_n) {
        const auto q = verify::exact_Q_small(n, d);
        rep.lower_bounds.push_back({lower_chi(n, d, q.size), "forbidden-packing",
                                    "Q(" + std::to_string(n) + "," + std::to_string(d) + ")=" +
                                        std::to_string(q.size) + " exact oracle"});
    }

    rep.upper_bounds.push_back({theorem2_upper(n, d), "column-count",
                                kv("C(" + std::to_string(n - 1) + "," + std::to_string(d - 1) + ")",
                                   binomial(n - 1, d - 1)),
                                std::nullopt});
    try {
        const auto h = forbidden::greedy_forbidden_matrix(n, d, opt.force);
        const auto code = forbidden::code_from_parity(h, d, opt.force);
        const std::string label = "forbidden-greedy n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                  " k=" + std::to_string(code.dimension());
        UpperBound ub{pow2(static_cast<unsigned>(n - code.dimension())), "greedy-forbidden",
                      "k=" + std::to_string(code.dimension()), std::nullopt};
        ub.witness = n <= opt.witness_max_n ? forbidden::forbidden_coset_partition(code, label, opt.force).provenance
                                            : "code-level: " + label + " validated";
        rep.upper_bounds.push_back(std::move(ub));
    } catch (const GuardError& e) {
        rep.notes.push_back(std::string("greedy-forbidden: ") + e.what());
    }

    if (n >= 2 * d) {
        try {
            UpperBound ub{theorem3_upper(n, d, kt), "shortened-sum", "", std::nullopt};
            const KEntry* e = kt.find(n - d + 1, d + 1);
            ub.inputs = "k(" + std::to_string(n - d + 1) + "," + std::to_string(d + 1) + ")=" + std::to_string(e->k) +
                        " [" + to_string(e->source) + "]";
            if (e->code) {
                const auto sum = forbidden::direct_sum(*e->code, forbidden::full_space_forbidden(d - 1, d), opt.force);
                ub.witness = "code-level: direct-sum [" + std::to_string(sum.length()) + "," +
                             std::to_string(sum.dimension()) + "] forbidden d=" + std::to_string(d) + " validated";
            }
            rep.upper_bounds.push_back(std::move(ub));
        } catch (const MissingEntryError& e) {
            rep.notes.push_back(std::string("shortened-sum: ") + e.what());
        } catch (const GuardError& e) {
            rep.notes.push_back(std::string("shortened-sum: ") + e.what());
        }
    }

    rep.upper_bounds.push_back({kdp_upper(n, d), "recursive", "ceil(log2 n)=" + std::to_string(ceil_log2(BigInt(n))),
                                std::nullopt});

    // Product of a minimum-distance-(d+1) partition of V_n1 and a forbidden
    // partition of V_n2, over every split with a known first factor.
    std::optional<UpperBound> best_product;
    for (int n1 = d + 1; n1 < n; ++n1) {
        const int n2 = n - n1;
        std::optional<std::pair<BigInt, std::string>> first;
        if (auto lin = best_linear_code(n1, d + 1, kt))
            first = std::pair{pow2(static_cast<unsigned>(n1 - lin->k)), lin->label};
        const int r = preparata_r_for_length(n1 + 1);
        if (d == 4 && r > 0) {
            const BigInt v = theorem1_values(r).first;
            if (!first || v < first->first) first = std::pair{v, "preparata r=" + std::to_string(r)};
        }
        if (!first) continue;
        const auto second = chi_factor(n2, d);
        const BigInt v = product_upper(n1, n2, d, first->first, second->first);
        if (!best_product || v < best_product->value)
            best_product = UpperBound{v, "product",
                                      "n1=" + std::to_string(n1) + " (" + first->second + "), n2=" +
                                          std::to_string(n2) + " (" + second->second + ")",
                                      std::nullopt};
    }
    if (best_product) rep.upper_bounds.push_back(std::move(*best_product));
}

}  // namespace

std::vector<BoundReport> bound_table(Quantity q, int d, const std::vector<int>& ns, const KTable& kt,
                                     const TableOptions& options) {
    std::vector<BoundReport> out;
    for (int n : ns) {
        if (n < 1 || n > gf2::kMaxLength) throw UsageError("table lengths must be in 1..64, got " + std::to_string(n));
        if (d < 0) throw UsageError("d must be >= 0");
        BoundReport rep;
        rep.n = n;
        rep.d = d;
        rep.quantity = q;
        if (q == Quantity::ChiPrime)
            add_chi_prime_rows(rep, kt, options);
        else
            add_chi_rows(rep, kt, options);
        for (const auto& b : rep.lower_bounds)
            if (!rep.best_lower || b.value > *rep.best_lower) rep.best_lower = b.value;
        for (const auto& b : rep.upper_bounds)
            if (!rep.best_upper || b.value < *rep.best_upper) rep.best_upper = b.value;
        if (rep.best_lower && rep.best_upper && *rep.best_lower > *rep.best_upper)
            throw IntegrityError("bounds cross at n=" + std::to_string(n) + ": lower " + rep.best_lower->str() +
                                 " > upper " + rep.best_upper->str());
        out.push_back(std::move(rep));
    }
    return out;
}

namespace {

std::string symbol(const BoundReport& r) {
    return std::string(r.quantity == Quantity::Chi ? "chi_" : "chi'_") + std::to_string(r.d) + "(" +
           std::to_string(r.n) + ")";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

void write_table_text(std::ostream& os, const std::vector<BoundReport>& reports) {
    for (const auto& r : reports) {
        os << symbol(r) << ": ";
        if (r.best_lower && r.best_upper && *r.best_lower == *r.best_upper)
            os << "= " << describe(*r.best_lower);
        else
            os << (r.best_lower ? describe(*r.best_lower) : "?") << " <= " << symbol(r)
               << " <= " << (r.best_upper ? describe(*r.best_upper) : "?");
        os << '\n';
        for (const auto& b : r.lower_bounds)
            os << "  lower " << b.rule << " = " << describe(b.value) << (b.inputs.empty() ? "" : "  [" + b.inputs + "]")
               << '\n';
        for (const auto& b : r.upper_bounds) {
            os << "  upper " << b.rule << " = " << describe(b.value) << (b.inputs.empty() ? "" : "  [" + b.inputs + "]");
            if (b.witness) os << "  witness: " << *b.witness;
            os << '\n';
        }
        for (const auto& note : r.notes) os << "  missing " << note << '\n';
    }
}

void write_table_csv(std::ostream& os, const std::vector<BoundReport>& reports) {
    os << "quantity,n,d,bound,rule,value,inputs,witness\n";
    for (const auto& r : reports) {
        const std::string head = std::string(to_string(r.quantity)) + "," + std::to_string(r.n) + "," +
                                 std::to_string(r.d) + ",";
        for (const auto& b : r.lower_bounds)
            os << head << "lower," << b.rule << ',' << b.value.str() << ',' << csv_field(b.inputs) << ",\n";
        for (const auto& b : r.upper_bounds)
            os << head << "upper," << b.rule << ',' << b.value.str() << ',' << csv_field(b.inputs) << ','
               << csv_field(b.witness.value_or("")) << '\n';
        for (const auto& note : r.notes) os << head << "missing,,," << csv_field(note) << ",\n";
        if (r.best_lower) os << head << "best_lower,," << r.best_lower->str() << ",,\n";
        if (r.best_upper) os << head << "best_upper,," << r.best_upper->str() << ",,\n";
    }
}

}  // namespace hychroma::bounds
