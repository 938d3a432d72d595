// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "../oracles.hpp"
#include "hychroma/bounds.hpp"
#include "hychroma/cli.hpp"
#include "hychroma/errors.hpp"
#include "hychroma/forbidden.hpp"
#include "hychroma/partition.hpp"
#include "hychroma/verify.hpp"
#include "hychroma/z4.hpp"

using namespace hychroma;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::vector<std::uint64_t>> blocks_of(const HypercubePartition& p) {
    return {p.blocks.begin(), p.blocks.end()};
}

bool covers_once(const HypercubePartition& p) {
    std::vector<int> hits(std::size_t{1} << p.n, 0);
    for (const auto& b : p.blocks)
        for (auto v : b) ++hits[v];
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// Octacode cosets on V_16 and their punctured images on V_15.
Outcome preparata_colorings() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto code = z4::preparata_code(3);
    const auto coset = partition_to_coloring(partition::z4_coset_partition(code));
    const auto punct = partition_to_coloring(partition::z4_punctured_partition(code));
    for (const auto* c : {&coset, &punct}) {
        const auto r = verify::verify_coloring(*c, verify::Strategy::Pairwise);
        o.require(r.passed, "verifier rejected " + c->provenance);
        const auto p = coloring_to_partition(*c);
        o.require(covers_once(p), "not a partition: " + c->provenance);
        o.require(oracle::blocks_respect(blocks_of(p), c->d, false), "pairwise oracle rejected " + c->provenance);
    }
    o.require(coset.n == 16 && coset.d == 5 && coset.color_count == 256, "coset coloring is not (16, d=5, 256)");
    o.require(punct.n == 15 && punct.d == 4 && punct.color_count == 128, "punctured coloring is not (15, d=4, 128)");
    const double s = seconds_since(t0);
    o.require(s < 30, "took " + std::to_string(s) + " s");
    if (o.pass) o.detail = "V_16: 256 colors, V_15: 128 colors, " + std::to_string(s) + " s";
    return o;
}

Outcome octacode_facts() {
    Outcome o;
    const auto code = z4::preparata_code(3);
    o.require(code.k1() == 4 && code.k2() == 0, "type is not 4^4");
    o.require(z4::min_lee_weight(code) == 6, "library min Lee weight is not 6");
    std::vector<oracle::Z4> gens;
    for (const auto& g : code.generators()) gens.push_back(oracle::unpack(g.packed(), 8));
    const auto span = oracle::z4_span(gens, 8);
    o.require(span.size() == 256, "closure has " + std::to_string(span.size()) + " words");
    std::map<int, int> dist;
    int min_lee = 99;
    for (const auto& v : span) {
        ++dist[oracle::popcount(oracle::gray(v))];
        if (oracle::lee(v) > 0) min_lee = std::min(min_lee, oracle::lee(v));
    }
    o.require(min_lee == 6, "closure min Lee weight is " + std::to_string(min_lee));
    o.require(dist == std::map<int, int>{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}},
              "Gray image weight distribution differs");
    std::map<int, int> lib;
    for (auto w : code.codeword_words()) ++lib[oracle::popcount(z4::packed_gray(w))];
    o.require(lib == dist, "library enumeration disagrees with closure");
    if (o.pass) o.detail = "type 4^4, min Lee 6, weights {0:1, 6:112, 8:30, 10:112, 16:1}";
    return o;
}

Outcome gray_properties() {
    Outcome o;
    std::uint64_t pairs = 0;
    auto check = [&](int n, std::uint64_t a, std::uint64_t b) {
        const z4::Z4Vector x(n, a), y(n, b);
        const auto ex = oracle::unpack(a, n), ey = oracle::unpack(b, n);
        const auto gx = z4::gray_map(x), gy = z4::gray_map(y);
        o.require(gx.bits() == oracle::gray(ex), "gray map differs from table");
        o.require(z4::lee_distance(x, y) == oracle::popcount(gx.bits() ^ gy.bits()), "isometry fails");
        o.require(z4::lee_weight(x) == oracle::popcount(gx.bits()), "weight not preserved");
        oracle::Z4 carry(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            carry[static_cast<std::size_t>(i)] = 2 * ((ex[static_cast<std::size_t>(i)] & 1) & (ey[static_cast<std::size_t>(i)] & 1));
        o.require(oracle::gray(oracle::add(ex, ey)) == (gx.bits() ^ gy.bits() ^ oracle::gray(carry)),
                  "carry identity fails");
        ++pairs;
    };
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << (2 * n)); ++a)
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * n)); ++b) check(n, a, b);
    oracle::Rng rng(2024);
    for (int t = 0; t < 1'000'000; ++t) {
        const int n = 5 + static_cast<int>(rng.below(28));
        check(n, rng.bits(2 * n), rng.bits(2 * n));
    }
    if (o.pass) o.detail = std::to_string(pairs) + " pairs, 0 violations";
    return o;
}

Outcome greedy_d2() {
    Outcome o;
    for (int n = 2; n <= 32; ++n) {
        const auto c = forbidden::code_from_parity(forbidden::greedy_forbidden_matrix(n, 2), 2);
        const int k = n - oracle::ceil_log2(static_cast<std::uint64_t>(n));
        o.require(c.dimension() == k, "n=" + std::to_string(n) + " dimension " + std::to_string(c.dimension()));
        if (n <= 6) {
            const auto spaces = oracle::all_subspaces(n);
            bool any_free = false;
            bool achieved = false;
            auto weight_two_free = [&](std::uint64_t mask) {
                for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                    if (((mask >> v) & 1U) && oracle::popcount(v) == 2) return false;
                return true;
            };
            for (auto mask : spaces[static_cast<std::size_t>(k + 1)]) any_free = any_free || weight_two_free(mask);
            for (auto mask : spaces[static_cast<std::size_t>(k)]) achieved = achieved || weight_two_free(mask);
            o.require(!any_free, "n=" + std::to_string(n) + ": a dimension k+1 code avoids weight 2");
            o.require(achieved, "n=" + std::to_string(n) + ": no dimension k code avoids weight 2");
        }
    }
    if (o.pass) o.detail = "k = n - ceil(log2 n) for n in 2..32, k+1 impossible for n <= 6";
    return o;
}

Outcome bound_formulas() {
    Outcome o;
    const auto kt = bounds::KTable::builtin();
    bounds::TableOptions opts;
    opts.witness_max_n = 0;
    const std::vector<std::pair<int, int>> cases = {{13, 4}, {14, 4}, {28, 6}};
    const std::vector<unsigned> column_exp = {8, 9, 17}, shortened_exp = {7, 7, 11};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto [n, d] = cases[i];
        const auto reports = bounds::bound_table(bounds::Quantity::Chi, d, {n}, kt, opts);
        std::ostringstream text;
        bounds::write_table_text(text, reports);
        std::map<std::string, bounds::BigInt> by_rule;
        for (const auto& u : reports[0].upper_bounds) by_rule[u.rule] = u.value;
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
        o.require(by_rule["column-count"] == bounds::pow2(column_exp[i]), at + " column-count mismatch");
        o.require(by_rule["shortened-sum"] == bounds::pow2(shortened_exp[i]), at + " shortened-sum mismatch");
        o.require(text.str().find("column-count = " + bounds::describe(bounds::pow2(column_exp[i]))) != std::string::npos,
                  at + " printed column-count value missing");
        o.require(text.str().find("shortened-sum = " + bounds::describe(bounds::pow2(shortened_exp[i]))) != std::string::npos,
                  at + " printed shortened-sum value missing");
    }
    for (int d : {2, 4, 6, 8})
        for (int n = 2 * d; n <= 64; ++n) {
            const auto t2 = bounds::theorem2_upper(n, d);
            o.require(t2 == bounds::BigInt(1) << oracle::ceil_log2(1 + oracle::binomial(n - 1, d - 1)),
                      "column-count formula off at n=" + std::to_string(n));
            o.require(t2 <= bounds::kdp_upper(n, d), "column-count > recursive at n=" + std::to_string(n));
        }
    if (o.pass) o.detail = "2^8/2^9/2^17 and 2^7/2^7/2^11; column-count <= recursive on the grid";
    return o;
}

Outcome golay_direct_sum() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto sum = forbidden::direct_sum(gf2::golay_code(), forbidden::full_space_forbidden(5, 6));
    o.require(sum.length() == 28 && sum.dimension() == 17, "direct sum is not [28,17]");
    // Independent weight scan of all 2^17 codewords from the generator rows.
    std::vector<std::uint64_t> rows;
    for (const auto& r : sum.base().generator().rows()) rows.push_back(r.bits());
    std::uint64_t word = 0, weight_six = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << rows.size()); ++i) {
        word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        weight_six += oracle::popcount(word) == 6;
    }
    o.require(weight_six == 0, std::to_string(weight_six) + " codewords of weight 6");
    bool guarded = false;
    try {
        forbidden::forbidden_coset_partition(sum);
    } catch (const GuardError&) {
        guarded = true;
    }
    o.require(guarded, "coset partition of V_28 was not refused");
    if (o.pass) o.detail = "[28,17], no weight-6 codeword, V_28 partition guarded, " +
                           std::to_string(seconds_since(t0)) + " s";
    return o;
}

Outcome product_exact_two() {
    Outcome o;
    const auto p1 = partition::from_binary_linear(gf2::hamming_code(3), 2);
    o.require(p1.block_count() == 8 && p1.n == 7, "Hamming cosets are not a (7,8,3)-partition");
    HypercubePartition p2;
    p2.n = 2;
    p2.mode = PartitionMode::forbidden_distance(2);
    p2.blocks = {{0, 1}, {2, 3}};
    const auto c = partition_to_coloring(partition::product_partition(p1, p2));
    o.require(c.n == 9 && c.color_count == 16 && c.mode == ColoringMode::ExactD && c.d == 2, "wrong product shape");
    o.require(verify::verify_coloring(c).passed, "verifier rejected the product");
    o.require(oracle::coloring_respects(c.assignment, 9, 2, true), "pairwise oracle rejected the product");
    if (o.pass) o.detail = "V_9, exact distance 2, 16 colors";
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    std::vector<ColoringCertificate> certs;
    auto attempt = [&](const std::function<ColoringCertificate()>& build) {
        try {
            certs.push_back(build());
        } catch (const ConstructionError&) {
        } catch (const UsageError&) {
        }
    };
    for (int n = 1; n <= 5; ++n) {
        for (int d = 1; d <= n; ++d) {
            attempt([&] { return partition_to_coloring(partition::singleton_partition(n, PartitionMode::min_distance_at_least(d + 1))); });
            attempt([&] { return partition_to_coloring(partition::from_binary_linear(gf2::repetition_code(n), d)); });
            attempt([&] { return partition_to_coloring(partition::from_binary_linear(gf2::even_weight_code(n), d)); });
            attempt([&] { return partition::parity_coloring(n, d); });
            attempt([&] {
                const auto c = forbidden::code_from_parity(forbidden::greedy_forbidden_matrix(n, d), d);
                return partition_to_coloring(forbidden::forbidden_coset_partition(c));
            });
        }
        for (int r = 2; r <= 3; ++r)
            if ((1 << r) - 1 <= n)
                attempt([&] { return partition_to_coloring(partition::from_binary_linear(gf2::hamming_code(r), 2)); });
    }
    // Exact-2 product on V_5 = V_3 x V_2.
    attempt([&] {
        HypercubePartition e;
        e.n = 2;
        e.mode = PartitionMode::forbidden_distance(2);
        e.blocks = {{0, 1}, {2, 3}};
        return partition_to_coloring(
            partition::product_partition(partition::from_binary_linear(gf2::repetition_code(3), 2), e));
    });

    std::map<std::tuple<int, int, int>, int> chi;
    for (const auto& c : certs) {
        o.require(verify::verify_coloring(c).passed, "certificate failed verification: " + c.provenance);
        const auto key = std::make_tuple(c.n, c.d, static_cast<int>(c.mode));
        if (!chi.count(key)) chi[key] = verify::exact_chi_small(c.n, c.d, c.mode);
        o.require(static_cast<std::uint32_t>(chi[key]) <= c.color_count,
                  "exact value exceeds colors of " + c.provenance);
    }
    auto equal_at = [&](int n, int d, ColoringMode mode, std::uint32_t expected) {
        const int v = verify::exact_chi_small(n, d, mode);
        bool matched = false;
        for (const auto& c : certs)
            matched = matched || (c.n == n && c.d == d && c.mode == mode && c.color_count == expected);
        o.require(v == static_cast<int>(expected) && matched,
                  "no equality at n=" + std::to_string(n) + " d=" + std::to_string(d));
    };
    equal_at(3, 2, ColoringMode::AtMostD, 4);
    for (int n = 1; n <= 5; ++n) equal_at(n, 1, ColoringMode::AtMostD, 2);
    if (o.pass) o.detail = std::to_string(certs.size()) + " certificates, " + std::to_string(chi.size()) + " exact values";
    return o;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::vector<const char*> argv = {"hychroma"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream os, es;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), os, es);
    out = os.str() + es.str();
    return code;
}

Outcome mutation_detection() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "hychroma_acceptance";
    std::filesystem::create_directories(dir);
    const auto base_path = (dir / "v15.cert").string();
    std::string out;
    o.require(run_cli({"construct", "--method", "preparata-punctured", "--r", "3", "-o", base_path}, out) == 0,
              "construct failed: " + out);
    std::ifstream in(base_path);
    const auto base = cli::read_certificate(in);
    oracle::Rng rng(99);
    int detected = 0;
    const auto path = (dir / "mutant.cert").string();
    for (int t = 0; t < 100; ++t) {
        auto mutant = base;
        const auto v = rng.below(mutant.assignment.size());
        const auto shift = 1 + rng.below(mutant.color_count - 1);
        mutant.assignment[v] = static_cast<std::uint32_t>((mutant.assignment[v] + shift) % mutant.color_count);
        {
            std::ofstream f(path);
            cli::write_certificate(f, mutant);
        }
        const int code = run_cli({"verify", path}, out);
        const auto report = verify::verify_coloring(mutant);
        const bool rechecks = report.counterexample && verify::confirms_violation(mutant, *report.counterexample) &&
                              oracle::popcount(report.counterexample->first ^ *report.counterexample->second) <= 4;
        if (code == cli::kExitViolation && out.find("counterexample:") != std::string::npos && rechecks) ++detected;
    }
    o.require(detected == 100, std::to_string(detected) + "/100 mutations detected");
    if (o.pass) o.detail = "100/100 mutations detected with re-checked counterexamples";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 preparata colorings of V_16 and V_15", preparata_colorings},
        {"2 octacode type, Lee weight and Gray weights", octacode_facts},
        {"3 Gray map isometry and carry identity", gray_properties},
        {"4 greedy forbidden-distance-2 codes are optimal", greedy_d2},
        {"5 exact-distance bound table values", bound_formulas},
        {"6 Golay direct sum forbids distance 6", golay_direct_sum},
        {"7 product gives an exact-2 coloring of V_9", product_exact_two},
        {"8 exact oracle lower-bounds constructions", oracle_agreement},
        {"9 single-color mutations are detected", mutation_detection},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
