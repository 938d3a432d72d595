#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "hychroma/errors.hpp"
#include "hychroma/partition.hpp"
#include "hychroma/verify.hpp"

using namespace hychroma;
using namespace hychroma::verify;

namespace {

ColoringCertificate random_coloring(oracle::Rng& rng, int n, int d, ColoringMode mode, std::uint32_t colors) {
    ColoringCertificate c;
    c.n = n;
    c.d = d;
    c.mode = mode;
    c.color_count = colors;
    c.assignment.resize(std::size_t{1} << n);
    for (std::uint32_t i = 0; i < c.assignment.size(); ++i)
        c.assignment[i] = i < colors ? i : static_cast<std::uint32_t>(rng.below(colors));
    return c;
}

}  // namespace

TEST_CASE("both strategies agree with the pairwise oracle on random colorings") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const auto mode = rng.below(2) ? ColoringMode::ExactD : ColoringMode::AtMostD;
        const auto colors = static_cast<std::uint32_t>(1 + rng.below(std::uint64_t{1} << n));
        const auto c = random_coloring(rng, n, d, mode, colors);
        const bool expected = oracle::coloring_respects(c.assignment, n, d, mode == ColoringMode::ExactD);
        for (auto s : {Strategy::Neighbor, Strategy::Pairwise, Strategy::Auto}) {
            const auto r = verify_coloring(c, s);
            CHECK(r.passed == expected);
            if (!r.passed) {
                REQUIRE(r.counterexample);
                CHECK(confirms_violation(c, *r.counterexample));
            }
        }
    }
}

TEST_CASE("counterexamples are deterministic") {
    const auto base = partition_to_coloring(partition::from_binary_linear(gf2::repetition_code(8), 4));
    auto bad = base;
    bad.d = 8;
    const auto a = verify_coloring(bad, Strategy::Pairwise);
    const auto b = verify_coloring(bad, Strategy::Pairwise);
    REQUIRE(a.counterexample);
    CHECK(a.counterexample->first == b.counterexample->first);
    CHECK(a.counterexample->second == b.counterexample->second);
}

TEST_CASE("malformed certificates are usage errors") {
    oracle::Rng rng(1);
    auto c = random_coloring(rng, 3, 1, ColoringMode::AtMostD, 4);
    auto wrong_size = c;
    wrong_size.assignment.pop_back();
    CHECK_THROWS_AS(verify_coloring(wrong_size), UsageError);
    auto out_of_range = c;
    out_of_range.assignment[0] = 9;
    CHECK_THROWS_AS(verify_coloring(out_of_range), UsageError);
    auto unused = c;
    unused.color_count = 8;
    CHECK_THROWS_AS(verify_coloring(unused), UsageError);
}

TEST_CASE("partition checks report overlap and gaps") {
    HypercubePartition p;
    p.n = 2;
    p.mode = PartitionMode::min_distance_at_least(1);
    p.blocks = {{0, 1}, {1, 2}};
    auto r = verify_partition(p);
    CHECK(!r.passed);
    CHECK(r.counterexample->check == "overlap");
    p.blocks = {{0, 1}, {2}};
    r = verify_partition(p);
    CHECK(!r.passed);
    CHECK(r.counterexample->check == "uncovered");
    CHECK(r.counterexample->first == 3);
}

TEST_CASE("size guards") {
    ColoringCertificate c;
    c.n = 25;
    c.d = 1;
    c.color_count = 1;
    c.assignment.assign(std::size_t{1} << 25, 0);
    CHECK_THROWS_AS(verify_coloring(c), GuardError);
    CHECK_THROWS_AS(exact_chi_small(7, 1, ColoringMode::AtMostD), GuardError);
    CHECK_THROWS_AS(exact_A_small(9, 3), GuardError);
}

TEST_CASE("exact oracles match brute force on tiny cubes") {
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= n; ++d) {
            CHECK(exact_chi_small(n, d, ColoringMode::AtMostD) == oracle::chromatic_number(n, d, false));
            CHECK(exact_chi_small(n, d, ColoringMode::ExactD) == oracle::chromatic_number(n, d, true));
            CHECK(exact_A_small(n, d + 1).size == oracle::max_independent(n, d + 1, false));
            CHECK(exact_Q_small(n, d).size == oracle::max_independent(n, d, true));
        }
    CHECK(exact_A_small(7, 3).size == 16);
    const auto q = exact_Q_small(5, 2);
    for (std::size_t i = 0; i < q.witness.size(); ++i)
        for (std::size_t j = i + 1; j < q.witness.size(); ++j)
            CHECK(oracle::popcount(q.witness[i] ^ q.witness[j]) != 2);
}

TEST_CASE("report formats") {
    const auto c = partition_to_coloring(partition::from_binary_linear(gf2::hamming_code(3), 2));
    const auto r = verify_coloring(c);
    std::ostringstream text, csv;
    write_report(text, r, ReportFormat::Text);
    write_report(csv, r, ReportFormat::Csv);
    CHECK(text.str().find("result: PASS") != std::string::npos);
    CHECK(csv.str().rfind("n,constraint,strategy,pairs,wall_ms,result,counterexample\n", 0) == 0);
}
