#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "hychroma/errors.hpp"
#include "hychroma/forbidden.hpp"

using namespace hychroma;
using namespace hychroma::forbidden;

TEST_CASE("greedy d = 2 codes reach n - ceil(log2 n)") {
    for (int n = 2; n <= 64; ++n) {
        const auto h = greedy_forbidden_matrix(n, 2);
        const auto c = code_from_parity(h, 2);
        CHECK(c.dimension() == n - oracle::ceil_log2(static_cast<std::uint64_t>(n)));
        CHECK(exact_k_d2(n).k == c.dimension());
    }
}

TEST_CASE("greedy codes never contain the forbidden weight") {
    for (int d : {2, 4, 6})
        for (int n = d; n <= 16; ++n) {
            const auto c = code_from_parity(greedy_forbidden_matrix(n, d), d);
            CHECK(greedy_forbidden_matrix(n, d).row_count() ==
                  oracle::ceil_log2(1 + oracle::binomial(n - 1, d - 1)));
            for (auto w : c.base().codewords()) CHECK(oracle::popcount(w) != d);
        }
}

TEST_CASE("greedy n = 3, d = 2 kernel is the repetition code") {
    const auto c = code_from_parity(greedy_forbidden_matrix(3, 2), 2);
    const auto words = c.base().codewords();
    CHECK(std::set<std::uint64_t>(words.begin(), words.end()) == std::set<std::uint64_t>{0, 7});
}

TEST_CASE("validation names the offending columns") {
    // Columns 1 and 3 are equal, so they sum to zero.
    const auto h = gf2::BinaryMatrix::from_columns(
        2, std::vector<gf2::BitVector>{gf2::BitVector(2, 1), gf2::BitVector(2, 2), gf2::BitVector(2, 1)});
    try {
        code_from_parity(h, 2);
        FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
        CHECK(std::string(e.what()).find("{1,3}") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_forbidden(gf2::even_weight_code(4), 2), ConstructionError);
}

TEST_CASE("direct sum with V_(d-1)") {
    const auto sum = direct_sum(gf2::hamming_code(3), full_space_forbidden(1, 2));
    CHECK(sum.length() == 8);
    CHECK(sum.dimension() == 5);
    for (auto w : sum.base().codewords()) CHECK(oracle::popcount(w) != 2);
    CHECK_THROWS_AS(direct_sum(gf2::even_weight_code(4), full_space_forbidden(1, 2)), ConstructionError);
    const auto p = forbidden_coset_partition(sum);
    CHECK(p.block_count() == 8);
}

TEST_CASE("forbidden code files round-trip and re-validate") {
    const auto c = code_from_parity(greedy_forbidden_matrix(10, 4), 4);
    std::stringstream ss;
    write_forbidden_code(ss, c);
    const auto back = read_forbidden_code(ss);
    CHECK(back.forbidden_distance() == 4);
    CHECK(back.dimension() == c.dimension());
    std::stringstream bad;
    gf2::write_code(bad, gf2::even_weight_code(4));
    bad << "forbidden d=2\n";
    CHECK_THROWS_AS(read_forbidden_code(bad), ConstructionError);
}
