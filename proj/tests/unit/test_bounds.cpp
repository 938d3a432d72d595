#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "hychroma/bounds.hpp"
#include "hychroma/errors.hpp"

using namespace hychroma;
using namespace hychroma::bounds;

namespace {

const UpperBound* upper(const BoundReport& r, const std::string& rule) {
    for (const auto& u : r.upper_bounds)
        if (u.rule == rule) return &u;
    return nullptr;
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(ceil_log2(BigInt(1)) == 0);
    CHECK(ceil_log2(BigInt(2)) == 1);
    CHECK(ceil_log2(BigInt(221)) == 8);
    CHECK(ceil_log2(pow2(100)) == 100);
    CHECK(ceil_log2(pow2(100) + 1) == 101);
    CHECK(binomial(27, 5) == 80730);
    CHECK(ceil_div(BigInt(7), BigInt(2)) == 4);
    CHECK(describe(BigInt(256)) == "256 (2^8)");
    CHECK(describe(BigInt(255)) == "255");
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == BigInt(oracle::binomial(n, k)));
}

TEST_CASE("column-count bound matches 2^ceil(log2(1 + C(n-1, d-1)))") {
    for (int d : {2, 4, 6, 8})
        for (int n = 2 * d; n <= 64; ++n) {
            const auto expected = BigInt(1) << oracle::ceil_log2(1 + oracle::binomial(n - 1, d - 1));
            CHECK(theorem2_upper(n, d) == expected);
            CHECK(theorem2_upper(n, d) <= kdp_upper(n, d));
        }
    CHECK(theorem2_upper(13, 4) == 256);
    CHECK(theorem2_upper(14, 4) == 512);
    CHECK(theorem2_upper(28, 6) == pow2(17));
}

TEST_CASE("shortened-sum bound uses the k-table") {
    const auto kt = KTable::builtin();
    CHECK(theorem3_upper(13, 4, kt) == 128);
    CHECK(theorem3_upper(14, 4, kt) == 128);
    CHECK(theorem3_upper(28, 6, kt) == pow2(11));
    CHECK_THROWS_AS(theorem3_upper(15, 4, kt), MissingEntryError);
}

TEST_CASE("k-table csv merge and validation") {
    auto kt = KTable::builtin();
    std::istringstream in("n,d,k,source\n12,5,4,user-file\n");
    kt.merge_csv(in);
    REQUIRE(kt.find(12, 5));
    CHECK(kt.find(12, 5)->k == 4);
    std::istringstream bad("n,d,k,source\n12,5,x,user-file\n");
    CHECK_THROWS_AS(kt.merge_csv(bad), ParseError);
    std::istringstream sneaky("n,d,k,source\n12,5,4,exact-oracle\n");
    CHECK_THROWS(kt.merge_csv(sneaky));
    CHECK_THROWS_AS(kt.add_witness(8, gf2::hamming_code(3), KSource::GreedyWitness), ConstructionError);
    const auto g = kt.find(23, 7);
    REQUIRE(g);
    CHECK(g->code.has_value());
}

TEST_CASE("preparata chromatic values and reference A") {
    CHECK(theorem1_values(3) == std::pair<BigInt, BigInt>(128, 256));
    CHECK(theorem1_values(5) == std::pair<BigInt, BigInt>(pow2(11), pow2(12)));
    const auto a = reference_A(16, 6);
    REQUIRE(a);
    CHECK(a->value == 256);
    CHECK(reference_A(15, 5)->value == 256);
    CHECK(lower_chi_prime(16, 5, BigInt(256)) == 256);
}

TEST_CASE("bound tables are consistent") {
    const auto kt = KTable::builtin();
    const auto chi = bound_table(Quantity::Chi, 4, {8, 9, 10, 13, 14}, kt);
    for (const auto& r : chi) {
        REQUIRE(r.best_lower);
        REQUIRE(r.best_upper);
        CHECK(*r.best_lower <= *r.best_upper);
    }
    CHECK(upper(chi[3], "column-count")->value == 256);
    CHECK(upper(chi[3], "shortened-sum")->value == 128);
    const auto small = bound_table(Quantity::ChiPrime, 2, {3}, kt);
    CHECK(*small[0].best_lower == 4);
    CHECK(*small[0].best_upper == 4);
    std::ostringstream csv;
    write_table_csv(csv, chi);
    CHECK(csv.str().rfind("quantity,n,d,bound,rule,value,inputs,witness\n", 0) == 0);
}
