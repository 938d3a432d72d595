#include <doctest.h>

#include <map>
#include <sstream>

#include "../oracles.hpp"
#include "hychroma/errors.hpp"
#include "hychroma/z4.hpp"

using namespace hychroma;
using namespace hychroma::z4;

namespace {

std::vector<oracle::Z4> entry_lists(const Z4LinearCode& c) {
    std::vector<oracle::Z4> out;
    for (const auto& g : c.generators()) out.push_back(oracle::unpack(g.packed(), g.length()));
    return out;
}

}  // namespace

TEST_CASE("gray map matches the per-entry table") {
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << (2 * n)); ++w) {
            const Z4Vector x(n, w);
            const auto e = oracle::unpack(w, n);
            CHECK(gray_map(x).bits() == oracle::gray(e));
            CHECK(lee_weight(x) == oracle::lee(e));
            CHECK(gray_inverse(gray_map(x)) == x);
            CHECK(packed_gray_inverse(packed_gray(w)) == w);
        }
    CHECK(gray_map(Z4Vector::from_string("0123")).to_string() == "00011110");
}

TEST_CASE("random pairs: isometry and the carry identity") {
    oracle::Rng rng(5);
    for (int trial = 0; trial < 20000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(32));
        const Z4Vector x(n, rng.bits(2 * n));
        const Z4Vector y(n, rng.bits(2 * n));
        const auto gx = gray_map(x);
        const auto gy = gray_map(y);
        CHECK(lee_distance(x, y) == gf2::hamming_distance(gx, gy));
        const auto carry = Z4Vector::from_binary(alpha_map(x) & alpha_map(y)).scaled(2);
        CHECK(gray_map(x + y) == (gx ^ gy ^ gray_map(carry)));
        CHECK(x + (-x) == Z4Vector::zero(n));
        CHECK(packed_add(x.packed(), y.packed()) == oracle::pack(oracle::add(oracle::unpack(x.packed(), n),
                                                                             oracle::unpack(y.packed(), n))));
    }
}

TEST_CASE("hensel lift divides x^m - 1 and reduces to its input") {
    for (int r : {3, 5, 7}) {
        const auto f = primitive_polynomial(r);
        const auto h = hensel_lift(f);
        const int m = binary_order_of_x(f);
        CHECK(m == (1 << r) - 1);
        CHECK(h.mod2() == f);
        CHECK(h.degree() == r);
        oracle::Poly xm(static_cast<std::size_t>(m + 1), 0);
        xm[0] = 3;
        xm[static_cast<std::size_t>(m)] = 1;
        CHECK(oracle::remainder_monic(xm, h.coefficients()).empty());
    }
    // x^3 + 2x^2 + x + 3 is the lift of x^3 + x + 1.
    CHECK(hensel_lift(primitive_polynomial(3)) == Z4Polynomial({3, 1, 2, 1}));
}

TEST_CASE("polynomial division reconstructs the dividend") {
    oracle::Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> a(1 + rng.below(10)), b(1 + rng.below(5));
        for (auto& x : a) x = static_cast<int>(rng.below(4));
        for (auto& x : b) x = static_cast<int>(rng.below(4));
        b.back() = rng.below(2) ? 1 : 3;
        const Z4Polynomial pa(a), pb(b);
        const auto qr = divmod(pa, pb);
        CHECK(qr.quotient * pb + qr.remainder == pa);
        CHECK(qr.remainder.degree() < pb.degree());
    }
}

TEST_CASE("standard form preserves the generated group") {
    oracle::Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        std::vector<Z4Vector> rows;
        for (int i = 0, k = static_cast<int>(rng.below(4)); i < k; ++i) rows.emplace_back(n, rng.bits(2 * n));
        const auto c = standard_form(n, rows);
        std::vector<oracle::Z4> raw;
        for (const auto& r : rows) raw.push_back(oracle::unpack(r.packed(), n));
        const auto span = oracle::z4_span(raw, n);
        CHECK(span.size() == (std::size_t{1} << c.log2_size()));
        CHECK(oracle::z4_span(entry_lists(c), n) == span);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << (2 * n)); ++w)
            CHECK(c.contains(Z4Vector(n, w)) == (span.count(oracle::unpack(w, n)) == 1));
    }
}

TEST_CASE("dual codes are orthogonal with complementary size") {
    oracle::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        std::vector<Z4Vector> rows;
        for (int i = 0, k = static_cast<int>(rng.below(4)); i < k; ++i) rows.emplace_back(n, rng.bits(2 * n));
        const auto c = standard_form(n, rows);
        const auto dual = z4_dual(c);
        CHECK(c.log2_size() + dual.log2_size() == 2 * n);
        for (const auto& x : c.generators())
            for (const auto& y : dual.generators()) CHECK(inner_product(x, y) == 0);
    }
}

TEST_CASE("kerdock and preparata at r = 3 coincide with the octacode") {
    const auto k = kerdock_code(3);
    const auto p = preparata_code(3);
    CHECK(k.k1() == 4);
    CHECK(k.k2() == 0);
    CHECK(p.k1() == 4);
    CHECK(p.k2() == 0);
    CHECK(*min_lee_weight(k) == 6);
    CHECK(*min_lee_weight(p) == 6);
    for (const auto& g : p.generators()) CHECK(k.contains(g));
    const auto span = oracle::z4_span(entry_lists(p), 8);
    std::map<int, int> lee;
    for (const auto& v : span) ++lee[oracle::lee(v)];
    CHECK(lee == std::map<int, int>{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}});
    CHECK_THROWS_AS(kerdock_code(4), UsageError);
}

TEST_CASE("z4 code files round-trip") {
    const auto p = preparata_code(3);
    std::stringstream ss;
    write_z4_code(ss, p);
    const auto back = read_z4_code(ss);
    CHECK(back.k1() == 4);
    for (const auto& g : p.generators()) CHECK(back.contains(g));
    std::istringstream junk("z4code n=2 k1=1 k2=0\n14\n");
    CHECK_THROWS_AS(read_z4_code(junk), ParseError);
}
