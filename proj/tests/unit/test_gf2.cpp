#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "hychroma/errors.hpp"
#include "hychroma/gf2.hpp"

using namespace hychroma;
using namespace hychroma::gf2;

namespace {

BinaryMatrix random_matrix(oracle::Rng& rng, int rows, int cols) {
    std::vector<BitVector> r;
    for (int i = 0; i < rows; ++i) r.emplace_back(cols, rng.bits(cols));
    return BinaryMatrix(cols, std::move(r));
}

std::vector<std::uint64_t> generator_words(const BinaryLinearCode& c) {
    std::vector<std::uint64_t> out;
    for (const auto& r : c.generator().rows()) out.push_back(r.bits());
    return out;
}

}  // namespace

TEST_CASE("bit vectors parse and print first coordinate first") {
    const auto v = BitVector::from_string("1101");
    CHECK(v.bits() == 0b1011);
    CHECK(v.to_string() == "1101");
    CHECK(v.weight() == 3);
    CHECK(hamming_distance(v, BitVector::from_string("0000")) == 3);
    CHECK_THROWS_AS(BitVector(3, 8), UsageError);
    CHECK_THROWS_AS(hamming_distance(v, BitVector(3, 0)), UsageError);
}

TEST_CASE("rref rank matches the span size") {
    oracle::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int cols = 1 + static_cast<int>(rng.below(12));
        const int rows = static_cast<int>(rng.below(8));
        const auto m = random_matrix(rng, rows, cols);
        std::vector<std::uint64_t> words;
        for (const auto& r : m.rows()) words.push_back(r.bits());
        const auto span = oracle::binary_span(words);
        const auto red = rref(m);
        CHECK(span.size() == (std::size_t{1} << red.rank));
        for (std::size_t i = 1; i < red.pivots.size(); ++i) CHECK(red.pivots[i - 1] < red.pivots[i]);
    }
}

TEST_CASE("kernel is the orthogonal complement of the row space") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int cols = 1 + static_cast<int>(rng.below(10));
        const int rows = 1 + static_cast<int>(rng.below(6));
        const auto h = random_matrix(rng, rows, cols);
        const auto c = BinaryLinearCode::kernel_of(h);
        CHECK(c.dimension() == cols - rref(h).rank);
        std::size_t members = 0;
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << cols); ++w) {
            bool in_kernel = true;
            for (const auto& r : h.rows()) in_kernel = in_kernel && oracle::popcount(r.bits() & w) % 2 == 0;
            CHECK(c.contains(BitVector(cols, w)) == in_kernel);
            members += in_kernel;
        }
        CHECK(members == (std::size_t{1} << c.dimension()));
    }
}

TEST_CASE("minimum weight agrees with pairwise distance over random codes") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(11));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 7))));
        std::vector<BitVector> gens;
        for (int i = 0; i < k; ++i) gens.emplace_back(n, rng.bits(n));
        const BinaryLinearCode c(n, gens);
        const auto words = c.codewords();
        const auto span = oracle::binary_span(generator_words(c));
        REQUIRE(words.size() == span.size());
        CHECK(std::set<std::uint64_t>(words.begin(), words.end()) == span);
        const auto w = min_hamming_weight(c);
        if (c.dimension() == 0) {
            CHECK(!w);
        } else {
            REQUIRE(w);
            CHECK(*w == oracle::min_distance(words));
            const auto dist = weight_distribution(c);
            std::uint64_t total = 0;
            for (auto x : dist) total += x;
            CHECK(total == words.size());
            CHECK(dist[static_cast<std::size_t>(*w)] > 0);
            const auto found = find_codeword_of_weight(c, *w);
            REQUIRE(found);
            CHECK(found->weight() == *w);
        }
    }
}

TEST_CASE("named codes have their textbook parameters") {
    CHECK(hamming_code(3).dimension() == 4);
    CHECK(*min_hamming_weight(hamming_code(3)) == 3);
    CHECK(*min_hamming_weight(hamming_code(4)) == 3);
    const auto g = golay_code();
    CHECK(g.length() == 23);
    CHECK(g.dimension() == 12);
    const auto dist = weight_distribution(g);
    CHECK(dist[7] == 253);
    CHECK(dist[8] == 506);
    CHECK(dist[11] == 1288);
    CHECK(*min_hamming_weight(repetition_code(9)) == 9);
    CHECK(*min_hamming_weight(even_weight_code(9)) == 2);
    CHECK(!min_hamming_weight(zero_code(5)));
}

TEST_CASE("cosets tile the space and are led by their representatives") {
    const auto c = hamming_code(3);
    const auto cosets = enumerate_cosets(c);
    REQUIRE(cosets.size() == 8);
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
        CHECK(cosets[i].size() == 16);
        CHECK(std::is_sorted(cosets[i].begin(), cosets[i].end()));
        if (i) CHECK(cosets[i - 1].front() < cosets[i].front());
        seen.insert(cosets[i].begin(), cosets[i].end());
    }
    CHECK(seen.size() == 128);
    CHECK(cosets[0].front() == 0);
}

TEST_CASE("puncturing rejects blocks with a pair at distance one in the last coordinate") {
    const std::vector<Vertex> good = {0b000, 0b111};
    CHECK(puncture_last(good, 3) == Block{0b00, 0b11});
    const std::vector<Vertex> bad = {0b000, 0b100};
    CHECK_THROWS_AS(puncture_last(bad, 3), IntegrityError);
}

TEST_CASE("code files round-trip and reject junk") {
    const auto c = hamming_code(3);
    std::stringstream ss;
    write_code(ss, c);
    const auto back = read_code(ss);
    CHECK(back.length() == 7);
    CHECK(back.generator() == c.generator());
    std::istringstream junk("code n=3 k=1\n1x1\n");
    CHECK_THROWS_AS(read_code(junk), ParseError);
    std::istringstream short_input("code n=3 k=2\n111\n");
    CHECK_THROWS_AS(read_code(short_input), ParseError);
}

TEST_CASE("enumeration guards") {
    std::vector<BitVector> gens;
    for (int i = 0; i < 30; ++i) gens.push_back(BitVector::unit(40, i));
    const BinaryLinearCode big(40, gens);
    CHECK_THROWS_AS(min_hamming_weight(big), GuardError);
    CHECK_THROWS_AS(enumerate_cosets(hamming_code(5)), GuardError);
}
