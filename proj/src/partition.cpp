#include "hychroma/partition.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "hychroma/errors.hpp"
#include "hychroma/verify.hpp"

namespace hychroma::partition {

namespace {

void require_verified(const HypercubePartition& p, bool force) {
    const auto report = verify::verify_partition(p, verify::Strategy::Auto, force);
    if (!report.passed)
        throw IntegrityError("constructed partition (" + p.provenance + ") failed verification: " +
                             report.counterexample->describe(p.n));
}

void require_materializable(int n, bool force, const char* what) {
    if (n > verify::kVerifyLengthLimit && !force)
        throw GuardError(std::string(what) + " materializes V_" + std::to_string(n) + "; limit is n <= " +
                         std::to_string(verify::kVerifyLengthLimit));
}

int checked_min_lee(const z4::Z4LinearCode& c, bool force) {
    const auto d = z4::min_lee_weight(c, force);
    if (d && *d < 3)
        throw ConstructionError("Z4 code has minimum Lee weight " + std::to_string(*d) + " < 3");
    // The zero code: every coset is a single word, so any distance bound holds.
    return d ? *d : 2 * c.length() + 1;
}

std::string z4_label(const z4::Z4LinearCode& c) {
    return "n=" + std::to_string(c.length()) + " type=4^" + std::to_string(c.k1()) + "2^" + std::to_string(c.k2());
}

// Coset index of every vertex of V_2n (vertex = Gray image), numbered by
// increasing minimum vertex, together with the members of each coset.
struct Z4Cosets {
    std::vector<std::uint32_t> id_of_vertex;
    std::vector<Block> members;
};

Z4Cosets z4_cosets(const z4::Z4LinearCode& c, bool force) {
    const auto words = c.codeword_words(force);
    const std::uint64_t space = std::uint64_t{1} << (2 * c.length());
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    Z4Cosets out;
    out.id_of_vertex.assign(space, kUnset);
    for (Vertex v = 0; v < space; ++v) {
        if (out.id_of_vertex[v] != kUnset) continue;
        const auto id = static_cast<std::uint32_t>(out.members.size());
        const auto x = z4::packed_gray_inverse(v);
        Block block;
        block.reserve(words.size());
        for (auto w : words) {
            const Vertex g = z4::packed_gray(z4::packed_add(x, w));
            out.id_of_vertex[g] = id;
            block.push_back(g);
        }
        std::sort(block.begin(), block.end());
        out.members.push_back(std::move(block));
    }
    return out;
}

}  // namespace

HypercubePartition from_binary_linear(const gf2::BinaryLinearCode& c, int d, std::string provenance, bool force) {
    if (d < 0) throw UsageError("from_binary_linear: d must be >= 0");
    if (auto lightest = gf2::min_weight_codeword(c, force); lightest && lightest->weight < d + 1)
        throw ConstructionError("codeword " + lightest->codeword.to_string() + " has weight " +
                                std::to_string(lightest->weight) + " < d+1 = " + std::to_string(d + 1));
    require_materializable(c.length(), force, "linear coset partition");
    HypercubePartition p;
    p.n = c.length();
    p.mode = PartitionMode::min_distance_at_least(d + 1);
    p.blocks = gf2::enumerate_cosets(c, force);
    p.provenance = provenance.empty() ? "linear-coset n=" + std::to_string(c.length()) + " k=" +
                                            std::to_string(c.dimension()) + " d=" + std::to_string(d)
                                      : std::move(provenance);
    require_verified(p, force);
    return p;
}

HypercubePartition z4_coset_partition(const z4::Z4LinearCode& c, std::string provenance, bool force) {
    const int d_lee = checked_min_lee(c, force);
    const int n2 = 2 * c.length();
    require_materializable(n2, force, "Z4 coset partition");
    auto cosets = z4_cosets(c, force);
    const std::uint64_t expected = std::uint64_t{1} << (n2 - c.log2_size());
    if (cosets.members.size() != expected)
        throw IntegrityError("expected " + std::to_string(expected) + " cosets, found " +
                             std::to_string(cosets.members.size()));
    HypercubePartition p;
    p.n = n2;
    p.mode = PartitionMode::min_distance_at_least(std::min(d_lee, n2 + 1));
    p.blocks = std::move(cosets.members);
    p.provenance = provenance.empty() ? "z4-coset " + z4_label(c) : std::move(provenance);
    p.canonicalize();
    require_verified(p, force);
    return p;
}

HypercubePartition z4_punctured_partition(const z4::Z4LinearCode& c, std::string provenance, bool force) {
    const int d_lee = checked_min_lee(c, force);
    const int n = c.length();
    const int n2 = 2 * n;
    require_materializable(n2, force, "punctured Z4 partition");
    const auto cosets = z4_cosets(c, force);
    const std::size_t count = cosets.members.size();
    if (count % 4 != 0) throw IntegrityError("coset count " + std::to_string(count) + " is not divisible by 4");

    // Translating by s on the last Z4 coordinate.
    auto translate = [&](std::uint32_t coset, std::uint64_t s) {
        const auto x = z4::packed_gray_inverse(cosets.members[coset].front());
        const auto shifted = z4::packed_add(x, s << (2 * (n - 1)));
        return cosets.id_of_vertex[z4::packed_gray(shifted)];
    };

    HypercubePartition p;
    p.n = n2 - 1;
    p.mode = PartitionMode::min_distance_at_least(std::min(d_lee, n2 + 1) - 1);
    p.provenance = provenance.empty() ? "z4-punctured " + z4_label(c) : std::move(provenance);
    std::vector<bool> used(count, false);
    for (std::uint32_t i = 0; i < count; ++i) {
        if (used[i]) continue;
        const std::uint32_t j1 = translate(i, 1);
        const std::uint32_t j2 = translate(i, 2);
        const std::uint32_t j3 = translate(i, 3);
        std::vector<std::uint32_t> cls{i, j1, j2, j3};
        std::sort(cls.begin(), cls.end());
        if (std::adjacent_find(cls.begin(), cls.end()) != cls.end())
            throw IntegrityError("coset class of " + std::to_string(i) + " has fewer than four members");
        for (auto k : cls) {
            if (used[k]) throw IntegrityError("coset " + std::to_string(k) + " lies in two classes");
            used[k] = true;
        }
        auto b0 = gf2::puncture_last(cosets.members[i], n2);
        auto b2 = gf2::puncture_last(cosets.members[j2], n2);
        auto b1 = gf2::puncture_last(cosets.members[j1], n2);
        auto b3 = gf2::puncture_last(cosets.members[j3], n2);
        Block left;
        Block right;
        std::merge(b0.begin(), b0.end(), b2.begin(), b2.end(), std::back_inserter(left));
        std::merge(b1.begin(), b1.end(), b3.begin(), b3.end(), std::back_inserter(right));
        if (left != right)
            throw IntegrityError("punctured class of coset " + std::to_string(i) +
                                 ": even and odd translates cover different words");
        p.blocks.push_back(std::move(b0));
        p.blocks.push_back(std::move(b2));
    }
    if (p.blocks.size() != count / 2)
        throw IntegrityError("expected " + std::to_string(count / 2) + " punctured blocks");
    p.canonicalize();
    require_verified(p, force);
    return p;
}

HypercubePartition product_partition(const HypercubePartition& p1, const HypercubePartition& p2, bool force) {
    if (p2.mode.rule != DistanceRule::ForbiddenDistance)
        throw UsageError("product_partition: second factor must forbid a distance");
    const int d = p2.mode.distance;
    if (d % 2 != 0) throw UsageError("product_partition: forbidden distance must be even, got " + std::to_string(d));
    if (p1.mode.rule != DistanceRule::MinDistanceAtLeast || p1.mode.distance < d + 1)
        throw UsageError("product_partition: first factor needs minimum distance >= " + std::to_string(d + 1) +
                         ", has " + p1.mode.to_string());
    const int n = p1.n + p2.n;
    require_materializable(n, force, "product partition");
    HypercubePartition p;
    p.n = n;
    p.mode = PartitionMode::forbidden_distance(d);
    p.provenance = "product(" + p1.provenance + " x " + p2.provenance + ")";
    p.blocks.reserve(p1.blocks.size() * p2.blocks.size());
    for (const auto& b : p1.blocks) {
        for (const auto& e : p2.blocks) {
            Block block;
            block.reserve(b.size() * e.size());
            for (Vertex y : e)
                for (Vertex x : b) block.push_back(x | (y << p1.n));
            p.blocks.push_back(std::move(block));
        }
    }
    p.canonicalize();
    require_verified(p, force);
    return p;
}

HypercubePartition singleton_partition(int n, PartitionMode mode) {
    if (n < 1 || n > verify::kVerifyLengthLimit)
        throw UsageError("singleton_partition: n must be in 1.." + std::to_string(verify::kVerifyLengthLimit));
    HypercubePartition p;
    p.n = n;
    p.mode = mode;
    p.provenance = "singletons n=" + std::to_string(n);
    for (Vertex v = 0; v < (Vertex{1} << n); ++v) p.blocks.push_back({v});
    return p;
}

ColoringCertificate parity_coloring(int n, int d, bool force) {
    if (d % 2 == 0) throw UsageError("parity coloring needs odd d, got " + std::to_string(d));
    if (d < 1 || d > n) throw UsageError("parity coloring needs 1 <= d <= n");
    require_materializable(n, force, "parity coloring");
    ColoringCertificate c;
    c.n = n;
    c.d = d;
    c.mode = ColoringMode::ExactD;
    c.color_count = 2;
    c.provenance = "parity n=" + std::to_string(n) + " d=" + std::to_string(d);
    c.assignment.resize(std::size_t{1} << n);
    for (std::size_t v = 0; v < c.assignment.size(); ++v) c.assignment[v] = std::popcount(v) & 1U;
    const auto report = verify::verify_coloring(c, verify::Strategy::Auto, force);
    if (!report.passed)
        throw IntegrityError("parity coloring failed verification: " + report.counterexample->describe(n));
    return c;
}

}  // namespace hychroma::partition
