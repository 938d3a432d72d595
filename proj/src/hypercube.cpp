#include "hychroma/hypercube.hpp"

#include <algorithm>
#include <limits>

#include "hychroma/errors.hpp"

namespace hychroma {

std::string PartitionMode::to_string() const {
    return rule == DistanceRule::MinDistanceAtLeast ? "min-distance>=" + std::to_string(distance)
                                                    : "forbidden-distance=" + std::to_string(distance);
}

void HypercubePartition::canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.empty() || b.empty()) return !a.empty() && b.empty();
        return a.front() < b.front();
    });
}

const char* to_string(ColoringMode mode) { return mode == ColoringMode::AtMostD ? "atmost" : "exact"; }

ColoringCertificate partition_to_coloring(const HypercubePartition& p) {
    if (p.n < 1 || p.n > gf2::kCosetLengthLimit + 8) throw UsageError("partition_to_coloring: n out of range");
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    ColoringCertificate c;
    c.n = p.n;
    if (p.mode.rule == DistanceRule::MinDistanceAtLeast) {
        c.mode = ColoringMode::AtMostD;
        c.d = p.mode.distance - 1;
    } else {
        c.mode = ColoringMode::ExactD;
        c.d = p.mode.distance;
    }
    c.color_count = static_cast<std::uint32_t>(p.blocks.size());
    c.assignment.assign(std::size_t{1} << p.n, kUnset);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        for (Vertex v : p.blocks[i]) {
            if (v >= c.assignment.size()) throw IntegrityError("partition vertex outside V_n");
            if (c.assignment[v] != kUnset) throw IntegrityError("partition blocks overlap at vertex " + std::to_string(v));
            c.assignment[v] = static_cast<std::uint32_t>(i);
        }
    }
    if (std::find(c.assignment.begin(), c.assignment.end(), kUnset) != c.assignment.end())
        throw IntegrityError("partition does not cover V_n");
    c.provenance = p.provenance;
    return c;
}

HypercubePartition coloring_to_partition(const ColoringCertificate& c) {
    HypercubePartition p;
    p.n = c.n;
    p.mode = c.mode == ColoringMode::AtMostD ? PartitionMode::min_distance_at_least(c.d + 1)
                                             : PartitionMode::forbidden_distance(c.d);
    p.blocks.resize(c.color_count);
    for (std::size_t v = 0; v < c.assignment.size(); ++v) {
        const auto color = c.assignment[v];
        if (color >= c.color_count) throw UsageError("color id " + std::to_string(color) + " >= color count");
        p.blocks[color].push_back(v);
    }
    p.provenance = c.provenance;
    return p;
}

}  // namespace hychroma
