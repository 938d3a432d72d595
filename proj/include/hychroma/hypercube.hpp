#pragma once

// Partitions of the n-cube and the colorings they induce.

#include <cstdint>
#include <string>
#include <vector>

#include "hychroma/gf2.hpp"

namespace hychroma {

enum class DistanceRule {
    MinDistanceAtLeast,  ///< every block is a code with minimum distance >= distance
    ForbiddenDistance,   ///< no block contains two words at distance exactly `distance`
};

struct PartitionMode {
    DistanceRule rule = DistanceRule::MinDistanceAtLeast;
    int distance = 1;

    static PartitionMode min_distance_at_least(int delta) { return {DistanceRule::MinDistanceAtLeast, delta}; }
    static PartitionMode forbidden_distance(int d) { return {DistanceRule::ForbiddenDistance, d}; }

    std::string to_string() const;
    friend bool operator==(const PartitionMode&, const PartitionMode&) = default;
};

/// Ordered list of disjoint vertex blocks meant to cover V_n.
struct HypercubePartition {
    int n = 0;
    PartitionMode mode;
    std::vector<Block> blocks;
    std::string provenance;

    /// Sorts every block and orders blocks by their minimum vertex.
    void canonicalize();
    std::size_t block_count() const { return blocks.size(); }
};

enum class ColoringMode {
    AtMostD,  ///< vertices at distance 1..d get different colors
    ExactD,   ///< vertices at distance exactly d get different colors
};

const char* to_string(ColoringMode mode);

/// Full color assignment of V_n, indexed by vertex.
struct ColoringCertificate {
    int n = 0;
    int d = 0;
    ColoringMode mode = ColoringMode::AtMostD;
    std::uint32_t color_count = 0;
    std::vector<std::uint32_t> assignment;
    std::string provenance;
};

/// Color i is block i. MinDistanceAtLeast(delta) becomes AtMostD with d = delta - 1.
ColoringCertificate partition_to_coloring(const HypercubePartition& p);
/// Block i collects the vertices of color i.
HypercubePartition coloring_to_partition(const ColoringCertificate& c);

}  // namespace hychroma
