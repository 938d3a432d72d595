#pragma once

// Constructions of hypercube partitions from codes. Every function verifies
// its output exhaustively and throws IntegrityError if the check fails.

#include <string>

#include "hychroma/gf2.hpp"
#include "hychroma/hypercube.hpp"
#include "hychroma/z4.hpp"

namespace hychroma::partition {

/// Cosets of a binary linear code with minimum distance >= d + 1. Throws
/// ConstructionError naming a lighter codeword when the distance is too small.
HypercubePartition from_binary_linear(const gf2::BinaryLinearCode& c, int d, std::string provenance = {},
                                      bool force = false);

/// Gray images of the cosets of a Z4-linear code with minimum Lee weight >= 3,
/// partitioning V_2n with minimum distance d_L.
HypercubePartition z4_coset_partition(const z4::Z4LinearCode& c, std::string provenance = {}, bool force = false);

/// The coset images with the last binary coordinate deleted. Cosets that differ
/// by a multiple of the last unit vector form classes of four; each class
/// contributes two blocks of V_(2n-1), with minimum distance d_L - 1.
HypercubePartition z4_punctured_partition(const z4::Z4LinearCode& c, std::string provenance = {},
                                          bool force = false);

/// Blocks B_i x E_j on V_(n1+n2), vertex a | b << n1. Needs p1 with minimum
/// distance >= d + 1 and p2 forbidding an even distance d.
HypercubePartition product_partition(const HypercubePartition& p1, const HypercubePartition& p2,
                                     bool force = false);

/// Every vertex of V_n in its own block.
HypercubePartition singleton_partition(int n, PartitionMode mode);

/// Weight-parity 2-coloring, valid for exact distance d when d is odd.
ColoringCertificate parity_coloring(int n, int d, bool force = false);

}  // namespace hychroma::partition
