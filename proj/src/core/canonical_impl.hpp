#pragma once

// Bitmask-level canonical labeling shared by canonical.cpp and the
// enumerators, which canonicalize millions of candidates and cannot afford to
// build a Graph for each one.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "algconn/graph.hpp"

namespace algconn::detail {

using AdjMask = std::uint32_t;

// Upper-triangle adjacency bits of a relabeled graph in graph6 order, packed
// most-significant-first so that array comparison is lexicographic.
struct Certificate {
  std::array<std::uint64_t, 2> words{};

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.words[0] * 0x9E3779B97F4A7C15ULL ^ c.words[1]);
  }
};

std::vector<AdjMask> to_masks(const Graph& g);

// Returns lab with lab[i] = vertex placed at position i.
std::vector<int> canonical_labeling(std::span<const AdjMask> adj);

Certificate certificate_of(std::span<const AdjMask> adj, std::span<const int> lab);

inline Certificate canonical_certificate(std::span<const AdjMask> adj) {
  return certificate_of(adj, canonical_labeling(adj));
}

Graph graph_from_certificate(int n, const Certificate& cert);

}  // namespace algconn::detail
