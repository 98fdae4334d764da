#ifndef RECON_CANON_HPP
#define RECON_CANON_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "recon/graph.hpp"

namespace recon {

// Canonical form of a graph: order, direction flag, and the adjacency rows
// of the canonical relabelling. Row i keeps column j at bit (15 - j), so
// comparing rows as integers matches row-major bit-string order. Equal codes
// mean isomorphic graphs; the code doubles as a serialization.
struct CanonCode {
  std::uint8_t n = 0;
  std::uint8_t dir = 0;
  std::array<std::uint16_t, kMaxVertices> rows{};

  auto operator<=>(const CanonCode&) const = default;

  std::string bytes() const;
  Graph graph() const;
};

struct CanonCodeHash {
  std::size_t operator()(const CanonCode& c) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t x) {
      h ^= x;
      h *= 0x100000001b3ull;
    };
    mix(c.n | (std::uint64_t{c.dir} << 8));
    for (int i = 0; i < c.n; ++i) mix(c.rows[i]);
    return static_cast<std::size_t>(h);
  }
};

struct CanonicalResult {
  CanonCode code;
  Perm relabelling;              // input vertex -> canonical label
  std::vector<Perm> generators;  // automorphism generators
  std::array<std::uint8_t, kMaxVertices> orbit{};  // min vertex of each orbit
  int orbit_count = 0;

  bool same_orbit(int u, int v) const { return orbit[u] == orbit[v]; }
  VertexSet orbit_set(int v) const {
    VertexSet s = 0;
    for (int u = 0; u < relabelling.n; ++u)
      if (orbit[u] == orbit[v]) s |= bit(u);
    return s;
  }
};

// Partition-refinement canonical labelling with automorphism discovery.
CanonicalResult canonicalize(const Graph& g);

// Independent oracle: explicit scan of all n! relabellings, n <= 8. Uses the
// opposite extreme (minimum encoding) so only the induced equivalence is
// comparable with canonicalize().
CanonicalResult brute_canonicalize(const Graph& g);

// Whole automorphism group, materialized from generators by closure.
std::vector<Perm> group_closure(const std::vector<Perm>& generators, int n);

// Encoding of a labelled graph in CanonCode row format without relabelling.
CanonCode plain_code(const Graph& g);

// One representative (the minimum element) of each orbit of Aut(g) on the
// extension space that spec allows: subsets of V(g) for undirected classes,
// (out, in) pairs for directed ones. Pairs are ordered by out | in << 16.
std::vector<ExtensionPair> extension_orbit_reps(const Graph& g, const CanonicalResult& canon,
                                                const ClassSpec& spec);

// The extension space itself, in representative order.
std::vector<ExtensionPair> extension_space(const Graph& g, const ClassSpec& spec);

}  // namespace recon

#endif
