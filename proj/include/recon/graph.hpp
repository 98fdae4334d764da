#ifndef RECON_GRAPH_HPP
#define RECON_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recon {

inline constexpr int kMaxVertices = 16;

// Bitmask over vertices 0..n-1.
using VertexSet = std::uint16_t;

inline int popcount(VertexSet s) { return std::popcount(s); }
inline VertexSet bit(int v) { return static_cast<VertexSet>(1u << v); }
inline VertexSet all_below(int n) { return static_cast<VertexSet>((1u << n) - 1u); }

// Iterate set bits low to high.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = std::countr_zero(s);
    s &= static_cast<VertexSet>(s - 1);
    f(v);
  }
}

// A permutation of {0..n-1}.
struct Perm {
  std::array<std::uint8_t, kMaxVertices> to{};
  int n = 0;

  static Perm identity(int n) {
    Perm p;
    p.n = n;
    for (int i = 0; i < n; ++i) p.to[i] = static_cast<std::uint8_t>(i);
    return p;
  }

  int operator()(int v) const { return to[v]; }

  Perm inverse() const {
    Perm q;
    q.n = n;
    for (int i = 0; i < n; ++i) q.to[to[i]] = static_cast<std::uint8_t>(i);
    return q;
  }

  // this followed by q: result(v) = q(this(v)).
  Perm then(const Perm& q) const {
    Perm r;
    r.n = n;
    for (int i = 0; i < n; ++i) r.to[i] = q.to[to[i]];
    return r;
  }

  VertexSet apply(VertexSet s) const {
    VertexSet out = 0;
    for_each_vertex(s, [&](int v) { out |= bit(to[v]); });
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      if (to[i] != i) return false;
    return true;
  }

  auto operator<=>(const Perm&) const = default;
};

// The new vertex's neighbourhoods when extending a graph by one vertex.
// Undirected graphs use `out` only.
struct ExtensionPair {
  VertexSet out = 0;
  VertexSet in = 0;
  auto operator<=>(const ExtensionPair&) const = default;
};

// Labelled graph or digraph on vertices 0..n-1, n <= 16, one adjacency row
// per vertex. Undirected graphs keep the matrix symmetric; the diagonal is
// always zero. Bit j of row i means edge {i,j} (arc i->j when directed).
class Graph {
 public:
  Graph() = default;
  Graph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
  }

  static Graph empty(int n, bool directed = false) { return Graph(n, directed); }

  static Graph complete(int n) {
    Graph g(n, false);
    for (int i = 0; i < n; ++i) g.row_[i] = all_below(n) & ~bit(i);
    return g;
  }

  static Graph path(int n) {
    Graph g(n, false);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }

  static Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
  }

  // Star with centre 0 and n-1 leaves.
  static Graph star(int n) {
    Graph g(n, false);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n, false);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
    Graph g(n, true);
    for (auto [u, v] : arcs) g.add_arc(u, v);
    return g;
  }

  // Rows of '0'/'1' characters, one string per vertex.
  static Graph from_matrix(bool directed, const std::vector<std::string>& rows) {
    int n = static_cast<int>(rows.size());
    Graph g(n, directed);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw std::invalid_argument("ragged matrix");
      for (int j = 0; j < n; ++j) {
        if (rows[i][j] == '1') {
          if (i == j) throw std::invalid_argument("nonzero diagonal");
          if (directed)
            g.add_arc(i, j);
          else
            g.row_[i] |= bit(j);
        }
      }
    }
    if (!directed) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (g.has_arc(i, j) != g.has_arc(j, i)) throw std::invalid_argument("asymmetric matrix");
    }
    return g;
  }

  int order() const { return n_; }
  bool directed() const { return directed_; }
  VertexSet vertices() const { return all_below(n_); }

  bool has_arc(int u, int v) const { return (row_[u] >> v) & 1u; }
  VertexSet out_neighbours(int v) const { return row_[v]; }
  VertexSet in_neighbours(int v) const {
    VertexSet s = 0;
    for (int u = 0; u < n_; ++u)
      if (has_arc(u, v)) s |= bit(u);
    return s;
  }
  VertexSet neighbours(int v) const { return row_[v]; }

  int out_degree(int v) const { return popcount(row_[v]); }
  int in_degree(int v) const { return popcount(in_neighbours(v)); }
  int degree(int v) const { return out_degree(v); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    row_[u] |= bit(v);
    row_[v] |= bit(u);
  }

  void add_arc(int u, int v) {
    check_pair(u, v);
    row_[u] |= bit(v);
  }

  // The card g - v: survivors keep their relative order (label i > v
  // becomes i - 1).
  Graph card(int v) const {
    if (n_ < 2) throw std::invalid_argument("no card of a one-vertex graph");
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    Graph h(n_ - 1, directed_);
    for (int i = 0, r = 0; i < n_; ++i) {
      if (i == v) continue;
      VertexSet keep = row_[i] & ~bit(v);
      VertexSet low = keep & all_below(v);
      VertexSet high = static_cast<VertexSet>((keep >> 1) & ~all_below(v));
      h.row_[r++] = low | high;
    }
    return h;
  }

  // Append vertex n joined per ext; card(result, n) == *this label for label.
  Graph extended(const ExtensionPair& ext) const {
    if (n_ + 1 > kMaxVertices) throw std::length_error("graph capacity exceeded");
    if ((ext.out | ext.in) & ~vertices()) throw std::invalid_argument("extension outside vertex set");
    Graph h(n_ + 1, directed_);
    h.row_ = row_;
    int v = n_;
    h.row_[v] = ext.out;
    if (directed_) {
      for_each_vertex(ext.in, [&](int u) { h.row_[u] |= bit(v); });
    } else {
      for_each_vertex(ext.out, [&](int u) { h.row_[u] |= bit(v); });
    }
    return h;
  }

  // Arc reversal; involution. Directed only.
  Graph converse() const {
    if (!directed_) throw std::invalid_argument("converse of an undirected graph");
    Graph h(n_, true);
    for (int u = 0; u < n_; ++u)
      for_each_vertex(row_[u], [&](int v) { h.row_[v] |= bit(u); });
    return h;
  }

  Graph relabelled(const Perm& p) const {
    Graph h(n_, directed_);
    for (int u = 0; u < n_; ++u) h.row_[p(u)] = p.apply(row_[u]);
    return h;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(int u, int v) const {
    if (u == v) throw std::invalid_argument("loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  }

  int n_ = 1;
  bool directed_ = false;
  std::array<VertexSet, kMaxVertices> row_{};
};

int edge_count(const Graph& g);

// Undirected: number of K3 subgraphs. Directed: number of cyclic triangles.
int triangle_count(const Graph& g);

// Triangles through one vertex, same notion as triangle_count.
int triangles_through(const Graph& g, int v);

// Number of 2-cycles (pairs joined both ways) of a digraph.
int two_cycle_count(const Graph& g);

// Non-increasing degree sequence of an undirected graph.
std::vector<int> degree_sequence(const Graph& g);

// Non-increasing (out, in) pairs of a digraph, lexicographic.
std::vector<std::pair<int, int>> degree_pair_sequence(const Graph& g);

bool is_bipartite(const Graph& g);
bool has_triangle(const Graph& g);
bool has_four_cycle(const Graph& g);

// Simple cycle of length exactly k (undirected).
bool has_k_cycle(const Graph& g, int k);

bool is_tournament(const Graph& g);

enum class ClassKind {
  graphs,
  triangle_free,
  girth5,
  no_four_cycle,
  bipartite,
  bipartite_girth6,
  max_degree,
  degree_range,
  digraphs,
  oriented,
  tournament,
  score_range,
};

// Declarative hereditary class, plus the two range kinds whose lower bound
// is applied only as a final filter (a lower degree/score bound does not
// survive vertex deletion).
struct ClassSpec {
  ClassKind kind = ClassKind::graphs;
  int lo = 0;
  int hi = 0;

  static ClassSpec graphs() { return {ClassKind::graphs}; }
  static ClassSpec triangle_free() { return {ClassKind::triangle_free}; }
  static ClassSpec girth5() { return {ClassKind::girth5}; }
  static ClassSpec no_four_cycle() { return {ClassKind::no_four_cycle}; }
  static ClassSpec bipartite() { return {ClassKind::bipartite}; }
  static ClassSpec bipartite_girth6() { return {ClassKind::bipartite_girth6}; }
  static ClassSpec max_degree(int k) { return {ClassKind::max_degree, 0, k}; }
  static ClassSpec degree_range(int lo, int hi) { return {ClassKind::degree_range, lo, hi}; }
  static ClassSpec digraphs() { return {ClassKind::digraphs}; }
  static ClassSpec oriented() { return {ClassKind::oriented}; }
  static ClassSpec tournament() { return {ClassKind::tournament}; }
  static ClassSpec score_range(int lo, int hi) { return {ClassKind::score_range, lo, hi}; }

  bool directed() const {
    switch (kind) {
      case ClassKind::digraphs:
      case ClassKind::oriented:
      case ClassKind::tournament:
      case ClassKind::score_range:
        return true;
      default:
        return false;
    }
  }

  // Whether membership survives vertex deletion.
  bool hereditary() const {
    if (kind == ClassKind::score_range) return false;
    if (kind == ClassKind::degree_range) return lo == 0;
    return true;
  }

  // Largest hereditary class used for generation; the rest of the predicate
  // is applied to finished outputs only.
  ClassSpec hereditary_core() const {
    if (kind == ClassKind::score_range) return tournament();
    if (kind == ClassKind::degree_range) return max_degree(hi);
    return *this;
  }

  bool has_final_filter() const { return !hereditary(); }

  std::string name() const;
  static std::optional<ClassSpec> parse(const std::string& text);

  auto operator<=>(const ClassSpec&) const = default;
};

bool in_class(const Graph& g, const ClassSpec& spec);

// Class test for a child formed from a parent already inside the hereditary
// core of spec; equivalent to in_class(child, spec.hereditary_core()).
bool extension_in_class(const Graph& parent, const Graph& child, const ExtensionPair& ext,
                        const ClassSpec& spec);

// Lower-bound part of the non-hereditary kinds, checked on finished outputs.
bool passes_final_filter(const Graph& g, const ClassSpec& spec);

// For score_range: can every vertex of this partial tournament still end up
// with a score in [lo, hi] after growing to target_n vertices?
bool score_range_feasible(const Graph& g, const ClassSpec& spec, int target_n);

}  // namespace recon

#endif
