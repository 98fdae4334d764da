#include "recon/graph.hpp"

#include <algorithm>
#include <charconv>

namespace recon {

int edge_count(const Graph& g) {
  int total = 0;
  for (int v = 0; v < g.order(); ++v) total += g.out_degree(v);
  return g.directed() ? total : total / 2;
}

int triangle_count(const Graph& g) {
  int n = g.order();
  int total = 0;
  if (g.directed()) {
    // Cyclic triangles u->v->w->u; each counted three times.
    for (int u = 0; u < n; ++u) {
      VertexSet into_u = g.in_neighbours(u);
      for_each_vertex(g.out_neighbours(u), [&](int v) {
        total += popcount(g.out_neighbours(v) & into_u);
      });
    }
    return total / 3;
  }
  for (int u = 0; u < n; ++u) {
    for_each_vertex(g.neighbours(u) & ~all_below(u + 1), [&](int v) {
      total += popcount(g.neighbours(u) & g.neighbours(v) & ~all_below(v + 1));
    });
  }
  return total;
}

int triangles_through(const Graph& g, int v) {
  int total = 0;
  if (g.directed()) {
    VertexSet into_v = g.in_neighbours(v);
    for_each_vertex(g.out_neighbours(v), [&](int u) {
      total += popcount(g.out_neighbours(u) & into_v);
    });
    return total;
  }
  VertexSet nb = g.neighbours(v);
  for_each_vertex(nb, [&](int u) { total += popcount(g.neighbours(u) & nb); });
  return total / 2;
}

int two_cycle_count(const Graph& g) {
  if (!g.directed()) return 0;
  int total = 0;
  for (int u = 0; u < g.order(); ++u)
    total += popcount(g.out_neighbours(u) & g.in_neighbours(u));
  return total / 2;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

std::vector<std::pair<int, int>> degree_pair_sequence(const Graph& g) {
  std::vector<std::pair<int, int>> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = {g.out_degree(v), g.in_degree(v)};
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool is_bipartite(const Graph& g) {
  int n = g.order();
  std::array<int, kMaxVertices> colour;
  colour.fill(-1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::array<std::uint8_t, kMaxVertices> queue;
    int head = 0, tail = 0;
    queue[tail++] = static_cast<std::uint8_t>(s);
    while (head < tail) {
      int u = queue[head++];
      bool bad = false;
      for_each_vertex(g.neighbours(u), [&](int w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue[tail++] = static_cast<std::uint8_t>(w);
        } else if (colour[w] == colour[u]) {
          bad = true;
        }
      });
      if (bad) return false;
    }
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    bool found = false;
    for_each_vertex(g.neighbours(u) & ~all_below(u + 1), [&](int v) {
      if (g.neighbours(u) & g.neighbours(v)) found = true;
    });
    if (found) return true;
  }
  return false;
}

bool has_four_cycle(const Graph& g) {
  // A 4-cycle exists iff some non-adjacent or adjacent pair has two common
  // neighbours.
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (popcount(g.neighbours(u) & g.neighbours(v)) >= 2) return true;
  return false;
}

namespace {

bool cycle_search(const Graph& g, int start, int current, VertexSet used, int remaining) {
  if (remaining == 0) return g.has_arc(current, start);
  VertexSet candidates = g.neighbours(current) & ~used & ~all_below(start);
  bool found = false;
  for_each_vertex(candidates, [&](int w) {
    if (!found && cycle_search(g, start, w, used | bit(w), remaining - 1)) found = true;
  });
  return found;
}

}  // namespace

bool has_k_cycle(const Graph& g, int k) {
  if (k < 3 || k > g.order()) return false;
  // Enumerate simple paths anchored at the cycle's minimum vertex.
  for (int s = 0; s + k <= g.order(); ++s)
    if (cycle_search(g, s, s, bit(s), k - 1)) return true;
  return false;
}

bool is_tournament(const Graph& g) {
  if (!g.directed()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_arc(u, v) == g.has_arc(v, u)) return false;
  return true;
}

std::string ClassSpec::name() const {
  switch (kind) {
    case ClassKind::graphs: return "graphs";
    case ClassKind::triangle_free: return "trianglefree";
    case ClassKind::girth5: return "girth5";
    case ClassKind::no_four_cycle: return "no4cycle";
    case ClassKind::bipartite: return "bipartite";
    case ClassKind::bipartite_girth6: return "bipartitegirth6";
    case ClassKind::max_degree: return "maxdeg=" + std::to_string(hi);
    case ClassKind::degree_range:
      return "degrange=" + std::to_string(lo) + ":" + std::to_string(hi);
    case ClassKind::digraphs: return "digraphs";
    case ClassKind::oriented: return "oriented";
    case ClassKind::tournament: return "tournament";
    case ClassKind::score_range:
      return "scorerange=" + std::to_string(lo) + ":" + std::to_string(hi);
  }
  return "?";
}

std::optional<ClassSpec> ClassSpec::parse(const std::string& text) {
  auto eq = text.find('=');
  std::string head = text.substr(0, eq);
  std::string args = eq == std::string::npos ? "" : text.substr(eq + 1);
  auto parse_int = [](const std::string& s) -> std::optional<int> {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return value;
  };
  auto parse_range = [&](const std::string& s) -> std::optional<std::pair<int, int>> {
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto a = parse_int(s.substr(0, colon));
    auto b = parse_int(s.substr(colon + 1));
    if (!a || !b || *a < 0 || *b < *a) return std::nullopt;
    return std::pair{*a, *b};
  };
  if (head == "graphs" && args.empty()) return graphs();
  if (head == "trianglefree" && args.empty()) return triangle_free();
  if (head == "girth5" && args.empty()) return girth5();
  if (head == "no4cycle" && args.empty()) return no_four_cycle();
  if (head == "bipartite" && args.empty()) return bipartite();
  if (head == "bipartitegirth6" && args.empty()) return bipartite_girth6();
  if (head == "maxdeg") {
    auto k = parse_int(args);
    if (k && *k >= 0) return max_degree(*k);
    return std::nullopt;
  }
  if (head == "degrange") {
    auto r = parse_range(args);
    if (r) return degree_range(r->first, r->second);
    return std::nullopt;
  }
  if (head == "digraphs" && args.empty()) return digraphs();
  if (head == "oriented" && args.empty()) return oriented();
  if (head == "tournament" && args.empty()) return tournament();
  if (head == "scorerange") {
    auto r = parse_range(args);
    if (r) return score_range(r->first, r->second);
    return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool max_degree_at_most(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > k) return false;
  return true;
}

bool two_cycle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    if (g.out_neighbours(u) & g.in_neighbours(u)) return false;
  return true;
}

}  // namespace

bool in_class(const Graph& g, const ClassSpec& spec) {
  if (g.directed() != spec.directed()) return false;
  switch (spec.kind) {
    case ClassKind::graphs:
      return true;
    case ClassKind::triangle_free:
      return !has_triangle(g);
    case ClassKind::girth5:
      return !has_triangle(g) && !has_four_cycle(g);
    case ClassKind::no_four_cycle:
      return !has_four_cycle(g);
    case ClassKind::bipartite:
      return is_bipartite(g);
    case ClassKind::bipartite_girth6:
      return is_bipartite(g) && !has_four_cycle(g);
    case ClassKind::max_degree:
      return max_degree_at_most(g, spec.hi);
    case ClassKind::degree_range: {
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < spec.lo || g.degree(v) > spec.hi) return false;
      return true;
    }
    case ClassKind::digraphs:
      return true;
    case ClassKind::oriented:
      return two_cycle_free(g);
    case ClassKind::tournament:
      return is_tournament(g);
    case ClassKind::score_range: {
      if (!is_tournament(g)) return false;
      for (int v = 0; v < g.order(); ++v)
        if (g.out_degree(v) < spec.lo || g.out_degree(v) > spec.hi) return false;
      return true;
    }
  }
  return false;
}

bool extension_in_class(const Graph& parent, const Graph& child, const ExtensionPair& ext,
                        const ClassSpec& spec) {
  // Any new triangle or short cycle passes through the new vertex, so the
  // local tests below are equivalent to the full predicate on the child.
  switch (spec.kind) {
    case ClassKind::graphs:
    case ClassKind::digraphs:
    case ClassKind::oriented:
    case ClassKind::tournament:
    case ClassKind::score_range:
      return true;
    case ClassKind::triangle_free: {
      bool ok = true;
      for_each_vertex(ext.out, [&](int w) {
        if (parent.neighbours(w) & ext.out) ok = false;
      });
      return ok;
    }
    case ClassKind::girth5: {
      bool ok = true;
      for_each_vertex(ext.out, [&](int w) {
        if (!ok) return;
        if (parent.neighbours(w) & ext.out) ok = false;  // triangle
        VertexSet others = ext.out & ~all_below(w + 1);
        for_each_vertex(others, [&](int x) {
          if (parent.neighbours(w) & parent.neighbours(x)) ok = false;  // 4-cycle
        });
      });
      return ok;
    }
    case ClassKind::no_four_cycle: {
      bool ok = true;
      for_each_vertex(ext.out, [&](int w) {
        if (!ok) return;
        VertexSet others = ext.out & ~all_below(w + 1);
        for_each_vertex(others, [&](int x) {
          if (parent.neighbours(w) & parent.neighbours(x)) ok = false;
        });
      });
      return ok;
    }
    case ClassKind::bipartite:
      return is_bipartite(child);
    case ClassKind::bipartite_girth6:
      return is_bipartite(child) && !has_four_cycle(child);
    case ClassKind::max_degree: {
      if (popcount(ext.out) > spec.hi) return false;
      bool ok = true;
      for_each_vertex(ext.out, [&](int w) {
        if (parent.degree(w) >= spec.hi) ok = false;
      });
      return ok;
    }
    case ClassKind::degree_range: {
      if (popcount(ext.out) > spec.hi) return false;
      bool ok = true;
      for_each_vertex(ext.out, [&](int w) {
        if (parent.degree(w) >= spec.hi) ok = false;
      });
      return ok;
    }
  }
  return false;
}

bool passes_final_filter(const Graph& g, const ClassSpec& spec) {
  switch (spec.kind) {
    case ClassKind::degree_range: {
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < spec.lo) return false;
      return true;
    }
    case ClassKind::score_range: {
      for (int v = 0; v < g.order(); ++v) {
        int s = g.out_degree(v);
        if (s < spec.lo || s > spec.hi) return false;
      }
      return true;
    }
    default:
      return true;
  }
}

bool score_range_feasible(const Graph& g, const ClassSpec& spec, int target_n) {
  if (spec.kind != ClassKind::score_range) return true;
  int slack = target_n - g.order();
  for (int v = 0; v < g.order(); ++v) {
    int s = g.out_degree(v);
    if (s > spec.hi || s + slack < spec.lo) return false;
  }
  return true;
}

}  // namespace recon
