#include "propkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  require(vertex_count_ >= 0, "negative vertex count");
  for (auto [s, t] : edges_) {
    require(s >= kBoundary && s < vertex_count_, "edge tail out of range");
    require(t >= kBoundary && t < vertex_count_, "edge head out of range");
  }
}

std::vector<int> Graph::in_edges(int v) const {
  require(v >= 0 && v < vertex_count_, "unknown vertex");
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].second == v) out.push_back(e);
  return out;
}

std::vector<int> Graph::out_edges(int v) const {
  require(v >= 0 && v < vertex_count_, "unknown vertex");
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].first == v) out.push_back(e);
  return out;
}

std::vector<int> Graph::graph_inputs() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].first == kBoundary) out.push_back(e);
  return out;
}

std::vector<int> Graph::graph_outputs() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].second == kBoundary) out.push_back(e);
  return out;
}

bool Graph::is_acyclic() const {
  // Kahn's algorithm over vertex-to-vertex edges; loops count as cycles.
  std::vector<int> indeg(vertex_count_, 0);
  for (auto [s, t] : edges_)
    if (s != kBoundary && t != kBoundary) ++indeg[t];
  std::vector<int> stack;
  for (int v = 0; v < vertex_count_; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto [s, t] : edges_)
      if (s == v && t != kBoundary && --indeg[t] == 0) stack.push_back(t);
  }
  return seen == vertex_count_;
}

std::vector<int> Graph::descendants(int v) const {
  std::vector<char> mark(vertex_count_, 0);
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [s, t] : edges_)
      if (s == u && t != kBoundary && !mark[t]) {
        mark[t] = 1;
        stack.push_back(t);
      }
  }
  std::vector<int> out;
  for (int u = 0; u < vertex_count_; ++u)
    if (mark[u] && u != v) out.push_back(u);
  return out;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  auto end = [](int x) { return x == kBoundary ? std::string("*") : std::to_string(x); };
  for (int e = 0; e < edge_count(); ++e)
    os << "edge " << e << ' ' << end(edges_[e].first) << ' ' << end(edges_[e].second) << '\n';
  return os.str();
}

Subgraph::Subgraph(Graph parent_, std::vector<int> edges, std::vector<int> vertices)
    : parent(std::move(parent_)),
      edge_in(parent.edge_count(), 0),
      vertex_in(parent.vertex_count(), 0) {
  for (int e : edges) {
    require(e >= 0 && e < parent.edge_count(), "subgraph edge out of range");
    edge_in[e] = 1;
  }
  for (int v : vertices) {
    require(v >= 0 && v < parent.vertex_count(), "subgraph vertex out of range");
    vertex_in[v] = 1;
  }
}

Subgraph Subgraph::full(const Graph& g) {
  Subgraph s;
  s.parent = g;
  s.edge_in.assign(g.edge_count(), 1);
  s.vertex_in.assign(g.vertex_count(), 1);
  return s;
}

std::vector<int> Subgraph::edge_list() const {
  std::vector<int> out;
  for (int e = 0; e < parent.edge_count(); ++e)
    if (edge_in[e]) out.push_back(e);
  return out;
}

std::vector<int> Subgraph::vertex_list() const {
  std::vector<int> out;
  for (int v = 0; v < parent.vertex_count(); ++v)
    if (vertex_in[v]) out.push_back(v);
  return out;
}

int Subgraph::tail(int e) const {
  int s = parent.tail(e);
  return (s != kBoundary && vertex_in[s]) ? s : kBoundary;
}

int Subgraph::head(int e) const {
  int t = parent.head(e);
  return (t != kBoundary && vertex_in[t]) ? t : kBoundary;
}

std::vector<int> Subgraph::inputs() const {
  std::vector<int> out;
  for (int e = 0; e < parent.edge_count(); ++e)
    if (edge_in[e] && tail(e) == kBoundary) out.push_back(e);
  return out;
}

std::vector<int> Subgraph::outputs() const {
  std::vector<int> out;
  for (int e = 0; e < parent.edge_count(); ++e)
    if (edge_in[e] && head(e) == kBoundary) out.push_back(e);
  return out;
}

Graph Subgraph::materialize(std::vector<int>* edge_map,
                            std::vector<int>* vertex_map) const {
  std::vector<int> emap(parent.edge_count(), -1), vmap(parent.vertex_count(), -1);
  int nv = 0;
  for (int v = 0; v < parent.vertex_count(); ++v)
    if (vertex_in[v]) vmap[v] = nv++;
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < parent.edge_count(); ++e)
    if (edge_in[e]) {
      emap[e] = static_cast<int>(edges.size());
      int s = tail(e), t = head(e);
      edges.emplace_back(s == kBoundary ? kBoundary : vmap[s],
                         t == kBoundary ? kBoundary : vmap[t]);
    }
  if (edge_map) *edge_map = std::move(emap);
  if (vertex_map) *vertex_map = std::move(vmap);
  return Graph(nv, std::move(edges));
}

bool is_admissible(const Subgraph& s) {
  for (int e = 0; e < s.parent.edge_count(); ++e) {
    int a = s.parent.tail(e), b = s.parent.head(e);
    bool incident = (a != kBoundary && s.has_vertex(a)) ||
                    (b != kBoundary && s.has_vertex(b));
    if (incident && !s.has_edge(e)) return false;
  }
  return true;
}

bool is_decomposition(const Decomposition& d) {
  int ne = d.parent.edge_count(), nv = d.parent.vertex_count();
  std::vector<int> vcount(nv, 0);
  std::vector<char> ecover(ne, 0);
  for (const Subgraph& part : d.parts) {
    if (!(part.parent == d.parent)) return false;
    if (!is_admissible(part)) return false;
    for (int v = 0; v < nv; ++v)
      if (part.has_vertex(v)) ++vcount[v];
    for (int e = 0; e < ne; ++e)
      if (part.has_edge(e)) ecover[e] = 1;
  }
  for (int v = 0; v < nv; ++v)
    if (vcount[v] != 1) return false;
  for (int e = 0; e < ne; ++e)
    if (!ecover[e]) return false;
  return true;
}

bool is_vertical_decomposition(const Decomposition& d) {
  if (!is_decomposition(d) || d.parts.empty()) return false;
  Subgraph whole = Subgraph::full(d.parent);
  if (d.parts.front().outputs() != whole.outputs()) return false;
  if (d.parts.back().inputs() != whole.inputs()) return false;
  for (size_t i = 1; i < d.parts.size(); ++i)
    if (d.parts[i].outputs() != d.parts[i - 1].inputs()) return false;
  return true;
}

std::pair<Subgraph, Subgraph> restrict_vertical(const Subgraph& g0,
                                                const Subgraph& g1,
                                                const Subgraph& g2) {
  require(g0.parent == g1.parent && g1.parent == g2.parent,
          "restrict_vertical: parent mismatch");
  require(is_admissible(g0), "restrict_vertical: subgraph not admissible");
  require(is_vertical_decomposition({g0.parent, {g1, g2}}),
          "restrict_vertical: not a vertical decomposition");
  int ne = g0.parent.edge_count(), nv = g0.parent.vertex_count();
  Subgraph g01, g02;
  g01.parent = g02.parent = g0.parent;
  g01.edge_in.assign(ne, 0);
  g02.edge_in.assign(ne, 0);
  g01.vertex_in.assign(nv, 0);
  g02.vertex_in.assign(nv, 0);
  for (int v = 0; v < nv; ++v) {
    g01.vertex_in[v] = g0.has_vertex(v) && g1.has_vertex(v);
    g02.vertex_in[v] = g0.has_vertex(v) && g2.has_vertex(v);
  }
  // E^{01} = (E^0 n E^1) u out(G^0), E^{02} = (E^0 n E^2) u in(G^0).
  for (int e : g0.outputs()) g01.edge_in[e] = 1;
  for (int e : g0.inputs()) g02.edge_in[e] = 1;
  for (int e = 0; e < ne; ++e) {
    if (g0.has_edge(e) && g1.has_edge(e)) g01.edge_in[e] = 1;
    if (g0.has_edge(e) && g2.has_edge(e)) g02.edge_in[e] = 1;
  }
  return {g01, g02};
}

Decomposition intersect_decompositions(const Decomposition& a,
                                       const Decomposition& b) {
  require(a.parent == b.parent, "intersect_decompositions: parent mismatch");
  Decomposition out;
  out.parent = a.parent;
  for (const Subgraph& ga : a.parts)
    for (const Subgraph& gb : b.parts) {
      Subgraph s;
      s.parent = a.parent;
      s.edge_in.resize(a.parent.edge_count());
      s.vertex_in.resize(a.parent.vertex_count());
      for (int e = 0; e < a.parent.edge_count(); ++e)
        s.edge_in[e] = ga.has_edge(e) && gb.has_edge(e);
      for (int v = 0; v < a.parent.vertex_count(); ++v)
        s.vertex_in[v] = ga.has_vertex(v) && gb.has_vertex(v);
      out.parts.push_back(std::move(s));
    }
  return out;
}

namespace {

// Backtracks over vertex bijections, then matches edges respecting the
// induced endpoint constraints. Parallel edges make the edge map
// non-unique, so edges are matched by their own backtracking pass.
void match_edges(const Graph& g, const Graph& h, const std::vector<int>& vmap,
                 std::vector<int>& emap, std::vector<char>& used, int e,
                 std::vector<GraphIso>& out) {
  if (e == g.edge_count()) {
    out.push_back(GraphIso{emap, vmap});
    return;
  }
  int s = g.tail(e), t = g.head(e);
  int ws = s == kBoundary ? kBoundary : vmap[s];
  int wt = t == kBoundary ? kBoundary : vmap[t];
  for (int f = 0; f < h.edge_count(); ++f) {
    if (used[f] || h.tail(f) != ws || h.head(f) != wt) continue;
    used[f] = 1;
    emap[e] = f;
    match_edges(g, h, vmap, emap, used, e + 1, out);
    used[f] = 0;
  }
}

void match_vertices(const Graph& g, const Graph& h, std::vector<int>& vmap,
                    std::vector<char>& used, int v, std::vector<GraphIso>& out) {
  if (v == g.vertex_count()) {
    std::vector<int> emap(g.edge_count(), -1);
    std::vector<char> eused(h.edge_count(), 0);
    match_edges(g, h, vmap, emap, eused, 0, out);
    return;
  }
  for (int w = 0; w < h.vertex_count(); ++w) {
    if (used[w]) continue;
    if (g.in_edges(v).size() != h.in_edges(w).size()) continue;
    if (g.out_edges(v).size() != h.out_edges(w).size()) continue;
    used[w] = 1;
    vmap[v] = w;
    match_vertices(g, h, vmap, used, v + 1, out);
    used[w] = 0;
  }
}

}  // namespace

std::vector<GraphIso> enumerate_isomorphisms(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return {};
  std::vector<GraphIso> out;
  std::vector<int> vmap(g.vertex_count(), -1);
  std::vector<char> used(h.vertex_count(), 0);
  match_vertices(g, h, vmap, used, 0, out);
  return out;
}

}  // namespace propkit
