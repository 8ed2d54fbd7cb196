#ifndef PROPKIT_GRAPH_HPP
#define PROPKIT_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace propkit {

/// Endpoint marker for half-edges: an edge end that attaches to no
/// vertex is kBoundary (the paper's "*").
constexpr int kBoundary = -1;

/// A finite directed graph with half-edges. Edges and vertices are
/// dense indices; an edge stores (tail, head) where either end may be
/// kBoundary. Free edges (both ends kBoundary) are allowed; directed
/// cycles through vertices, including loops, are not.
class Graph {
public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int tail(int e) const { return edges_[e].first; }
  int head(int e) const { return edges_[e].second; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// in(v) = head^{-1}(v), out(v) = tail^{-1}(v), ascending edge ids.
  std::vector<int> in_edges(int v) const;
  std::vector<int> out_edges(int v) const;

  /// in(G) = edges with boundary tail; out(G) = boundary head. A free
  /// edge belongs to both.
  std::vector<int> graph_inputs() const;
  std::vector<int> graph_outputs() const;

  bool is_acyclic() const;
  /// Vertices reachable from v by directed edges (v excluded).
  std::vector<int> descendants(int v) const;

  bool operator==(const Graph& rhs) const = default;

  /// Lines "edge <id> <tail|*> <head|*>".
  std::string to_string() const;

private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// A subgraph is a pair of subsets of the parent's edges and vertices.
/// Induced endpoint maps send an endpoint to the boundary exactly when
/// it lies outside the vertex subset.
struct Subgraph {
  Graph parent;
  std::vector<char> edge_in;    // size parent.edge_count()
  std::vector<char> vertex_in;  // size parent.vertex_count()

  Subgraph() = default;
  Subgraph(Graph parent, std::vector<int> edges, std::vector<int> vertices);
  static Subgraph full(const Graph& g);

  bool has_edge(int e) const { return edge_in[e] != 0; }
  bool has_vertex(int v) const { return vertex_in[v] != 0; }
  std::vector<int> edge_list() const;
  std::vector<int> vertex_list() const;

  /// Induced tail/head within the subgraph (kBoundary if outside).
  int tail(int e) const;
  int head(int e) const;

  /// Boundary edge sets of the induced graph, ascending.
  std::vector<int> inputs() const;
  std::vector<int> outputs() const;

  /// The subgraph as a standalone Graph; also returns the edge and
  /// vertex index maps parent -> standalone (or -1).
  Graph materialize(std::vector<int>* edge_map = nullptr,
                    std::vector<int>* vertex_map = nullptr) const;
};

/// An ordered list of subgraphs of one parent. Validity (admissible
/// parts, disjoint covering vertex sets, covering edge sets) is checked
/// by is_decomposition, not by construction.
struct Decomposition {
  Graph parent;
  std::vector<Subgraph> parts;
};

/// True iff every parent edge incident to a vertex of the subgraph lies
/// in the subgraph's edge set.
bool is_admissible(const Subgraph& s);

bool is_decomposition(const Decomposition& d);

/// Checks out(G^1) = out(G), in(G^n) = in(G), and out(G^i) = in(G^{i-1})
/// as edge sets.
bool is_vertical_decomposition(const Decomposition& d);

/// Restricts a two-part vertical decomposition (g1, g2) of the parent
/// to an admissible subgraph g0, returning the induced vertical
/// decomposition (g01, g02) of g0.
std::pair<Subgraph, Subgraph> restrict_vertical(const Subgraph& g0,
                                                const Subgraph& g1,
                                                const Subgraph& g2);

/// Pairwise intersections G^i n H^j in lexicographic order; the result
/// is again a decomposition, possibly with empty parts.
Decomposition intersect_decompositions(const Decomposition& a,
                                       const Decomposition& b);

/// A pair of bijections (edge map, vertex map) witnessing a graph
/// isomorphism: boundary ends map to boundary ends and both squares
/// with tail/head commute.
struct GraphIso {
  std::vector<int> edge_map;    // size g.edge_count()
  std::vector<int> vertex_map;  // size g.vertex_count()
};

/// All isomorphisms from g to h in a deterministic order.
std::vector<GraphIso> enumerate_isomorphisms(const Graph& g, const Graph& h);

}  // namespace propkit

#endif
