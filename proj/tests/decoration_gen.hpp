#ifndef PROPKIT_TESTS_DECORATION_GEN_HPP
#define PROPKIT_TESTS_DECORATION_GEN_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "propkit/decoration.hpp"

namespace propkit::testgen {

/// Builds a random decoration with the given number of vertices by
/// matching producer ends (graph inputs, vertex out-ports) with
/// consumer ends (graph outputs, vertex in-ports) color by color.
/// Boundary sizes are chosen randomly within small bounds. Returns
/// nothing when the sampled matching closes a cycle.
inline std::optional<Decoration> random_decoration(const FreeMegagraph& mg,
                                                   std::mt19937& rng,
                                                   int vertices,
                                                   int max_boundary = 4) {
  if (mg.generator_count() == 0 && vertices > 0) return std::nullopt;
  std::vector<int> gens(vertices);
  for (int& g : gens)
    g = std::uniform_int_distribution<int>(0, mg.generator_count() - 1)(rng);

  struct End {
    int color, vertex, port;
  };
  std::vector<End> producers, consumers;
  for (int v = 0; v < vertices; ++v) {
    const Generator& g = mg.generator(gens[v]);
    for (int p = 0; p < g.target.size(); ++p)
      producers.push_back({g.target[p].index(), v, p});
    for (int p = 0; p < g.source.size(); ++p)
      consumers.push_back({g.source[p].index(), v, p});
  }
  // Balance with boundary slots: every unmatched producer may exit and
  // every unmatched consumer may enter; add a few free spares.
  int spare = std::uniform_int_distribution<int>(0, max_boundary)(rng);
  std::vector<int> spare_colors;
  for (int i = 0; i < spare; ++i)
    spare_colors.push_back(
        std::uniform_int_distribution<int>(0, mg.colors().size() - 1)(rng));

  // Pair producers with consumers of equal color with probability 1/2,
  // else route them to the boundary.
  std::vector<std::pair<int, int>> edges;
  std::vector<Color> ecolors;
  std::vector<std::vector<int>> in_ports(vertices), out_ports(vertices);
  for (int v = 0; v < vertices; ++v) {
    in_ports[v].assign(mg.generator(gens[v]).source.size(), -1);
    out_ports[v].assign(mg.generator(gens[v]).target.size(), -1);
  }
  std::vector<int> in_order, out_order;
  std::vector<char> consumed(consumers.size(), 0);

  auto add_edge = [&](int tail, int head, int color) {
    edges.emplace_back(tail, head);
    ecolors.push_back(mg.colors().color(color));
    return static_cast<int>(edges.size()) - 1;
  };

  for (size_t pi = 0; pi < producers.size(); ++pi) {
    const End& p = producers[pi];
    std::vector<int> candidates;
    for (size_t ci = 0; ci < consumers.size(); ++ci)
      if (!consumed[ci] && consumers[ci].color == p.color &&
          consumers[ci].vertex != p.vertex)
        candidates.push_back(static_cast<int>(ci));
    bool to_boundary =
        candidates.empty() || std::uniform_int_distribution<int>(0, 1)(rng);
    if (to_boundary) {
      int e = add_edge(p.vertex, kBoundary, p.color);
      out_ports[p.vertex][p.port] = e;
      out_order.push_back(e);
    } else {
      int ci = candidates[std::uniform_int_distribution<size_t>(
          0, candidates.size() - 1)(rng)];
      consumed[ci] = 1;
      int e = add_edge(p.vertex, consumers[ci].vertex, p.color);
      out_ports[p.vertex][p.port] = e;
      in_ports[consumers[ci].vertex][consumers[ci].port] = e;
    }
  }
  for (size_t ci = 0; ci < consumers.size(); ++ci) {
    if (consumed[ci]) continue;
    const End& c = consumers[ci];
    int e = add_edge(kBoundary, c.vertex, c.color);
    in_ports[c.vertex][c.port] = e;
    in_order.push_back(e);
  }
  for (int color : spare_colors) {
    int e = add_edge(kBoundary, kBoundary, color);
    in_order.push_back(e);
    out_order.push_back(e);
  }

  Graph graph(vertices, edges);
  if (!graph.is_acyclic()) return std::nullopt;
  Decoration d;
  d.graph = std::move(graph);
  d.edge_colors = std::move(ecolors);
  for (int v = 0; v < vertices; ++v) d.vertex_labels.push_back(mg.arrow(gens[v]));
  d.in_ports = std::move(in_ports);
  d.out_ports = std::move(out_ports);
  d.in_order = std::move(in_order);
  d.out_order = std::move(out_order);
  std::shuffle(d.in_order.begin(), d.in_order.end(), rng);
  std::shuffle(d.out_order.begin(), d.out_order.end(), rng);
  d.validate(mg);
  return d;
}

}  // namespace propkit::testgen

#endif
