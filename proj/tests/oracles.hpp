#ifndef PROPKIT_TESTS_ORACLES_HPP
#define PROPKIT_TESTS_ORACLES_HPP

#include <functional>
#include <vector>

#include "propkit/decoration.hpp"

namespace propkit::oracles {

/// Counts hom((c^n); (c)) of the free prop on one binary generator by
/// raw matching enumeration grouped by the definitional equivalence
/// relation. No canonical forms are involved anywhere.
inline size_t count_binary_hom_raw(const FreeMegagraph& mg, int n, int max_vertices) {
  std::vector<Decoration> all;
  Color c = mg.colors().color(0);
  for (int k = 0; k <= max_vertices; ++k) {
    // Producers: n graph inputs then one output port per vertex.
    // Consumers: one graph output then two input ports per vertex.
    int ne = n + k;
    if (ne != 1 + 2 * k) continue;
    std::vector<int> match(ne, -1);
    std::vector<char> used(ne, 0);
    std::function<void(int)> go = [&](int pi) {
      if (pi == ne) {
        std::vector<std::pair<int, int>> edges(ne);
        for (int e = 0; e < ne; ++e) {
          int tail = e < n ? kBoundary : e - n;
          int ci = match[e];
          int head = ci == 0 ? kBoundary : (ci - 1) / 2;
          edges[e] = {tail, head};
        }
        Graph g(k, edges);
        if (!g.is_acyclic()) return;
        Decoration d;
        d.graph = g;
        d.edge_colors.assign(ne, c);
        for (int v = 0; v < k; ++v) d.vertex_labels.push_back(mg.arrow(0));
        d.in_ports.assign(k, {});
        d.out_ports.assign(k, {});
        for (int e = 0; e < ne; ++e)
          if (e >= n) d.out_ports[e - n] = {e};
        for (int v = 0; v < k; ++v) {
          std::vector<std::pair<int, int>> ordered;
          for (int e = 0; e < ne; ++e)
            if (match[e] > 0 && (match[e] - 1) / 2 == v) ordered.emplace_back(match[e], e);
          std::sort(ordered.begin(), ordered.end());
          for (auto [ci, e] : ordered) d.in_ports[v].push_back(e);
        }
        for (int i = 0; i < n; ++i) d.in_order.push_back(i);
        for (int e = 0; e < ne; ++e)
          if (match[e] == 0) d.out_order.push_back(e);
        d.validate(mg);
        all.push_back(d);
        return;
      }
      for (int ci = 0; ci < ne; ++ci) {
        if (used[ci]) continue;
        used[ci] = 1;
        match[pi] = ci;
        go(pi + 1);
        used[ci] = 0;
      }
    };
    go(0);
  }
  std::vector<int> reps;
  for (size_t i = 0; i < all.size(); ++i) {
    bool fresh = true;
    for (int r : reps)
      if (related_by_automorphism(all[i], all[r], mg)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(static_cast<int>(i));
  }
  return reps.size();
}

}  // namespace propkit::oracles

#endif
