#include "propkit/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "propkit/error.hpp"

namespace propkit {

namespace {

int position_of(const std::vector<int>& xs, int value) {
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == value) return static_cast<int>(i);
  return -1;
}

Perm right_relating_perm(const std::vector<int>& seq, const std::vector<int>& base) {
  std::vector<int> img(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) img[i] = position_of(base, seq[i]);
  return Perm(std::move(img));
}

Perm left_relating_perm(const std::vector<int>& seq, const std::vector<int>& base) {
  return right_relating_perm(seq, base).inverse();
}

enum class SideShape { vertices, wires, mixed };

SideShape shape_of(const Decoration& d) {
  bool has_vertex = d.graph.vertex_count() > 0;
  bool has_wire = false;
  for (auto [s, t] : d.graph.edges())
    if (s == kBoundary && t == kBoundary) has_wire = true;
  if (has_vertex && has_wire) return SideShape::mixed;
  return has_vertex ? SideShape::vertices : SideShape::wires;
}

// A located match of a rule side inside a host decoration: the host
// vertices to delete, the interior host edges to delete, and for each
// boundary position of the side, which host edge carries the cut and on
// which end the host keeps its stub.
struct Match {
  std::vector<int> vertices;            // host vertices removed
  std::vector<char> interior_edge;      // host edges removed entirely
  std::vector<int> in_attach, out_attach;  // host edge per side boundary position
};

bool convex(const Graph& g, const std::vector<char>& in_set) {
  // No directed path may leave the set and re-enter it.
  int nv = g.vertex_count();
  std::vector<char> from(nv, 0), to(nv, 0);
  std::vector<int> stack;
  for (auto [s, t] : g.edges())
    if (s != kBoundary && t != kBoundary && in_set[s] && !in_set[t] && !from[t]) {
      from[t] = 1;
      stack.push_back(t);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [s, t] : g.edges())
      if (s == v && t != kBoundary && !in_set[t] && !from[t]) {
        from[t] = 1;
        stack.push_back(t);
      }
  }
  for (auto [s, t] : g.edges())
    if (s != kBoundary && t != kBoundary && from[s] && in_set[t]) return false;
  return true;
}

// Matches a side with vertices on every convex vertex subset carrying an
// isomorphic decorated subgraph (boundary orders free, labels matched in
// the port-order gauge).
void find_vertex_matches(const Decoration& side, const Decoration& host,
                         const FreeMegagraph& mg, std::vector<Match>& out) {
  int hv = host.graph.vertex_count();
  int sv = side.graph.vertex_count();
  if (sv > hv) return;
  std::vector<int> pick;
  std::vector<char> chosen(hv, 0);
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pick.size()) == sv) {
      if (!convex(host.graph, chosen)) return;
      // Admissible closure: all host edges incident to the picked set.
      std::vector<int> sub_edges;
      std::vector<char> incident(host.graph.edge_count(), 0);
      for (int e = 0; e < host.graph.edge_count(); ++e) {
        int s = host.graph.tail(e), t = host.graph.head(e);
        if ((s != kBoundary && chosen[s]) || (t != kBoundary && chosen[t])) {
          incident[e] = 1;
          sub_edges.push_back(e);
        }
      }
      Subgraph sg(host.graph, sub_edges, pick);
      std::vector<int> emap, vmap;
      Graph sub = sg.materialize(&emap, &vmap);
      std::vector<int> back_edge(sub.edge_count()), back_vertex(sub.vertex_count());
      for (int e = 0; e < host.graph.edge_count(); ++e)
        if (emap[e] >= 0) back_edge[emap[e]] = e;
      for (int v = 0; v < hv; ++v)
        if (vmap[v] >= 0) back_vertex[vmap[v]] = v;

      for (const GraphIso& iso : enumerate_isomorphisms(side.graph, sub)) {
        bool ok = true;
        for (int e = 0; e < side.graph.edge_count() && ok; ++e)
          ok = side.edge_colors[e] == host.edge_colors[back_edge[iso.edge_map[e]]];
        for (int v = 0; v < sv && ok; ++v) {
          int w = back_vertex[iso.vertex_map[v]];
          const FreeArrow& xs = side.vertex_labels[v];
          const FreeArrow& xh = host.vertex_labels[w];
          if (xs.gen != xh.gen) {
            ok = false;
            break;
          }
          auto mapped = [&](const std::vector<int>& xs_ports) {
            std::vector<int> ys(xs_ports.size());
            for (size_t i = 0; i < xs_ports.size(); ++i)
              ys[i] = back_edge[iso.edge_map[xs_ports[i]]];
            return ys;
          };
          Perm sigma = left_relating_perm(mapped(side.out_ports[v]), host.out_ports[w]);
          Perm tau = right_relating_perm(mapped(side.in_ports[v]), host.in_ports[w]);
          ok = xs.left == sigma * xh.left && xs.right == xh.right * tau;
        }
        if (!ok) continue;
        Match m;
        m.vertices = pick;
        m.interior_edge.assign(host.graph.edge_count(), 0);
        for (int e = 0; e < host.graph.edge_count(); ++e) {
          if (!incident[e]) continue;
          int s = host.graph.tail(e), t = host.graph.head(e);
          bool s_in = s != kBoundary && chosen[s];
          bool t_in = t != kBoundary && chosen[t];
          if (s_in && t_in) m.interior_edge[e] = 1;
        }
        for (int e_side : side.in_order)
          m.in_attach.push_back(back_edge[iso.edge_map[e_side]]);
        for (int e_side : side.out_order)
          m.out_attach.push_back(back_edge[iso.edge_map[e_side]]);
        out.push_back(std::move(m));
      }
      return;
    }
    for (int v = start; v < hv; ++v) {
      pick.push_back(v);
      chosen[v] = 1;
      choose(v + 1);
      chosen[v] = 0;
      pick.pop_back();
    }
  };
  (void)mg;
  choose(0);
}

// Matches a vertex-free side (a bundle of wires) on ordered antichains
// of like-colored host edges.
void find_wire_matches(const Decoration& side, const Decoration& host,
                       std::vector<Match>& out) {
  int k = static_cast<int>(side.in_order.size());
  if (k == 0) return;  // nothing to cut
  int he = host.graph.edge_count();
  // path_between[a][b]: head of a reaches tail of b through vertices.
  int hv = host.graph.vertex_count();
  std::vector<std::vector<char>> reach(hv, std::vector<char>(hv, 0));
  for (int v = 0; v < hv; ++v) {
    reach[v][v] = 1;
    for (int u : host.graph.descendants(v)) reach[v][u] = 1;
  }
  auto edge_reaches = [&](int a, int b) {
    int ha = host.graph.head(a), tb = host.graph.tail(b);
    if (ha == kBoundary || tb == kBoundary) return false;
    return reach[ha][tb] != 0;
  };

  std::vector<int> pick(k, -1);
  std::vector<char> used(he, 0);
  std::function<void(int)> choose = [&](int i) {
    if (i == k) {
      Match m;
      m.interior_edge.assign(he, 0);
      m.in_attach = pick;
      m.out_attach.resize(side.out_order.size());
      for (size_t j = 0; j < side.out_order.size(); ++j) {
        int pos = position_of(side.in_order, side.out_order[j]);
        m.out_attach[j] = pick[pos];
      }
      out.push_back(std::move(m));
      return;
    }
    for (int e = 0; e < he; ++e) {
      if (used[e]) continue;
      if (!(host.edge_colors[e] == side.edge_colors[side.in_order[i]])) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = !edge_reaches(pick[j], e) && !edge_reaches(e, pick[j]);
      if (!ok) continue;
      used[e] = 1;
      pick[i] = e;
      choose(i + 1);
      used[e] = 0;
    }
  };
  choose(0);
}

// Cuts the match out of the host and splices the replacement in.
Decoration splice(const Decoration& host, const Match& m, const Decoration& repl) {
  int hv = host.graph.vertex_count(), he = host.graph.edge_count();
  std::vector<char> vgone(hv, 0);
  for (int v : m.vertices) vgone[v] = 1;
  std::vector<char> cut(he, 0);
  for (int e : m.in_attach) cut[e] = 1;
  for (int e : m.out_attach) cut[e] = 1;

  // New ids: kept host edges first, then replacement edges.
  std::vector<int> kept_id(he, -1);
  int next = 0;
  for (int e = 0; e < he; ++e)
    if (!m.interior_edge[e] && !cut[e]) kept_id[e] = next++;
  int repl_base = next;
  auto repl_id = [&](int e) { return repl_base + e; };

  // For a cut host edge, the tail side survives at the replacement's
  // matching in position, the head side at its out position.
  std::vector<int> tail_ref(he, -1), head_ref(he, -1);
  for (int e = 0; e < he; ++e)
    if (kept_id[e] >= 0) tail_ref[e] = head_ref[e] = kept_id[e];
  for (size_t i = 0; i < m.in_attach.size(); ++i)
    tail_ref[m.in_attach[i]] = repl_id(repl.in_order[i]);
  for (size_t j = 0; j < m.out_attach.size(); ++j)
    head_ref[m.out_attach[j]] = repl_id(repl.out_order[j]);

  // Vertices: kept host vertices first, then replacement vertices.
  std::vector<int> vkept(hv, -1);
  int vnext = 0;
  for (int v = 0; v < hv; ++v)
    if (!vgone[v]) vkept[v] = vnext++;
  int vrepl_base = vnext;

  int ne = repl_base + repl.graph.edge_count();
  std::vector<std::pair<int, int>> edges(ne, {kBoundary, kBoundary});
  std::vector<Color> colors(ne);
  for (int e = 0; e < he; ++e) {
    if (kept_id[e] < 0) continue;
    int s = host.graph.tail(e), t = host.graph.head(e);
    edges[kept_id[e]] = {s == kBoundary ? kBoundary : vkept[s],
                         t == kBoundary ? kBoundary : vkept[t]};
    colors[kept_id[e]] = host.edge_colors[e];
  }
  for (int e = 0; e < repl.graph.edge_count(); ++e) {
    int s = repl.graph.tail(e), t = repl.graph.head(e);
    int id = repl_id(e);
    // Boundary ends of replacement edges attach to the host stubs.
    int pos_in = position_of(repl.in_order, e);
    int pos_out = position_of(repl.out_order, e);
    int tail = s != kBoundary ? vrepl_base + s
               : pos_in >= 0 ? (host.graph.tail(m.in_attach[pos_in]) == kBoundary
                                    ? kBoundary
                                    : vkept[host.graph.tail(m.in_attach[pos_in])])
                             : kBoundary;
    int head = t != kBoundary ? vrepl_base + t
               : pos_out >= 0 ? (host.graph.head(m.out_attach[pos_out]) == kBoundary
                                     ? kBoundary
                                     : vkept[host.graph.head(m.out_attach[pos_out])])
                              : kBoundary;
    edges[id] = {tail, head};
    colors[id] = repl.edge_colors[e];
  }

  Decoration out;
  out.graph = Graph(vnext + repl.graph.vertex_count(), edges);
  out.edge_colors = std::move(colors);
  out.vertex_labels.resize(out.graph.vertex_count());
  out.in_ports.resize(out.graph.vertex_count());
  out.out_ports.resize(out.graph.vertex_count());
  for (int v = 0; v < hv; ++v) {
    if (vkept[v] < 0) continue;
    out.vertex_labels[vkept[v]] = host.vertex_labels[v];
    std::vector<int> ins, outs;
    for (int e : host.in_ports[v]) ins.push_back(head_ref[e]);
    for (int e : host.out_ports[v]) outs.push_back(tail_ref[e]);
    out.in_ports[vkept[v]] = std::move(ins);
    out.out_ports[vkept[v]] = std::move(outs);
  }
  for (int v = 0; v < repl.graph.vertex_count(); ++v) {
    out.vertex_labels[vrepl_base + v] = repl.vertex_labels[v];
    std::vector<int> ins, outs;
    for (int e : repl.in_ports[v]) ins.push_back(repl_id(e));
    for (int e : repl.out_ports[v]) outs.push_back(repl_id(e));
    out.in_ports[vrepl_base + v] = std::move(ins);
    out.out_ports[vrepl_base + v] = std::move(outs);
  }
  for (int e : host.in_order) out.in_order.push_back(tail_ref[e]);
  for (int e : host.out_order) out.out_order.push_back(head_ref[e]);
  return out;
}

}  // namespace

RewriteSystem::RewriteSystem(FreePropPtr prop,
                             std::vector<std::pair<Morphism, Morphism>> rules)
    : prop_(std::move(prop)), rules_(std::move(rules)) {
  for (const auto& [l, r] : rules_) {
    require(l.source() == r.source() && l.target() == r.target(),
            "rewrite rule sides must have equal profiles");
  }
}

std::vector<Morphism> RewriteSystem::neighbors(const Morphism& m, bool* complete) const {
  if (complete) *complete = true;
  const Decoration& host = prop_->canonical(m).dec;
  std::set<Morphism> out;
  for (const auto& [l, r] : rules_) {
    for (int dir = 0; dir < 2; ++dir) {
      const Morphism& from = dir == 0 ? l : r;
      const Morphism& to = dir == 0 ? r : l;
      const Decoration& side = prop_->canonical(from).dec;
      const Decoration& repl = prop_->canonical(to).dec;
      std::vector<Match> matches;
      switch (shape_of(side)) {
        case SideShape::vertices:
          find_vertex_matches(side, host, prop_->mega(), matches);
          break;
        case SideShape::wires:
          find_wire_matches(side, host, matches);
          break;
        case SideShape::mixed:
          if (complete) *complete = false;
          continue;
      }
      for (const Match& match : matches) {
        Decoration spliced = splice(host, match, repl);
        if (!spliced.graph.is_acyclic()) continue;
        out.insert(prop_->from_decoration(spliced));
      }
    }
  }
  return std::vector<Morphism>(out.begin(), out.end());
}

WordSearchResult word_search(const RewriteSystem& rs, const Morphism& a,
                             const Morphism& b, const WordSearchOptions& options) {
  WordSearchResult result;
  if (a.source() != b.source() || a.target() != b.target()) {
    result.verdict = WordVerdict::distinct;
    result.exhausted = true;
    return result;
  }
  if (a.key() == b.key()) {
    result.verdict = WordVerdict::equal;
    result.exhausted = true;
    return result;
  }

  int base_v = std::max(rs.prop().canonical(a).dec.graph.vertex_count(),
                        rs.prop().canonical(b).dec.graph.vertex_count());
  int vcap = base_v + options.max_extra_vertices;

  // Bidirectional BFS; side 0 explores from a, side 1 from b.
  std::map<std::string, int> seen;  // key -> side
  std::vector<Morphism> frontier[2] = {{a}, {b}};
  seen[a.key()] = 0;
  seen[b.key()] = 1;
  bool truncated = false;

  for (int depth = 0; depth < options.max_depth; ++depth) {
    bool any = false;
    for (int side = 0; side < 2; ++side) {
      std::vector<Morphism> next;
      for (const Morphism& cur : frontier[side]) {
        bool complete = true;
        for (const Morphism& nb : rs.neighbors(cur, &complete)) {
          ++result.nodes;
          if (result.nodes > options.max_nodes) truncated = true;
          if (truncated) break;
          if (rs.prop().canonical(nb).dec.graph.vertex_count() > vcap) {
            truncated = true;
            continue;
          }
          auto it = seen.find(nb.key());
          if (it != seen.end()) {
            if (it->second != side) {
              result.verdict = WordVerdict::equal;
              return result;
            }
            continue;
          }
          seen[nb.key()] = side;
          next.push_back(nb);
          any = true;
        }
        if (!complete) truncated = true;
        if (truncated) break;
      }
      frontier[side] = std::move(next);
    }
    if (!any) {
      // Both classes exhausted without meeting.
      if (!truncated) {
        result.verdict = WordVerdict::distinct;
        result.exhausted = true;
      }
      return result;
    }
  }
  return result;
}

}  // namespace propkit
