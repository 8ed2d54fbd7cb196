#include "propkit/decoration.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

namespace {

int position_of(const std::vector<int>& xs, int value) {
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == value) return static_cast<int>(i);
  return -1;
}

// Relates two orderings of one edge set: seq = base . tau, i.e.
// seq[i] = base[tau(i)].
Perm right_relating_perm(const std::vector<int>& seq,
                         const std::vector<int>& base) {
  std::vector<int> img(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    int p = position_of(base, seq[i]);
    require(p >= 0, "port orders do not enumerate the same edge set");
    img[i] = p;
  }
  return Perm(std::move(img));
}

// seq = sigma . base, i.e. seq[k] = base[sigma^{-1}(k)].
Perm left_relating_perm(const std::vector<int>& seq,
                        const std::vector<int>& base) {
  return right_relating_perm(seq, base).inverse();
}

}  // namespace

ColorList Decoration::source(const FreeMegagraph&) const {
  std::vector<Color> cs;
  cs.reserve(in_order.size());
  for (int e : in_order) cs.push_back(edge_colors[e]);
  return ColorList(std::move(cs));
}

ColorList Decoration::target(const FreeMegagraph&) const {
  std::vector<Color> cs;
  cs.reserve(out_order.size());
  for (int e : out_order) cs.push_back(edge_colors[e]);
  return ColorList(std::move(cs));
}

void Decoration::validate(const FreeMegagraph& mg) const {
  int nv = graph.vertex_count(), ne = graph.edge_count();
  require(static_cast<int>(edge_colors.size()) == ne, "decoration: edge color count mismatch");
  require(static_cast<int>(vertex_labels.size()) == nv, "decoration: vertex label count mismatch");
  require(static_cast<int>(in_ports.size()) == nv && static_cast<int>(out_ports.size()) == nv,
          "decoration: port table size mismatch");
  require(graph.is_acyclic(), "decoration: underlying graph has a cycle");
  for (const Color& c : edge_colors)
    require(c.owner() == mg.colors(), "decoration: edge color from a foreign set");
  for (int v = 0; v < nv; ++v) {
    std::vector<int> ins = graph.in_edges(v), outs = graph.out_edges(v);
    std::vector<int> pin = in_ports[v], pout = out_ports[v];
    std::sort(pin.begin(), pin.end());
    std::sort(pout.begin(), pout.end());
    require(pin == ins && pout == outs, "decoration: port orders must enumerate in(v)/out(v)");
    ColorList s = mg.source(vertex_labels[v]), t = mg.target(vertex_labels[v]);
    require(s.size() == static_cast<int>(in_ports[v].size()),
            "decoration: arrow in-arity does not match vertex in-degree");
    require(t.size() == static_cast<int>(out_ports[v].size()),
            "decoration: arrow out-arity does not match vertex out-degree");
    for (int i = 0; i < s.size(); ++i)
      require(s[i] == edge_colors[in_ports[v][i]],
              "decoration: source colors disagree with port colors");
    for (int k = 0; k < t.size(); ++k)
      require(t[k] == edge_colors[out_ports[v][k]],
              "decoration: target colors disagree with port colors");
  }
  std::vector<int> gin = graph.graph_inputs(), gout = graph.graph_outputs();
  std::vector<int> sin = in_order, sout = out_order;
  std::sort(sin.begin(), sin.end());
  std::sort(sout.begin(), sout.end());
  require(sin == gin && sout == gout, "decoration: boundary orders must enumerate in(G)/out(G)");
}

std::string Decoration::to_string(const FreeMegagraph& mg) const {
  std::ostringstream os;
  auto end = [](int x) { return x == kBoundary ? std::string("*") : std::to_string(x); };
  auto list = [](const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  os << "graph " << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (int e = 0; e < graph.edge_count(); ++e)
    os << "edge " << e << ' ' << end(graph.tail(e)) << ' ' << end(graph.head(e))
       << ' ' << edge_colors[e].name() << '\n';
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const FreeArrow& x = vertex_labels[v];
    os << "vertex " << v << ' ' << mg.generator(x.gen).name << ' '
       << x.left.to_string() << ' ' << x.right.to_string()
       << " in=" << list(in_ports[v]) << " out=" << list(out_ports[v]) << '\n';
  }
  os << "in " << list(in_order) << '\n';
  os << "out " << list(out_order) << '\n';
  return os.str();
}

namespace {

// Changes every vertex to the sorted-port gauge under the current edge
// ids: ports ascend, labels transported by the bimodule action.
void gauge_normalize(Decoration& d) {
  for (int v = 0; v < d.graph.vertex_count(); ++v) {
    std::vector<int> sin = d.in_ports[v], sout = d.out_ports[v];
    std::sort(sin.begin(), sin.end());
    std::sort(sout.begin(), sout.end());
    Perm tau = right_relating_perm(d.in_ports[v], sin);
    Perm u = left_relating_perm(d.out_ports[v], sout);
    // in(v) = sorted . tau and out(v) = u . sorted give the transported
    // label u^{-1} . D1(v) . tau^{-1} ... with u = sigma the label in the
    // sorted gauge is (sigma^{-1} L, g, R tau^{-1}).
    FreeArrow& x = d.vertex_labels[v];
    x.left = u.inverse() * x.left;
    x.right = x.right * tau.inverse();
    d.in_ports[v] = std::move(sin);
    d.out_ports[v] = std::move(sout);
  }
}

Decoration relabel(const Decoration& d, const std::vector<int>& vperm,
                   const std::vector<int>& eperm) {
  Decoration out;
  int nv = d.graph.vertex_count(), ne = d.graph.edge_count();
  std::vector<std::pair<int, int>> edges(ne);
  out.edge_colors.resize(ne);
  for (int e = 0; e < ne; ++e) {
    int s = d.graph.tail(e), t = d.graph.head(e);
    edges[eperm[e]] = {s == kBoundary ? kBoundary : vperm[s],
                       t == kBoundary ? kBoundary : vperm[t]};
    out.edge_colors[eperm[e]] = d.edge_colors[e];
  }
  out.graph = Graph(nv, std::move(edges));
  out.vertex_labels.resize(nv);
  out.in_ports.resize(nv);
  out.out_ports.resize(nv);
  auto map_list = [&](const std::vector<int>& xs) {
    std::vector<int> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = eperm[xs[i]];
    return ys;
  };
  for (int v = 0; v < nv; ++v) {
    out.vertex_labels[vperm[v]] = d.vertex_labels[v];
    out.in_ports[vperm[v]] = map_list(d.in_ports[v]);
    out.out_ports[vperm[v]] = map_list(d.out_ports[v]);
  }
  out.in_order = map_list(d.in_order);
  out.out_order = map_list(d.out_order);
  return out;
}

std::vector<int32_t> encode(const Decoration& d) {
  std::vector<int32_t> code;
  int nv = d.graph.vertex_count(), ne = d.graph.edge_count();
  code.push_back(nv);
  code.push_back(ne);
  for (int e = 0; e < ne; ++e) {
    code.push_back(d.graph.tail(e) + 2);
    code.push_back(d.graph.head(e) + 2);
    code.push_back(d.edge_colors[e].index());
  }
  for (int v = 0; v < nv; ++v) {
    const FreeArrow& x = d.vertex_labels[v];
    code.push_back(x.gen);
    for (int i : x.left.images()) code.push_back(i);
    for (int i : x.right.images()) code.push_back(i);
  }
  for (int e : d.in_order) code.push_back(e);
  for (int e : d.out_order) code.push_back(e);
  return code;
}

struct EdgeInvariant {
  int in_pos, out_pos, color;
};

// Iterated neighborhood refinement producing label-independent vertex
// classes; exactness comes from exhausting orderings inside each class.
std::vector<std::vector<int>> vertex_classes(const Decoration& d) {
  int nv = d.graph.vertex_count(), ne = d.graph.edge_count();
  std::vector<EdgeInvariant> einv(ne);
  for (int e = 0; e < ne; ++e)
    einv[e] = {position_of(d.in_order, e), position_of(d.out_order, e),
               d.edge_colors[e].index()};
  std::vector<std::string> sig(nv);
  for (int v = 0; v < nv; ++v)
    sig[v] = "g" + std::to_string(d.vertex_labels[v].gen);
  for (int round = 0; round <= nv; ++round) {
    std::vector<std::string> next(nv);
    for (int v = 0; v < nv; ++v) {
      std::vector<std::string> parts;
      for (int e = 0; e < ne; ++e) {
        int s = d.graph.tail(e), t = d.graph.head(e);
        if (t == v)
          parts.push_back("i" + std::to_string(einv[e].in_pos) + "," +
                          std::to_string(einv[e].out_pos) + "," +
                          std::to_string(einv[e].color) + ";" +
                          (s == kBoundary ? std::string("*") : sig[s]));
        if (s == v)
          parts.push_back("o" + std::to_string(einv[e].in_pos) + "," +
                          std::to_string(einv[e].out_pos) + "," +
                          std::to_string(einv[e].color) + ";" +
                          (t == kBoundary ? std::string("*") : sig[t]));
      }
      std::sort(parts.begin(), parts.end());
      next[v] = sig[v] + "|";
      for (const std::string& p : parts) next[v] += p + "|";
    }
    sig = std::move(next);
  }
  std::map<std::string, std::vector<int>> grouped;
  for (int v = 0; v < nv; ++v) grouped[sig[v]].push_back(v);
  std::vector<std::vector<int>> classes;
  for (auto& [key, vs] : grouped) classes.push_back(vs);
  return classes;
}

constexpr long kSearchCap = 4000000;

void check_search_size(long count) {
  require(count <= kSearchCap, "canonicalization search space too large for desk scale");
}

}  // namespace

CanonicalDecoration canonicalize(const Decoration& dec, const FreeMegagraph& mg) {
  dec.validate(mg);
  int nv = dec.graph.vertex_count(), ne = dec.graph.edge_count();

  std::vector<std::vector<int>> classes = vertex_classes(dec);
  long ordering_count = 1;
  for (const auto& cls : classes) {
    for (size_t i = 2; i <= cls.size(); ++i) ordering_count *= static_cast<long>(i);
    check_search_size(ordering_count);
  }

  std::vector<int> in_pos(ne, INT_MAX), out_pos(ne, INT_MAX);
  for (size_t i = 0; i < dec.in_order.size(); ++i) in_pos[dec.in_order[i]] = static_cast<int>(i);
  for (size_t i = 0; i < dec.out_order.size(); ++i) out_pos[dec.out_order[i]] = static_cast<int>(i);

  bool have_best = false;
  CanonicalDecoration best;

  // One candidate per class-respecting vertex ordering and per
  // resolution of parallel-edge ties.
  std::vector<std::vector<int>> class_orders;
  for (auto& cls : classes) class_orders.push_back(cls);

  std::vector<int> vperm(nv, -1);
  std::function<void(size_t, int)> run_vertex;

  auto run_edges = [&]() {
    struct Key {
      int in_pos, out_pos, s, t, color, e;
    };
    std::vector<Key> keys;
    keys.reserve(ne);
    for (int e = 0; e < ne; ++e) {
      int s = dec.graph.tail(e), t = dec.graph.head(e);
      keys.push_back({in_pos[e], out_pos[e], s == kBoundary ? -1 : vperm[s],
                      t == kBoundary ? -1 : vperm[t], dec.edge_colors[e].index(), e});
    }
    auto lt = [](const Key& a, const Key& b) {
      return std::tie(a.in_pos, a.out_pos, a.s, a.t, a.color) <
             std::tie(b.in_pos, b.out_pos, b.s, b.t, b.color);
    };
    std::sort(keys.begin(), keys.end(), [&](const Key& a, const Key& b) {
      return lt(a, b) || (!lt(b, a) && a.e < b.e);
    });
    // Tie groups: identical sort keys, necessarily parallel internal edges.
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < ne;) {
      int j = i + 1;
      while (j < ne && !lt(keys[i], keys[j])) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    long tie_count = 1;
    for (auto [a, b] : groups) {
      for (int i = 2; i <= b - a; ++i) tie_count *= i;
      check_search_size(tie_count);
    }
    std::vector<int> eperm(ne, -1);
    std::function<void(size_t)> run_group = [&](size_t gi) {
      if (gi == groups.size()) {
        Decoration cand = relabel(dec, vperm, eperm);
        gauge_normalize(cand);
        std::vector<int32_t> code = encode(cand);
        if (!have_best || code < best.code) {
          best.dec = std::move(cand);
          best.code = std::move(code);
          have_best = true;
        }
        return;
      }
      auto [a, b] = groups[gi];
      std::vector<int> members;
      for (int i = a; i < b; ++i) members.push_back(keys[i].e);
      std::sort(members.begin(), members.end());
      do {
        for (int i = a; i < b; ++i) eperm[members[i - a]] = i;
        run_group(gi + 1);
      } while (std::next_permutation(members.begin(), members.end()));
    };
    run_group(0);
  };

  run_vertex = [&](size_t ci, int assigned) {
    if (ci == class_orders.size()) {
      run_edges();
      return;
    }
    std::vector<int>& cls = class_orders[ci];
    std::sort(cls.begin(), cls.end());
    do {
      for (size_t i = 0; i < cls.size(); ++i) vperm[cls[i]] = assigned + static_cast<int>(i);
      run_vertex(ci + 1, assigned + static_cast<int>(cls.size()));
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  run_vertex(0, 0);

  return best;
}

std::string CanonicalDecoration::key() const {
  std::ostringstream os;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) os << ',';
    os << code[i];
  }
  return os.str();
}

bool related_by_automorphism(const Decoration& a, const Decoration& b,
                             const FreeMegagraph& mg) {
  a.validate(mg);
  b.validate(mg);
  if (a.in_order.size() != b.in_order.size() ||
      a.out_order.size() != b.out_order.size())
    return false;
  for (const GraphIso& iso : enumerate_isomorphisms(a.graph, b.graph)) {
    auto map_edges = [&](const std::vector<int>& xs) {
      std::vector<int> ys(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) ys[i] = iso.edge_map[xs[i]];
      return ys;
    };
    bool ok = true;
    for (int e = 0; e < a.graph.edge_count() && ok; ++e)
      ok = a.edge_colors[e] == b.edge_colors[iso.edge_map[e]];
    if (!ok) continue;
    if (map_edges(a.in_order) != b.in_order) continue;
    if (map_edges(a.out_order) != b.out_order) continue;
    for (int v = 0; v < a.graph.vertex_count() && ok; ++v) {
      int w = iso.vertex_map[v];
      const FreeArrow& xa = a.vertex_labels[v];
      const FreeArrow& xb = b.vertex_labels[w];
      if (xa.gen != xb.gen) {
        ok = false;
        break;
      }
      // f0(out_a(v)) = sigma . out_b(w), f0(in_a(v)) = in_b(w) . tau,
      // then the labels must satisfy D1a(v) = sigma . D1b(w) . tau.
      Perm sigma = left_relating_perm(map_edges(a.out_ports[v]), b.out_ports[w]);
      Perm tau = right_relating_perm(map_edges(a.in_ports[v]), b.in_ports[w]);
      ok = xa.left == sigma * xb.left && xa.right == xb.right * tau;
    }
    if (ok) return true;
  }
  return false;
}

Decoration make_empty_decoration() { return Decoration{}; }

Decoration make_identity_decoration(const Color& c) {
  Decoration d;
  d.graph = Graph(0, {{kBoundary, kBoundary}});
  d.edge_colors = {c};
  d.in_order = {0};
  d.out_order = {0};
  return d;
}

Decoration make_corolla(const FreeArrow& x, const FreeMegagraph& mg) {
  ColorList s = mg.source(x), t = mg.target(x);
  Decoration d;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s.size(); ++i) edges.emplace_back(kBoundary, 0);
  for (int k = 0; k < t.size(); ++k) edges.emplace_back(0, kBoundary);
  d.graph = Graph(1, std::move(edges));
  for (int i = 0; i < s.size(); ++i) d.edge_colors.push_back(s[i]);
  for (int k = 0; k < t.size(); ++k) d.edge_colors.push_back(t[k]);
  d.vertex_labels = {x};
  std::vector<int> ins, outs;
  for (int i = 0; i < s.size(); ++i) ins.push_back(i);
  for (int k = 0; k < t.size(); ++k) outs.push_back(s.size() + k);
  d.in_ports = {ins};
  d.out_ports = {outs};
  d.in_order = ins;
  d.out_order = outs;
  return d;
}

Decoration decoration_compose_h(const Decoration& f, const Decoration& g) {
  Decoration d;
  int fv = f.graph.vertex_count(), fe = f.graph.edge_count();
  std::vector<std::pair<int, int>> edges = f.graph.edges();
  for (auto [s, t] : g.graph.edges())
    edges.emplace_back(s == kBoundary ? kBoundary : s + fv,
                       t == kBoundary ? kBoundary : t + fv);
  d.graph = Graph(fv + g.graph.vertex_count(), std::move(edges));
  d.edge_colors = f.edge_colors;
  d.edge_colors.insert(d.edge_colors.end(), g.edge_colors.begin(), g.edge_colors.end());
  d.vertex_labels = f.vertex_labels;
  d.vertex_labels.insert(d.vertex_labels.end(), g.vertex_labels.begin(), g.vertex_labels.end());
  auto shift = [&](const std::vector<int>& xs) {
    std::vector<int> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = xs[i] + fe;
    return ys;
  };
  d.in_ports = f.in_ports;
  d.out_ports = f.out_ports;
  for (const auto& ps : g.in_ports) d.in_ports.push_back(shift(ps));
  for (const auto& ps : g.out_ports) d.out_ports.push_back(shift(ps));
  d.in_order = f.in_order;
  for (int e : shift(g.in_order)) d.in_order.push_back(e);
  d.out_order = f.out_order;
  for (int e : shift(g.out_order)) d.out_order.push_back(e);
  return d;
}

Decoration decoration_compose_v(const Decoration& f, const Decoration& g,
                                const FreeMegagraph& mg) {
  require(f.source(mg) == g.target(mg),
          "vertical composition: source/target color lists differ");
  int gv = g.graph.vertex_count(), ge = g.graph.edge_count();
  int fe = f.graph.edge_count();
  int n = static_cast<int>(f.in_order.size());

  // g keeps its vertex and edge ids; f's vertices shift by |V_g|; each
  // f input edge merges into its matched g output edge.
  std::vector<int> fmap(fe, -1);
  for (int i = 0; i < n; ++i) fmap[f.in_order[i]] = g.out_order[i];
  int next = ge;
  for (int e = 0; e < fe; ++e)
    if (fmap[e] == -1) fmap[e] = next++;

  auto fvx = [&](int v) { return v == kBoundary ? kBoundary : v + gv; };
  std::vector<std::pair<int, int>> edges(next);
  std::vector<Color> colors(next);
  for (int e = 0; e < ge; ++e) {
    edges[e] = {g.graph.tail(e), g.graph.head(e)};
    colors[e] = g.edge_colors[e];
  }
  for (int i = 0; i < n; ++i) {
    int merged = g.out_order[i];
    edges[merged].second = fvx(f.graph.head(f.in_order[i]));
  }
  for (int e = 0; e < fe; ++e) {
    if (fmap[e] < ge) continue;
    edges[fmap[e]] = {fvx(f.graph.tail(e)), fvx(f.graph.head(e))};
    colors[fmap[e]] = f.edge_colors[e];
  }

  Decoration d;
  d.graph = Graph(gv + f.graph.vertex_count(), std::move(edges));
  d.edge_colors = std::move(colors);
  d.vertex_labels = g.vertex_labels;
  d.vertex_labels.insert(d.vertex_labels.end(), f.vertex_labels.begin(), f.vertex_labels.end());
  auto map_f = [&](const std::vector<int>& xs) {
    std::vector<int> ys(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) ys[i] = fmap[xs[i]];
    return ys;
  };
  d.in_ports = g.in_ports;
  d.out_ports = g.out_ports;
  for (const auto& ps : f.in_ports) d.in_ports.push_back(map_f(ps));
  for (const auto& ps : f.out_ports) d.out_ports.push_back(map_f(ps));
  d.in_order = g.in_order;
  d.out_order = map_f(f.out_order);
  return d;
}

Decoration decoration_act(const Perm& sigma, const Perm& tau, const Decoration& f) {
  require(sigma.degree() == static_cast<int>(f.in_order.size()),
          "action: sigma degree must match the number of inputs");
  require(tau.degree() == static_cast<int>(f.out_order.size()),
          "action: tau degree must match the number of outputs");
  Decoration d = f;
  d.in_order = sigma.act_right(f.in_order);
  d.out_order = tau.act_left(f.out_order);
  return d;
}

bool splittable_below(const Decoration& dec, const std::vector<int>& bottom) {
  std::vector<char> in_bottom(dec.graph.vertex_count(), 0);
  for (int v : bottom) in_bottom[v] = 1;
  for (auto [s, t] : dec.graph.edges())
    if (t != kBoundary && in_bottom[t] && s != kBoundary && !in_bottom[s])
      return false;
  return true;
}

std::pair<Decoration, Decoration> vertical_split(const Decoration& dec,
                                                 const std::vector<int>& bottom) {
  require(splittable_below(dec, bottom),
          "vertical split: an edge enters the lower layer from above");
  int nv = dec.graph.vertex_count(), ne = dec.graph.edge_count();
  std::vector<char> in_bottom(nv, 0);
  for (int v : bottom) in_bottom[v] = 1;

  // Lower layer: edges whose tail is the boundary or a bottom vertex.
  // Upper layer: edges whose head is the boundary or an upper vertex.
  // Their overlap is the interface.
  std::vector<int> lower_edges, upper_edges, lower_vs, upper_vs, interface;
  for (int e = 0; e < ne; ++e) {
    int s = dec.graph.tail(e), t = dec.graph.head(e);
    bool lo = s == kBoundary || in_bottom[s];
    bool hi = t == kBoundary || (t != kBoundary && !in_bottom[t]);
    if (lo) lower_edges.push_back(e);
    if (hi) upper_edges.push_back(e);
    if (lo && hi) interface.push_back(e);
  }
  for (int v = 0; v < nv; ++v)
    (in_bottom[v] ? lower_vs : upper_vs).push_back(v);

  Subgraph lower(dec.graph, lower_edges, lower_vs);
  Subgraph upper(dec.graph, upper_edges, upper_vs);

  auto build = [&](const Subgraph& sg, const std::vector<int>& ins,
                   const std::vector<int>& outs) {
    std::vector<int> emap, vmap;
    Decoration d;
    d.graph = sg.materialize(&emap, &vmap);
    for (int e = 0; e < ne; ++e)
      if (emap[e] >= 0) {
        if (static_cast<int>(d.edge_colors.size()) <= emap[e])
          d.edge_colors.resize(emap[e] + 1, dec.edge_colors[e]);
        d.edge_colors[emap[e]] = dec.edge_colors[e];
      }
    auto map_list = [&](const std::vector<int>& xs) {
      std::vector<int> ys(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) ys[i] = emap[xs[i]];
      return ys;
    };
    for (int v = 0; v < nv; ++v)
      if (vmap[v] >= 0) {
        size_t need = vmap[v] + 1;
        if (d.vertex_labels.size() < need) {
          d.vertex_labels.resize(need);
          d.in_ports.resize(need);
          d.out_ports.resize(need);
        }
        d.vertex_labels[vmap[v]] = dec.vertex_labels[v];
        d.in_ports[vmap[v]] = map_list(dec.in_ports[v]);
        d.out_ports[vmap[v]] = map_list(dec.out_ports[v]);
      }
    d.in_order = map_list(ins);
    d.out_order = map_list(outs);
    return d;
  };

  Decoration lower_dec = build(lower, dec.in_order, interface);
  Decoration upper_dec = build(upper, interface, dec.out_order);
  return {upper_dec, lower_dec};
}

std::vector<std::vector<int>> proper_lower_layers(const Decoration& dec) {
  int nv = dec.graph.vertex_count();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << nv); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < nv; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    if (splittable_below(dec, vs)) out.push_back(vs);
  }
  return out;
}

HorizontalFactorization horizontal_factorize(const Decoration& dec) {
  int nv = dec.graph.vertex_count(), ne = dec.graph.edge_count();
  // Union-find over vertices [0, nv) and edges [nv, nv + ne).
  std::vector<int> parent(nv + ne);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int e = 0; e < ne; ++e) {
    int s = dec.graph.tail(e), t = dec.graph.head(e);
    if (s != kBoundary) unite(nv + e, s);
    if (t != kBoundary) unite(nv + e, t);
  }
  std::map<int, int> comp_of_root;
  std::vector<std::vector<int>> comp_edges, comp_vs;
  // Deterministic component order: by least member with edges first.
  std::vector<int> order;
  for (int e = 0; e < ne; ++e) {
    int r = find(nv + e);
    if (!comp_of_root.count(r)) {
      comp_of_root[r] = static_cast<int>(order.size());
      order.push_back(r);
      comp_edges.emplace_back();
      comp_vs.emplace_back();
    }
    comp_edges[comp_of_root[r]].push_back(e);
  }
  for (int v = 0; v < nv; ++v) {
    int r = find(v);
    if (!comp_of_root.count(r)) {
      comp_of_root[r] = static_cast<int>(order.size());
      order.push_back(r);
      comp_edges.emplace_back();
      comp_vs.emplace_back();
    }
    comp_vs[comp_of_root[r]].push_back(v);
  }

  HorizontalFactorization out;
  std::vector<int> concat_in, concat_out;
  for (size_t c = 0; c < comp_edges.size(); ++c) {
    Subgraph sg(dec.graph, comp_edges[c], comp_vs[c]);
    std::vector<int> emap, vmap;
    Decoration d;
    d.graph = sg.materialize(&emap, &vmap);
    d.edge_colors.resize(comp_edges[c].size());
    for (int e : comp_edges[c]) d.edge_colors[emap[e]] = dec.edge_colors[e];
    d.vertex_labels.resize(comp_vs[c].size());
    d.in_ports.resize(comp_vs[c].size());
    d.out_ports.resize(comp_vs[c].size());
    auto map_list = [&](const std::vector<int>& xs) {
      std::vector<int> ys;
      for (int x : xs)
        if (emap[x] >= 0) ys.push_back(emap[x]);
      return ys;
    };
    for (int v : comp_vs[c]) {
      d.vertex_labels[vmap[v]] = dec.vertex_labels[v];
      d.in_ports[vmap[v]] = map_list(dec.in_ports[v]);
      d.out_ports[vmap[v]] = map_list(dec.out_ports[v]);
    }
    // Boundary orders: the relative order induced by the global one.
    std::vector<char> mine(ne, 0);
    for (int e : comp_edges[c]) mine[e] = 1;
    for (int e : dec.in_order)
      if (mine[e]) {
        d.in_order.push_back(emap[e]);
        concat_in.push_back(e);
      }
    for (int e : dec.out_order)
      if (mine[e]) {
        d.out_order.push_back(emap[e]);
        concat_out.push_back(e);
      }
    out.components.push_back(std::move(d));
  }
  out.sigma = right_relating_perm(dec.in_order, concat_in);
  out.tau = left_relating_perm(dec.out_order, concat_out);
  return out;
}

}  // namespace propkit
