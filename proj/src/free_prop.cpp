#include "propkit/free_prop.hpp"

#include <algorithm>
#include <functional>
#include <map>

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

}  // namespace

FreeProp::FreeProp(FreeMegagraph mg, int default_max_vertices)
    : mg_(std::move(mg)), bound_(default_max_vertices) {
  require(bound_ >= 0, "vertex bound must be nonnegative");
}

std::string FreeProp::name() const {
  return "free prop on " + std::to_string(mg_.generator_count()) + " generators";
}

Morphism FreeProp::from_decoration(const Decoration& d) const {
  auto payload = std::make_shared<FreeMorphismPayload>();
  payload->canon = canonicalize(d, mg_);
  ColorList src = payload->canon.dec.source(mg_);
  ColorList dst = payload->canon.dec.target(mg_);
  std::string key = payload->canon.key();
  return Morphism(std::move(src), std::move(dst), std::move(payload), std::move(key));
}

const CanonicalDecoration& FreeProp::canonical(const Morphism& f) const {
  return f.payload_as<FreeMorphismPayload>().canon;
}

Morphism FreeProp::identity(const Color& c) const {
  require(c.owner() == mg_.colors(), "free prop: foreign color");
  return from_decoration(make_identity_decoration(c));
}

Morphism FreeProp::unit() const { return from_decoration(make_empty_decoration()); }

Morphism FreeProp::corolla(const FreeArrow& x) const {
  return from_decoration(make_corolla(x, mg_));
}

Morphism FreeProp::corolla(const std::string& gen_name) const {
  return corolla(mg_.arrow(gen_name));
}

Morphism FreeProp::compose_v(const Morphism& f, const Morphism& g) const {
  return from_decoration(
      decoration_compose_v(canonical(f).dec, canonical(g).dec, mg_));
}

Morphism FreeProp::compose_h(const Morphism& f, const Morphism& g) const {
  return from_decoration(decoration_compose_h(canonical(f).dec, canonical(g).dec));
}

Morphism FreeProp::act(const Perm& sigma, const Perm& tau, const Morphism& f) const {
  return from_decoration(decoration_act(sigma, tau, canonical(f).dec));
}

std::vector<Morphism> FreeProp::hom(const ColorList& source,
                                    const ColorList& target) const {
  return enumerate_hom(source, target, bound_);
}

std::string FreeProp::show(const Morphism& f) const {
  return canonical(f).dec.to_string(mg_);
}

std::vector<Morphism> FreeProp::enumerate_hom(const ColorList& source,
                                              const ColorList& target,
                                              int max_vertices) const {
  require(max_vertices >= 0, "enumerate_hom: negative vertex bound");
  for (int i = 0; i < source.size(); ++i)
    require(source[i].owner() == mg_.colors(), "enumerate_hom: foreign source color");
  for (int i = 0; i < target.size(); ++i)
    require(target[i].owner() == mg_.colors(), "enumerate_hom: foreign target color");

  std::vector<Morphism> result;

  struct Producer {
    int color;
    int vertex;  // -1 for a graph input slot
    int port;    // slot index for graph inputs
  };
  struct Consumer {
    int color;
    int vertex;  // -1 for a graph output slot
    int port;
  };

  for (int k = 0; k <= max_vertices; ++k) {
    std::map<std::vector<int32_t>, Morphism> found;  // code -> morphism
    std::vector<int> gens(k, 0);

    std::function<void(int, int)> choose_gens = [&](int pos, int least) {
      if (pos == k) {
        // Feasibility: producer and consumer color multisets must agree.
        std::vector<Producer> producers;
        std::vector<Consumer> consumers;
        for (int i = 0; i < source.size(); ++i)
          producers.push_back({source[i].index(), -1, i});
        for (int j = 0; j < target.size(); ++j)
          consumers.push_back({target[j].index(), -1, j});
        for (int v = 0; v < k; ++v) {
          const Generator& g = mg_.generator(gens[v]);
          for (int p = 0; p < g.target.size(); ++p)
            producers.push_back({g.target[p].index(), v, p});
          for (int p = 0; p < g.source.size(); ++p)
            consumers.push_back({g.source[p].index(), v, p});
        }
        if (producers.size() != consumers.size()) return;
        {
          std::vector<int> pc, cc;
          for (const auto& p : producers) pc.push_back(p.color);
          for (const auto& c : consumers) cc.push_back(c.color);
          std::sort(pc.begin(), pc.end());
          std::sort(cc.begin(), cc.end());
          if (pc != cc) return;
        }

        int ne = static_cast<int>(producers.size());
        std::vector<int> match(ne, -1);  // producer -> consumer
        std::vector<char> used(ne, 0);
        std::function<void(int)> assign = [&](int pi) {
          if (pi == ne) {
            // Build the decoration: one edge per producer.
            std::vector<std::pair<int, int>> edges(ne);
            std::vector<Color> ecolors(ne);
            for (int e = 0; e < ne; ++e) {
              const Producer& p = producers[e];
              const Consumer& c = consumers[match[e]];
              edges[e] = {p.vertex == -1 ? kBoundary : p.vertex,
                          c.vertex == -1 ? kBoundary : c.vertex};
              ecolors[e] = mg_.colors().color(p.color);
            }
            Graph graph(k, edges);
            if (!graph.is_acyclic()) return;
            Decoration d;
            d.graph = std::move(graph);
            d.edge_colors = std::move(ecolors);
            d.in_ports.assign(k, {});
            d.out_ports.assign(k, {});
            for (int v = 0; v < k; ++v) {
              const Generator& g = mg_.generator(gens[v]);
              d.vertex_labels.push_back(mg_.arrow(gens[v]));
              d.in_ports[v].assign(g.source.size(), -1);
              d.out_ports[v].assign(g.target.size(), -1);
            }
            d.in_order.assign(source.size(), -1);
            d.out_order.assign(target.size(), -1);
            for (int e = 0; e < ne; ++e) {
              const Producer& p = producers[e];
              const Consumer& c = consumers[match[e]];
              if (p.vertex == -1)
                d.in_order[p.port] = e;
              else
                d.out_ports[p.vertex][p.port] = e;
              if (c.vertex == -1)
                d.out_order[c.port] = e;
              else
                d.in_ports[c.vertex][c.port] = e;
            }
            CanonicalDecoration canon = canonicalize(d, mg_);
            if (!found.count(canon.code)) {
              auto payload = std::make_shared<FreeMorphismPayload>();
              std::string key = canon.key();
              payload->canon = std::move(canon);
              found.emplace(payload->canon.code,
                            Morphism(source, target, payload, key));
            }
            return;
          }
          for (int ci = 0; ci < ne; ++ci) {
            if (used[ci] || consumers[ci].color != producers[pi].color) continue;
            used[ci] = 1;
            match[pi] = ci;
            assign(pi + 1);
            used[ci] = 0;
          }
        };
        assign(0);
        return;
      }
      for (int g = least; g < mg_.generator_count(); ++g) {
        gens[pos] = g;
        choose_gens(pos + 1, g);
      }
    };
    choose_gens(0, 0);

    for (auto& [code, m] : found) result.push_back(std::move(m));
  }
  return result;
}

Morphism evaluate_decoration(const Decoration& d, const MegaMapToProp& f) {
  const Prop& target = *f.target_prop();
  HorizontalFactorization parts = horizontal_factorize(d);
  if (parts.components.size() != 1) {
    Morphism h = target.unit();
    for (const Decoration& comp : parts.components)
      h = target.compose_h(h, evaluate_decoration(comp, f));
    return target.act(parts.sigma, parts.tau, h);
  }
  const Decoration& c = parts.components[0];
  if (c.graph.vertex_count() == 0) {
    // A connected vertex-free component is a single free edge.
    return target.identity(f.map_color(c.edge_colors[0]));
  }
  if (c.graph.vertex_count() == 1) {
    const FreeArrow& x = c.vertex_labels[0];
    Morphism base = target.act(x.right, x.left, f.gen_image(x.gen));
    Perm sigma = right_relating_perm(c.in_order, c.in_ports[0]);
    Perm tau = left_relating_perm(c.out_order, c.out_ports[0]);
    return target.act(sigma, tau, base);
  }
  // Connected with >= 2 vertices: split off one source vertex below.
  int w = -1;
  for (int v = 0; v < c.graph.vertex_count() && w < 0; ++v) {
    bool source_vertex = true;
    for (auto [s, t] : c.graph.edges())
      if (t == v && s != kBoundary) source_vertex = false;
    if (source_vertex) w = v;
  }
  require(w >= 0, "acyclic graph must have a source vertex");
  auto [upper, lower] = vertical_split(c, {w});
  return target.compose_v(evaluate_decoration(upper, f),
                          evaluate_decoration(lower, f));
}

Morphism evaluate_free_morphism(const FreeProp& fp, const Morphism& m,
                                const MegaMapToProp& f) {
  require(f.source_mega().colors() == fp.mega().colors(),
          "evaluate: megagraph map has a different source");
  return evaluate_decoration(fp.canonical(m).dec, f);
}

Morphism map_free_morphism(const FreeProp& src, const FreeProp& dst,
                           const MegaMapToFree& g, const Morphism& m) {
  require(g.valid(), "map_free_morphism: invalid megagraph map");
  Decoration d = src.canonical(m).dec;
  for (Color& c : d.edge_colors) c = g.map_color(c);
  for (FreeArrow& x : d.vertex_labels) x = g.apply(x);
  return dst.from_decoration(d);
}

}  // namespace propkit
