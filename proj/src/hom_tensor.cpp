#include "propkit/hom_tensor.hpp"

#include <algorithm>
#include <sstream>

#include "propkit/error.hpp"
#include "propkit/operad.hpp"

namespace propkit {

namespace {

Morphism hchain(const Prop& t, const std::vector<Morphism>& ms) {
  Morphism out = t.unit();
  for (const Morphism& m : ms) out = t.compose_h(out, m);
  return out;
}

}  // namespace

bool check_octagon(const NatTransData& xi, const Morphism& phi) {
  require(xi.target != nullptr, "octagon: missing target prop");
  const Prop& target = *xi.target;
  int n = phi.source().size(), m = phi.target().size();
  int p = static_cast<int>(xi.sources.size());
  int q = static_cast<int>(xi.targets.size());

  std::vector<Morphism> xi_src, xi_dst, f_phi, g_phi;
  for (int i = 0; i < n; ++i) xi_src.push_back(xi.component(phi.source()[i]));
  for (int k = 0; k < m; ++k) xi_dst.push_back(xi.component(phi.target()[k]));
  for (int j = 0; j < p; ++j) f_phi.push_back(xi.sources[j].apply(phi));
  for (int l = 0; l < q; ++l) g_phi.push_back(xi.targets[l].apply(phi));

  Morphism lower_l = target.act(Perm::identity(n * p), block_transpose(q, n),
                                hchain(target, xi_src));
  Morphism upper_l = target.act(Perm::identity(q * n), block_transpose(m, q),
                                hchain(target, g_phi));
  Morphism lhs = target.compose_v(upper_l, lower_l);

  Morphism lower_r = target.act(block_transpose(p, n), Perm::identity(p * m),
                                hchain(target, f_phi));
  Morphism upper_r = target.act(block_transpose(m, p), Perm::identity(m * q),
                                hchain(target, xi_dst));
  Morphism rhs = target.compose_v(upper_r, lower_r);
  return target.equal(lhs, rhs);
}

bool check_natural_on_set(const NatTransData& xi, const std::vector<Morphism>& s) {
  for (const Morphism& phi : s)
    if (!check_octagon(xi, phi)) return false;
  return true;
}

namespace {

struct NatPayload final : MorphismPayload {
  std::vector<Morphism> components;
};

std::string nat_key(const std::vector<Morphism>& components) {
  std::ostringstream os;
  os << "nt";
  for (const Morphism& c : components) os << '|' << c.key();
  return os.str();
}

const FreeMegagraph& mega_of_prop(const PropPtr& p) {
  if (auto fp = std::dynamic_pointer_cast<const FreeProp>(p)) return fp->mega();
  if (auto pp = std::dynamic_pointer_cast<const PresentedProp>(p))
    return pp->free_prop().mega();
  fail("internal hom: the source prop must be free or presented");
}

}  // namespace

HomProp::HomProp(PropPtr r, PropPtr t) : r_(std::move(r)), t_(std::move(t)) {
  const FreeMegagraph& mg = mega_of_prop(r_);
  maps_ = enumerate_prop_homs(r_, t_);
  for (int g = 0; g < mg.generator_count(); ++g) {
    if (auto fp = std::dynamic_pointer_cast<const FreeProp>(r_))
      r_gens_.push_back(fp->corolla(mg.generator(g).name));
    else
      r_gens_.push_back(std::dynamic_pointer_cast<const PresentedProp>(r_)
                            ->generator(mg.generator(g).name));
  }
  std::vector<std::string> names;
  for (size_t i = 0; i < maps_.size(); ++i) names.push_back("h" + std::to_string(i));
  colors_ = ColorSet(names);
}

std::string HomProp::name() const {
  return "Hom(" + r_->name() + ", " + t_->name() + ")";
}

const PropHom& HomProp::map_of(const Color& c) const {
  require(c.owner() == colors_, "internal hom: foreign color");
  return maps_[c.index()];
}

Color HomProp::color_of(const PropHom& h) const {
  for (size_t i = 0; i < maps_.size(); ++i)
    if (maps_[i] == h) return colors_.color(static_cast<int>(i));
  fail("internal hom: map is not one of the enumerated colors");
}

NatTransData HomProp::to_data(const ColorList& source, const ColorList& target,
                              const std::vector<Morphism>& components) const {
  NatTransData data;
  data.target = t_;
  for (int j = 0; j < source.size(); ++j) data.sources.push_back(map_of(source[j]));
  for (int l = 0; l < target.size(); ++l) data.targets.push_back(map_of(target[l]));
  data.components = components;
  return data;
}

Morphism HomProp::transformation(const ColorList& source, const ColorList& target,
                                 std::vector<Morphism> components) const {
  require(static_cast<int>(components.size()) == r_->colors().size(),
          "internal hom: one component per source-prop color");
  NatTransData data = to_data(source, target, components);
  for (int a = 0; a < r_->colors().size(); ++a) {
    ColorList want_src, want_dst;
    {
      std::vector<Color> ws, wd;
      Color ra = r_->colors().color(a);
      for (const PropHom& f : data.sources) ws.push_back(f.map_color(ra));
      for (const PropHom& g : data.targets) wd.push_back(g.map_color(ra));
      want_src = ColorList(ws);
      want_dst = ColorList(wd);
    }
    require(components[a].source() == want_src && components[a].target() == want_dst,
            "internal hom: component profile mismatch at color " +
                r_->colors().name(a));
  }
  require(check_natural_on_set(data, r_gens_),
          "internal hom: components are not natural on the generators");
  auto payload = std::make_shared<NatPayload>();
  payload->components = std::move(components);
  std::string key = nat_key(payload->components);
  return Morphism(source, target, std::move(payload), std::move(key));
}

const std::vector<Morphism>& HomProp::components(const Morphism& f) const {
  return f.payload_as<NatPayload>().components;
}

NatTransData HomProp::data_of(const Morphism& f) const {
  return to_data(f.source(), f.target(), components(f));
}

Morphism HomProp::identity(const Color& c) const {
  const PropHom& f = map_of(c);
  std::vector<Morphism> comps;
  for (const Color& a : r_->colors().all())
    comps.push_back(t_->identity(f.map_color(a)));
  return transformation(ColorList({c}), ColorList({c}), std::move(comps));
}

Morphism HomProp::unit() const {
  std::vector<Morphism> comps(r_->colors().size(), t_->unit());
  return transformation(ColorList(), ColorList(), std::move(comps));
}

Morphism HomProp::compose_v(const Morphism& f, const Morphism& g) const {
  require(g.target() == f.source(), "internal hom: vertical profile mismatch");
  std::vector<Morphism> comps;
  for (int a = 0; a < r_->colors().size(); ++a)
    comps.push_back(t_->compose_v(components(f)[a], components(g)[a]));
  return transformation(g.source(), f.target(), std::move(comps));
}

Morphism HomProp::compose_h(const Morphism& f, const Morphism& g) const {
  std::vector<Morphism> comps;
  for (int a = 0; a < r_->colors().size(); ++a)
    comps.push_back(t_->compose_h(components(f)[a], components(g)[a]));
  return transformation(f.source().concat(g.source()),
                        f.target().concat(g.target()), std::move(comps));
}

Morphism HomProp::act(const Perm& sigma, const Perm& tau, const Morphism& f) const {
  require(sigma.degree() == f.source().size() && tau.degree() == f.target().size(),
          "internal hom: action degree mismatch");
  std::vector<Morphism> comps;
  for (int a = 0; a < r_->colors().size(); ++a)
    comps.push_back(t_->act(sigma, tau, components(f)[a]));
  return transformation(f.source().act_right(sigma), f.target().act_left(tau),
                        std::move(comps));
}

bool HomProp::equal(const Morphism& f, const Morphism& g) const {
  if (!f.same_profile(g)) return false;
  for (int a = 0; a < r_->colors().size(); ++a)
    if (!t_->equal(components(f)[a], components(g)[a])) return false;
  return true;
}

std::vector<Morphism> HomProp::hom(const ColorList& source,
                                   const ColorList& target) const {
  std::vector<Morphism> out;
  // Component spaces per color of R, then the octagon filter on the
  // generators (sufficient by the generation property).
  std::vector<std::vector<Morphism>> spaces;
  for (const Color& a : r_->colors().all()) {
    std::vector<Color> ws, wd;
    for (int j = 0; j < source.size(); ++j) ws.push_back(map_of(source[j]).map_color(a));
    for (int l = 0; l < target.size(); ++l) wd.push_back(map_of(target[l]).map_color(a));
    spaces.push_back(t_->hom(ColorList(ws), ColorList(wd)));
    if (spaces.back().empty()) return out;
  }
  std::vector<size_t> pick(spaces.size(), 0);
  while (true) {
    std::vector<Morphism> comps;
    for (size_t a = 0; a < spaces.size(); ++a) comps.push_back(spaces[a][pick[a]]);
    NatTransData data = to_data(source, target, comps);
    if (check_natural_on_set(data, r_gens_))
      out.push_back(transformation(source, target, std::move(comps)));
    int a = static_cast<int>(spaces.size()) - 1;
    for (; a >= 0; --a) {
      if (++pick[a] < spaces[a].size()) break;
      pick[a] = 0;
    }
    if (a < 0) break;
  }
  return out;
}

std::shared_ptr<const HomProp> make_hom_prop(PropPtr r, PropPtr t) {
  return std::make_shared<HomProp>(std::move(r), std::move(t));
}

Color BilinearData::map_color(const Color& a, const Color& c) const {
  return t->colors().color(color_map[a.index()][c.index()]);
}

PropHom BilinearData::fix_r_color(const Color& a) const {
  std::vector<int> cmap;
  for (int c = 0; c < s->colors().size(); ++c) cmap.push_back(color_map[a.index()][c]);
  return PropHom::from_generators(s, s->free_prop().mega(), t, std::move(cmap),
                                  s_gen_images[a.index()]);
}

PropHom BilinearData::fix_s_color(const Color& c) const {
  std::vector<int> cmap;
  for (int a = 0; a < r->colors().size(); ++a) cmap.push_back(color_map[a][c.index()]);
  std::vector<Morphism> imgs;
  for (size_t g = 0; g < r_gen_images.size(); ++g)
    imgs.push_back(r_gen_images[g][c.index()]);
  return PropHom::from_generators(r, r->free_prop().mega(), t, std::move(cmap),
                                  std::move(imgs));
}

bool check_bilinear(const BilinearData& chi) {
  for (const Color& a : chi.r->colors().all())
    if (!chi.fix_r_color(a).valid()) return false;
  for (const Color& c : chi.s->colors().all())
    if (!chi.fix_s_color(c).valid()) return false;
  // Octagon per generator pair: the family a -> chi(a, psi) must be
  // natural with respect to every generator phi of R, with sources
  // chi(-, c_j) and targets chi(-, d_l).
  const FreeMegagraph& smega = chi.s->free_prop().mega();
  const FreeMegagraph& rmega = chi.r->free_prop().mega();
  for (int sg = 0; sg < smega.generator_count(); ++sg) {
    const Generator& psi = smega.generator(sg);
    NatTransData xi;
    xi.target = chi.t;
    for (int j = 0; j < psi.source.size(); ++j)
      xi.sources.push_back(chi.fix_s_color(psi.source[j]));
    for (int l = 0; l < psi.target.size(); ++l)
      xi.targets.push_back(chi.fix_s_color(psi.target[l]));
    for (int a = 0; a < chi.r->colors().size(); ++a)
      xi.components.push_back(chi.s_gen_images[a][sg]);
    for (int rg = 0; rg < rmega.generator_count(); ++rg)
      if (!check_octagon(xi, chi.r->generator(rmega.generator(rg).name)))
        return false;
  }
  return true;
}

std::vector<BilinearData> enumerate_bilinear(const PresentedPropPtr& r,
                                             const PresentedPropPtr& s,
                                             const PropPtr& t) {
  std::vector<BilinearData> out;
  int nr = r->colors().size(), ns = s->colors().size(), nt = t->colors().size();
  const FreeMegagraph& rmega = r->free_prop().mega();
  const FreeMegagraph& smega = s->free_prop().mega();
  if (nt == 0 && nr * ns > 0) return out;

  std::vector<int> flat(nr * ns, 0);
  while (true) {
    BilinearData chi;
    chi.r = r;
    chi.s = s;
    chi.t = t;
    chi.color_map.assign(nr, std::vector<int>(ns, 0));
    for (int a = 0; a < nr; ++a)
      for (int c = 0; c < ns; ++c) chi.color_map[a][c] = flat[a * ns + c];

    // Image spaces for both generator families.
    std::vector<std::vector<Morphism>> spaces;
    bool possible = true;
    for (int g = 0; g < rmega.generator_count() && possible; ++g)
      for (int c = 0; c < ns && possible; ++c) {
        const Generator& gen = rmega.generator(g);
        std::vector<Color> src, dst;
        for (int i = 0; i < gen.source.size(); ++i)
          src.push_back(t->colors().color(chi.color_map[gen.source[i].index()][c]));
        for (int k = 0; k < gen.target.size(); ++k)
          dst.push_back(t->colors().color(chi.color_map[gen.target[k].index()][c]));
        spaces.push_back(t->hom(ColorList(src), ColorList(dst)));
        if (spaces.back().empty()) possible = false;
      }
    for (int a = 0; a < nr && possible; ++a)
      for (int g = 0; g < smega.generator_count() && possible; ++g) {
        const Generator& gen = smega.generator(g);
        std::vector<Color> src, dst;
        for (int j = 0; j < gen.source.size(); ++j)
          src.push_back(t->colors().color(chi.color_map[a][gen.source[j].index()]));
        for (int l = 0; l < gen.target.size(); ++l)
          dst.push_back(t->colors().color(chi.color_map[a][gen.target[l].index()]));
        spaces.push_back(t->hom(ColorList(src), ColorList(dst)));
        if (spaces.back().empty()) possible = false;
      }
    if (possible) {
      std::vector<size_t> pick(spaces.size(), 0);
      while (true) {
        size_t slot = 0;
        chi.r_gen_images.assign(rmega.generator_count(), {});
        for (int g = 0; g < rmega.generator_count(); ++g) {
          chi.r_gen_images[g].clear();
          for (int c = 0; c < ns; ++c)
            chi.r_gen_images[g].push_back(spaces[slot][pick[slot]]), ++slot;
        }
        chi.s_gen_images.assign(nr, {});
        for (int a = 0; a < nr; ++a) {
          chi.s_gen_images[a].clear();
          for (int g = 0; g < smega.generator_count(); ++g)
            chi.s_gen_images[a].push_back(spaces[slot][pick[slot]]), ++slot;
        }
        if (check_bilinear(chi)) out.push_back(chi);
        int i = static_cast<int>(spaces.size()) - 1;
        for (; i >= 0; --i) {
          if (++pick[i] < spaces[i].size()) break;
          pick[i] = 0;
        }
        if (i < 0) break;
      }
    }
    int i = nr * ns - 1;
    for (; i >= 0; --i) {
      if (++flat[i] < nt) break;
      flat[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

PropHom curry_bilinear(const BilinearData& chi,
                       const std::shared_ptr<const HomProp>& hom_st) {
  const FreeMegagraph& rmega = chi.r->free_prop().mega();
  std::vector<int> cmap;
  for (const Color& a : chi.r->colors().all())
    cmap.push_back(hom_st->color_of(chi.fix_r_color(a)).index());
  std::vector<Morphism> gen_images;
  for (int g = 0; g < rmega.generator_count(); ++g) {
    const Generator& gen = rmega.generator(g);
    std::vector<Color> src, dst;
    for (int i = 0; i < gen.source.size(); ++i)
      src.push_back(hom_st->colors().color(cmap[gen.source[i].index()]));
    for (int k = 0; k < gen.target.size(); ++k)
      dst.push_back(hom_st->colors().color(cmap[gen.target[k].index()]));
    std::vector<Morphism> comps;
    for (int c = 0; c < chi.s->colors().size(); ++c)
      comps.push_back(chi.r_gen_images[g][c]);
    gen_images.push_back(
        hom_st->transformation(ColorList(src), ColorList(dst), std::move(comps)));
  }
  return PropHom::from_generators(chi.r, rmega, hom_st, std::move(cmap),
                                  std::move(gen_images));
}

BilinearData uncurry(const PropHom& k, const PresentedPropPtr& r,
                     const PresentedPropPtr& s,
                     const std::shared_ptr<const HomProp>& hom_st) {
  BilinearData chi;
  chi.r = r;
  chi.s = s;
  chi.t = hom_st->target_prop();
  int nr = r->colors().size(), ns = s->colors().size();
  chi.color_map.assign(nr, std::vector<int>(ns, 0));
  chi.s_gen_images.assign(nr, {});
  const FreeMegagraph& smega = s->free_prop().mega();
  for (int a = 0; a < nr; ++a) {
    const PropHom& ha = hom_st->map_of(k.map_color(r->colors().color(a)));
    for (int c = 0; c < ns; ++c)
      chi.color_map[a][c] = ha.map_color(s->colors().color(c)).index();
    for (int g = 0; g < smega.generator_count(); ++g)
      chi.s_gen_images[a].push_back(ha.gen_images()[g]);
  }
  const FreeMegagraph& rmega = r->free_prop().mega();
  chi.r_gen_images.assign(rmega.generator_count(), {});
  for (int g = 0; g < rmega.generator_count(); ++g) {
    Morphism image = k.apply(r->generator(rmega.generator(g).name));
    for (int c = 0; c < ns; ++c)
      chi.r_gen_images[g].push_back(hom_st->components(image)[c]);
  }
  return chi;
}

PropHom curry_bilinear_flip(const BilinearData& chi,
                            const std::shared_ptr<const HomProp>& hom_rt) {
  BilinearData flipped;
  flipped.r = chi.s;
  flipped.s = chi.r;
  flipped.t = chi.t;
  int nr = chi.r->colors().size(), ns = chi.s->colors().size();
  flipped.color_map.assign(ns, std::vector<int>(nr, 0));
  for (int a = 0; a < nr; ++a)
    for (int c = 0; c < ns; ++c) flipped.color_map[c][a] = chi.color_map[a][c];
  // Generators of S paired with colors of R and vice versa.
  const FreeMegagraph& smega = chi.s->free_prop().mega();
  flipped.r_gen_images.assign(smega.generator_count(), {});
  for (int g = 0; g < smega.generator_count(); ++g)
    for (int a = 0; a < nr; ++a)
      flipped.r_gen_images[g].push_back(chi.s_gen_images[a][g]);
  const FreeMegagraph& rmega = chi.r->free_prop().mega();
  flipped.s_gen_images.assign(ns, {});
  for (int c = 0; c < ns; ++c)
    for (int g = 0; g < rmega.generator_count(); ++g)
      flipped.s_gen_images[c].push_back(chi.r_gen_images[g][c]);
  return curry_bilinear(flipped, hom_rt);
}

std::string tensor_color_name(const std::string& r_color, const std::string& s_color) {
  return r_color + "|" + s_color;
}

std::string tensor_rgen_name(const std::string& r_gen, const std::string& s_color) {
  return r_gen + "@" + s_color;
}

std::string tensor_sgen_name(const std::string& r_color, const std::string& s_gen) {
  return r_color + "|" + s_gen;
}

Presentation sharp_presentation(const Presentation& r, const Presentation& s) {
  std::vector<std::string> color_names;
  for (int a = 0; a < r.mega.colors().size(); ++a)
    for (int c = 0; c < s.mega.colors().size(); ++c)
      color_names.push_back(
          tensor_color_name(r.mega.colors().name(a), s.mega.colors().name(c)));
  ColorSet colors(color_names);

  std::vector<Generator> gens;
  auto rs_color = [&](const std::string& a, const std::string& c) {
    return colors.color(tensor_color_name(a, c));
  };
  for (int g = 0; g < r.mega.generator_count(); ++g) {
    const Generator& gen = r.mega.generator(g);
    for (int c = 0; c < s.mega.colors().size(); ++c) {
      const std::string& cs = s.mega.colors().name(c);
      std::vector<Color> src, dst;
      for (int i = 0; i < gen.source.size(); ++i)
        src.push_back(rs_color(gen.source[i].name(), cs));
      for (int k = 0; k < gen.target.size(); ++k)
        dst.push_back(rs_color(gen.target[k].name(), cs));
      gens.push_back(Generator{tensor_rgen_name(gen.name, cs), ColorList(src),
                               ColorList(dst)});
    }
  }
  for (int a = 0; a < r.mega.colors().size(); ++a) {
    const std::string& as = r.mega.colors().name(a);
    for (int g = 0; g < s.mega.generator_count(); ++g) {
      const Generator& gen = s.mega.generator(g);
      std::vector<Color> src, dst;
      for (int j = 0; j < gen.source.size(); ++j)
        src.push_back(rs_color(as, gen.source[j].name()));
      for (int l = 0; l < gen.target.size(); ++l)
        dst.push_back(rs_color(as, gen.target[l].name()));
      gens.push_back(Generator{tensor_sgen_name(as, gen.name), ColorList(src),
                               ColorList(dst)});
    }
  }

  Presentation out;
  out.mega = FreeMegagraph(colors, gens);
  for (int c = 0; c < s.mega.colors().size(); ++c) {
    const std::string& cs = s.mega.colors().name(c);
    for (const auto& [lhs, rhs] : r.relations) {
      auto gen_name = [&](const std::string& g) { return tensor_rgen_name(g, cs); };
      auto col_name = [&](const std::string& a) { return tensor_color_name(a, cs); };
      out.relations.emplace_back(lhs.rename(gen_name, col_name),
                                 rhs.rename(gen_name, col_name));
    }
  }
  for (int a = 0; a < r.mega.colors().size(); ++a) {
    const std::string& as = r.mega.colors().name(a);
    for (const auto& [lhs, rhs] : s.relations) {
      auto gen_name = [&](const std::string& g) { return tensor_sgen_name(as, g); };
      auto col_name = [&](const std::string& c) { return tensor_color_name(as, c); };
      out.relations.emplace_back(lhs.rename(gen_name, col_name),
                                 rhs.rename(gen_name, col_name));
    }
  }
  out.validate();
  return out;
}

namespace {

// The two composites of the bilinear octagon for a generator pair, as
// terms over the sharp presentation.
std::pair<Term, Term> octagon_terms(const Generator& phi, const Generator& psi) {
  int n = phi.source.size(), m = phi.target.size();
  int p = psi.source.size(), q = psi.target.size();
  std::vector<Term> lower_l, upper_l, lower_r, upper_r;
  for (int i = 0; i < n; ++i)
    lower_l.push_back(Term::gen(tensor_sgen_name(phi.source[i].name(), psi.name)));
  for (int l = 0; l < q; ++l)
    upper_l.push_back(Term::gen(tensor_rgen_name(phi.name, psi.target[l].name())));
  for (int j = 0; j < p; ++j)
    lower_r.push_back(Term::gen(tensor_rgen_name(phi.name, psi.source[j].name())));
  for (int k = 0; k < m; ++k)
    upper_r.push_back(Term::gen(tensor_sgen_name(phi.target[k].name(), psi.name)));
  Term lhs = Term::vcomp(
      Term::act(Perm::identity(q * n), block_transpose(m, q), Term::hchain(upper_l)),
      Term::act(Perm::identity(n * p), block_transpose(q, n), Term::hchain(lower_l)));
  Term rhs = Term::vcomp(
      Term::act(block_transpose(m, p), Perm::identity(m * q), Term::hchain(upper_r)),
      Term::act(block_transpose(p, n), Perm::identity(p * m), Term::hchain(lower_r)));
  return {lhs, rhs};
}

}  // namespace

Presentation tensor_presentation(const Presentation& r, const Presentation& s) {
  Presentation out = sharp_presentation(r, s);
  for (int rg = 0; rg < r.mega.generator_count(); ++rg)
    for (int sg = 0; sg < s.mega.generator_count(); ++sg)
      out.relations.push_back(
          octagon_terms(r.mega.generator(rg), s.mega.generator(sg)));
  out.validate();
  return out;
}

PropHom induced_map(const BilinearData& chi, const PresentedPropPtr& tensor) {
  require(check_bilinear(chi), "induced map: the data is not bilinear");
  const FreeMegagraph& tmega = tensor->free_prop().mega();
  const FreeMegagraph& rmega = chi.r->free_prop().mega();
  const FreeMegagraph& smega = chi.s->free_prop().mega();
  std::vector<int> cmap(tmega.colors().size(), -1);
  for (int a = 0; a < chi.r->colors().size(); ++a)
    for (int c = 0; c < chi.s->colors().size(); ++c) {
      int idx = tmega.colors().index_of(tensor_color_name(
          chi.r->colors().name(a), chi.s->colors().name(c)));
      require(idx >= 0, "induced map: tensor presentation names mismatch");
      cmap[idx] = chi.color_map[a][c];
    }
  std::vector<Morphism> images(tmega.generator_count(), Morphism());
  for (int g = 0; g < rmega.generator_count(); ++g)
    for (int c = 0; c < chi.s->colors().size(); ++c) {
      int idx = tmega.generator_index(
          tensor_rgen_name(rmega.generator(g).name, chi.s->colors().name(c)));
      require(idx >= 0, "induced map: missing tensor generator");
      images[idx] = chi.r_gen_images[g][c];
    }
  for (int a = 0; a < chi.r->colors().size(); ++a)
    for (int g = 0; g < smega.generator_count(); ++g) {
      int idx = tmega.generator_index(
          tensor_sgen_name(chi.r->colors().name(a), smega.generator(g).name));
      require(idx >= 0, "induced map: missing tensor generator");
      images[idx] = chi.s_gen_images[a][g];
    }
  return PropHom::from_generators(tensor, tmega, chi.t, std::move(cmap),
                                  std::move(images));
}

BilinearData restrict_to_bilinear(const PropHom& k, const PresentedPropPtr& r,
                                  const PresentedPropPtr& s,
                                  const PresentedPropPtr& tensor) {
  BilinearData chi;
  chi.r = r;
  chi.s = s;
  chi.t = k.target();
  int nr = r->colors().size(), ns = s->colors().size();
  const FreeMegagraph& tmega = tensor->free_prop().mega();
  chi.color_map.assign(nr, std::vector<int>(ns, 0));
  for (int a = 0; a < nr; ++a)
    for (int c = 0; c < ns; ++c) {
      int idx = tmega.colors().index_of(
          tensor_color_name(r->colors().name(a), s->colors().name(c)));
      chi.color_map[a][c] = k.map_color(tmega.colors().color(idx)).index();
    }
  const FreeMegagraph& rmega = r->free_prop().mega();
  const FreeMegagraph& smega = s->free_prop().mega();
  chi.r_gen_images.assign(rmega.generator_count(), {});
  for (int g = 0; g < rmega.generator_count(); ++g)
    for (int c = 0; c < ns; ++c)
      chi.r_gen_images[g].push_back(k.apply(tensor->generator(
          tensor_rgen_name(rmega.generator(g).name, s->colors().name(c)))));
  chi.s_gen_images.assign(nr, {});
  for (int a = 0; a < nr; ++a)
    for (int g = 0; g < smega.generator_count(); ++g)
      chi.s_gen_images[a].push_back(k.apply(tensor->generator(
          tensor_sgen_name(r->colors().name(a), smega.generator(g).name))));
  return chi;
}

Presentation bv_tensor(const Presentation& o, const Presentation& p) {
  for (int g = 0; g < o.mega.generator_count(); ++g)
    require(o.mega.generator(g).target.size() == 1,
            "BV tensor: operad generators need exactly one output");
  for (int g = 0; g < p.mega.generator_count(); ++g)
    require(p.mega.generator(g).target.size() == 1,
            "BV tensor: operad generators need exactly one output");
  Presentation out = sharp_presentation(o, p);
  // Interchange per generator pair: with single outputs the octagon
  // collapses to gamma-style interchange with one block transpose on
  // the lower-right layer.
  for (int og = 0; og < o.mega.generator_count(); ++og)
    for (int pg = 0; pg < p.mega.generator_count(); ++pg) {
      const Generator& phi = o.mega.generator(og);
      const Generator& psi = p.mega.generator(pg);
      int n = phi.source.size(), q = psi.source.size();
      std::vector<Term> left_lower, right_lower;
      for (int i = 0; i < n; ++i)
        left_lower.push_back(
            Term::gen(tensor_sgen_name(phi.source[i].name(), psi.name)));
      for (int j = 0; j < q; ++j)
        right_lower.push_back(
            Term::gen(tensor_rgen_name(phi.name, psi.source[j].name())));
      Term lhs = Term::vcomp(
          Term::gen(tensor_rgen_name(phi.name, psi.target[0].name())),
          Term::hchain(left_lower));
      Term rhs = Term::vcomp(
          Term::gen(tensor_sgen_name(phi.target[0].name(), psi.name)),
          Term::act(block_transpose(q, n), Perm::identity(q * 1),
                    Term::hchain(right_lower)));
      out.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  out.validate();
  return out;
}

bool bv_compat_check(const Presentation& o, const Presentation& p,
                     const std::vector<PropPtr>& targets, int vertex_bound,
                     int rewrite_depth) {
  Presentation bv = bv_tensor(o, p);
  Presentation tensored = tensor_presentation(o, p);
  PresentedPropPtr bv_prop = make_presented_prop(bv, vertex_bound, rewrite_depth);
  PresentedPropPtr t_prop = make_presented_prop(tensored, vertex_bound, rewrite_depth);
  for (const PropPtr& target : targets) {
    size_t via_bv = enumerate_prop_homs(bv_prop, target).size();
    size_t via_tensor = enumerate_prop_homs(t_prop, target).size();
    if (via_bv != via_tensor) return false;
  }
  return true;
}

}  // namespace propkit
