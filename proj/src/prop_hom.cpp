#include "propkit/prop_hom.hpp"

#include <algorithm>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

PropHom PropHom::from_generators(PropPtr source, FreeMegagraph mega, PropPtr target,
                                 std::vector<int> color_map,
                                 std::vector<Morphism> gen_images) {
  PropHom h;
  h.strategy_ = Strategy::generators;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.mega_ = std::move(mega);
  h.color_map_ = std::move(color_map);
  h.gen_images_ = std::move(gen_images);
  require(static_cast<int>(h.color_map_.size()) == h.source_->colors().size(),
          "prop hom: color map size mismatch");
  require(static_cast<int>(h.gen_images_.size()) == h.mega_.generator_count(),
          "prop hom: one image per generator required");
  return h;
}

PropHom PropHom::from_table(PropPtr source, PropPtr target,
                            std::vector<int> color_map,
                            std::map<std::string, Morphism> images_by_key) {
  PropHom h;
  h.strategy_ = Strategy::table;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.color_map_ = std::move(color_map);
  h.table_ = std::move(images_by_key);
  require(static_cast<int>(h.color_map_.size()) == h.source_->colors().size(),
          "prop hom: color map size mismatch");
  return h;
}

PropHom PropHom::to_terminal(PropPtr source, PropPtr star) {
  PropHom h;
  h.strategy_ = Strategy::terminal;
  h.source_ = std::move(source);
  h.target_ = std::move(star);
  h.color_map_.assign(h.source_->colors().size(), 0);
  return h;
}

PropHom PropHom::identity_hom(PropPtr prop) {
  PropHom h;
  h.strategy_ = Strategy::identity;
  h.source_ = prop;
  h.target_ = std::move(prop);
  h.color_map_.resize(h.source_->colors().size());
  for (size_t i = 0; i < h.color_map_.size(); ++i)
    h.color_map_[i] = static_cast<int>(i);
  return h;
}

Color PropHom::map_color(const Color& c) const {
  require(c.owner() == source_->colors(), "prop hom: foreign color");
  return target_->colors().color(color_map_[c.index()]);
}

ColorList PropHom::map_colors(const ColorList& cs) const {
  std::vector<Color> out;
  out.reserve(cs.size());
  for (int i = 0; i < cs.size(); ++i) out.push_back(map_color(cs[i]));
  return ColorList(std::move(out));
}

Morphism PropHom::apply(const Morphism& f) const {
  switch (strategy_) {
    case Strategy::identity:
      return f;
    case Strategy::terminal:
      return target_->hom(map_colors(f.source()), map_colors(f.target())).at(0);
    case Strategy::table: {
      auto it = table_.find(f.source().to_string() + "|" + f.target().to_string() +
                            "|" + f.key());
      require(it != table_.end(), "prop hom: morphism outside the table");
      return it->second;
    }
    case Strategy::generators: {
      MegaMapToProp mm(mega_, target_, color_map_, gen_images_);
      const auto& payload = f.payload_as<FreeMorphismPayload>();
      return evaluate_decoration(payload.canon.dec, mm);
    }
  }
  fail("unreachable prop hom strategy");
}

bool PropHom::valid() const {
  if (strategy_ == Strategy::generators) {
    MegaMapToProp mm(mega_, target_, color_map_, gen_images_);
    if (!mm.valid()) return false;
    if (auto presented = std::dynamic_pointer_cast<const PresentedProp>(source_)) {
      for (const auto& [lhs, rhs] : presented->presentation().relations) {
        Morphism l = apply(presented->eval(lhs));
        Morphism r = apply(presented->eval(rhs));
        if (!target_->equal(l, r)) return false;
      }
    }
  }
  return true;
}

bool PropHom::check_homomorphism(const std::vector<Morphism>& sample,
                                 int max_perm_degree) const {
  const Prop& dst = *target_;
  for (const Morphism& f : sample) {
    if (apply(f).source() != map_colors(f.source())) return false;
    if (apply(f).target() != map_colors(f.target())) return false;
    for (const Morphism& g : sample) {
      if (g.target() == f.source()) {
        Morphism lhs = apply(source_->compose_v(f, g));
        Morphism rhs = dst.compose_v(apply(f), apply(g));
        if (!dst.equal(lhs, rhs)) return false;
      }
      bool fits = true;
      if (auto len = source_->max_profile_len())
        fits = f.source().size() + g.source().size() <= *len &&
               f.target().size() + g.target().size() <= *len;
      if (auto len = dst.max_profile_len())
        fits = fits && f.source().size() + g.source().size() <= *len &&
               f.target().size() + g.target().size() <= *len;
      if (fits) {
        Morphism lhs = apply(source_->compose_h(f, g));
        Morphism rhs = dst.compose_h(apply(f), apply(g));
        if (!dst.equal(lhs, rhs)) return false;
      }
    }
    int n = f.source().size(), m = f.target().size();
    if (n <= max_perm_degree && m <= max_perm_degree)
      for (const Perm& s : all_perms(n))
        for (const Perm& t : all_perms(m)) {
          Morphism lhs = apply(source_->act(s, t, f));
          Morphism rhs = dst.act(s, t, apply(f));
          if (!dst.equal(lhs, rhs)) return false;
        }
  }
  for (const Color& c : source_->colors().all()) {
    Morphism lhs = apply(source_->identity(c));
    if (!dst.equal(lhs, dst.identity(map_color(c)))) return false;
  }
  if (!dst.equal(apply(source_->unit()), dst.unit())) return false;
  return true;
}

bool PropHom::operator==(const PropHom& rhs) const {
  return strategy_ == rhs.strategy_ && color_map_ == rhs.color_map_ &&
         gen_images_ == rhs.gen_images_ && table_ == rhs.table_;
}

bool PropHom::operator<(const PropHom& rhs) const {
  if (color_map_ != rhs.color_map_) return color_map_ < rhs.color_map_;
  if (gen_images_ != rhs.gen_images_) return gen_images_ < rhs.gen_images_;
  return table_ < rhs.table_;
}

std::string PropHom::describe() const {
  std::ostringstream os;
  os << "colors(";
  for (size_t i = 0; i < color_map_.size(); ++i) {
    if (i) os << ' ';
    os << source_->colors().name(static_cast<int>(i)) << ":"
       << target_->colors().name(color_map_[i]);
  }
  os << ")";
  for (size_t g = 0; g < gen_images_.size(); ++g)
    os << ' ' << mega_.generator(static_cast<int>(g)).name << "->"
       << gen_images_[g].key();
  return os.str();
}

namespace {

const FreeMegagraph& mega_of(const PropPtr& source) {
  if (auto fp = std::dynamic_pointer_cast<const FreeProp>(source)) return fp->mega();
  if (auto pp = std::dynamic_pointer_cast<const PresentedProp>(source))
    return pp->free_prop().mega();
  fail("enumerate_prop_homs: source must be a free or presented prop");
}

}  // namespace

std::vector<PropHom> enumerate_prop_homs(const PropPtr& source, const PropPtr& target) {
  const FreeMegagraph& mg = mega_of(source);
  std::vector<PropHom> out;
  for (const MegaMapToProp& mm : enumerate_mega_maps(mg, target)) {
    if (!mm.valid()) continue;
    std::vector<int> cmap;
    for (int c = 0; c < mg.colors().size(); ++c)
      cmap.push_back(mm.map_color(mg.colors().color(c)).index());
    std::vector<Morphism> imgs;
    for (int g = 0; g < mg.generator_count(); ++g) imgs.push_back(mm.gen_image(g));
    PropHom h = PropHom::from_generators(source, mg, target, cmap, imgs);
    if (h.valid()) out.push_back(std::move(h));
  }
  return out;
}

PropHom extend_mega_map(const std::shared_ptr<const FreeProp>& fp, MegaMapToProp f) {
  require(f.valid(), "extend: invalid megagraph map");
  std::vector<int> cmap;
  for (int c = 0; c < fp->mega().colors().size(); ++c)
    cmap.push_back(f.map_color(fp->mega().colors().color(c)).index());
  std::vector<Morphism> imgs;
  for (int g = 0; g < fp->mega().generator_count(); ++g)
    imgs.push_back(f.gen_image(g));
  return PropHom::from_generators(fp, fp->mega(), f.target_prop(), std::move(cmap),
                                  std::move(imgs));
}

MegaMapToProp adjunction_transpose(const std::shared_ptr<const FreeProp>& fp,
                                   const PropHom& k) {
  const FreeMegagraph& mg = fp->mega();
  std::vector<int> cmap;
  for (int c = 0; c < mg.colors().size(); ++c)
    cmap.push_back(k.map_color(mg.colors().color(c)).index());
  std::vector<Morphism> imgs;
  for (int g = 0; g < mg.generator_count(); ++g)
    imgs.push_back(k.apply(fp->corolla(g >= 0 ? mg.generator(g).name : "")));
  return MegaMapToProp(mg, k.target(), std::move(cmap), std::move(imgs));
}

bool algebra_check(const PropHom& algebra, const std::vector<Morphism>& sample) {
  return algebra.valid() && algebra.check_homomorphism(sample);
}

}  // namespace propkit
