#include "propkit/perm_category.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "propkit/error.hpp"
#include "propkit/operad.hpp"

namespace propkit {

Morphism PermCategory::swap(const ColorList& a, const ColorList& b) const {
  Morphism id = identity(a.concat(b));
  return prop_->act(Perm::identity(a.size() + b.size()),
                    sigma_xy(b.size(), a.size()), id);
}

bool PermCategory::check_swap_axioms(const ColorList& a, const ColorList& b,
                                     const ColorList& c) const {
  const Prop& q = *prop_;
  // gamma gamma = id.
  Morphism once = swap(a, b);
  Morphism back = compose(swap(b, a), once);
  if (!q.equal(back, identity(a.concat(b)))) return false;
  // gamma_{a, b+c} = (gamma_{a,b} + 1_c) then (1_b + gamma_{a,c}).
  Morphism lhs = swap(a, b.concat(c));
  Morphism rhs = compose(oplus(identity(b), swap(a, c)), oplus(swap(a, b), identity(c)));
  if (!q.equal(lhs, rhs)) return false;
  // Unit law: swapping with the empty object is the identity.
  if (!q.equal(swap(a, ColorList()), identity(a))) return false;
  if (!q.equal(swap(ColorList(), a), identity(a))) return false;
  return true;
}

PermCategory prop_to_perm(PropPtr prop) { return PermCategory(std::move(prop)); }

namespace {

struct ULPayload final : MorphismPayload {
  Morphism inner;  // the underlying prop morphism on flattened lists
  explicit ULPayload(Morphism m) : inner(std::move(m)) {}
};

/// Colors are lists over the base prop's colors, bounded in length.
class TruncatedUL final : public Prop {
public:
  TruncatedUL(PropPtr base, int max_object_len)
      : base_(std::move(base)), max_len_(max_object_len) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> lists{{}};
    {
      std::vector<std::vector<int>> frontier{{}};
      for (int len = 1; len <= max_len_; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
          for (int c = 0; c < base_->colors().size(); ++c) {
            auto q = p;
            q.push_back(c);
            next.push_back(q);
          }
        lists.insert(lists.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
    }
    for (const auto& l : lists) {
      std::string nm = "[";
      for (size_t i = 0; i < l.size(); ++i) {
        if (i) nm += '.';
        nm += base_->colors().name(l[i]);
      }
      nm += ']';
      names.push_back(nm);
      object_lists_.push_back(l);
    }
    colors_ = ColorSet(names);
  }

  std::string name() const override { return "UL(" + base_->name() + ")"; }
  const ColorSet& colors() const override { return colors_; }

  ColorList flatten(const ColorList& cs) const {
    std::vector<Color> out;
    for (int i = 0; i < cs.size(); ++i) {
      require(cs[i].owner() == colors_, "UL: foreign color");
      for (int c : object_lists_[cs[i].index()])
        out.push_back(base_->colors().color(c));
    }
    return ColorList(std::move(out));
  }

  Morphism wrap(const ColorList& src, const ColorList& dst, Morphism inner) const {
    std::string key = inner.key();
    return Morphism(src, dst, std::make_shared<ULPayload>(std::move(inner)), key);
  }

  Morphism identity(const Color& c) const override {
    ColorList cl({c});
    return wrap(cl, cl, base_->identity_list(flatten(cl)));
  }
  Morphism unit() const override {
    return wrap(ColorList(), ColorList(), base_->unit());
  }
  Morphism compose_v(const Morphism& f, const Morphism& g) const override {
    require(g.target() == f.source(), "UL: vertical profile mismatch");
    return wrap(g.source(), f.target(),
                base_->compose_v(f.payload_as<ULPayload>().inner,
                                 g.payload_as<ULPayload>().inner));
  }
  Morphism compose_h(const Morphism& f, const Morphism& g) const override {
    return wrap(f.source().concat(g.source()), f.target().concat(g.target()),
                base_->compose_h(f.payload_as<ULPayload>().inner,
                                 g.payload_as<ULPayload>().inner));
  }
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override {
    require(sigma.degree() == f.source().size() && tau.degree() == f.target().size(),
            "UL: action degree mismatch");
    // Blocks of the flattened lists move with the object lists.
    std::vector<int> src_sizes, dst_sizes;
    for (int i = 0; i < f.source().size(); ++i)
      src_sizes.push_back(static_cast<int>(object_lists_[f.source()[i].index()].size()));
    for (int k = 0; k < f.target().size(); ++k)
      dst_sizes.push_back(static_cast<int>(object_lists_[f.target()[k].index()].size()));
    Perm src_block = block_permutation(sigma, src_sizes);
    // Left action: the new block k comes from old block tau^{-1}(k);
    // as a right-form block permutation that is block_permutation of
    // tau^{-1}, inverted.
    Perm dst_block = block_permutation(tau.inverse(), dst_sizes).inverse();
    return wrap(f.source().act_right(sigma), f.target().act_left(tau),
                base_->act(src_block, dst_block, f.payload_as<ULPayload>().inner));
  }
  bool equal(const Morphism& f, const Morphism& g) const override {
    return f.same_profile(g) && base_->equal(f.payload_as<ULPayload>().inner,
                                             g.payload_as<ULPayload>().inner);
  }
  std::vector<Morphism> hom(const ColorList& source,
                            const ColorList& target) const override {
    std::vector<Morphism> out;
    for (const Morphism& m : base_->hom(flatten(source), flatten(target)))
      out.push_back(wrap(source, target, m));
    return out;
  }

  const std::vector<std::vector<int>>& object_lists() const { return object_lists_; }

private:
  PropPtr base_;
  int max_len_;
  ColorSet colors_;
  std::vector<std::vector<int>> object_lists_;
};

}  // namespace

PropPtr perm_to_prop(const PermCategory& category, int max_object_len) {
  require(max_object_len >= 1, "perm_to_prop: need objects of length at least 1");
  return std::make_shared<TruncatedUL>(category.underlying_prop(), max_object_len);
}

int unit_color_index(const PropPtr& q, int color_index) {
  // Singleton lists come right after the empty list in generation
  // order: index 1 + color_index.
  require(color_index >= 0 && color_index < q->colors().size(),
          "unit_color_index: color out of range");
  return 1 + color_index;
}

}  // namespace propkit
