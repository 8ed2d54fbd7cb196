#include "propkit/prop.hpp"

namespace propkit {

Morphism Prop::identity_list(const ColorList& cs) const {
  Morphism out = unit();
  for (int i = 0; i < cs.size(); ++i)
    out = compose_h(out, identity(cs[i]));
  return out;
}

void Prop::check_profile(const Morphism& f, const ColorList& source,
                         const ColorList& target,
                         const std::string& where) const {
  require(f.source() == source && f.target() == target,
          where + ": profile mismatch, morphism is " + f.source().to_string() +
              " -> " + f.target().to_string() + " but expected " +
              source.to_string() + " -> " + target.to_string());
}

namespace {

struct StarPayload final : MorphismPayload {};

class TerminalProp final : public Prop {
public:
  TerminalProp() : colors_(std::vector<std::string>{"1"}) {}

  std::string name() const override { return "terminal"; }
  const ColorSet& colors() const override { return colors_; }

  Morphism make(int n, int m) const {
    std::vector<Color> src(n, colors_.color(0)), dst(m, colors_.color(0));
    return Morphism(ColorList(src), ColorList(dst),
                    std::make_shared<StarPayload>(), "*");
  }

  Morphism identity(const Color& c) const override {
    require(c.owner() == colors_, "terminal prop: foreign color");
    return make(1, 1);
  }
  Morphism unit() const override { return make(0, 0); }

  Morphism compose_v(const Morphism& f, const Morphism& g) const override {
    require(g.target() == f.source(), "terminal prop: profile mismatch in vertical composition");
    return make(g.source().size(), f.target().size());
  }
  Morphism compose_h(const Morphism& f, const Morphism& g) const override {
    return make(f.source().size() + g.source().size(),
                f.target().size() + g.target().size());
  }
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override {
    require(sigma.degree() == f.source().size() && tau.degree() == f.target().size(),
            "terminal prop: action degree mismatch");
    return make(f.source().size(), f.target().size());
  }
  std::vector<Morphism> hom(const ColorList& source, const ColorList& target) const override {
    for (int i = 0; i < source.size(); ++i)
      require(source[i].owner() == colors_, "terminal prop: foreign color");
    for (int i = 0; i < target.size(); ++i)
      require(target[i].owner() == colors_, "terminal prop: foreign color");
    return {make(source.size(), target.size())};
  }

private:
  ColorSet colors_;
};

}  // namespace

PropPtr terminal_prop() { return std::make_shared<TerminalProp>(); }

}  // namespace propkit
