#include "propkit/end_prop.hpp"

#include <sstream>

namespace propkit {

namespace {

struct EndPayload final : MorphismPayload {
  std::vector<int> table;
};

std::string table_key(const std::vector<int>& table) {
  std::ostringstream os;
  os << 'f';
  for (int v : table) os << ',' << v;
  return os.str();
}

constexpr long kHomCap = 2000000;

}  // namespace

EndProp::EndProp(ColorSet colors, std::vector<int> set_sizes)
    : colors_(std::move(colors)), sizes_(std::move(set_sizes)) {
  require(static_cast<int>(sizes_.size()) == colors_.size(),
          "endomorphism prop: one set size per color");
  for (int s : sizes_) require(s >= 0, "endomorphism prop: negative set size");
}

std::string EndProp::name() const {
  std::string s = "End(";
  for (size_t i = 0; i < sizes_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sizes_[i]);
  }
  return s + ")";
}

int EndProp::set_size(const Color& c) const {
  require(c.owner() == colors_, "endomorphism prop: foreign color");
  return sizes_[c.index()];
}

long EndProp::domain_size(const ColorList& cs) const {
  long n = 1;
  for (int i = 0; i < cs.size(); ++i) n *= set_size(cs[i]);
  return n;
}

std::vector<int> EndProp::decode(const ColorList& cs, long index) const {
  std::vector<int> vals(cs.size());
  for (int i = cs.size() - 1; i >= 0; --i) {
    int s = set_size(cs[i]);
    vals[i] = static_cast<int>(index % s);
    index /= s;
  }
  return vals;
}

long EndProp::encode(const ColorList& cs, const std::vector<int>& values) const {
  long index = 0;
  for (int i = 0; i < cs.size(); ++i) index = index * set_size(cs[i]) + values[i];
  return index;
}

Morphism EndProp::function(const ColorList& source, const ColorList& target,
                           std::vector<int> table) const {
  long dom = domain_size(source), cod = domain_size(target);
  require(static_cast<long>(table.size()) == dom,
          "endomorphism prop: table size must equal the domain size");
  for (int v : table)
    require(v >= 0 && v < cod, "endomorphism prop: table value out of range");
  auto payload = std::make_shared<EndPayload>();
  payload->table = std::move(table);
  std::string key = table_key(payload->table);
  return Morphism(source, target, std::move(payload), std::move(key));
}

const std::vector<int>& EndProp::table(const Morphism& f) const {
  return f.payload_as<EndPayload>().table;
}

Morphism EndProp::identity(const Color& c) const {
  ColorList cl(std::vector<Color>{c});
  std::vector<int> t(set_size(c));
  for (size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i);
  return function(cl, cl, std::move(t));
}

Morphism EndProp::unit() const { return function(ColorList(), ColorList(), {0}); }

Morphism EndProp::compose_v(const Morphism& f, const Morphism& g) const {
  require(g.target() == f.source(),
          "endomorphism prop: vertical composition profile mismatch");
  const std::vector<int>& ft = table(f);
  const std::vector<int>& gt = table(g);
  std::vector<int> t(gt.size());
  for (size_t x = 0; x < gt.size(); ++x) t[x] = ft[gt[x]];
  return function(g.source(), f.target(), std::move(t));
}

Morphism EndProp::compose_h(const Morphism& f, const Morphism& g) const {
  ColorList src = f.source().concat(g.source());
  ColorList dst = f.target().concat(g.target());
  long fdom = domain_size(f.source()), gdom = domain_size(g.source());
  long gcod = domain_size(g.target());
  const std::vector<int>& ft = table(f);
  const std::vector<int>& gt = table(g);
  std::vector<int> t(fdom * gdom);
  for (long x = 0; x < fdom; ++x)
    for (long y = 0; y < gdom; ++y)
      t[x * gdom + y] = static_cast<int>(ft[x] * gcod + gt[y]);
  return function(std::move(src), std::move(dst), std::move(t));
}

Morphism EndProp::act(const Perm& sigma, const Perm& tau, const Morphism& f) const {
  require(sigma.degree() == f.source().size(),
          "endomorphism prop: sigma degree mismatch");
  require(tau.degree() == f.target().size(),
          "endomorphism prop: tau degree mismatch");
  ColorList src = f.source().act_right(sigma);
  ColorList dst = f.target().act_left(tau);
  const std::vector<int>& ft = table(f);
  std::vector<int> t(domain_size(src));
  Perm sigma_inv = sigma.inverse();
  for (long y = 0; y < static_cast<long>(t.size()); ++y) {
    std::vector<int> yv = decode(src, y);
    // x_j = y_{sigma^{-1}(j)} reads the reindexed tuple back.
    std::vector<int> xv(yv.size());
    for (int j = 0; j < f.source().size(); ++j) xv[j] = yv[sigma_inv(j)];
    std::vector<int> wv = decode(f.target(), ft[encode(f.source(), xv)]);
    std::vector<int> zv(wv.size());
    Perm tau_inv = tau.inverse();
    for (int k = 0; k < tau.degree(); ++k) zv[k] = wv[tau_inv(k)];
    t[y] = static_cast<int>(encode(dst, zv));
  }
  return function(std::move(src), std::move(dst), std::move(t));
}

std::vector<Morphism> EndProp::hom(const ColorList& source,
                                   const ColorList& target) const {
  long dom = domain_size(source), cod = domain_size(target);
  if (cod == 0 && dom > 0) return {};
  double total = 1;
  for (long i = 0; i < dom; ++i) {
    total *= static_cast<double>(cod);
    require(total <= kHomCap, "endomorphism prop: hom set too large to enumerate");
  }
  std::vector<Morphism> out;
  std::vector<int> t(dom, 0);
  while (true) {
    out.push_back(function(source, target, t));
    long i = dom - 1;
    for (; i >= 0; --i) {
      if (++t[i] < cod) break;
      t[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

EndPropPtr make_end_prop(ColorSet colors, std::vector<int> set_sizes) {
  return std::make_shared<EndProp>(std::move(colors), std::move(set_sizes));
}

EndPropPtr make_end_prop(int set_size) {
  return std::make_shared<EndProp>(ColorSet({"x"}), std::vector<int>{set_size});
}

}  // namespace propkit
