#include "propkit/axioms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace propkit {

long AxiomReport::total() const {
  long n = 0;
  for (const auto& [axiom, count] : checked) n += count;
  return n;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& [axiom, count] : checked) {
    os << axiom << ": " << count << " instances, ";
    auto it = first_fail.find(axiom);
    if (it == first_fail.end())
      os << "pass\n";
    else
      os << "FAIL (" << it->second << ")\n";
  }
  return os.str();
}

namespace {

class Checker {
public:
  Checker(const PropPtr& prop, const std::vector<Morphism>& sample,
          const AxiomCheckOptions& options)
      : prop_(*prop), sample_(sample), opt_(options) {
    if (auto len = prop_.max_profile_len()) max_len_ = *len;
  }

  AxiomReport run() {
    identities();
    hv_interchange();
    vert_compat();
    horiz_compat();
    horiz_swap();
    action_laws();
    return report_;
  }

private:
  bool fits(const ColorList& cs) const { return cs.size() <= max_len_; }

  std::vector<Perm> perms(int degree) const {
    if (degree > opt_.max_perm_degree) {
      // Degenerate but nontrivial coverage beyond the exhaustive range.
      std::vector<int> rot(degree);
      for (int i = 0; i < degree; ++i) rot[i] = (i + 1) % degree;
      return {Perm::identity(degree), Perm(rot)};
    }
    return all_perms(degree);
  }

  void note(const std::string& axiom, bool pass, const std::string& detail) {
    ++report_.checked[axiom];
    if (!pass && !report_.first_fail.count(axiom)) report_.first_fail[axiom] = detail;
  }

  // Corrupted tables may fail with profile errors instead of unequal
  // results; both count as counterexamples.
  template <typename Fn>
  void guarded(const std::string& axiom, const std::string& detail, Fn&& fn) {
    try {
      note(axiom, fn(), detail);
    } catch (const Error& e) {
      note(axiom, false, detail + " (" + e.what() + ")");
    }
  }

  std::string desc(const Morphism& f) const {
    return f.source().to_string() + "->" + f.target().to_string() + " [" +
           f.key().substr(0, 40) + "]";
  }

  void identities() {
    for (const Morphism& f : sample_) {
      guarded("identity.right", desc(f), [&] {
        return prop_.equal(prop_.compose_v(f, prop_.identity_list(f.source())), f);
      });
      guarded("identity.left", desc(f), [&] {
        return prop_.equal(prop_.compose_v(prop_.identity_list(f.target()), f), f);
      });
    }
  }

  // All sample pairs (f, g) with g's target equal to f's source.
  template <typename Fn>
  void composable_pairs(Fn&& fn) {
    long used = 0;
    for (const Morphism& f : sample_)
      for (const Morphism& g : sample_) {
        if (g.target() != f.source()) continue;
        if (++used > opt_.max_pairs) return;
        fn(f, g);
      }
  }

  void hv_interchange() {
    long used = 0;
    std::vector<std::pair<Morphism, Morphism>> vpairs;
    composable_pairs([&](const Morphism& f, const Morphism& g) {
      vpairs.emplace_back(f, g);
    });
    for (const auto& [f, g] : vpairs)
      for (const auto& [f2, g2] : vpairs) {
        if (!fits(g.source().concat(g2.source())) ||
            !fits(f.target().concat(f2.target())) ||
            !fits(f.source().concat(f2.source())))
          continue;
        if (++used > opt_.max_pairs) return;
        guarded("interchange.hv", desc(f) + " ; " + desc(g), [&] {
          Morphism lhs =
              prop_.compose_h(prop_.compose_v(f, g), prop_.compose_v(f2, g2));
          Morphism rhs =
              prop_.compose_v(prop_.compose_h(f, f2), prop_.compose_h(g, g2));
          return prop_.equal(lhs, rhs);
        });
      }
  }

  void vert_compat() {
    composable_pairs([&](const Morphism& f, const Morphism& g) {
      std::string at = desc(f) + " ; " + desc(g);
      int mid = f.source().size();
      for (const Perm& s : perms(mid))
        guarded("vertcompat.middle", at, [&] {
          Morphism lhs =
              prop_.compose_v(f, prop_.act(Perm::identity(g.source().size()), s, g));
          Morphism rhs =
              prop_.compose_v(prop_.act(s, Perm::identity(f.target().size()), f), g);
          return prop_.equal(lhs, rhs);
        });
      for (const Perm& s : perms(g.source().size()))
        guarded("vertcompat.lower", at, [&] {
          Morphism lhs =
              prop_.act(s, Perm::identity(f.target().size()), prop_.compose_v(f, g));
          Morphism rhs =
              prop_.compose_v(f, prop_.act(s, Perm::identity(g.target().size()), g));
          return prop_.equal(lhs, rhs);
        });
      for (const Perm& t : perms(f.target().size()))
        guarded("vertcompat.upper", at, [&] {
          Morphism lhs =
              prop_.act(Perm::identity(g.source().size()), t, prop_.compose_v(f, g));
          Morphism rhs =
              prop_.compose_v(prop_.act(Perm::identity(f.source().size()), t, f), g);
          return prop_.equal(lhs, rhs);
        });
    });
  }

  void horiz_compat() {
    long used = 0;
    for (const Morphism& f : sample_)
      for (const Morphism& g : sample_) {
        if (!fits(f.source().concat(g.source())) ||
            !fits(f.target().concat(g.target())))
          continue;
        if (++used > opt_.max_pairs) return;
        std::string at = desc(f) + " ; " + desc(g);
        int n = f.source().size(), p = g.source().size();
        int m = f.target().size(), q = g.target().size();
        for (const Perm& s : perms(n))
          for (const Perm& sb : perms(p))
            guarded("horizcompat.source", at, [&] {
              Morphism lhs = prop_.compose_h(prop_.act(s, Perm::identity(m), f),
                                             prop_.act(sb, Perm::identity(q), g));
              Morphism rhs = prop_.act(s.direct_sum(sb), Perm::identity(m + q),
                                       prop_.compose_h(f, g));
              return prop_.equal(lhs, rhs);
            });
        for (const Perm& t : perms(m))
          for (const Perm& tb : perms(q))
            guarded("horizcompat.target", at, [&] {
              Morphism lhs = prop_.compose_h(prop_.act(Perm::identity(n), t, f),
                                             prop_.act(Perm::identity(p), tb, g));
              Morphism rhs = prop_.act(Perm::identity(n + p), t.direct_sum(tb),
                                       prop_.compose_h(f, g));
              return prop_.equal(lhs, rhs);
            });
      }
  }

  void horiz_swap() {
    long used = 0;
    for (const Morphism& f : sample_)
      for (const Morphism& g : sample_) {
        if (!fits(f.source().concat(g.source())) ||
            !fits(f.target().concat(g.target())))
          continue;
        if (++used > opt_.max_pairs) return;
        guarded("horizswap", desc(f) + " ; " + desc(g), [&] {
          int n = f.source().size(), p = g.source().size();
          int m = f.target().size(), q = g.target().size();
          Morphism lhs =
              prop_.act(sigma_xy(n, p), sigma_xy(q, m), prop_.compose_h(f, g));
          return prop_.equal(lhs, prop_.compose_h(g, f));
        });
      }
  }

  void action_laws() {
    for (const Morphism& f : sample_) {
      int n = f.source().size(), m = f.target().size();
      for (const Perm& s1 : perms(n))
        for (const Perm& s2 : perms(n))
          guarded("action.right", desc(f), [&] {
            Morphism lhs = prop_.act(s2, Perm::identity(m),
                                     prop_.act(s1, Perm::identity(m), f));
            return prop_.equal(lhs, prop_.act(s1 * s2, Perm::identity(m), f));
          });
      for (const Perm& t1 : perms(m))
        for (const Perm& t2 : perms(m))
          guarded("action.left", desc(f), [&] {
            Morphism lhs = prop_.act(Perm::identity(n), t2,
                                     prop_.act(Perm::identity(n), t1, f));
            return prop_.equal(lhs, prop_.act(Perm::identity(n), t2 * t1, f));
          });
      for (const Perm& s : perms(std::min(n, 3)))
        for (const Perm& t : perms(std::min(m, 3)))
          guarded("action.interchange", desc(f), [&] {
            Perm se = s.direct_sum(Perm::identity(n - s.degree()));
            Perm te = t.direct_sum(Perm::identity(m - t.degree()));
            Morphism lhs =
                prop_.act(se, Perm::identity(m), prop_.act(Perm::identity(n), te, f));
            Morphism rhs =
                prop_.act(Perm::identity(n), te, prop_.act(se, Perm::identity(m), f));
            return prop_.equal(lhs, rhs);
          });
    }
  }

  const Prop& prop_;
  const std::vector<Morphism>& sample_;
  AxiomCheckOptions opt_;
  int max_len_ = 1 << 20;
  AxiomReport report_;
};

}  // namespace

AxiomReport check_prop_axioms(const PropPtr& prop,
                              const std::vector<Morphism>& sample,
                              const AxiomCheckOptions& options) {
  return Checker(prop, sample, options).run();
}

std::vector<Morphism> enumerate_all_morphisms(const PropPtr& prop, int max_len) {
  std::vector<Morphism> out;
  std::vector<std::vector<Color>> profiles{{}};
  {
    std::vector<std::vector<Color>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::vector<Color>> next;
      for (const auto& p : frontier)
        for (const Color& c : prop->colors().all()) {
          auto q = p;
          q.push_back(c);
          next.push_back(q);
        }
      profiles.insert(profiles.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }
  for (const auto& sp : profiles)
    for (const auto& tp : profiles)
      for (const Morphism& m : prop->hom(ColorList(sp), ColorList(tp)))
        out.push_back(m);
  return out;
}

SubpropClosure subprop_generated(const PropPtr& prop,
                                 const std::vector<Morphism>& seed,
                                 const SubpropOptions& options) {
  auto keep = [&](const Morphism& m) {
    if (m.source().size() > options.max_profile_len ||
        m.target().size() > options.max_profile_len)
      return false;
    if (auto len = prop->max_profile_len())
      if (m.source().size() > *len || m.target().size() > *len) return false;
    return !options.keep || options.keep(m);
  };

  std::set<Morphism> closure;
  auto add = [&](const Morphism& m) {
    if (!keep(m)) return false;
    return closure.insert(m).second;
  };

  add(prop->unit());
  for (const Morphism& m : seed) {
    add(m);
    std::set<Color> cs;
    for (int i = 0; i < m.source().size(); ++i) cs.insert(m.source()[i]);
    for (int i = 0; i < m.target().size(); ++i) cs.insert(m.target()[i]);
    for (const Color& c : cs) add(prop->identity(c));
  }

  bool complete = false;
  for (int round = 0; round < options.iterations && !complete; ++round) {
    std::vector<Morphism> snapshot(closure.begin(), closure.end());
    bool grew = false;
    for (const Morphism& f : snapshot) {
      int n = f.source().size(), m = f.target().size();
      if (n <= options.max_perm_degree)
        for (const Perm& s : all_perms(n))
          grew |= add(prop->act(s, Perm::identity(m), f));
      if (m <= options.max_perm_degree)
        for (const Perm& t : all_perms(m))
          grew |= add(prop->act(Perm::identity(n), t, f));
      for (const Morphism& g : snapshot) {
        if (g.target() == f.source()) grew |= add(prop->compose_v(f, g));
        if (f.source().size() + g.source().size() <= options.max_profile_len &&
            f.target().size() + g.target().size() <= options.max_profile_len)
          grew |= add(prop->compose_h(f, g));
      }
    }
    complete = !grew;
  }
  SubpropClosure out;
  out.elements.assign(closure.begin(), closure.end());
  out.complete = complete;
  return out;
}

}  // namespace propkit
