#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "decoration_gen.hpp"
#include "oracles.hpp"
#include "propkit/error.hpp"
#include "propkit/free_prop.hpp"

using namespace propkit;

namespace {

FreeMegagraph binary_mg() {
  return FreeMegagraph::parse_string("colors c\ngen m : c,c -> c\n");
}

FreeMegagraph two_gen_mg() {
  return FreeMegagraph::parse_string("colors c\ngen m : c,c -> c\ngen w : c -> c,c\n");
}

ColorList cs(const FreeMegagraph& mg, int n) {
  return ColorList(std::vector<Color>(n, mg.colors().color(0)));
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::mt19937 rng(987654);

}  // namespace

TEST_CASE("identities and the unit") {
  FreeProp fp(binary_mg());
  Color c = fp.colors().color(0);
  Morphism id = fp.identity(c);
  CHECK(id.source() == cs(fp.mega(), 1));
  CHECK(id.target() == cs(fp.mega(), 1));
  CHECK(fp.from_decoration(fp.canonical(id).dec) == id);  // idempotent

  Morphism unit = fp.unit();
  CHECK(unit.source().empty());
  CHECK(unit.target().empty());
  CHECK(fp.compose_h(unit, id) == id);
  CHECK(fp.compose_h(id, unit) == id);

  Morphism m = fp.corolla("m");
  CHECK(m.source() == cs(fp.mega(), 2));
  CHECK(m.target() == cs(fp.mega(), 1));
  CHECK(fp.compose_v(id, m) == m);
  CHECK(fp.compose_v(m, fp.identity_list(m.source())) == m);
}

TEST_CASE("corolla commutes with the bimodule action") {
  FreeProp fp(binary_mg());
  FreeArrow m = fp.mega().arrow("m");
  for (const Perm& s : all_perms(2))
    for (const Perm& t : all_perms(1)) {
      Morphism lhs = fp.corolla(fp.mega().act(m, t, s));
      Morphism rhs = fp.act(s, t, fp.corolla(m));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("every one-vertex decoration is a corolla image") {
  FreeProp fp(binary_mg());
  // Enumerate all 1-vertex morphisms of every profile that admits them.
  std::set<Morphism> corollas;
  FreeArrow m = fp.mega().arrow("m");
  for (const Perm& s : all_perms(2)) corollas.insert(fp.corolla(fp.mega().act(m, Perm::identity(1), s)));
  std::vector<Morphism> listed = fp.enumerate_hom(cs(fp.mega(), 2), cs(fp.mega(), 1), 1);
  for (const Morphism& f : listed)
    if (fp.canonical(f).dec.graph.vertex_count() == 1)
      CHECK(corollas.count(f) == 1);
}

TEST_CASE("m and its input swap are distinct morphisms") {
  FreeProp fp(binary_mg());
  Morphism m = fp.corolla("m");
  Morphism swapped = fp.act(Perm::from_one_line({2, 1}), Perm::identity(1), m);
  CHECK(m != swapped);
  CHECK(fp.act(Perm::identity(2), Perm::identity(1), m) == m);
}

TEST_CASE("relabeled decorations canonicalize identically") {
  FreeProp fp(two_gen_mg());
  for (int trial = 0, produced = 0; trial < 200 && produced < 60; ++trial) {
    auto d = testgen::random_decoration(fp.mega(), rng, 3);
    if (!d) continue;
    ++produced;
    // Relabel edges and vertices by random permutations.
    int ne = d->graph.edge_count(), nv = d->graph.vertex_count();
    std::vector<int> eperm(ne), vperm(nv);
    for (int i = 0; i < ne; ++i) eperm[i] = i;
    for (int i = 0; i < nv; ++i) vperm[i] = i;
    std::shuffle(eperm.begin(), eperm.end(), rng);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    Decoration moved;
    std::vector<std::pair<int, int>> edges(ne);
    moved.edge_colors.resize(ne);
    for (int e = 0; e < ne; ++e) {
      auto [s, t] = d->graph.edges()[e];
      edges[eperm[e]] = {s == kBoundary ? kBoundary : vperm[s],
                         t == kBoundary ? kBoundary : vperm[t]};
      moved.edge_colors[eperm[e]] = d->edge_colors[e];
    }
    moved.graph = Graph(nv, edges);
    moved.vertex_labels.resize(nv);
    moved.in_ports.resize(nv);
    moved.out_ports.resize(nv);
    auto mapl = [&](const std::vector<int>& xs) {
      std::vector<int> ys(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) ys[i] = eperm[xs[i]];
      return ys;
    };
    for (int v = 0; v < nv; ++v) {
      moved.vertex_labels[vperm[v]] = d->vertex_labels[v];
      moved.in_ports[vperm[v]] = mapl(d->in_ports[v]);
      moved.out_ports[vperm[v]] = mapl(d->out_ports[v]);
    }
    moved.in_order = mapl(d->in_order);
    moved.out_order = mapl(d->out_order);
    CHECK(canonicalize(*d, fp.mega()).code == canonicalize(moved, fp.mega()).code);
    CHECK(related_by_automorphism(*d, moved, fp.mega()));
  }
}

TEST_CASE("interior permutation moves do not change the morphism") {
  FreeProp fp(two_gen_mg());
  const FreeMegagraph& mg = fp.mega();
  // m o w : two parallel internal edges between the vertices.
  Morphism mw = fp.compose_v(fp.corolla("m"), fp.corolla("w"));
  Decoration d = fp.canonical(mw).dec;
  // Locate the top vertex (labelled m) and bottom vertex (labelled w).
  int top = d.vertex_labels[0].gen == mg.generator_index("m") ? 0 : 1;
  int bottom = 1 - top;
  REQUIRE(d.in_ports[top] == d.out_ports[bottom]);
  Perm gamma = Perm::from_one_line({2, 1});
  Decoration moved = d;
  moved.vertex_labels[top] = mg.act(moved.vertex_labels[top], Perm::identity(1), gamma);
  moved.in_ports[top] = gamma.act_right(moved.in_ports[top]);
  moved.vertex_labels[bottom] = mg.act(moved.vertex_labels[bottom], gamma.inverse(), Perm::identity(1));
  moved.out_ports[bottom] = gamma.inverse().act_left(moved.out_ports[bottom]);
  moved.validate(mg);
  CHECK(canonicalize(moved, mg).code == fp.canonical(mw).code);
  CHECK(related_by_automorphism(d, moved, mg));
}

TEST_CASE("canonical equality agrees with the definitional relation") {
  FreeProp fp(two_gen_mg());
  std::vector<Decoration> pool;
  for (int trial = 0; trial < 400 && pool.size() < 40; ++trial) {
    auto d = testgen::random_decoration(fp.mega(), rng, 2, 2);
    if (d) pool.push_back(*d);
  }
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i; j < pool.size(); ++j) {
      bool canon_eq =
          canonicalize(pool[i], fp.mega()).code == canonicalize(pool[j], fp.mega()).code;
      bool related = related_by_automorphism(pool[i], pool[j], fp.mega());
      CHECK(canon_eq == related);
    }
}

TEST_CASE("composition laws") {
  FreeProp fp(binary_mg());
  Morphism m = fp.corolla("m");
  Morphism id = fp.identity(fp.colors().color(0));

  SUBCASE("associativity of both compositions") {
    Morphism mm = fp.compose_h(m, m);
    Morphism a = fp.compose_h(fp.compose_h(m, id), mm);
    Morphism b = fp.compose_h(m, fp.compose_h(id, mm));
    CHECK(a == b);

    Morphism f = fp.compose_v(m, fp.compose_h(m, id));
    Morphism g = fp.compose_h(m, id);
    // (m o g) o (g o_h stuff): check v-associativity on a random-ish triple.
    Morphism h = fp.compose_h(fp.compose_h(m, id), id);
    Morphism lhs = fp.compose_v(fp.compose_v(m, g), h);
    Morphism rhs = fp.compose_v(m, fp.compose_v(g, h));
    CHECK(lhs == rhs);
    CHECK(f.source() == cs(fp.mega(), 3));
  }

  SUBCASE("horizontal swap law") {
    // With source reindexing a_{sigma(i)} and target reindexing
    // b_{tau^{-1}(k)}, swapping the factors uses sigma_{n,p} upstairs
    // and sigma_{q,m} downstairs.
    Morphism f = fp.compose_v(m, fp.compose_h(m, id));  // 3 -> 1
    Morphism g = m;                                     // 2 -> 1
    int n = f.source().size(), mm = f.target().size();
    int p = g.source().size(), q = g.target().size();
    Morphism lhs = fp.act(sigma_xy(n, p), sigma_xy(q, mm), fp.compose_h(f, g));
    CHECK(lhs == fp.compose_h(g, f));
  }

  SUBCASE("interchange of horizontal and vertical composition") {
    Morphism g = fp.compose_h(m, id);  // 3 -> 2
    Morphism f = m;                    // 2 -> 1
    Morphism fprime = m;
    Morphism gprime = fp.compose_h(id, m);  // 3 -> 2
    Morphism lhs = fp.compose_h(fp.compose_v(f, g), fp.compose_v(fprime, gprime));
    Morphism rhs = fp.compose_v(fp.compose_h(f, fprime), fp.compose_h(g, gprime));
    CHECK(lhs == rhs);
  }

  SUBCASE("vertical compatibility with the actions") {
    Morphism g = fp.compose_h(m, m);  // 4 -> 2
    for (const Perm& s : all_perms(2)) {
      Morphism lhs = fp.compose_v(m, fp.act(Perm::identity(4), s, g));
      Morphism rhs = fp.compose_v(fp.act(s, Perm::identity(1), m), g);
      CHECK(lhs == rhs);
    }
    for (const Perm& s : all_perms(4)) {
      CHECK(fp.act(s, Perm::identity(1), fp.compose_v(m, g)) ==
            fp.compose_v(m, fp.act(s, Perm::identity(2), g)));
    }
  }

  SUBCASE("action interchange and action laws") {
    Morphism g = fp.compose_h(m, m);  // 4 -> 2
    for (const Perm& s : all_perms(4))
      for (const Perm& t : all_perms(2)) {
        Morphism a = fp.act(s, Perm::identity(2), fp.act(Perm::identity(4), t, g));
        Morphism b = fp.act(Perm::identity(4), t, fp.act(s, Perm::identity(2), g));
        CHECK(a == b);
      }
    for (const Perm& s1 : all_perms(3)) {
      Morphism f = fp.compose_v(m, fp.compose_h(m, id));  // 3 -> 1
      for (const Perm& s2 : all_perms(3))
        CHECK(fp.act(s2, Perm::identity(1), fp.act(s1, Perm::identity(1), f)) ==
              fp.act(s1 * s2, Perm::identity(1), f));
    }
  }

  SUBCASE("horizontal compatibility with the actions") {
    Morphism f = m;
    Morphism g = fp.compose_h(m, id);  // 3 -> 2
    for (const Perm& s : all_perms(2))
      for (const Perm& sb : all_perms(3)) {
        Morphism lhs = fp.compose_h(fp.act(s, Perm::identity(1), f),
                                    fp.act(sb, Perm::identity(2), g));
        Morphism rhs = fp.act(s.direct_sum(sb), Perm::identity(3), fp.compose_h(f, g));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("canonicalization is a congruence for composition") {
  FreeProp fp(two_gen_mg());
  for (int trial = 0, produced = 0; trial < 300 && produced < 30; ++trial) {
    auto a = testgen::random_decoration(fp.mega(), rng, 2, 2);
    if (!a) continue;
    auto b = testgen::random_decoration(fp.mega(), rng, 1, 3);
    if (!b) continue;
    Morphism fa = fp.from_decoration(*a);
    Morphism fb = fp.from_decoration(*b);
    if (fa.source() != fb.target()) {
      // Horizontal composition needs no profile match.
      Morphism direct = fp.from_decoration(decoration_compose_h(*a, *b));
      CHECK(direct == fp.compose_h(fa, fb));
      ++produced;
      continue;
    }
    Morphism direct = fp.from_decoration(decoration_compose_v(*a, *b, fp.mega()));
    CHECK(direct == fp.compose_v(fa, fb));
    ++produced;
  }
}

TEST_CASE("hom enumeration counts for the one-binary-generator prop") {
  FreeProp fp(binary_mg());
  CHECK(fp.enumerate_hom(cs(fp.mega(), 1), cs(fp.mega(), 1), 3).size() == 1);
  CHECK(fp.enumerate_hom(cs(fp.mega(), 2), cs(fp.mega(), 1), 1).size() == 2);
  CHECK(fp.enumerate_hom(cs(fp.mega(), 3), cs(fp.mega(), 1), 2).size() == 12);
  // n! * Catalan(n-1) for n inputs, one output.
  for (int n = 1; n <= 3; ++n)
    CHECK(fp.enumerate_hom(cs(fp.mega(), n), cs(fp.mega(), 1), n - 1).size() ==
          factorial(n) * catalan(n - 1));
}

TEST_CASE("enumeration is complete and stable under renaming") {
  FreeMegagraph renamed =
      FreeMegagraph::parse_string("colors z\ngen mul : z,z -> z\n");
  FreeProp fp(renamed);
  ColorList z3(std::vector<Color>(3, renamed.colors().color(0)));
  ColorList z1(std::vector<Color>(1, renamed.colors().color(0)));
  CHECK(fp.enumerate_hom(z3, z1, 2).size() == 12);
}

TEST_CASE("two-color enumeration counts") {
  FreeMegagraph mg = FreeMegagraph::parse_string("colors a,b\ngen f : a -> b\n");
  FreeProp fp(mg);
  Color a = mg.colors().color("a"), b = mg.colors().color("b");
  CHECK(fp.enumerate_hom(ColorList({a}), ColorList({b}), 1).size() == 1);
  CHECK(fp.enumerate_hom(ColorList({a}), ColorList({a}), 2).size() == 1);  // id only
  CHECK(fp.enumerate_hom(ColorList({b}), ColorList({a}), 2).empty());
  // Two parallel copies of f: the identity wiring and the crossed one;
  // swapping both boundaries at once is a vertex-swap automorphism.
  std::vector<Morphism> two =
      fp.enumerate_hom(ColorList({a, a}), ColorList({b, b}), 2);
  CHECK(two.size() == 2);
  Morphism ff = fp.compose_h(fp.corolla("f"), fp.corolla("f"));
  CHECK(fp.act(Perm::from_one_line({2, 1}), Perm::from_one_line({2, 1}), ff) == ff);
  CHECK(fp.act(Perm::from_one_line({2, 1}), Perm::identity(2), ff) != ff);
}

TEST_CASE("vertical splits recompose to the original morphism") {
  FreeProp fp(two_gen_mg());
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 25; ++trial) {
    auto d = testgen::random_decoration(fp.mega(), rng, 3, 2);
    if (!d) continue;
    Morphism whole = fp.from_decoration(*d);
    for (const std::vector<int>& layer : proper_lower_layers(*d)) {
      auto [top, bottom] = vertical_split(*d, layer);
      top.validate(fp.mega());
      bottom.validate(fp.mega());
      Morphism glued = fp.compose_v(fp.from_decoration(top), fp.from_decoration(bottom));
      CHECK(glued == whole);
      ++checked;
    }
  }
  CHECK(checked >= 25);
}

TEST_CASE("horizontal factorization recomposes to the original") {
  FreeProp fp(two_gen_mg());
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 30; ++trial) {
    auto d = testgen::random_decoration(fp.mega(), rng, 2, 3);
    if (!d) continue;
    HorizontalFactorization parts = horizontal_factorize(*d);
    Morphism h = fp.unit();
    for (const Decoration& comp : parts.components)
      h = fp.compose_h(h, fp.from_decoration(comp));
    CHECK(fp.act(parts.sigma, parts.tau, h) == fp.from_decoration(*d));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("extension to the terminal prop") {
  FreeProp fp(binary_mg());
  PropPtr star = terminal_prop();
  Color sc = star->colors().color(0);
  ColorList cc(std::vector<Color>(2, sc)), c1(std::vector<Color>(1, sc));
  MegaMapToProp f(fp.mega(), star, {0}, {star->hom(cc, c1)[0]});
  REQUIRE(f.valid());
  for (const Morphism& mor : fp.enumerate_hom(cs(fp.mega(), 3), cs(fp.mega(), 1), 2)) {
    Morphism image = evaluate_free_morphism(fp, mor, f);
    CHECK(image.source().size() == 3);
    CHECK(image.target().size() == 1);
  }
}

TEST_CASE("functorial relabeling preserves structure") {
  FreeMegagraph mg = binary_mg();
  FreeMegagraph other = FreeMegagraph::parse_string("colors d\ngen n : d,d -> d\n");
  FreeProp fp(mg), gp(other);
  MegaMapToFree rename(mg, other, {0}, {other.arrow("n")});
  MegaMapToFree ident = MegaMapToFree::identity(mg);

  Morphism m = fp.corolla("m");
  Morphism t = fp.compose_v(m, fp.compose_h(m, fp.identity(fp.colors().color(0))));
  CHECK(map_free_morphism(fp, fp, ident, t) == t);

  Morphism image = map_free_morphism(fp, gp, rename, t);
  CHECK(image.source().size() == 3);
  // Functoriality on a composable pair.
  Morphism lhs = map_free_morphism(fp, gp, rename, fp.compose_v(m, fp.compose_h(m, fp.identity(fp.colors().color(0)))));
  Morphism rhs = gp.compose_v(map_free_morphism(fp, gp, rename, m),
                              gp.compose_h(map_free_morphism(fp, gp, rename, m),
                                           gp.identity(gp.colors().color(0))));
  CHECK(lhs == rhs);
}

TEST_CASE("independent brute-force enumeration oracle") {
  // Raw enumeration over matchings, grouped by the definitional
  // relation; no canonical forms involved.
  FreeMegagraph mg = binary_mg();
  CHECK(oracles::count_binary_hom_raw(mg, 1, 0) == 1);
  CHECK(oracles::count_binary_hom_raw(mg, 2, 1) == 2);
  CHECK(oracles::count_binary_hom_raw(mg, 3, 2) == 12);
}

TEST_CASE("rejects invalid decorations and bounds") {
  FreeProp fp(binary_mg());
  CHECK_THROWS_AS(fp.enumerate_hom(cs(fp.mega(), 1), cs(fp.mega(), 1), -1), Error);
  Decoration bad = make_identity_decoration(fp.colors().color(0));
  bad.in_order = {};  // boundary order no longer enumerates in(G)
  CHECK_THROWS_AS(fp.from_decoration(bad), Error);
}
