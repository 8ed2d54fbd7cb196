#include <doctest.h>

#include "propkit/error.hpp"
#include "propkit/megagraph.hpp"

using namespace propkit;

namespace {

FreeMegagraph one_binary_gen() {
  return FreeMegagraph::parse_string("colors c\ngen m : c,c -> c\n");
}

}  // namespace

TEST_CASE("free megagraph parsing and printing") {
  FreeMegagraph mg = one_binary_gen();
  CHECK(mg.colors().size() == 1);
  CHECK(mg.generator_count() == 1);
  CHECK(mg.generator(0).source.size() == 2);
  CHECK(mg.generator(0).target.size() == 1);
  FreeMegagraph back = FreeMegagraph::parse_string(mg.to_string());
  CHECK(back.to_string() == mg.to_string());

  FreeMegagraph empty_profiles =
      FreeMegagraph::parse_string("colors a,b\ngen u :  -> a\ngen k : a,b -> \n");
  CHECK(empty_profiles.generator(0).source.size() == 0);
  CHECK(empty_profiles.generator(1).target.size() == 0);

  CHECK_THROWS_AS(FreeMegagraph::parse_string("gen m : c -> c\n"), Error);
  CHECK_THROWS_AS(FreeMegagraph::parse_string("colors c\ngen m : d -> c\n"), Error);
}

TEST_CASE("free action is free and equivariant") {
  FreeMegagraph mg = one_binary_gen();
  FreeArrow m = mg.arrow("m");
  CHECK(mg.act(m, Perm::identity(1), Perm::identity(2)) == m);

  Perm swap = Perm::from_one_line({2, 1});
  FreeArrow moved = mg.act(m, Perm::identity(1), swap);
  CHECK(moved != m);
  CHECK(mg.source(moved) == mg.source(m).act_right(swap));
  CHECK(mg.target(moved) == mg.target(m));

  // Interchange and composition of the two actions on formal triples.
  for (const Perm& s1 : all_perms(2))
    for (const Perm& s2 : all_perms(2)) {
      FreeArrow a = mg.act(mg.act(m, Perm::identity(1), s1), Perm::identity(1), s2);
      CHECK(a == mg.act(m, Perm::identity(1), s1 * s2));
      FreeArrow left_then_right =
          mg.act(mg.act(m, Perm::identity(1), s1), Perm::identity(1), Perm::identity(2));
      CHECK(left_then_right == mg.act(m, Perm::identity(1), s1));
    }
  CHECK_THROWS_AS(mg.act(m, Perm::identity(2), Perm::identity(2)), Error);
}

TEST_CASE("underlying megagraph of the terminal prop") {
  PropPtr star = terminal_prop();
  PropMegagraph u(star);
  Color c = star->colors().color(0);
  // One element per profile.
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      ColorList src(std::vector<Color>(n, c)), dst(std::vector<Color>(m, c));
      CHECK(star->hom(src, dst).size() == 1);
    }
  std::vector<Morphism> sample;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      sample.push_back(star->hom(ColorList(std::vector<Color>(n, c)),
                                 ColorList(std::vector<Color>(m, c)))[0]);
  CHECK(u.validate(sample));
}

TEST_CASE("megagraph maps into a prop validate by generator profiles") {
  FreeMegagraph mg = one_binary_gen();
  PropPtr star = terminal_prop();
  Color c = star->colors().color(0);
  ColorList cc(std::vector<Color>(2, c)), c1(std::vector<Color>(1, c));

  MegaMapToProp good(mg, star, {0}, {star->hom(cc, c1)[0]});
  CHECK(good.valid());
  FreeArrow m = mg.arrow("m");
  Morphism image = good.apply(m);
  CHECK(image.source() == cc);
  CHECK(image.target() == c1);

  MegaMapToProp bad(mg, star, {0}, {star->hom(c1, c1)[0]});
  CHECK_FALSE(bad.valid());

  CHECK(enumerate_mega_maps(mg, star).size() == 1);
}

TEST_CASE("the prop megagraph action is the prop's action") {
  PropPtr star = terminal_prop();
  PropMegagraph u(star);
  Color c = star->colors().color(0);
  ColorList cc(std::vector<Color>(2, c)), c3(std::vector<Color>(3, c));
  Morphism x = star->hom(cc, c3)[0];
  for (const Perm& tau : all_perms(3))
    for (const Perm& sigma : all_perms(2)) {
      Morphism via_mega = u.act(x, tau, sigma);
      Morphism via_prop = star->act(sigma, tau, x);
      CHECK(via_mega == via_prop);
      CHECK(u.source(via_mega) == x.source().act_right(sigma));
      CHECK(u.target(via_mega) == x.target().act_left(tau));
    }
}

TEST_CASE("maps between free megagraphs compose functorially") {
  FreeMegagraph mg = one_binary_gen();
  MegaMapToFree id = MegaMapToFree::identity(mg);
  CHECK(id.valid());
  FreeArrow m = mg.arrow("m");
  CHECK(id.apply(m) == m);

  // Relabeling c -> d, m -> n.
  FreeMegagraph other = FreeMegagraph::parse_string("colors d\ngen n : d,d -> d\n");
  MegaMapToFree rename(mg, other, {0}, {other.arrow("n")});
  CHECK(rename.valid());
  MegaMapToFree composed = rename.compose_after(id);
  CHECK(composed.valid());
  CHECK(composed.apply(m) == other.arrow("n"));

  FreeArrow twisted = mg.act(m, Perm::identity(1), Perm::from_one_line({2, 1}));
  CHECK(rename.apply(twisted) ==
        other.act(other.arrow("n"), Perm::identity(1), Perm::from_one_line({2, 1})));
}
