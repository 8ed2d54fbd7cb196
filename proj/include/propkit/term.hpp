#ifndef PROPKIT_TERM_HPP
#define PROPKIT_TERM_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "propkit/perm.hpp"
#include "propkit/prop.hpp"

namespace propkit {

/// Closed terms of the morphism language: id(c), gen(name), unit,
/// vcomp(t1,t2), hcomp(t1,t2), act(sigma,tau,t) with one-line
/// permutation images, e.g. act((2 1),(1),gen(m)).
struct Term {
  enum class Kind { Id, Gen, Unit, VComp, HComp, Act };

  Kind kind = Kind::Unit;
  std::string name;             // Id: color; Gen: generator
  Perm sigma, tau;              // Act
  std::vector<Term> children;   // VComp/HComp: two; Act: one

  static Term id(std::string color);
  static Term gen(std::string name);
  static Term unit();
  static Term vcomp(Term f, Term g);
  static Term hcomp(Term f, Term g);
  static Term act(Perm sigma, Perm tau, Term t);
  /// Left fold of hcomp over the list; unit when empty.
  static Term hchain(std::vector<Term> ts);

  std::string to_string() const;
  static Term parse(const std::string& text);

  /// Renames generators and colors leaf by leaf.
  Term rename(const std::function<std::string(const std::string&)>& gen_name,
              const std::function<std::string(const std::string&)>& color_name) const;
};

/// Evaluates a closed term in any prop, resolving color and generator
/// names through the callbacks. Throws on profile mismatches, naming
/// the offending subterm.
Morphism eval_term(const Term& t, const Prop& target,
                   const std::function<Color(const std::string&)>& color_of,
                   const std::function<Morphism(const std::string&)>& gen_of);

}  // namespace propkit

#endif
