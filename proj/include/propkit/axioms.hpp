#ifndef PROPKIT_AXIOMS_HPP
#define PROPKIT_AXIOMS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "propkit/prop.hpp"

namespace propkit {

struct AxiomReport {
  std::map<std::string, long> checked;            // instances per axiom
  std::map<std::string, std::string> first_fail;  // axiom -> counterexample
  bool ok() const { return first_fail.empty(); }
  long total() const;
  std::string summary() const;
};

struct AxiomCheckOptions {
  int max_perm_degree = 4;      // full symmetric groups up to this degree
  long max_pairs = 40000;       // cap on composition pairs per axiom
};

/// Runs every prop axiom instance expressible within the sample: the
/// vertical identity laws, the horizontal/vertical interchange, the
/// action compatibilities of both compositions, the block swap law, and
/// the action laws. Profile-length limits of the prop are respected by
/// skipping instances the tables cannot express.
AxiomReport check_prop_axioms(const PropPtr& prop,
                              const std::vector<Morphism>& sample,
                              const AxiomCheckOptions& options = {});

/// Every morphism of every hom set with profile lengths at most
/// max_len (requires finite enumeration).
std::vector<Morphism> enumerate_all_morphisms(const PropPtr& prop, int max_len);

struct SubpropClosure {
  std::vector<Morphism> elements;
  bool complete = false;  // reached a fixed point within the bound
};

struct SubpropOptions {
  int iterations = 3;
  int max_profile_len = 4;
  int max_perm_degree = 4;
  /// Extra filter; elements failing it are not added to the closure.
  std::function<bool(const Morphism&)> keep;
};

/// Iterated closure of S (plus the identities of every color appearing
/// in S's profiles and the unit) under both compositions and both
/// actions.
SubpropClosure subprop_generated(const PropPtr& prop,
                                 const std::vector<Morphism>& seed,
                                 const SubpropOptions& options = {});

}  // namespace propkit

#endif
