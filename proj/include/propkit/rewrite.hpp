#ifndef PROPKIT_REWRITE_HPP
#define PROPKIT_REWRITE_HPP

#include <vector>

#include "propkit/free_prop.hpp"

namespace propkit {

/// Bidirectional rewriting of free-prop morphisms by a list of rules
/// l = r. A rule side matches anywhere a permuted id-padded copy of it
/// can be cut out of the decoration: for sides with vertices, on any
/// convex vertex subset carrying an isomorphic labelled subgraph; for
/// vertex-free sides, on any antichain of like-colored wires. Sides
/// that mix vertices with free wires are not matched (they only arise
/// from degenerate presentations); neighbors() reports this through
/// the `exhaustive` flag of word_search.
class RewriteSystem {
public:
  RewriteSystem(FreePropPtr prop, std::vector<std::pair<Morphism, Morphism>> rules);

  const FreeProp& prop() const { return *prop_; }

  /// All single-step rewrites of m, canonical and deduplicated. Sets
  /// *complete to false when some rule side could not be matched
  /// exhaustively (mixed side).
  std::vector<Morphism> neighbors(const Morphism& m, bool* complete = nullptr) const;

private:
  FreePropPtr prop_;
  std::vector<std::pair<Morphism, Morphism>> rules_;
};

enum class WordVerdict { equal, distinct, unknown };

struct WordSearchOptions {
  int max_depth = 4;
  long max_nodes = 20000;
  int max_extra_vertices = 4;  // growth allowance over the larger side
};

struct WordSearchResult {
  WordVerdict verdict = WordVerdict::unknown;
  bool exhausted = false;  // the full equivalence classes were explored
  long nodes = 0;
};

/// Bidirectional breadth-first search between the classes of a and b.
/// `equal` when the searches meet; `distinct` when both classes were
/// exhausted without meeting; otherwise unknown.
WordSearchResult word_search(const RewriteSystem& rs, const Morphism& a,
                             const Morphism& b, const WordSearchOptions& options = {});

}  // namespace propkit

#endif
