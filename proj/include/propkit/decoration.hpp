#ifndef PROPKIT_DECORATION_HPP
#define PROPKIT_DECORATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "propkit/graph.hpp"
#include "propkit/megagraph.hpp"

namespace propkit {

/// A decoration of an acyclic graph by a free megagraph: edge colors,
/// vertex arrows, ordered ports at every vertex, and ordered global
/// boundaries. The two compatibility squares (port colors match the
/// arrow's source and target lists) are enforced by validate().
struct Decoration {
  Graph graph;
  std::vector<Color> edge_colors;            // D0
  std::vector<FreeArrow> vertex_labels;      // D1
  std::vector<std::vector<int>> in_ports;    // per-vertex ordered in-edges
  std::vector<std::vector<int>> out_ports;   // per-vertex ordered out-edges
  std::vector<int> in_order;                 // ordered in(G)
  std::vector<int> out_order;                // ordered out(G)

  ColorList source(const FreeMegagraph& mg) const;
  ColorList target(const FreeMegagraph& mg) const;

  void validate(const FreeMegagraph& mg) const;  // throws on violation
  std::string to_string(const FreeMegagraph& mg) const;
};

/// Canonical encoding of a decoration's equivalence class: the
/// lexicographically least integer sequence over all relabelings of
/// vertices and edges, with every vertex read in the sorted-port gauge
/// (ports ascending by edge id, arrow transported by the bimodule
/// action). Two decorations are related by the automorphism-generated
/// equivalence iff their codes agree.
struct CanonicalDecoration {
  Decoration dec;               // the representative realizing the code
  std::vector<int32_t> code;

  std::string key() const;      // code as a flat string
  bool operator==(const CanonicalDecoration& rhs) const { return code == rhs.code; }
  bool operator<(const CanonicalDecoration& rhs) const { return code < rhs.code; }
};

CanonicalDecoration canonicalize(const Decoration& dec, const FreeMegagraph& mg);

/// Direct test of the generated equivalence from its definition: some
/// graph isomorphism transports boundary orders, edge colors, and vertex
/// arrows (up to the port-order gauge). Independent of canonicalize();
/// used as its oracle.
bool related_by_automorphism(const Decoration& a, const Decoration& b,
                             const FreeMegagraph& mg);

// Structural constructions. None of these canonicalize; FreeProp wraps
// them and canonicalizes the results.

Decoration make_empty_decoration();
Decoration make_identity_decoration(const Color& c);
Decoration make_corolla(const FreeArrow& x, const FreeMegagraph& mg);
Decoration decoration_compose_h(const Decoration& f, const Decoration& g);
/// Vertical composite f o g (g applies first): glues in(f) to out(g).
Decoration decoration_compose_v(const Decoration& f, const Decoration& g,
                                const FreeMegagraph& mg);
Decoration decoration_act(const Perm& sigma, const Perm& tau, const Decoration& f);

/// True iff no edge runs from a vertex outside `bottom` into it, so the
/// vertex set can form the lower layer of a two-part vertical split.
bool splittable_below(const Decoration& dec, const std::vector<int>& bottom);

/// Splits dec as top o bottom along the given lower vertex set. The
/// interface edges are ordered ascending on both sides.
std::pair<Decoration, Decoration> vertical_split(const Decoration& dec,
                                                 const std::vector<int>& bottom);

/// All vertex subsets usable as a proper lower layer (nonempty, proper).
std::vector<std::vector<int>> proper_lower_layers(const Decoration& dec);

struct HorizontalFactorization {
  std::vector<Decoration> components;  // connected pieces, canonical order
  Perm sigma;                          // dec = sigma^* tau_* (h-composite)
  Perm tau;
};

/// Splits into connected components (a free edge is its own component)
/// and records the boundary permutations relating dec to the ordered
/// horizontal composite of the pieces.
HorizontalFactorization horizontal_factorize(const Decoration& dec);

}  // namespace propkit

#endif
