#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tablog/element_map.hpp"
#include "tablog/graph.hpp"
#include "tablog/pathdecomp.hpp"
#include "tablog/poset.hpp"

namespace tablog {

// Where each part of a graph G sits inside Pos(G) / Pos_bot(G).
//
// Element names: `V:x`, `Va:x`, `Vb:x` per vertex x; `E1:u|v`, `E2:u|v` per
// edge uv (u declared before v); `TOP1`, `TOP2`, `INFA`, `INFB`; `BOT`.
struct PosLabeling {
  std::vector<Element> vertex;
  std::vector<Element> vertex_a;
  std::vector<Element> vertex_b;
  std::vector<std::array<Element, 2>> edge_copies;  // {E1, E2} per graph edge
  // Per edge (u, v) of the graph: the copy (0 or 1) lying above u_a and v_b.
  // The other copy lies above u_b and v_a.
  std::vector<int> a_side_copy;
  Element top1 = 0, top2 = 0, inf_a = 0, inf_b = 0;
  std::optional<Element> bottom;

  std::optional<Vertex> vertex_of(Element x) const;
};

struct PosConstruction {
  Poset poset;
  PosLabeling labeling;
  // Set for the vertex-free graph, which the correspondence does not cover.
  bool degenerate = false;
};

// Pos(G), or Pos_bot(G) when `rooted`. Edge copy E1 of uv covers u_a and
// v_b; E2 covers u_b and v_a. The bottom covers exactly the minimal
// elements of Pos(G).
PosConstruction build_pos(const Graph& g, bool rooted);

// Reads a graph and labeling back from a poset in the reserved-name
// format. Orientation is taken from the covers. Throws ValidationError if
// the poset is not exactly Pos(G) / Pos_bot(G) for some orientation.
struct RecoveredPos {
  Graph graph;
  PosConstruction construction;
};
RecoveredPos recover_pos(const Poset& p);

// g = h restricted to V(G). `h` must be a surjective p-morphism
// Pos(G) -> Pos(H) (ValidationError otherwise); IntegrityError if h sends a
// vertex outside V(H) or the restriction is not a surjective locally
// surjective homomorphism.
ElementMap restrict_pmorphism(const Graph& g, const PosConstruction& pos_g, const Graph& h,
                              const PosConstruction& pos_h, std::span<const Element> map);

// Extends a surjective locally surjective homomorphism g: G -> H to
// Pos(G) -> Pos(H): sentinels fixed, u -> g(u), u_a -> g(u)_a,
// u_b -> g(u)_b, and the edge copy above u_a, v_b goes to the copy of
// g(u)g(v) above g(u)_a, g(v)_b. The bottom goes to the bottom. Throws
// ValidationError if g fails verification or H is empty.
ElementMap lift_homomorphism(const Graph& g, const PosConstruction& pos_g, const Graph& h,
                             const PosConstruction& pos_h, std::span<const Vertex> map);

struct CorrespondenceReport {
  std::optional<ElementMap> lshom_witness;
  std::optional<ElementMap> spmorph_witness;

  bool lshom() const { return lshom_witness.has_value(); }
  bool spmorph() const { return spmorph_witness.has_value(); }
  bool agree() const { return lshom() == spmorph(); }
};

// Decides surjective LSHom(G, H) and SPMorph(Pos(G), Pos(H)) independently
// by brute force. Throws ValidationError if H is empty.
CorrespondenceReport theorem3_check(const Graph& g, const Graph& h, bool rooted);

struct DegreeReport {
  std::size_t k = 0;                 // max(2, max degree of G)
  std::size_t max_immediate = 0;     // most upper covers of a non-bottom element
  std::size_t max_successors = 0;    // most strict successors of a non-bottom element
  std::size_t immediate_bound = 0;   // k + 1
  std::size_t successor_bound = 0;   // 2k + 6
  bool within_bounds() const {
    return max_immediate <= immediate_bound && max_successors <= successor_bound;
  }
};

DegreeReport check_degree_bounds(const Graph& g, bool rooted);

struct TransformedDecomposition {
  PosConstruction pos;
  PathDecomposition decomposition;  // over pos.poset elements
  std::size_t source_width = 0;
  std::size_t width = 0;
  std::size_t bound = 0;            // 3k + 7, plus one when rooted
};

// For each edge uv, two bags (X + e1, X + e2) go right after the first
// original bag X holding u and v. Every bag then gains v_a, v_b for each
// of its vertices v, and the four sentinels (and the bottom, if rooted).
// Throws ValidationError if `d` is not a decomposition of `g`.
TransformedDecomposition transform_pathdecomp(const Graph& g, const PathDecomposition& d,
                                              bool rooted);

}  // namespace tablog
