// Comma categories of joined simplex pairs and triples over a base simplex:
// bounded object and arrow enumeration, the degree invariant, regular
// elements, finality verification, and the iterated pair-chain categories.

#ifndef CX_INDEXCAT_HPP
#define CX_INDEXCAT_HPP

#include <compare>
#include <string>
#include <vector>

#include "cx/sset.hpp"

namespace cx {

// An object of the comma category: component dimensions and a monotone
// structure map from the join to the base simplex.  Triples are
// [k0] * [k1]^op * [k2] with augmented outer components (-1 encodes the empty
// factor) and a nonempty middle; pairs are [k0]^op * [k1] with k0 >= 0 and
// the second component augmented.
struct IxObj {
  std::vector<int> ks;
  Mono f;  // size total_dim() + 1
  int total_dim() const;
  bool is_pair() const { return ks.size() == 2; }
  auto operator<=>(const IxObj&) const = default;
};

// The monotone map on joins induced by componentwise maps (an empty Mono is
// the map out of the empty factor).  The op component (middle for triples,
// first for pairs) is written in reversed coordinates.
Mono ix_total(const IxObj& x, const IxObj& y, const std::vector<Mono>& comps);

// All componentwise morphisms x -> y commuting with the structure maps.
std::vector<std::vector<Mono>> ix_homs(const IxObj& x, const IxObj& y);
// Same, but stops counting at the cap (0 = no cap).
size_t ix_hom_count(const IxObj& x, const IxObj& y, size_t cap = 0);

struct IxArr {
  int src = -1, dst = -1;
  std::vector<Mono> comps;
  std::string label;
};

struct IndexCat {
  int n = 0, B = 0;
  bool pairs = false;
  std::vector<IxObj> obs;
  std::vector<IxArr> arrs;
  int find(const IxObj& x) const;  // index in obs, -1 when absent
};

// All objects with every component dimension <= B, together with the
// single-component coface / codegeneracy / augmentation arrows between them.
// These elementary arrows generate every morphism by epi-mono factorization
// inside the bound, so colimits over the category may be computed over them.
IndexCat build_delta3_over(int n, int B);
IndexCat build_delta2_over(int n, int B);

// The distinguished finite presentations over the base [1].  Nodes carry a
// display name; arrows keep their drawn labels together with the underlying
// map of joins.  The arrows into the bare middle object are not
// componentwise; every arrow is validated directly against the structure
// maps (valid()), and each componentwise arrow of the graph is the unique
// morphism between its endpoints.
struct PinnedArrow {
  int src = -1, dst = -1;
  std::string label;
  Mono total;
};
struct PinnedGraph {
  int n = 1;
  std::vector<std::string> names;   // parallel to nodes
  std::vector<IxObj> nodes;
  std::vector<PinnedArrow> arrows;
  bool valid() const;  // f_dst o total == f_src for every arrow
};
PinnedGraph distinguished_delta3_1();
PinnedGraph distinguished_delta2_1();

// Degree of a triple object: the height of the structure map over the
// middle block; 0 when the middle is a point.
int degree(const IxObj& x);

// One regular element per (k0, d, k2) with k0 + d + k2 = n: the structure
// map collapses the two block seams, and the section avoids the positions
// k0+1 and k0+d+1.
struct Regular {
  IxObj x;
  Mono section;  // [n] -> [total], f o section = id
};
std::vector<Regular> regular_elements(int n, int d);

// For every bounded triple object of degree d: exactly one regular element
// of degree d receives a morphism, and exactly one such morphism.
struct FinalityReport {
  bool pass = true;
  int checked = 0;
  std::vector<std::string> violations;
};
FinalityReport finality_check(int n, int d, int B);

// Objects of the iterated pair-chain category: chains (x_0, ..., x_k) with
// x_0 over [n] and x_{i+1} over [k1(x_i) + 1].  Objects only; the downstream
// surjectivity check does not need arrows.
struct PiCat {
  int n = 0, k = 0, B = 0;
  std::vector<std::vector<IxObj>> obs;
};
PiCat build_pi_k(int n, int k, int B);

}  // namespace cx

#endif  // CX_INDEXCAT_HPP
