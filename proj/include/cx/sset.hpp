// Finite simplicial sets in Eilenberg-Zilber normal form.
//
// A finite simplicial set is presented by its nondegenerate simplices
// ("generators"), each carrying its ordered list of faces.  An arbitrary
// simplex is a generator together with a strictly decreasing degeneracy word
// s_{j1}...s_{jk}; this normal form is unique, so equality of simplices is
// structural equality.  All simplicial operators act through the monotone-map
// calculus on finite ordinals.

#ifndef CX_SSET_HPP
#define CX_SSET_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cx {

// ---------------------------------------------------------------------------
// Monotone maps between finite ordinals [m] = {0,...,m}, stored as the vector
// of values (length m+1).
// ---------------------------------------------------------------------------
using Mono = std::vector<int>;

bool is_monotone(const Mono& f);
bool is_surj(const Mono& f, int target_dim);
bool is_identity(const Mono& f, int target_dim);
Mono mono_id(int m);
Mono mono_delta(int i, int m);   // [m-1] -> [m], skips i
Mono mono_sigma(int j, int m);   // [m+1] -> [m], repeats j
Mono mono_compose(const Mono& f, const Mono& g);  // f o g

// Degeneracy words (strictly decreasing index lists) vs. surjections.
Mono sur_of_word(const std::vector<int>& word, int m);  // [m] ->> [m-|word|]
std::vector<int> word_of_sur(const Mono& f);            // f must be surjective

// ---------------------------------------------------------------------------
// Simplices and simplicial sets
// ---------------------------------------------------------------------------
struct Simplex {
  int gen = -1;
  std::vector<int> word;  // strictly decreasing
  auto operator<=>(const Simplex&) const = default;
  bool degenerate() const { return !word.empty(); }
};

struct Gen {
  int dim = 0;
  std::vector<Simplex> faces;  // size dim+1 (empty when dim==0)
  bool operator==(const Gen&) const = default;
};

struct SSet {
  std::vector<Gen> gens;
  bool operator==(const SSet&) const = default;

  int dim() const;  // max generator dimension; -1 when empty
  int dim_of(const Simplex& x) const { return gens[x.gen].dim + (int)x.word.size(); }
  size_t count(int d) const;                 // nondegenerate simplices in dim d
  std::vector<size_t> counts() const;        // per dimension 0..dim()
  bool validate(std::string* err = nullptr) const;
};

// Surjection [dim x] ->> [dim gen] encoded by x's degeneracy word.
Mono sur_of(const SSet& X, const Simplex& x);

// X(beta) applied to x, for beta : [m] -> [dim x] monotone.
Simplex act(const SSet& X, const Simplex& x, const Mono& beta);
Simplex face(const SSet& X, const Simplex& x, int i);
Simplex degen(const SSet& X, const Simplex& x, int j);
// Whether x lies in the image of s_j, i.e. its surjection repeats at j.
bool deg_at(const SSet& X, const Simplex& x, int j);

// All simplices of dimension m (degenerate ones included), in canonical order.
std::vector<Simplex> simplices(const SSet& X, int m);

// ---------------------------------------------------------------------------
// Simplicial maps: the image of each generator, in generator order.
// ---------------------------------------------------------------------------
using SMap = std::vector<Simplex>;

Simplex map_apply(const SSet& Y, const SMap& f, const SSet& X, const Simplex& x);
bool map_valid(const SSet& X, const SSet& Y, const SMap& f, std::string* err = nullptr);
SMap map_compose(const SSet& X, const SSet& Y, const SSet& Z,
                 const SMap& f, const SMap& g);  // g o f : X -> Z
SMap map_identity(const SSet& X);
bool map_mono(const SSet& X, const SSet& Y, const SMap& f);  // injective on all simplices

// ---------------------------------------------------------------------------
// Standard simplicial sets
// ---------------------------------------------------------------------------
SSet empty_sset();
SSet delta(int n);                       // generators = nonempty subsets of [n]
int delta_id(int n, const std::vector<int>& verts);
const std::vector<int>& delta_verts(int n, int id);
// The simplex of delta(n) corresponding to an arbitrary monotone f : [m]->[n].
Simplex delta_simplex(int n, const Mono& f);
// Vertex map of a simplex of delta(n): the monotone map it classifies.
Mono delta_mono(int n, const SSet& D, const Simplex& x);

// Subcomplex spanned by a set of generators (closed under faces automatically).
// Returns the subcomplex and the inclusion map.
std::pair<SSet, SMap> subcomplex(const SSet& X, const std::set<int>& keep);

SSet boundary(int n, SMap* incl = nullptr);     // into delta(n)
SSet horn(int n, int k, SMap* incl = nullptr);  // into delta(n)

// ---------------------------------------------------------------------------
// Binary product
// ---------------------------------------------------------------------------
// Normal form of a pair of equidimensional simplices inside the product:
// strips the common degeneracies.  Returned as (core pair, word).
struct PairSimplex {
  Simplex x, y;
  std::vector<int> word;
  auto operator<=>(const PairSimplex&) const = default;
};
PairSimplex normalize_pair(const SSet& X, const SSet& Y, Simplex x, Simplex y);

struct Product {
  SSet P;
  std::vector<std::pair<Simplex, Simplex>> pair_of;   // generator -> (x,y)
  std::map<std::pair<Simplex, Simplex>, int> id_of;   // core pair -> generator
  Simplex embed(const SSet& X, const SSet& Y, const Simplex& x, const Simplex& y) const;
};
Product product(const SSet& X, const SSet& Y);

// ---------------------------------------------------------------------------
// Finite colimits (degreewise, then renormalized)
// ---------------------------------------------------------------------------
struct Arr {
  int s = 0, t = 0;
  SMap img;
};
struct Diagram {
  std::vector<SSet> obs;
  std::vector<Arr> arrs;
};
struct Colimit {
  SSet X;
  // inj[i] sends generators of obs[i] into X (a simplicial map).
  std::vector<SMap> inj;
};
Colimit colimit(const Diagram& D);

// Non-owning diagram view, for large machine-generated diagrams whose
// objects and arrow maps are shared between many positions.
struct DiaRef {
  struct Arrow {
    int s = 0, t = 0;
    const SMap* img = nullptr;
  };
  std::vector<const SSet*> obs;
  std::vector<Arrow> arrs;
};
Colimit colimit(const DiaRef& D);

// Mediating map out of a colimit, given a cocone into Z; nullopt when the
// cocone does not commute with the diagram. Pass check_cocone = false to
// skip the per-arrow commuting check for machine-generated cocones.
std::optional<SMap> mediating(const Diagram& D, const Colimit& C, const SSet& Z,
                              const std::vector<SMap>& cocone,
                              bool check_cocone = true);

struct Pushout {
  SSet P;
  SMap from_b, from_c;  // legs B -> P, C -> P
  Diagram dia;          // the span, for later mediating-map computations
  Colimit col;
};
Pushout pushout(const SSet& A, const SSet& B, const SSet& C,
                const SMap& f, const SMap& g);  // f : A->B, g : A->C

// Quotient collapsing a subcomplex to a point (pushout along A -> pt).
// When X has no generators in A's image... A given by inclusion incl : A -> X.
Pushout collapse(const SSet& A, const SSet& X, const SMap& incl);

// ---------------------------------------------------------------------------
// Isomorphism search (deterministic graded backtracking)
// ---------------------------------------------------------------------------
std::optional<SMap> iso_search(const SSet& X, const SSet& Y);
// Variant with an extra per-generator compatibility filter (e.g. markings).
std::optional<SMap> iso_search(const SSet& X, const SSet& Y,
                               const std::function<bool(int, int)>& ok);

}  // namespace cx

#endif  // CX_SSET_HPP
