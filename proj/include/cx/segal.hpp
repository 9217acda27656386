// Segal precategories enriched in marked simplicial sets: generator objects
// [a,n] and [e,1]_t, wedges, levelwise colimits, presentations by generators,
// the directed cylinder and cone as colimits of blocks over the joined-simplex
// comma categories, the simplex join with its monoid structure, truncations,
// the comparison morphisms between cone and suspension, and the adjunction
// functors to and from marked simplicial sets.

#ifndef CX_SEGAL_HPP
#define CX_SEGAL_HPP

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cx/indexcat.hpp"
#include "cx/marked.hpp"

namespace cx {

// ---------------------------------------------------------------------------
// Objects and maps
// ---------------------------------------------------------------------------
// A (marked) Segal precategory truncated at simplicial level M: marked
// simplicial sets levels[0..M] with levels[0] discrete, structure maps, and a
// set tC of vertex generators of levels[1] (always containing the degenerate
// vertices; plain objects carry exactly those).
struct SegObj {
  int M = 3;
  std::vector<MSSet> levels;               // size M+1
  std::vector<std::vector<SMap>> face;     // face[m][i] : levels[m] -> levels[m-1], 1<=m<=M
  std::vector<std::vector<SMap>> degen;    // degen[m][j] : levels[m] -> levels[m+1], 0<=m<M
  std::set<int> tC;                        // dim-0 generators of levels[1]
};

bool seg_valid(const SegObj& C, std::string* err = nullptr);

// The structure map levels[n] -> levels[m] induced by a monotone phi:[m]->[n].
SMap seg_structure(const SegObj& C, int n, const Mono& phi);

struct SegMap {
  std::vector<SMap> f;  // one per level
};

bool seg_map_valid(const SegObj& C, const SegObj& D, const SegMap& f,
                   std::string* err = nullptr);
SegMap seg_map_identity(const SegObj& C);
SegMap seg_map_compose(const SegObj& C, const SegObj& D, const SegObj& E,
                       const SegMap& f, const SegMap& g);  // g o f
bool seg_map_equal(const SegMap& f, const SegMap& g);
// Levelwise isomorphism with exact marks and tC on both sides.
bool seg_map_is_iso(const SegObj& C, const SegObj& D, const SegMap& f);

SegObj seg_empty(int M = 3);
SegObj seg_terminal(int M = 3);

// ---------------------------------------------------------------------------
// Generator objects
// ---------------------------------------------------------------------------
// [a,S] for a shape simplicial set S: level m is one copy of a per m-simplex
// of S whose core is at least one-dimensional, and one point per totally
// degenerate m-simplex.  [a,n] := [a,Delta[n]].
struct GenLayout {
  std::vector<std::vector<Simplex>> at;            // copies per level
  std::vector<std::vector<int>> off;               // first generator of each copy
  std::vector<std::map<Simplex, int>> index;       // simplex -> copy position
  int copy_of(int level, const Simplex& x) const;
};

SegObj gen_shape(const MSSet& a, const SSet& S, int M, GenLayout* lay = nullptr);
SegObj gen(const MSSet& a, int n, int M = 3, GenLayout* lay = nullptr);
// [e,1] with every level-1 vertex in tC.
SegObj gen1t(int M = 3);
// [e,(K,tK)]: gen_shape(e, K) with the copies of marked edges added to tC.
SegObj gen_marked_shape(const MSSet& K, int M);

// The map [a,S] -> [b,T] induced by u : a -> b and a shape map sh : S -> T.
SegMap gen_shape_map(const MSSet& a, const SSet& S, const MSSet& b, const SSet& T,
                     const SMap& u, const SMap& sh, int M);
// Specialization along phi : [m] -> [n].
SegMap gen_map(const MSSet& a, int m, const MSSet& b, int n,
               const SMap& u, const Mono& phi, int M = 3);
// The simplicial map delta(m) -> delta(n) classified by phi.
SMap delta_smap(const Mono& phi, int m, int n);
// The terminal marked map a -> point.
SMap terminal_smap(const MSSet& a);

// ---------------------------------------------------------------------------
// Colimits
// ---------------------------------------------------------------------------
struct SegArr {
  int s = 0, t = 0;
  SegMap f;
};
struct SegDiagram {
  std::vector<SegObj> obs;
  std::vector<SegArr> arrs;
};
struct SegColimit {
  SegObj C;
  std::vector<SegMap> inj;
  std::vector<MColimit> lcol;  // per-level colimit data
};
// Throws std::runtime_error when an arrow is invalid or a structure-map
// cocone fails to commute. Pass validate = false to skip the per-arrow
// check when the diagram is machine-generated.
SegColimit seg_colimit(const SegDiagram& D, bool validate = true);
std::optional<SegMap> seg_mediating(const SegDiagram& D, const SegColimit& C,
                                    const SegObj& Z, const std::vector<SegMap>& cocone);

// ---------------------------------------------------------------------------
// Presentations: finite diagrams of generator objects
// ---------------------------------------------------------------------------
enum class PKind { plain, t1 };
struct PNode {
  PKind kind = PKind::plain;
  MSSet a;    // base (e for t1)
  int n = 0;  // shape dimension (1 for t1)
};
struct PArr {
  int src = 0, dst = 0;
  SMap u;    // base map
  Mono phi;  // shape map [n_src] -> [n_dst]
};
struct Pres {
  std::vector<PNode> nodes;
  std::vector<PArr> arrows;
};
// Evaluated presentation. Node values and arrow maps are deduplicated:
// many positions of a large presentation share the same generator shape.
struct PresVal {
  std::vector<SegObj> shapes;   // distinct node values
  std::vector<int> shape_of;    // node -> shapes index
  std::vector<SegMap> amaps;    // distinct arrow maps
  std::vector<int> amap_of;     // arrow -> amaps index
  SegColimit col;               // colimit value and per-node injections
  const SegObj& obj(int i) const { return shapes[shape_of[i]]; }
};

PNode pnode_plain(const MSSet& a, int n);
PNode pnode_t1();
SegObj pnode_value(const PNode& nd, int M);
SegMap parr_value(const Pres& P, const PArr& e, int M);
PresVal pres_eval(const Pres& P, int M);
Pres pres_gen(const MSSet& a, int n);
Pres pres_gen1t();

// A map out of a presented object: one generator-level leg per source node.
struct Leg {
  int dst = -1;  // target node
  SMap u;
  Mono phi;
};
struct PresMap {
  std::vector<Leg> legs;
};
// Evaluates legs against the target's injections and mediates; nullopt when
// the legs do not commute with the source arrows.
std::optional<SegMap> pres_map_eval(const Pres& P, const PresVal& PV,
                                    const Pres& Q, const PresVal& QV,
                                    const PresMap& f, int M);

// ---------------------------------------------------------------------------
// Wedges
// ---------------------------------------------------------------------------
// [a_0,n_0] v ... v [a_k,n_k] over a common base a with maps a -> a_i: the
// pushout of ⊔[a,n_i] -> [a,Σn_i] against ⊔[a_i,n_i].
struct WedgePart {
  MSSet ai;
  int ni = 0;
  SMap from_base;  // a -> ai
};
struct Wedge {
  Pres pres;
  PresVal val;
  std::vector<int> part_node;  // node of [a_i,n_i] inside pres
  int spine_node = -1;         // node of [a,Σn_i]
  std::vector<int> offset;     // spine offset of each part
};
Wedge wedge(const MSSet& a, const std::vector<WedgePart>& parts, int M);

// ---------------------------------------------------------------------------
// Index fragments for block colimits
// ---------------------------------------------------------------------------
// minimal: the final chain objects, their one-step faces and the constant
//          caps; reduced: all objects whose structure map is injective on
//          each component; bounded: every object with component dims <= B.
enum class Frag { minimal, reduced, bounded };
std::vector<IxObj> pair_fragment(int m, Frag f, int B = 0);
std::vector<IxObj> triple_fragment(int m, Frag f, int B = 0);
// Collapse repeated values within each component; sigma receives the
// componentwise epis from x onto the result.
IxObj ix_reduce(const IxObj& x, std::vector<Mono>* sigma = nullptr);
IxObj ix_push(const IxObj& x, const Mono& phi);  // compose the structure map
bool ix_constant(const IxObj& x, int* vertex = nullptr);

// ---------------------------------------------------------------------------
// Cylinder and cone presentations
// ---------------------------------------------------------------------------
// Output nodes are block slots: for pairs (cone) P = [[k0]⊗b, 1+k1],
// L = [[k0]⊗b, k1], A = [b, k1]; for triples (cylinder) P = [[k1]⊗b, A+1+B],
// S0/A0 and S2/A2 are the analogous side spans.  Every base vertex i also
// carries the collapsed copies of its constant blocks.
enum Slot {
  SlotP = 0,
  SlotL = 1,
  SlotA = 2,
  SlotS0 = 3,
  SlotA0 = 4,
  SlotS2 = 5,
  SlotA2 = 6,
  SlotT = 7  // marked cap overlay
};
struct BlockOut {
  bool pairs = true;
  Pres out;
  struct Info {
    int qnode = -1;
    bool lifted = false;  // collapsed copy (base e)
    int ix = -1;          // position in ixs[qnode]
    int slot = SlotP;
  };
  std::vector<Info> info;                  // parallel to out.nodes
  std::vector<std::vector<IxObj>> ixs;     // index objects used per input node
  std::map<std::array<int, 4>, int> id;    // (qnode, lifted, ix, slot) -> node
  int find(int qnode, bool lifted, int ix, int slot) const;
  int find_ix(int qnode, const IxObj& x) const;
};
using Seeds = std::vector<std::vector<IxObj>>;
BlockOut cone_pres(const Pres& Q, Frag frag, int B = 0, const Seeds& seeds = {});
BlockOut cyl_pres(const Pres& Q, Frag frag, int B = 0, const Seeds& seeds = {});

// The canonical unit legs Q -> cone(Q): the identity slot at the whiskering
// index over each shape.
PresMap cone_unit(const Pres& Q, const BlockOut& T);
// Cylinder endpoints: end = 0 resp. 1 picks the side copy of Q.
PresMap cyl_end(const Pres& Q, const BlockOut& T, int end);
// Functoriality: legs of cone(P) -> cone(Q) induced by f : P -> Q; the
// required index objects of TQ are reported through need (fixpoint seeding).
PresMap cone_map(const Pres& P, const BlockOut& TP, const Pres& Q,
                 const BlockOut& TQ, const PresMap& f, Seeds* need = nullptr);
// The multiplication legs cone(cone(Q)) -> cone(Q); T1 presents cone(Q),
// T2 = cone_pres(T1.out).  Missing targets are reported through need.
PresMap mu_legs(const Pres& Q, const BlockOut& T1, const BlockOut& T2,
                Seeds* need = nullptr);
// Projection legs cyl(Q) -> cone(Q) collapsing the front side.
PresMap cyl_to_cone_legs(const Pres& Q, const BlockOut& Cyl, const BlockOut& Cone,
                         Seeds* need = nullptr);

// ---------------------------------------------------------------------------
// Canonical squares and pushout checks
// ---------------------------------------------------------------------------
struct SegSquare {
  SegObj A, B, C, D;
  SegMap f, g, h, k;  // f:A->B, g:A->C, h:B->D, k:C->D
  bool commutes() const;
};
// Strict cocartesianness: the mediating comparison from the pushout of
// g along f onto D is a levelwise isomorphism (marks and tC exact).
bool seg_cocartesian(const SegSquare& s);

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------
// Levelwise graded backtracking compatible with structure maps, marks, tC.
std::optional<SegMap> seg_iso(const SegObj& C, const SegObj& D);
// Variant with pinned generator images (per level, gen -> gen).
std::optional<SegMap> seg_iso_pinned(const SegObj& C, const SegObj& D,
                                     const std::vector<std::map<int, int>>& pins);
// Arrow isomorphism: isos src and dst making the square commute.
bool seg_arrow_iso(const SegObj& A, const SegObj& B, const SegMap& f,
                   const SegObj& C, const SegObj& D, const SegMap& g);

// ---------------------------------------------------------------------------
// Derived constructions (implemented across the translation unit)
// ---------------------------------------------------------------------------
// e_iso: [e,3] with the edges 02 and 13 collapsed; e_isoP adds the marked
// middle edge by a pushout along [e,1] -> [e,1]_t.
SegObj e_iso(int M = 3);
SegObj e_isoP(int M = 3);
// The underlying shapes (quotients of delta(3)), with the projection.
SSet eq_shape(SMap* from_d3 = nullptr);

// The cone e ⋆ a at the base level: [1] ⊗ a with the {0} slice collapsed.
struct EStar {
  MSSet V;
  SMap from_a;   // the {1} slice
  SMap cone_pt;  // from the point
};
EStar estar(const MSSet& a);

// Truncation: k >= 2 truncates the bases; k = 1 additionally marks every
// level-1 vertex.
SegObj trunc_seg(int k, const SegObj& C);

// Iterated cones of the empty object: the n-simplex at the Segal level.
struct ConeTower {
  int M = 3;
  Frag frag = Frag::minimal;
  std::vector<Pres> pres;          // pres[k] presents the (k-1)-simplex
  std::vector<BlockOut> step;      // step[k] : pres[k+1] = cone(pres[k])
};
ConeTower cone_tower(int n, int M, Frag frag);

}  // namespace cx

#endif  // CX_SEGAL_HPP
