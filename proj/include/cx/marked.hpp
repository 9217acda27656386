// Marked simplicial sets: markings on finite simplicial sets, the marked
// join, the Gray pre-tensor, truncations, suspensions, globes, the standard
// marked objects and the elementary anodyne families.

#ifndef CX_MARKED_HPP
#define CX_MARKED_HPP

#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cx/sset.hpp"

namespace cx {

inline constexpr int OMEGA = std::numeric_limits<int>::max();

struct MSSet {
  SSet s;
  std::set<int> marks;  // nondegenerate generators of dimension >= 1
  bool operator==(const MSSet&) const = default;
};

// Thin = marked or degenerate.
bool thin(const MSSet& X, const Simplex& x);

// Marked maps reuse SMap; validity additionally demands mark preservation.
bool mmap_valid(const MSSet& X, const MSSet& Y, const SMap& f, std::string* err = nullptr);

enum class MonoClass { not_mono, entire, regular, neither };
MonoClass classify_mono(const MSSet& X, const MSSet& Y, const SMap& f);

// ---------------------------------------------------------------------------
// Standard marked objects
// ---------------------------------------------------------------------------
MSSet m_empty();
MSSet m_delta(int n);                   // [n], no marks
MSSet m_delta_t(int n);                 // [n]_t, top simplex marked (n >= 1)
MSSet m_nk(int n, int k);               // [n]^k
MSSet m_nk_p(int n, int k);             // ([n]^k)'
MSSet m_nk_pp(int n, int k);            // ([n]^k)''
MSSet m_eq3();                          // [3]^eq
MSSet m_sharp(int n);                   // [n]^sharp
MSSet m_horn(int n, int k, SMap* incl = nullptr);      // regular sub of [n]^k
MSSet m_boundary(int n, SMap* incl = nullptr);         // flat boundary
MSSet globe(int n);                     // Gb_n by iterated suspension
MSSet coglobe(int n);                   // Gb_n^co by iterated co-suspension

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------
struct MJoin {
  MSSet J;
  // generator ids keyed by (x-generator or -1, y-generator or -1)
  std::map<std::pair<int, int>, int> id_of;
  // embed simplices (use {-1,{}} sentinel Simplex with gen -1 for "empty side")
  Simplex embed(const MSSet& X, const MSSet& Y, const Simplex& x, const Simplex& y) const;
};
MJoin m_join(const MSSet& X, const MSSet& Y);
// Functorial action: the induced map join(X,Y) -> join(X',Y').
SMap m_join_map(const MSSet& X, const MSSet& Y, const MSSet& X2, const MSSet& Y2,
                const SMap& f, const SMap& g, const MJoin& src, const MJoin& dst);

struct MProd {
  MSSet P;
  Product prod;  // underlying product tables
};
// Cartesian marked product: thin = thin x thin.
MProd m_product(const MSSet& X, const MSSet& Y);
// Gray pre-tensor: same underlying, marks from the transcription rule below.
MProd pretensor(const MSSet& X, const MSSet& Y);
// K (x) L := t^1(K) pre-tensor L.
MProd tensor(const MSSet& K, const MSSet& L);
// The per-simplex marking rule of the pre-tensor, exposed for inspection.
// x and y are simplices of the same dimension m >= 1.
bool pretensor_thin(const MSSet& X, const MSSet& Y, const Simplex& x, const Simplex& y);
// Functorial action of a binary product-like operation on maps.
SMap m_product_map(const MSSet& X, const MSSet& Y, const MSSet& X2, const MSSet& Y2,
                   const SMap& f, const SMap& g, const MProd& src, const MProd& dst);

MSSet truncate(int n, const MSSet& X);  // n may be OMEGA

// ---------------------------------------------------------------------------
// Marked colimits
// ---------------------------------------------------------------------------
struct MDiagram {
  std::vector<MSSet> obs;
  std::vector<Arr> arrs;
};
struct MColimit {
  MSSet X;
  std::vector<SMap> inj;
  Diagram dia;   // underlying diagram (for mediating maps)
  Colimit col;
};
MColimit m_colimit(MDiagram D);
std::optional<SMap> m_mediating(const MColimit& C, const MSSet& Z,
                                const std::vector<SMap>& cocone,
                                bool check_cocone = true);

struct MPushout {
  MSSet P;
  SMap from_b, from_c;
  MColimit col;
};
MPushout m_pushout(const MSSet& A, const MSSet& B, const MSSet& C,
                   const SMap& f, const SMap& g);
MPushout m_collapse(const MSSet& A, const MSSet& X, const SMap& incl);

// Suspensions and the diamond.
MSSet suspension(const MSSet& X);        // collapses the X-end of X * [0]
MSSet cosuspension(const MSSet& X);      // collapses the X-end of [0] * X
MSSet diamond0(const MSSet& X);          // [0] <> X, collapses {0} x X in [1] x X

// ---------------------------------------------------------------------------
// Elementary anodyne families
// ---------------------------------------------------------------------------
enum class AnodyneKind { horn, thinness, saturation, triviality };
struct AnodyneGen {
  AnodyneKind kind;
  int n = 0, k = 0;
  MSSet src, dst;
  SMap arrow;
  std::string label;
};
// Enumerate generators with parameter n <= nmax (saturation from n = -1;
// triviality needs d, generating [n] -> [n]_t for d < n <= nmax).
std::vector<AnodyneGen> anodyne_family(AnodyneKind kind, int nmax, int d = 0);

// Marked isomorphism search.
std::optional<SMap> m_iso_search(const MSSet& X, const MSSet& Y);

}  // namespace cx

#endif  // CX_MARKED_HPP
