// Decision procedures on finite marked simplicial sets: exhaustive map
// enumeration, right-lifting-property checks, strict cocartesian-square
// checks, bounded complicial detection and Leibniz (pushout-product)
// constructions.

#ifndef CX_LIFTING_HPP
#define CX_LIFTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "cx/marked.hpp"

namespace cx {

// All marked maps X -> Y, found by assigning images to generators in
// increasing dimension with face- and mark-compatibility pruning.
// Deterministic order.
std::vector<SMap> enumerate_maps(const MSSet& X, const MSSet& Y);

// Right lifting property of X against i : A -> B (a monomorphism).
// Every attachment A -> X must extend along i; the report keeps, per
// attachment, an extension when one exists.
struct RlpReport {
  bool ok = true;
  std::vector<SMap> attachments;
  std::vector<std::optional<SMap>> extensions;  // parallel to attachments
  int first_failure = -1;
};
RlpReport has_rlp(const MSSet& X, const MSSet& A, const MSSet& B, const SMap& i);

// Independent cross-check: restriction along i of the full map list B -> X
// must hit every map A -> X.
bool has_rlp_brute(const MSSet& X, const MSSet& A, const MSSet& B, const SMap& i);

// A commuting square
//        f
//    A ----> B
//    | g     | h
//    v   k   v
//    C ----> D
struct SquareSpec {
  MSSet A, B, C, D;
  SMap f, g, h, k;
  bool commutes(std::string* err = nullptr) const;
};

// Strictly cocartesian: the engine's pushout of (f,g) admits a marked
// isomorphism to D commuting with both legs.
bool is_cocartesian(const SquareSpec& s);

// Universal-property cross-check: for each probe object Z (the engine's own
// pushout and D itself by default, plus any extras), maps D -> Z must
// correspond bijectively to commuting cocones (B -> Z, C -> Z).
bool is_cocartesian_brute(const SquareSpec& s,
                          const std::vector<MSSet>& extra_probes = {});

// Bounded complicial-set detection: RLP against every elementary anodyne
// generator with parameter n <= N (triviality maps for d < n <= N).  A
// bounded semi-decision, not a certificate.
struct ComplicialReport {
  bool pass = true;
  int d = 0, N = 0;
  struct Item {
    std::string label;
    bool ok = true;
  };
  std::vector<Item> items;
};
ComplicialReport bounded_complicial_check(const MSSet& X, int d, int N);

// Leibniz construction f .hat{op} g for a binary operation: the induced map
//   B op X  u_{A op X}  A op Y  -->  B op Y
// for monomorphisms f : A -> B and g : X -> Y.
enum class Bifun { product, join, pretensor, tensor };
struct Leibniz {
  MPushout src;  // the pushout corner; src.P is the domain
  MSSet dst;
  SMap arrow;  // src.P -> dst
};
Leibniz leibniz(const MSSet& A, const MSSet& B, const SMap& f,
                const MSSet& X, const MSSet& Y, const SMap& g, Bifun op);

}  // namespace cx

#endif  // CX_LIFTING_HPP
