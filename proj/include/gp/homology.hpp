#ifndef GP_HOMOLOGY_HPP
#define GP_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gp/cyclic.hpp"
#include "gp/gauss.hpp"
#include "gp/partition.hpp"

namespace gp {

// Generator classes for the first homology of the thickened surface:
// circle classes, tail-to-head arrow loop classes (with a primed variant
// for the complementary loop), and cyclic-sequence classes.
struct CircleClass {
  int word = 0;
  bool operator==(const CircleClass&) const = default;
};
struct ArrowClass {
  Letter letter;
  PSetSide side = PSetSide::plain;
  bool operator==(const ArrowClass&) const = default;
};
struct CycleClass {
  CyclicSequence d;
  bool operator==(const CycleClass&) const = default;
};

using BasisClass = std::variant<CircleClass, ArrowClass, CycleClass>;

std::string describe(const BasisClass& c);

struct Basis {
  std::set<Letter> tree_letters;
  std::vector<BasisClass> classes;
};

// Free generators from the word-sharing graph: a deterministic spanning
// tree picks the tree letters; the basis holds every circle class, one
// plain arrow class per double letter, and one cycle class per co-tree
// single letter (its fundamental cycle through the tree).
Basis basis_cycles(const GaussParagraph& p);

struct BEvaluation {
  std::optional<int> parity;      // 0 or 1 when applicable
  std::string not_applicable;     // guard name otherwise
  bool applicable() const { return parity.has_value(); }
};

// Mod-2 intersection parity of two generator classes, evaluated purely
// combinatorially. Same-word arrow pairs are guarded by the even w-set
// hypotheses of their formulas; interlaced pairs additionally build the
// string for (p, P) to read off the q-pairing, so they need the
// construction preconditions.
BEvaluation b_mod2(const GaussParagraph& p, const WordWisePartition& P,
                   const BasisClass& c1, const BasisClass& c2);

struct AllEvenResult {
  Verdict verdict = Verdict::pass;
  std::string witness;
};

// True iff every pair drawn from the circle classes, plain arrow classes,
// and the family's cycle classes evaluates even. Requires conditions
// (i), (iii), (v), which make every pair applicable.
AllEvenResult all_even(const GaussParagraph& p, const WordWisePartition& P,
                       const DpFamily& family);

}  // namespace gp

#endif
