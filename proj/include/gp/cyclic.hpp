#ifndef GP_CYCLIC_HPP
#define GP_CYCLIC_HPP

#include <optional>
#include <vector>

#include "gp/gauss.hpp"
#include "gp/partition.hpp"

namespace gp {

// One arc per word (possibly none), chained head-to-tail through shared
// single letters: the end letter of the arc on chain[k] is the start letter
// of the arc on chain[k+1], cyclically. At least two words carry arcs.
struct CyclicSequence {
  // arcs[n] is the span on word n; arc endpoints are occurrences of
  // distinct single letters of that word.
  std::vector<std::optional<Arc>> arcs;
  // Word indices in cyclic order, rotated so the smallest comes first.
  std::vector<int> chain;
  // connectors[k] links chain[k] to chain[k+1] (cyclically).
  std::vector<Letter> connectors;

  bool operator==(const CyclicSequence& other) const {
    return arcs == other.arcs;
  }
};

struct DpFamily {
  std::vector<CyclicSequence> sequences;
  bool truncated = false;
};

// All cyclic sequences of p, each once, in deterministic order. Chains are
// simple directed cycles in the word-sharing graph with an injective choice
// of connecting letters; reversed chains yield different arcs and are kept.
// Stops and sets `truncated` once more than `cap` sequences exist.
DpFamily enumerate_Dp(const GaussParagraph& p, std::size_t cap = 100000);

// The six-case span pairing on word n. span2 runs between distinct single
// letters; span1 is any span of the word (equal endpoints allowed for a
// double letter). Empty spans pair to 0.
int delta(const GaussParagraph& p, int n, const std::optional<Arc>& span1,
          const std::optional<Arc>& span2);

// Parity of the membership statements for the span pair: three statements
// when span1 closes up a double letter, four when its endpoints are
// distinct single letters. Empty spans pair to 0.
int epsilon(const GaussParagraph& p, const WordWisePartition& P, int n,
            const std::optional<Arc>& span1, const std::optional<Arc>& span2);

int W_map(const GaussParagraph& p, const WordWisePartition& P, int n,
          const CyclicSequence& d);

enum class PSetSide { plain, primed };

int Q_map(const GaussParagraph& p, const WordWisePartition& P, int n,
          const Letter& i, PSetSide side, const CyclicSequence& d);

struct DResult {
  std::vector<int> per_word;
  int total = 0;
};

DResult D_map(const GaussParagraph& p, const WordWisePartition& P,
              const CyclicSequence& d1, const CyclicSequence& d2);

enum class Verdict { pass, fail, indeterminate };

struct DpCompatibility {
  Verdict verdict = Verdict::pass;
  std::string witness;
};

// P is compatible with the family if W, both Q variants, and the D totals
// are all even. Truncated families yield an indeterminate verdict unless a
// violation is found first.
DpCompatibility compatible_with_Dp(const GaussParagraph& p,
                                   const WordWisePartition& P,
                                   const DpFamily& family);

}  // namespace gp

#endif
