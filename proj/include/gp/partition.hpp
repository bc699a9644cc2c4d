#ifndef GP_PARTITION_HPP
#define GP_PARTITION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gp/gauss.hpp"

namespace gp {

// A word-wise partition: one pair of disjoint letter sets per word. The 2N
// sets are pairwise disjoint and cover the alphabet; double letters of a
// word land in that word's sets; letters shared by two words split evenly
// between the two words' sets.
struct WordWisePartition {
  std::vector<std::set<Letter>> A;
  std::vector<std::set<Letter>> Ap;

  bool in_word_sets(int n, const Letter& x) const {
    return A[n].count(x) > 0 || Ap[n].count(x) > 0;
  }
  // 0 = A_n, 1 = A'_n, -1 = neither.
  int side_in_word(int n, const Letter& x) const {
    if (A[n].count(x)) return 0;
    if (Ap[n].count(x)) return 1;
    return -1;
  }
  bool operator==(const WordWisePartition&) const = default;
};

struct WordWiseCheck {
  bool ok = true;
  std::string violated_clause;  // "partition", "membership", "ii", "iii"
  std::string detail;
};

// Check the defining conditions of a word-wise partition. Letters in the
// sets must come from p's alphabet.
WordWiseCheck is_word_wise(const GaussParagraph& p,
                           const WordWisePartition& P);

// All word-wise partitions, one canonical representative per family of
// per-word (A_n, A'_n) swaps: the least letter of A_n ∪ A'_n sits in A_n.
// Deterministic order. Stops early if the visitor returns false.
void for_each_partition(const GaussParagraph& p,
                        const std::function<bool(const WordWisePartition&)>&
                            visit);

std::vector<WordWisePartition> enumerate_partitions(const GaussParagraph& p);

// Swap-canonical form of a valid partition.
WordWisePartition canonicalize(const WordWisePartition& P);

// True iff P and Q agree up to per-word (A_n, A'_n) swaps.
bool equal_up_to_swap(const WordWisePartition& P, const WordWisePartition& Q);

struct CompatibilityCheck {
  bool ok = true;
  std::string witness;  // first failing pair, human readable
};

// Compatibility of P with p: the two parity conditions on interlaced
// double-letter pairs and on same-word single-letter pairs.
CompatibilityCheck compatible_with_p(const GaussParagraph& p,
                                     const WordWisePartition& P);

// 0 iff exactly one of the distinct single letters i, j of word n lies in
// A_n ∪ A'_n; 1 if both or neither does.
int gamma(const GaussParagraph& p, const WordWisePartition& P, int n,
          const Letter& i, const Letter& j);

}  // namespace gp

#endif
