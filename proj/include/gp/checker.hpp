#ifndef GP_CHECKER_HPP
#define GP_CHECKER_HPP

#include <array>
#include <optional>
#include <string>

#include "gp/cyclic.hpp"
#include "gp/gauss.hpp"
#include "gp/partition.hpp"
#include "gp/surface.hpp"

namespace gp {

struct ConditionStatus {
  Verdict verdict = Verdict::pass;
  std::string witness;
};

inline constexpr std::array<const char*, 7> kConditionNames = {
    "i", "ii", "iii", "iv", "v", "vi", "vii"};

struct ConditionReport {
  std::array<ConditionStatus, 7> conditions;
  Verdict overall = Verdict::pass;

  const ConditionStatus& at(int idx) const { return conditions.at(idx); }
};

// Evaluate the seven realizability conditions for a word-wise pair (p, P):
//   (i)   even w-set and p-set sizes for every double letter;
//   (ii)  even p-set overlap with the singles of every other word;
//   (iii) even shared-letter counts for every word pair;
//   (iv)  even w-set overlap for non-interlaced same-word double pairs;
//   (v)   P compatible with p;
//   (vi)  even p-set overlaps for double letters of different words;
//   (vii) P compatible with the cyclic-sequence family.
// With `fast_path` set, (vii) is evaluated on the generator subfamily from
// basis_cycles instead of the full family.
ConditionReport check_conditions(const GaussParagraph& p,
                                 const WordWisePartition& P,
                                 const DpFamily& family,
                                 bool fast_path = false);

struct RealizabilityCertificate {
  WordWisePartition partition;
  ConditionReport report;
  SurfaceSummary oracle;
  std::vector<std::vector<std::string>> embedding;  // boundary cycles
};

struct RealizabilityResult {
  Verdict verdict = Verdict::fail;  // pass = realizable
  std::string reason;
  int partitions_tried = 0;
  std::optional<RealizabilityCertificate> certificate;
};

// Decide realizability of p: scan word-wise partitions in enumeration
// order and certify the first one passing all seven conditions. The
// certificate's oracle genus is checked against the verdict.
RealizabilityResult realizable(const GaussParagraph& p,
                               std::size_t cap = 100000,
                               bool fast_path = false);

struct CrossValidation {
  ConditionReport report;
  // Genus of the string constructed from (p, P); absent when one of the
  // construction preconditions (i), (iii), (v) fails.
  std::optional<SurfaceSummary> oracle;
  Verdict agreement = Verdict::pass;
};

// Check (p, P) two ways: the seven conditions, and, when constructible,
// planarity of the constructed string. When construction is impossible the
// failing precondition already settles non-realizability.
CrossValidation cross_validate(const GaussParagraph& p,
                               const WordWisePartition& P,
                               std::size_t cap = 100000);

struct StringCheck {
  SurfaceSummary oracle;      // genus of alpha itself
  bool partition_word_wise = false;
  bool conditions_pass = false;
  Verdict agreement = Verdict::pass;
  std::string detail;
};

// Full biconditional check for one string: the conditions on its
// underlying pair must pass exactly when the string is planar, and the
// string constructed back from the pair must agree on planarity. Requires
// even endpoint counts per circle. An induced partition that fails the
// even-split clause counts as a failing check; the string cannot be planar
// then.
StringCheck cross_validate_string(const VirtualString& alpha,
                                  std::size_t cap = 100000);

}  // namespace gp

#endif
