#include "gp/checker.hpp"

#include <stdexcept>

#include "gp/homology.hpp"
#include "gp/vstring.hpp"

namespace gp {

namespace {

ConditionStatus cond_i(const GaussParagraph& p) {
  for (int n = 0; n < p.word_count(); ++n) {
    for (const Letter& i : classify_letters(p, n).second) {
      const auto wi = w_set(p, n, i);
      auto [pi, pip] = p_sets(p, i);
      if (wi.size() % 2 != 0)
        return {Verdict::fail, "interlacement set of '" + i + "' has size " +
                                   std::to_string(wi.size())};
      if (pi.size() % 2 != 0 || pip.size() % 2 != 0)
        return {Verdict::fail, "p-sets of '" + i + "' have sizes " +
                                   std::to_string(pi.size()) + "," +
                                   std::to_string(pip.size())};
    }
  }
  return {};
}

ConditionStatus cond_ii(const GaussParagraph& p) {
  for (int n = 0; n < p.word_count(); ++n) {
    for (const Letter& i : classify_letters(p, n).second) {
      auto [pi, pip] = p_sets(p, i);
      for (int m = 0; m < p.word_count(); ++m) {
        if (m == n) continue;
        const auto singles = o_word(p, m);
        if (intersection_size(pi, singles) % 2 != 0 ||
            intersection_size(pip, singles) % 2 != 0)
          return {Verdict::fail, "p-sets of '" + i +
                                     "' meet the singles of word " +
                                     std::to_string(m + 1) + " oddly"};
      }
    }
  }
  return {};
}

ConditionStatus cond_iii(const GaussParagraph& p) {
  for (int m = 0; m < p.word_count(); ++m) {
    for (int n = m + 1; n < p.word_count(); ++n) {
      const auto shared = common_letters(p, m, n);
      if (shared.size() % 2 != 0)
        return {Verdict::fail, "words " + std::to_string(m + 1) + "," +
                                   std::to_string(n + 1) + " share " +
                                   std::to_string(shared.size()) + " letters"};
    }
  }
  return {};
}

ConditionStatus cond_iv(const GaussParagraph& p) {
  for (int n = 0; n < p.word_count(); ++n) {
    const auto doubles = classify_letters(p, n).second;
    for (auto it = doubles.begin(); it != doubles.end(); ++it) {
      for (auto jt = std::next(it); jt != doubles.end(); ++jt) {
        if (interlaced(p, n, *it, *jt)) continue;
        if (intersection_size(w_set(p, n, *it), w_set(p, n, *jt)) % 2 != 0)
          return {Verdict::fail, "non-interlaced pair (" + *it + "," + *jt +
                                     ") in word " + std::to_string(n + 1)};
      }
    }
  }
  return {};
}

ConditionStatus cond_vi(const GaussParagraph& p) {
  std::vector<std::pair<int, Letter>> doubles;
  for (int n = 0; n < p.word_count(); ++n) {
    for (const Letter& i : classify_letters(p, n).second)
      doubles.push_back({n, i});
  }
  for (size_t a = 0; a < doubles.size(); ++a) {
    for (size_t b = a + 1; b < doubles.size(); ++b) {
      if (doubles[a].first == doubles[b].first) continue;
      auto [pi, pip] = p_sets(p, doubles[a].second);
      auto [pj, pjp] = p_sets(p, doubles[b].second);
      if (intersection_size(pi, pj) % 2 != 0 ||
          intersection_size(pi, pjp) % 2 != 0 ||
          intersection_size(pip, pj) % 2 != 0 ||
          intersection_size(pip, pjp) % 2 != 0)
        return {Verdict::fail, "p-sets of '" + doubles[a].second + "' and '" +
                                   doubles[b].second + "' meet oddly"};
    }
  }
  return {};
}

}  // namespace

ConditionReport check_conditions(const GaussParagraph& p,
                                 const WordWisePartition& P,
                                 const DpFamily& family, bool fast_path) {
  ConditionReport report;
  report.conditions[0] = cond_i(p);
  report.conditions[1] = cond_ii(p);
  report.conditions[2] = cond_iii(p);
  report.conditions[3] = cond_iv(p);
  {
    CompatibilityCheck cc = compatible_with_p(p, P);
    report.conditions[4] =
        cc.ok ? ConditionStatus{} : ConditionStatus{Verdict::fail, cc.witness};
  }
  report.conditions[5] = cond_vi(p);
  {
    DpCompatibility dc;
    if (fast_path) {
      DpFamily subfamily;
      for (const BasisClass& c : basis_cycles(p).classes) {
        if (const auto* cd = std::get_if<CycleClass>(&c))
          subfamily.sequences.push_back(cd->d);
      }
      dc = compatible_with_Dp(p, P, subfamily);
    } else {
      dc = compatible_with_Dp(p, P, family);
    }
    report.conditions[6] = {dc.verdict, dc.witness};
  }

  report.overall = Verdict::pass;
  for (const ConditionStatus& c : report.conditions) {
    if (c.verdict == Verdict::fail) {
      report.overall = Verdict::fail;
      break;
    }
    if (c.verdict == Verdict::indeterminate)
      report.overall = Verdict::indeterminate;
  }
  return report;
}

RealizabilityResult realizable(const GaussParagraph& p, std::size_t cap,
                               bool fast_path) {
  RealizabilityResult result;
  const DpFamily family = fast_path ? DpFamily{} : enumerate_Dp(p, cap);

  bool saw_indeterminate = false;
  std::optional<RealizabilityCertificate> found;
  int tried = 0;
  for_each_partition(p, [&](const WordWisePartition& P) {
    ++tried;
    ConditionReport report = check_conditions(p, P, family, fast_path);
    if (report.overall == Verdict::indeterminate) {
      saw_indeterminate = true;
      return true;
    }
    if (report.overall != Verdict::pass) return true;

    RealizabilityCertificate cert;
    cert.partition = P;
    cert.report = report;
    const VirtualString alpha = construct_from_pair(p, P);
    cert.oracle = genus(alpha);
    cert.embedding = trace_boundaries(build_ribbon(alpha));
    if (cert.oracle.genus != 0)
      throw std::logic_error(
          "conditions pass but the constructed string is not planar");
    found = std::move(cert);
    return false;
  });

  result.partitions_tried = tried;
  if (found) {
    result.verdict = Verdict::pass;
    result.certificate = std::move(found);
  } else if (saw_indeterminate) {
    result.verdict = Verdict::indeterminate;
    result.reason = "cyclic-sequence family truncated; no partition passed";
  } else {
    result.verdict = Verdict::fail;
    result.reason = (tried == 0) ? "no word-wise partition exists"
                                 : "no word-wise partition passes";
  }
  return result;
}

StringCheck cross_validate_string(const VirtualString& alpha,
                                  std::size_t cap) {
  StringCheck out;
  out.oracle = genus(alpha);
  const GaussParagraph p = underlying_paragraph(alpha);
  const WordWisePartition P = induced_partition(alpha);

  const WordWiseCheck ww = is_word_wise(p, P);
  out.partition_word_wise = ww.ok;
  if (!ww.ok) {
    out.conditions_pass = false;
    out.detail = "induced partition not word-wise: " + ww.detail;
    out.agreement =
        (out.oracle.genus != 0) ? Verdict::pass : Verdict::fail;
    return out;
  }

  const CrossValidation cv = cross_validate(p, P, cap);
  if (cv.report.overall == Verdict::indeterminate ||
      cv.agreement == Verdict::indeterminate) {
    out.agreement = Verdict::indeterminate;
    out.detail = "cyclic-sequence family truncated";
    return out;
  }
  out.conditions_pass = cv.report.overall == Verdict::pass;
  bool ok = out.conditions_pass == (out.oracle.genus == 0);
  if (cv.agreement == Verdict::fail) ok = false;
  if (cv.oracle && (cv.oracle->genus == 0) != (out.oracle.genus == 0))
    ok = false;
  out.agreement = ok ? Verdict::pass : Verdict::fail;
  if (!ok) {
    out.detail = "conditions " +
                 std::string(out.conditions_pass ? "pass" : "fail") +
                 " but genus is " + std::to_string(out.oracle.genus);
  }
  return out;
}

CrossValidation cross_validate(const GaussParagraph& p,
                               const WordWisePartition& P, std::size_t cap) {
  CrossValidation cv;
  const DpFamily family = enumerate_Dp(p, cap);
  cv.report = check_conditions(p, P, family);

  const bool constructible = cv.report.at(0).verdict == Verdict::pass &&
                             cv.report.at(2).verdict == Verdict::pass &&
                             cv.report.at(4).verdict == Verdict::pass;
  if (!constructible) {
    // A failed construction precondition is itself a necessary condition,
    // so the verdicts agree by definition.
    cv.agreement = Verdict::pass;
    return cv;
  }
  cv.oracle = genus(construct_from_pair(p, P));
  if (cv.report.overall == Verdict::indeterminate) {
    cv.agreement = Verdict::indeterminate;
    return cv;
  }
  const bool pass = cv.report.overall == Verdict::pass;
  const bool planar = cv.oracle->genus == 0;
  cv.agreement = (pass == planar) ? Verdict::pass : Verdict::fail;
  return cv;
}

}  // namespace gp
