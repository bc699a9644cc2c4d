#include "gp/partition.hpp"

#include <algorithm>
#include <map>

namespace gp {

namespace {

// Slot a letter can be assigned to: (word, side) with side 0 = A, 1 = A'.
struct Slot {
  int word;
  int side;
};

std::string letters_of(const std::set<Letter>& s) {
  std::string out = "{";
  for (const Letter& x : s) {
    if (out.size() > 1) out += ",";
    out += x;
  }
  return out + "}";
}

}  // namespace

WordWiseCheck is_word_wise(const GaussParagraph& p,
                           const WordWisePartition& P) {
  const int N = p.word_count();
  if (static_cast<int>(P.A.size()) != N || static_cast<int>(P.Ap.size()) != N)
    return {false, "partition", "set count does not match word count"};

  // The 2N sets must be pairwise disjoint and cover the alphabet, and each
  // word's sets may only hold letters of that word.
  std::map<Letter, int> assigned;
  for (int n = 0; n < N; ++n) {
    for (int side = 0; side < 2; ++side) {
      for (const Letter& x : (side == 0 ? P.A[n] : P.Ap[n])) {
        if (!p.alphabet().count(x))
          throw UnknownLetter("letter '" + x + "' not in alphabet");
        if (assigned.count(x))
          return {false, "partition",
                  "letter '" + x + "' appears in more than one set"};
        assigned[x] = n;
        if (!p.occurs_in(n, x))
          return {false, "membership",
                  "letter '" + x + "' does not occur in word " +
                      std::to_string(n + 1)};
      }
    }
  }
  for (const Letter& x : p.alphabet()) {
    if (!assigned.count(x))
      return {false, "partition", "letter '" + x + "' is unassigned"};
  }

  // Clause (ii): double letters of each word are bipartitioned by that
  // word's sets.
  for (int n = 0; n < N; ++n) {
    auto [singles, doubles] = classify_letters(p, n);
    for (const Letter& x : doubles) {
      if (assigned[x] != n)
        return {false, "ii",
                "double letter '" + x + "' of word " + std::to_string(n + 1) +
                    " is not in that word's sets"};
    }
  }

  // Clause (iii): letters shared by two words split evenly between them.
  for (int m = 0; m < N; ++m) {
    for (int n = m + 1; n < N; ++n) {
      std::set<Letter> shared = common_letters(p, m, n);
      if (shared.empty()) continue;
      if (shared.size() % 2 != 0)
        return {false, "iii",
                "words " + std::to_string(m + 1) + "," + std::to_string(n + 1) +
                    " share an odd number of letters: " + letters_of(shared)};
      int in_m = 0, in_n = 0;
      for (const Letter& x : shared) {
        if (assigned[x] == m) ++in_m;
        if (assigned[x] == n) ++in_n;
      }
      const int half = static_cast<int>(shared.size()) / 2;
      if (in_m != half || in_n != half)
        return {false, "iii",
                "shared letters of words " + std::to_string(m + 1) + "," +
                    std::to_string(n + 1) + " split " + std::to_string(in_m) +
                    "/" + std::to_string(in_n) + ", expected " +
                    std::to_string(half) + "/" + std::to_string(half)};
    }
  }
  return {};
}

WordWisePartition canonicalize(const WordWisePartition& P) {
  WordWisePartition out = P;
  for (size_t n = 0; n < out.A.size(); ++n) {
    std::set<Letter> uni = out.A[n];
    uni.insert(out.Ap[n].begin(), out.Ap[n].end());
    if (uni.empty()) continue;
    if (out.Ap[n].count(*uni.begin())) std::swap(out.A[n], out.Ap[n]);
  }
  return out;
}

bool equal_up_to_swap(const WordWisePartition& P, const WordWisePartition& Q) {
  return canonicalize(P) == canonicalize(Q);
}

void for_each_partition(
    const GaussParagraph& p,
    const std::function<bool(const WordWisePartition&)>& visit) {
  const int N = p.word_count();

  // Legal slots per letter, in deterministic order: a double letter of word
  // n goes to A_n or A'_n; a letter shared by words m < n goes to one of the
  // four sets of those words.
  std::vector<Letter> letters(p.alphabet().begin(), p.alphabet().end());
  std::vector<std::vector<Slot>> choices;
  choices.reserve(letters.size());
  for (const Letter& x : letters) {
    const auto& occ = p.occurrences(x);
    std::vector<Slot> slots;
    if (occ[0].word == occ[1].word) {
      slots = {{occ[0].word, 0}, {occ[0].word, 1}};
    } else {
      slots = {{occ[0].word, 0},
               {occ[0].word, 1},
               {occ[1].word, 0},
               {occ[1].word, 1}};
    }
    choices.push_back(std::move(slots));
  }

  // Per word pair, how many shared letters may still go to each side.
  // Every shared letter must land on one of its two words, so exhausting
  // both quotas enforces the even split exactly.
  std::map<std::pair<int, int>, int> quota_m, quota_n;
  for (int m = 0; m < N; ++m) {
    for (int n = m + 1; n < N; ++n) {
      auto shared = common_letters(p, m, n);
      if (shared.empty()) continue;
      if (shared.size() % 2 != 0) return;  // clause (iii) unsatisfiable
      quota_m[{m, n}] = static_cast<int>(shared.size()) / 2;
      quota_n[{m, n}] = static_cast<int>(shared.size()) / 2;
    }
  }

  WordWisePartition cur;
  cur.A.assign(N, {});
  cur.Ap.assign(N, {});
  bool stop = false;

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (stop) return;
    if (idx == letters.size()) {
      // Swap-canonical reps only: least letter of A_n ∪ A'_n sits in A_n.
      for (int n = 0; n < N; ++n) {
        std::set<Letter> uni = cur.A[n];
        uni.insert(cur.Ap[n].begin(), cur.Ap[n].end());
        if (!uni.empty() && cur.Ap[n].count(*uni.begin())) return;
      }
      if (!visit(cur)) stop = true;
      return;
    }
    const Letter& x = letters[idx];
    const auto& occ = p.occurrences(x);
    const bool shared = occ[0].word != occ[1].word;
    const std::pair<int, int> key{occ[0].word, occ[1].word};
    for (const Slot& s : choices[idx]) {
      if (shared) {
        int& quota = (s.word == key.first) ? quota_m[key] : quota_n[key];
        if (quota == 0) continue;
        --quota;
      }
      (s.side == 0 ? cur.A[s.word] : cur.Ap[s.word]).insert(x);
      rec(idx + 1);
      (s.side == 0 ? cur.A[s.word] : cur.Ap[s.word]).erase(x);
      if (shared) {
        int& quota = (s.word == key.first) ? quota_m[key] : quota_n[key];
        ++quota;
      }
      if (stop) return;
    }
  };
  rec(0);
}

std::vector<WordWisePartition> enumerate_partitions(const GaussParagraph& p) {
  std::vector<WordWisePartition> out;
  for_each_partition(p, [&](const WordWisePartition& P) {
    out.push_back(P);
    return true;
  });
  return out;
}

CompatibilityCheck compatible_with_p(const GaussParagraph& p,
                                     const WordWisePartition& P) {
  const int N = p.word_count();
  for (int n = 0; n < N; ++n) {
    const int len = p.word(n).size();
    auto [singles, doubles] = classify_letters(p, n);

    // Interlaced double letters i, j: writing w = i x1 j x2 i x3 j x4, the
    // counts #(w_i ∩ w_j) + #{singles in x1} and the x3 variant must agree
    // mod 2 and be even exactly when i, j sit in different subsets.
    for (auto it = doubles.begin(); it != doubles.end(); ++it) {
      for (auto jt = std::next(it); jt != doubles.end(); ++jt) {
        const Letter& i = *it;
        const Letter& j = *jt;
        if (!interlaced(p, n, i, j)) continue;
        auto pi = p.positions_in_word(n, i);
        auto pj = p.positions_in_word(n, j);
        int j_in = in_open_span(pj[0], pi[0], pi[1], len) ? pj[0] : pj[1];
        int j_out = (j_in == pj[0]) ? pj[1] : pj[0];
        auto singles_in = [&](int from, int to) {
          int c = 0;
          for (int pos : interior_positions(p, Arc{n, from, to})) {
            if (singles.count(p.word(n).at(pos))) ++c;
          }
          return c;
        };
        std::set<Letter> wi = w_set(p, n, i), wj = w_set(p, n, j), inter;
        std::set_intersection(wi.begin(), wi.end(), wj.begin(), wj.end(),
                              std::inserter(inter, inter.begin()));
        const int wij = static_cast<int>(inter.size());
        const int par1 = (wij + singles_in(pi[0], j_in)) % 2;
        const int par3 = (wij + singles_in(pi[1], j_out)) % 2;
        const bool different = P.side_in_word(n, i) != P.side_in_word(n, j);
        const int want = different ? 0 : 1;
        if (par1 != par3 || par1 != want)
          return {false, "interlaced pair (" + i + "," + j + ") in word " +
                             std::to_string(n + 1)};
      }
    }

    // Single letters i, j of w that both lie in A_n ∪ A'_n: the two gaps
    // between them must have equal parity, even exactly when i, j sit in
    // different subsets.
    for (auto it = singles.begin(); it != singles.end(); ++it) {
      for (auto jt = std::next(it); jt != singles.end(); ++jt) {
        const Letter& i = *it;
        const Letter& j = *jt;
        if (!P.in_word_sets(n, i) || !P.in_word_sets(n, j)) continue;
        const int qi = p.positions_in_word(n, i)[0];
        const int qj = p.positions_in_word(n, j)[0];
        const int l1 = ((qj - qi - 1) % len + len) % len;
        const int l2 = ((qi - qj - 1) % len + len) % len;
        const bool different = P.side_in_word(n, i) != P.side_in_word(n, j);
        const int want = different ? 0 : 1;
        if (l1 % 2 != l2 % 2 || l1 % 2 != want)
          return {false, "single pair (" + i + "," + j + ") in word " +
                             std::to_string(n + 1)};
      }
    }
  }
  return {};
}

int gamma(const GaussParagraph& p, const WordWisePartition& P, int n,
          const Letter& i, const Letter& j) {
  if (!p.is_single_in(n, i))
    throw NotSingleLetter("'" + i + "' is not a single letter of word " +
                          std::to_string(n));
  if (!p.is_single_in(n, j))
    throw NotSingleLetter("'" + j + "' is not a single letter of word " +
                          std::to_string(n));
  const bool a = P.in_word_sets(n, i);
  const bool b = P.in_word_sets(n, j);
  return (a != b) ? 0 : 1;
}

}  // namespace gp
