#include "gp/cyclic.hpp"

#include <algorithm>
#include <functional>

namespace gp {

namespace {

std::string describe(const CyclicSequence& d) {
  std::string out = "(";
  for (size_t k = 0; k < d.chain.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(d.chain[k] + 1) + ">" + d.connectors[k];
  }
  return out + ")";
}

bool chain_less(const CyclicSequence& a, const CyclicSequence& b) {
  if (a.chain != b.chain) return a.chain < b.chain;
  return a.connectors < b.connectors;
}

}  // namespace

DpFamily enumerate_Dp(const GaussParagraph& p, std::size_t cap) {
  DpFamily family;
  const int N = p.word_count();
  if (N < 2) return family;

  // Shared single letters per ordered word pair.
  std::vector<std::vector<std::vector<Letter>>> shared(
      N, std::vector<std::vector<Letter>>(N));
  for (int m = 0; m < N; ++m) {
    for (int n = 0; n < N; ++n) {
      if (m == n) continue;
      auto common = common_letters(p, m, n);
      shared[m][n].assign(common.begin(), common.end());
    }
  }

  auto emit = [&](const std::vector<int>& chain,
                  const std::vector<Letter>& connectors) {
    if (family.truncated) return;
    if (family.sequences.size() == cap) {
      family.truncated = true;
      return;
    }
    CyclicSequence d;
    d.chain = chain;
    d.connectors = connectors;
    d.arcs.assign(N, std::nullopt);
    const int M = static_cast<int>(chain.size());
    for (int k = 0; k < M; ++k) {
      const int n = chain[k];
      const Letter& in = connectors[(k + M - 1) % M];
      const Letter& out = connectors[k];
      d.arcs[n] = Arc{n, p.positions_in_word(n, in)[0],
                      p.positions_in_word(n, out)[0]};
    }
    family.sequences.push_back(std::move(d));
  };

  // For a fixed directed cycle of words, enumerate injective connector
  // choices in lexicographic order.
  auto expand = [&](const std::vector<int>& chain) {
    const int M = static_cast<int>(chain.size());
    std::vector<Letter> connectors(M);
    std::set<Letter> used;
    std::function<void(int)> rec = [&](int k) {
      if (family.truncated) return;
      if (k == M) {
        emit(chain, connectors);
        return;
      }
      for (const Letter& c : shared[chain[k]][chain[(k + 1) % M]]) {
        if (used.count(c)) continue;
        used.insert(c);
        connectors[k] = c;
        rec(k + 1);
        used.erase(c);
      }
    };
    rec(0);
  };

  // Simple directed cycles, smallest word first. Both traversal directions
  // of an undirected cycle are produced; they determine different arcs.
  std::vector<int> chain;
  std::vector<bool> visited(N, false);
  std::function<void(int, int)> dfs = [&](int s, int cur) {
    if (family.truncated) return;
    for (int next = 0; next < N; ++next) {
      if (shared[cur][next].empty()) continue;
      if (next == s && chain.size() >= 2) expand(chain);
      if (next <= s || visited[next]) continue;
      visited[next] = true;
      chain.push_back(next);
      dfs(s, next);
      chain.pop_back();
      visited[next] = false;
    }
  };
  for (int s = 0; s < N && !family.truncated; ++s) {
    chain = {s};
    visited.assign(N, false);
    visited[s] = true;
    dfs(s, s);
  }

  std::sort(family.sequences.begin(), family.sequences.end(), chain_less);
  return family;
}

int delta(const GaussParagraph& p, int n, const std::optional<Arc>& span1,
          const std::optional<Arc>& span2) {
  if (!span1 || !span2) return 0;
  if (span1->word != n || span2->word != n)
    throw SpanNotInWord("delta spans must lie in word " + std::to_string(n));
  const int L = p.word(n).size();
  const int pa = span1->start, pb = span1->end;
  const int py = span2->start, pz = span2->end;

  auto off = [&](int x) {
    int o = (x - pa) % L;
    return o < 0 ? o + L : o;
  };
  const int qb = off(pb);
  // A point coinciding with the base of span1 can be read at offset 0 or L;
  // the case values agree wherever several cases match.
  auto candidates = [&](int q) {
    return q == 0 ? std::vector<int>{0, L} : std::vector<int>{q};
  };
  auto matches = [&](int lo, int mid, int hi) {
    for (int a : candidates(lo)) {
      for (int b : candidates(mid)) {
        for (int c : candidates(hi)) {
          if (a <= b && b <= c) return true;
        }
      }
    }
    return false;
  };
  const int qy = off(py), qz = off(pz);

  auto o = [&](int u, int v) { return o_span(p, Arc{n, u, v}); };
  auto isz = intersection_size;

  if (matches(qy, qb, qz)) {  // a..y..b..z
    return isz(o(pa, py), o(py, pb)) + isz(o(pa, py), o(pb, pz)) +
           isz(o(py, pb), o(pb, pz));
  }
  if (matches(qz, qb, qy)) {  // a..z..b..y
    return isz(o(pa, pz), o(py, pa)) + isz(o(pz, pb), o(py, pa)) +
           isz(o(pz, pb), o(pa, pz));
  }
  if (matches(qy, qz, qb)) {  // a..y..z..b
    return isz(o(pa, py), o(py, pz)) + isz(o(pz, pb), o(py, pz));
  }
  if (matches(qz, qy, qb)) {  // a..z..y..b
    return isz(o(pa, pz), o(pb, pa)) + isz(o(pz, py), o(py, pb)) +
           isz(o(pz, py), o(pb, pa)) + isz(o(pz, py), o(pa, pz)) +
           isz(o(py, pb), o(pb, pa));
  }
  if (matches(qb, qy, qz)) {  // a..b..y..z
    return isz(o(pa, pb), o(py, pz));
  }
  // a..b..z..y
  return isz(o(pa, pb), o(py, pa)) + isz(o(pa, pb), o(pb, pz));
}

int epsilon(const GaussParagraph& p, const WordWisePartition& P, int n,
            const std::optional<Arc>& span1, const std::optional<Arc>& span2) {
  if (!span1 || !span2) return 0;
  if (span1->word != n || span2->word != n)
    throw SpanNotInWord("epsilon spans must lie in word " + std::to_string(n));
  const int L = p.word(n).size();
  const Word& w = p.word(n);
  const Letter a = w.at(span1->start), b = w.at(span1->end);
  const Letter y = w.at(span2->start), z = w.at(span2->end);

  auto inside1 = [&](int pos) {
    return in_open_span(pos, span1->start, span1->end, L);
  };
  auto inside2 = [&](int pos) {
    return in_open_span(pos, span2->start, span2->end, L);
  };

  int truths = 0;
  if (a == b) {
    int count = 0;
    for (int q : p.positions_in_word(n, a)) {
      if (inside2(q)) ++count;
    }
    truths += (count == 1);
    truths += (inside1(span2->start) && !P.in_word_sets(n, y));
    truths += (inside1(span2->end) && P.in_word_sets(n, z));
  } else {
    truths += (inside2(span1->start) && P.in_word_sets(n, a));
    truths += (inside2(span1->end) && !P.in_word_sets(n, b));
    truths += (inside1(span2->start) && !P.in_word_sets(n, y));
    truths += (inside1(span2->end) && P.in_word_sets(n, z));
  }
  return truths % 2;
}

int W_map(const GaussParagraph& p, const WordWisePartition& P, int n,
          const CyclicSequence& d) {
  int sum = 0;
  const std::set<Letter> singles = o_word(p, n);
  for (int k = 0; k < p.word_count(); ++k) {
    if (k == n || !d.arcs[k]) continue;
    sum += intersection_size(singles, o_span(p, *d.arcs[k]));
  }
  if (d.arcs[n]) {
    const Arc& arc = *d.arcs[n];
    const Letter i = p.word(n).at(arc.start);
    const Letter j = p.word(n).at(arc.end);
    sum += intersection_size(o_span(p, arc),
                             o_span(p, Arc{n, arc.end, arc.start}));
    sum += gamma(p, P, n, i, j);
  }
  return sum;
}

int Q_map(const GaussParagraph& p, const WordWisePartition& P, int n,
          const Letter& i, PSetSide side, const CyclicSequence& d) {
  auto pos = p.positions_in_word(n, i);
  if (pos.size() != 2)
    throw NotDoubleLetter("'" + i + "' is not a double letter of word " +
                          std::to_string(n));
  const Arc span = (side == PSetSide::plain) ? Arc{n, pos[0], pos[1]}
                                             : Arc{n, pos[1], pos[0]};
  int sum = delta(p, n, span, d.arcs[n]) + epsilon(p, P, n, span, d.arcs[n]);
  const std::set<Letter> pset = o_span(p, span);
  for (int k = 0; k < p.word_count(); ++k) {
    if (k == n || !d.arcs[k]) continue;
    sum += intersection_size(pset, o_span(p, *d.arcs[k]));
  }
  return sum;
}

DResult D_map(const GaussParagraph& p, const WordWisePartition& P,
              const CyclicSequence& d1, const CyclicSequence& d2) {
  DResult res;
  const int N = p.word_count();
  res.per_word.assign(N, 0);
  for (int n = 0; n < N; ++n) {
    if (!d1.arcs[n]) continue;
    int dn = delta(p, n, d1.arcs[n], d2.arcs[n]) +
             epsilon(p, P, n, d1.arcs[n], d2.arcs[n]);
    const std::set<Letter> o1 = o_span(p, *d1.arcs[n]);
    for (int k = 0; k < N; ++k) {
      if (k == n || !d2.arcs[k]) continue;
      dn += intersection_size(o1, o_span(p, *d2.arcs[k]));
    }
    res.per_word[n] = dn;
    res.total += dn;
  }
  return res;
}

DpCompatibility compatible_with_Dp(const GaussParagraph& p,
                                   const WordWisePartition& P,
                                   const DpFamily& family) {
  const int N = p.word_count();
  for (const CyclicSequence& d : family.sequences) {
    for (int n = 0; n < N; ++n) {
      if (W_map(p, P, n, d) % 2 != 0)
        return {Verdict::fail,
                "W(v" + std::to_string(n + 1) + ", " + describe(d) + ") odd"};
    }
  }
  for (int n = 0; n < N; ++n) {
    auto [singles, doubles] = classify_letters(p, n);
    for (const Letter& i : doubles) {
      for (const CyclicSequence& d : family.sequences) {
        if (Q_map(p, P, n, i, PSetSide::plain, d) % 2 != 0)
          return {Verdict::fail, "Q(p_" + i + ", " + describe(d) + ") odd"};
        if (Q_map(p, P, n, i, PSetSide::primed, d) % 2 != 0)
          return {Verdict::fail, "Q(p'_" + i + ", " + describe(d) + ") odd"};
      }
    }
  }
  for (const CyclicSequence& d1 : family.sequences) {
    for (const CyclicSequence& d2 : family.sequences) {
      if (D_map(p, P, d1, d2).total % 2 != 0)
        return {Verdict::fail,
                "sum D(" + describe(d1) + ", " + describe(d2) + ") odd"};
    }
  }
  if (family.truncated) return {Verdict::indeterminate, "family truncated"};
  return {};
}

}  // namespace gp
