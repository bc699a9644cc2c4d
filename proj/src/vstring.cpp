#include "gp/vstring.hpp"

#include <algorithm>
#include <numeric>

namespace gp {

VirtualString::VirtualString(std::vector<std::vector<VEndpoint>> circles)
    : circles_(std::move(circles)) {
  if (circles_.empty()) throw EmptyWord("virtual string has no circles");
  for (int n = 0; n < circle_count(); ++n) {
    if (circles_[n].empty())
      throw EmptyWord("circle " + std::to_string(n + 1) +
                      " carries no endpoints");
    for (int s = 0; s < static_cast<int>(circles_[n].size()); ++s) {
      const VEndpoint& ep = circles_[n][s];
      labels_.insert(ep.label);
      auto& side = ep.is_tail ? tails_ : heads_;
      if (side.count(ep.label))
        throw LetterCountError("arrow '" + ep.label + "' has two " +
                               (ep.is_tail ? "tails" : "heads"));
      side[ep.label] = EndpointRef{n, s};
    }
  }
  for (const Letter& e : labels_) {
    if (!tails_.count(e) || !heads_.count(e))
      throw LetterCountError("arrow '" + e + "' must have one tail and one head");
  }
  std::vector<int> parent(circle_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Letter& e : labels_) {
    parent[find(tails_.at(e).circle)] = find(heads_.at(e).circle);
  }
  for (int n = 0; n < circle_count(); ++n) {
    if (find(n) != find(0))
      throw DisconnectedParagraph(
          "core circles cannot be split into groups with no shared arrow");
  }
}

EndpointRef VirtualString::tail(const Letter& e) const {
  auto it = tails_.find(e);
  if (it == tails_.end()) throw UnknownLetter("no arrow '" + e + "'");
  return it->second;
}

EndpointRef VirtualString::head(const Letter& e) const {
  auto it = heads_.find(e);
  if (it == heads_.end()) throw UnknownLetter("no arrow '" + e + "'");
  return it->second;
}

bool VirtualString::even_endpoints_everywhere() const {
  for (const auto& c : circles_) {
    if (c.size() % 2 != 0) return false;
  }
  return true;
}

GaussParagraph underlying_paragraph(const VirtualString& alpha) {
  std::vector<Word> words;
  for (int n = 0; n < alpha.circle_count(); ++n) {
    std::vector<Letter> letters;
    for (const VEndpoint& ep : alpha.circle(n)) letters.push_back(ep.label);
    words.emplace_back(std::move(letters));
  }
  return GaussParagraph(std::move(words));
}

Linking links(const VirtualString& alpha, const Letter& e, const Letter& f) {
  const EndpointRef a = alpha.tail(e), b = alpha.head(e);
  const EndpointRef c = alpha.tail(f), d = alpha.head(f);
  if (a.circle != b.circle || c.circle != a.circle || d.circle != a.circle)
    throw EndpointsNotOnCommonCircle("arrows '" + e + "' and '" + f +
                                     "' do not share a circle");
  const int L = static_cast<int>(alpha.circle(a.circle).size());
  auto off = [&](int slot) {
    int o = (slot - a.slot) % L;
    return o < 0 ? o + L : o;
  };
  const int ob = off(b.slot), oc = off(c.slot), od = off(d.slot);
  if (od < ob && ob < oc) return Linking::positive;  // a,d,b,c
  if (oc < ob && ob < od) return Linking::negative;  // a,c,b,d
  return Linking::none;
}

int n_of(const VirtualString& alpha, const Letter& e) {
  const EndpointRef a = alpha.tail(e), b = alpha.head(e);
  if (a.circle != b.circle)
    throw ArrowNotOnCircle("arrow '" + e + "' spans two circles");
  int total = 0;
  for (const Letter& f : alpha.labels()) {
    if (f == e) continue;
    if (alpha.tail(f).circle != a.circle || alpha.head(f).circle != a.circle)
      continue;
    Linking l = links(alpha, e, f);
    if (l == Linking::positive) ++total;
    if (l == Linking::negative) --total;
  }
  return total;
}

namespace {

int directed_count(const VirtualString& alpha, int i, int j, int from_slot,
                   int to_slot) {
  const int L = static_cast<int>(alpha.circle(i).size());
  int total = 0;
  for (const Letter& f : alpha.labels()) {
    const EndpointRef t = alpha.tail(f), h = alpha.head(f);
    if (t.circle == j && h.circle == i &&
        in_open_span(h.slot, from_slot, to_slot, L))
      ++total;
    if (t.circle == i && h.circle == j &&
        in_open_span(t.slot, from_slot, to_slot, L))
      --total;
  }
  return total;
}

}  // namespace

int n_ij(const VirtualString& alpha, int i, int j, const Letter& e) {
  const EndpointRef a = alpha.tail(e), b = alpha.head(e);
  if (a.circle != i || b.circle != i)
    throw ArrowNotOnCircle("arrow '" + e + "' is not on circle " +
                           std::to_string(i + 1));
  return directed_count(alpha, i, j, a.slot, b.slot);
}

int n_star_ij(const VirtualString& alpha, int i, int j, const Letter& e) {
  const EndpointRef a = alpha.tail(e), b = alpha.head(e);
  if (a.circle != i || b.circle != i)
    throw ArrowNotOnCircle("arrow '" + e + "' is not on circle " +
                           std::to_string(i + 1));
  return directed_count(alpha, i, j, b.slot, a.slot);
}

int arr_count(const VirtualString& alpha, int i, int j) {
  int total = 0;
  for (const Letter& e : alpha.labels()) {
    if (alpha.tail(e).circle == i && alpha.head(e).circle == j) ++total;
  }
  return total;
}

int q_pairing(const VirtualString& alpha, int circle, const Letter& e,
              const Letter& f) {
  if (!alpha.even_endpoints_everywhere())
    throw QUndefined("q-pairing needs even endpoint counts on every circle");
  const EndpointRef a = alpha.tail(e), c = alpha.tail(f);
  if (a.circle != circle || c.circle != circle)
    throw TailsNotOnCircle("tails of '" + e + "' and '" + f +
                           "' must lie on circle " + std::to_string(circle + 1));
  if (e == f) return 0;
  const auto& eps = alpha.circle(circle);
  const int L = static_cast<int>(eps.size());
  const int span = ((c.slot - a.slot) % L + L) % L;
  int total = 0;
  for (int t = 1; t <= span; ++t) {
    const VEndpoint& ep = eps[(a.slot + t) % L];
    total += ep.is_tail ? -1 : 1;
  }
  return total;
}

WordWisePartition induced_partition(const VirtualString& alpha) {
  if (!alpha.even_endpoints_everywhere())
    throw QUndefined("induced partition needs even endpoint counts");
  WordWisePartition P;
  P.A.resize(alpha.circle_count());
  P.Ap.resize(alpha.circle_count());
  for (int n = 0; n < alpha.circle_count(); ++n) {
    std::set<Letter> tails;
    for (const VEndpoint& ep : alpha.circle(n)) {
      if (ep.is_tail) tails.insert(ep.label);
    }
    if (tails.empty()) continue;
    const Letter base = *tails.begin();
    for (const Letter& f : tails) {
      if (q_pairing(alpha, n, base, f) % 2 == 0)
        P.A[n].insert(f);
      else
        P.Ap[n].insert(f);
    }
  }
  return P;
}

VirtualString construct_from_pair(const GaussParagraph& p,
                                  const WordWisePartition& P, bool validate) {
  const int N = p.word_count();
  if (validate) {
    WordWiseCheck ww = is_word_wise(p, P);
    if (!ww.ok)
      throw PreconditionViolated("word-wise", ww.violated_clause + ": " +
                                                  ww.detail);
    for (int n = 0; n < N; ++n) {
      for (const Letter& i : classify_letters(p, n).second) {
        auto [pi, pip] = p_sets(p, i);
        if (w_set(p, n, i).size() % 2 != 0 || pi.size() % 2 != 0 ||
            pip.size() % 2 != 0)
          throw PreconditionViolated("i", "letter '" + i + "'");
      }
    }
    for (int m = 0; m < N; ++m) {
      for (int n = m + 1; n < N; ++n) {
        if (common_letters(p, m, n).size() % 2 != 0)
          throw PreconditionViolated("iii", "words " + std::to_string(m + 1) +
                                                "," + std::to_string(n + 1));
      }
    }
    CompatibilityCheck cc = compatible_with_p(p, P);
    if (!cc.ok) throw PreconditionViolated("v", cc.witness);
  }

  // Rotate each word so its own single letters in A_n land on odd 1-indexed
  // positions and those in A'_n on even ones; compatibility with p makes
  // some rotation work whenever the word length is even.
  std::vector<int> offset(N, 0);
  for (int n = 0; n < N; ++n) {
    const Word& w = p.word(n);
    const int L = w.size();
    auto [singles, doubles] = classify_letters(p, n);
    for (int r = 0; r < L; ++r) {
      bool ok = true;
      for (const Letter& x : singles) {
        const int side = P.side_in_word(n, x);
        if (side < 0) continue;
        const int pos1 = ((p.positions_in_word(n, x)[0] - r) % L + L) % L + 1;
        if ((side == 0 && pos1 % 2 == 0) || (side == 1 && pos1 % 2 == 1)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        offset[n] = r;
        break;
      }
    }
  }

  std::vector<std::vector<VEndpoint>> circles(N);
  for (int n = 0; n < N; ++n) {
    const Word& w = p.word(n);
    for (int s = 0; s < w.size(); ++s)
      circles[n].push_back(VEndpoint{w.at(offset[n] + s), false});
  }
  auto normalized_slot = [&](int n, int stored_pos) {
    const int L = p.word(n).size();
    return ((stored_pos - offset[n]) % L + L) % L;
  };

  for (const Letter& x : p.alphabet()) {
    const auto& occ = p.occurrences(x);
    if (occ[0].word == occ[1].word) {
      // Double letter: the tail goes to the odd 1-indexed occurrence for
      // A_n letters and to the even one for A'_n letters. When the two
      // occurrences share a parity (only possible without validation),
      // fall back to first-vs-second.
      const int n = occ[0].word;
      int s1 = normalized_slot(n, occ[0].pos);
      int s2 = normalized_slot(n, occ[1].pos);
      if (s1 > s2) std::swap(s1, s2);
      const bool primed = P.side_in_word(n, x) == 1;
      int tail_slot;
      if (s1 % 2 != s2 % 2) {
        const int odd_slot = (s1 % 2 == 0) ? s1 : s2;  // slot 0 = position 1
        const int even_slot = (odd_slot == s1) ? s2 : s1;
        tail_slot = primed ? even_slot : odd_slot;
      } else {
        tail_slot = primed ? s2 : s1;
      }
      circles[n][tail_slot].is_tail = true;
    } else {
      // Shared single letter: tail on the word whose sets contain it.
      int tail_word = occ[0].word;
      if (P.in_word_sets(occ[1].word, x) && !P.in_word_sets(occ[0].word, x))
        tail_word = occ[1].word;
      const auto& o = (tail_word == occ[0].word) ? occ[0] : occ[1];
      circles[tail_word][normalized_slot(tail_word, o.pos)].is_tail = true;
    }
  }
  return VirtualString(std::move(circles));
}

VirtualString random_virtual_string(std::mt19937_64& rng, int max_arrows,
                                    int max_circles) {
  for (;;) {
    const int c = std::uniform_int_distribution<int>(1, max_circles)(rng);
    const int k =
        std::uniform_int_distribution<int>(std::max(1, c),
                                           std::max(c, max_arrows))(rng);
    std::vector<int> counts(c, 2);
    for (int extra = 0; extra < k - c; ++extra) {
      counts[std::uniform_int_distribution<int>(0, c - 1)(rng)] += 2;
    }
    std::vector<EndpointRef> slots;
    for (int n = 0; n < c; ++n) {
      for (int s = 0; s < counts[n]; ++s) slots.push_back(EndpointRef{n, s});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<std::vector<VEndpoint>> circles(c);
    for (int n = 0; n < c; ++n)
      circles[n].assign(counts[n], VEndpoint{"", false});
    for (int a = 0; a < k; ++a) {
      EndpointRef u = slots[2 * a], v = slots[2 * a + 1];
      if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(u, v);
      const Letter label = "x" + std::to_string(a);
      circles[u.circle][u.slot] = VEndpoint{label, true};
      circles[v.circle][v.slot] = VEndpoint{label, false};
    }
    try {
      return VirtualString(std::move(circles));
    } catch (const DisconnectedParagraph&) {
      continue;
    }
  }
}

}  // namespace gp
