#include "gp/homology.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "gp/vstring.hpp"

namespace gp {

namespace {

std::string describe_cycle(const CyclicSequence& d) {
  std::string out = "(";
  for (size_t k = 0; k < d.chain.size(); ++k) {
    if (k) out += " ";
    out += std::to_string(d.chain[k] + 1) + ">" + d.connectors[k];
  }
  return out + ")";
}

CyclicSequence make_cycle(const GaussParagraph& p, std::vector<int> chain,
                          std::vector<Letter> connectors) {
  // Rotate so the smallest word index comes first.
  const size_t M = chain.size();
  size_t best = 0;
  for (size_t k = 1; k < M; ++k) {
    if (chain[k] < chain[best]) best = k;
  }
  std::rotate(chain.begin(), chain.begin() + best, chain.end());
  std::rotate(connectors.begin(), connectors.begin() + best, connectors.end());

  CyclicSequence d;
  d.chain = std::move(chain);
  d.connectors = std::move(connectors);
  d.arcs.assign(p.word_count(), std::nullopt);
  for (size_t k = 0; k < M; ++k) {
    const int n = d.chain[k];
    const Letter& in = d.connectors[(k + M - 1) % M];
    const Letter& out = d.connectors[k];
    d.arcs[n] =
        Arc{n, p.positions_in_word(n, in)[0], p.positions_in_word(n, out)[0]};
  }
  return d;
}

int w_parity(const GaussParagraph& p, int n, const Letter& i) {
  return static_cast<int>(w_set(p, n, i).size()) % 2;
}

}  // namespace

std::string describe(const BasisClass& c) {
  if (const auto* s = std::get_if<CircleClass>(&c))
    return "circle " + std::to_string(s->word + 1);
  if (const auto* a = std::get_if<ArrowClass>(&c))
    return "arrow " + a->letter +
           (a->side == PSetSide::plain ? "" : " (primed)");
  return "cycle " + describe_cycle(std::get<CycleClass>(c).d);
}

Basis basis_cycles(const GaussParagraph& p) {
  Basis basis;
  const int N = p.word_count();

  // Spanning tree of the word-sharing graph, edges sorted by letter.
  std::vector<int> parent(N);
  for (int n = 0; n < N; ++n) parent[n] = n;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::pair<int, Letter>>> tree_adj(N);
  for (const Letter& x : p.alphabet()) {
    const auto& occ = p.occurrences(x);
    if (occ[0].word == occ[1].word) continue;
    if (find(occ[0].word) == find(occ[1].word)) continue;
    parent[find(occ[0].word)] = find(occ[1].word);
    basis.tree_letters.insert(x);
    tree_adj[occ[0].word].push_back({occ[1].word, x});
    tree_adj[occ[1].word].push_back({occ[0].word, x});
  }

  for (int n = 0; n < N; ++n) basis.classes.push_back(CircleClass{n});
  for (int n = 0; n < N; ++n) {
    for (const Letter& i : classify_letters(p, n).second)
      basis.classes.push_back(ArrowClass{i, PSetSide::plain});
  }

  // One cycle class per co-tree single letter: its fundamental cycle walks
  // the tree path between the letter's two words and closes with the
  // letter itself.
  for (const Letter& x : p.alphabet()) {
    const auto& occ = p.occurrences(x);
    if (occ[0].word == occ[1].word || basis.tree_letters.count(x)) continue;
    const int u = occ[0].word, v = occ[1].word;
    std::vector<int> prev_word(N, -1);
    std::vector<Letter> prev_letter(N);
    std::queue<int> bfs;
    bfs.push(u);
    prev_word[u] = u;
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop();
      for (const auto& [next, letter] : tree_adj[cur]) {
        if (prev_word[next] != -1) continue;
        prev_word[next] = cur;
        prev_letter[next] = letter;
        bfs.push(next);
      }
    }
    std::vector<int> chain;
    std::vector<Letter> connectors;
    for (int cur = v; cur != u; cur = prev_word[cur]) {
      chain.push_back(cur);
      connectors.push_back(prev_letter[cur]);
    }
    chain.push_back(u);
    std::reverse(chain.begin(), chain.end());
    std::reverse(connectors.begin(), connectors.end());
    connectors.push_back(x);  // closing edge v -> u
    basis.classes.push_back(CycleClass{make_cycle(p, chain, connectors)});
  }
  return basis;
}

namespace {

BEvaluation eval_arrow_arrow(const GaussParagraph& p,
                             const WordWisePartition& P, const ArrowClass& a1,
                             const ArrowClass& a2) {
  const auto& occ1 = p.occurrences(a1.letter);
  const auto& occ2 = p.occurrences(a2.letter);
  const int n1 = occ1[0].word, n2 = occ2[0].word;

  if (a1.letter == a2.letter) {
    if (a1.side == a2.side) return {0, ""};
    return {w_parity(p, n1, a1.letter), ""};
  }

  if (n1 != n2) {
    auto [pi, pip] = p_sets(p, a1.letter);
    auto [pj, pjp] = p_sets(p, a2.letter);
    const auto& s1 = (a1.side == PSetSide::plain) ? pi : pip;
    const auto& s2 = (a2.side == PSetSide::plain) ? pj : pjp;
    return {intersection_size(s1, s2) % 2, ""};
  }

  if (w_parity(p, n1, a1.letter) != 0 || w_parity(p, n1, a2.letter) != 0)
    return {std::nullopt, "odd w-set"};

  std::set<Letter> wi = w_set(p, n1, a1.letter);
  std::set<Letter> wj = w_set(p, n1, a2.letter);
  const int wij = intersection_size(wi, wj);

  if (!interlaced(p, n1, a1.letter, a2.letter)) return {wij % 2, ""};

  // Interlaced same-word pair: read the q-pairing off the constructed
  // string, anchored at whichever arrow shows tail, tail, head, head order
  // around the circle.
  VirtualString alpha = construct_from_pair(p, P);
  const EndpointRef ti = alpha.tail(a1.letter), hi = alpha.head(a1.letter);
  const EndpointRef tj = alpha.tail(a2.letter);
  const int circle = ti.circle;
  const int L = static_cast<int>(alpha.circle(circle).size());
  Letter first = a1.letter, second = a2.letter;
  if (!in_open_span(tj.slot, ti.slot, hi.slot, L)) std::swap(first, second);
  const int q = q_pairing(alpha, circle, first, second);
  const EndpointRef tf = alpha.tail(first), ts = alpha.tail(second);
  int singles_in_x = 0;
  for (int t = 1; t < ((ts.slot - tf.slot) % L + L) % L; ++t) {
    const Letter& x = alpha.circle(circle)[(tf.slot + t) % L].label;
    if (p.is_single_in(n1, x)) ++singles_in_x;
  }
  return {((q + singles_in_x + wij + 1) % 2 + 2) % 2, ""};
}

BEvaluation eval_arrow_circle(const GaussParagraph& p,
                              const WordWisePartition& P, const ArrowClass& a,
                              const CircleClass& s) {
  (void)P;
  const int n = p.occurrences(a.letter)[0].word;
  if (s.word == n) return {w_parity(p, n, a.letter), ""};
  auto [pi, pip] = p_sets(p, a.letter);
  const auto& pset = (a.side == PSetSide::plain) ? pi : pip;
  return {intersection_size(pset, o_word(p, s.word)) % 2, ""};
}

}  // namespace

BEvaluation b_mod2(const GaussParagraph& p, const WordWisePartition& P,
                   const BasisClass& c1, const BasisClass& c2) {
  if (const auto* s1 = std::get_if<CircleClass>(&c1)) {
    if (const auto* s2 = std::get_if<CircleClass>(&c2)) {
      if (s1->word == s2->word) return {0, ""};
      return {static_cast<int>(common_letters(p, s1->word, s2->word).size()) %
                  2,
              ""};
    }
    if (const auto* a2 = std::get_if<ArrowClass>(&c2))
      return eval_arrow_circle(p, P, *a2, *s1);
    return {W_map(p, P, s1->word, std::get<CycleClass>(c2).d) % 2, ""};
  }
  if (const auto* a1 = std::get_if<ArrowClass>(&c1)) {
    if (const auto* s2 = std::get_if<CircleClass>(&c2))
      return eval_arrow_circle(p, P, *a1, *s2);
    if (const auto* a2 = std::get_if<ArrowClass>(&c2)) {
      try {
        return eval_arrow_arrow(p, P, *a1, *a2);
      } catch (const PreconditionViolated& e) {
        return {std::nullopt, std::string("construction: ") + e.what()};
      }
    }
    const int n = p.occurrences(a1->letter)[0].word;
    return {Q_map(p, P, n, a1->letter, a1->side, std::get<CycleClass>(c2).d) %
                2,
            ""};
  }
  const auto& d1 = std::get<CycleClass>(c1).d;
  if (const auto* s2 = std::get_if<CircleClass>(&c2))
    return {W_map(p, P, s2->word, d1) % 2, ""};
  if (const auto* a2 = std::get_if<ArrowClass>(&c2)) {
    const int n = p.occurrences(a2->letter)[0].word;
    return {Q_map(p, P, n, a2->letter, a2->side, d1) % 2, ""};
  }
  return {D_map(p, P, d1, std::get<CycleClass>(c2).d).total % 2, ""};
}

AllEvenResult all_even(const GaussParagraph& p, const WordWisePartition& P,
                       const DpFamily& family) {
  std::vector<BasisClass> classes;
  for (int n = 0; n < p.word_count(); ++n)
    classes.push_back(CircleClass{n});
  for (int n = 0; n < p.word_count(); ++n) {
    for (const Letter& i : classify_letters(p, n).second)
      classes.push_back(ArrowClass{i, PSetSide::plain});
  }
  const size_t fixed = classes.size();
  for (const CyclicSequence& d : family.sequences)
    classes.push_back(CycleClass{d});

  for (size_t i = 0; i < classes.size(); ++i) {
    for (size_t j = i; j < classes.size(); ++j) {
      // Only cycle-class diagonals carry a formula; other diagonals pair
      // to zero trivially.
      if (i == j && i < fixed) continue;
      BEvaluation ev = b_mod2(p, P, classes[i], classes[j]);
      if (!ev.applicable())
        return {Verdict::indeterminate,
                "not applicable (" + ev.not_applicable + "): " +
                    describe(classes[i]) + " vs " + describe(classes[j])};
      if (*ev.parity != 0)
        return {Verdict::fail,
                describe(classes[i]) + " vs " + describe(classes[j])};
    }
  }
  if (family.truncated) return {Verdict::indeterminate, "family truncated"};
  return {};
}

}  // namespace gp
