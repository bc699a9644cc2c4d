#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "gp/gauss.hpp"

using namespace gp;

TEST_CASE("parse basic paragraphs") {
  GaussParagraph p1 = GaussParagraph::parse("a b a b\n");
  CHECK(p1.word_count() == 1);
  CHECK(p1.alphabet() == std::set<Letter>{"a", "b"});

  GaussParagraph p2 = GaussParagraph::parse("a b\na b\n");
  CHECK(p2.word_count() == 2);
  CHECK(common_letters(p2, 0, 1) == std::set<Letter>{"a", "b"});

  CHECK_THROWS_AS(GaussParagraph::parse("a a\nb b\n"), DisconnectedParagraph);
  CHECK_THROWS_AS(GaussParagraph::parse("a b a\n"), LetterCountError);
  CHECK_THROWS_AS(GaussParagraph::parse("a$ a$\n"), SyntaxError);
  CHECK_THROWS_AS(GaussParagraph::parse("# only a comment\n"), SyntaxError);
}

TEST_CASE("parse ignores comments and blank lines") {
  GaussParagraph p = GaussParagraph::parse(
      "# curve with two components\n\n a b   # word one\na b\n\n");
  CHECK(p.word_count() == 2);
  CHECK(p.word(0).letters() == std::vector<Letter>{"a", "b"});
}

TEST_CASE("classify letters") {
  GaussParagraph p = GaussParagraph::parse("a b a c\nb c\n");
  auto [singles1, doubles1] = classify_letters(p, 0);
  CHECK(singles1 == std::set<Letter>{"b", "c"});
  CHECK(doubles1 == std::set<Letter>{"a"});
  auto [singles2, doubles2] = classify_letters(p, 1);
  CHECK(singles2 == std::set<Letter>{"b", "c"});
  CHECK(doubles2.empty());
}

TEST_CASE("interlacement") {
  CHECK(interlaced(GaussParagraph::parse("a b a b\n"), 0, "a", "b"));
  CHECK_FALSE(interlaced(GaussParagraph::parse("a a b b\n"), 0, "a", "b"));
  // b's occurrences both sit inside one a-span.
  CHECK_FALSE(
      interlaced(GaussParagraph::parse("a b b a c c\n"), 0, "a", "b"));
  CHECK_THROWS_AS(
      interlaced(GaussParagraph::parse("a b a c\nb c\n"), 0, "a", "b"),
      NotDoubleLetter);
}

TEST_CASE("w-sets") {
  CHECK(w_set(GaussParagraph::parse("a b a b\n"), 0, "a") ==
        std::set<Letter>{"b"});
  CHECK(w_set(GaussParagraph::parse("a a\n"), 0, "a").empty());
  CHECK(w_set(GaussParagraph::parse("a b c a b c\n"), 0, "a") ==
        std::set<Letter>{"b", "c"});
}

TEST_CASE("p-sets") {
  auto [pa1, pa1p] = p_sets(GaussParagraph::parse("a b a b\n"), "a");
  CHECK(pa1 == std::set<Letter>{"b"});
  CHECK(pa1p == std::set<Letter>{"b"});

  auto [pa2, pa2p] = p_sets(GaussParagraph::parse("a b a c\nb c\n"), "a");
  CHECK(pa2 == std::set<Letter>{"b"});
  CHECK(pa2p == std::set<Letter>{"c"});

  // b repeats inside the first span, so only c survives there.
  auto [pa3, pa3p] =
      p_sets(GaussParagraph::parse("a b c b a d\nc d\n"), "a");
  CHECK(pa3 == std::set<Letter>{"c"});
  CHECK(pa3p == std::set<Letter>{"d"});
}

TEST_CASE("o over spans and words") {
  GaussParagraph p = GaussParagraph::parse("a b c b d\na c d\n");
  // Interior of the whole first word from a to d: b c b, so only c counts.
  CHECK(o_span(p, Arc{0, 0, 4}) == std::set<Letter>{"c"});
  CHECK(o_span(p, Arc{0, 0, 1}).empty());  // empty interior

  GaussParagraph q = GaussParagraph::parse("a b c a d e\nb c d e\n");
  CHECK(o_span(q, Arc{0, 0, 3}) == std::set<Letter>{"b", "c"});

  CHECK(o_word(GaussParagraph::parse("a b a b\n"), 0).empty());
  CHECK(o_word(GaussParagraph::parse("a b\na b\n"), 0) ==
        std::set<Letter>{"a", "b"});
  CHECK(o_word(GaussParagraph::parse("a b a c\nb c\n"), 0) ==
        std::set<Letter>{"b", "c"});
}

TEST_CASE("out counts") {
  GaussParagraph one = GaussParagraph::parse("a b a b\n");
  CHECK(out_count(one, Arc{0, 0, 2}) == 0);

  GaussParagraph p = GaussParagraph::parse("a b a c\nb c\n");
  CHECK(out_count(p, Arc{0, 0, 2}) == 1);  // span holds b only

  GaussParagraph q = GaussParagraph::parse("a b c a\nb d c d\n");
  CHECK(out_count(q, Arc{0, 0, 3}) == 2);  // b and c both shared
}

TEST_CASE("letter count invariant") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 4, 8);
    int total = 0;
    for (int n = 0; n < p.word_count(); ++n) total += p.word(n).size();
    CHECK(total == 2 * static_cast<int>(p.alphabet().size()));
  }
}

TEST_CASE("rotation invariance of queries") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 7);
    const int n = std::uniform_int_distribution<int>(0, p.word_count() - 1)(rng);
    const int shift =
        std::uniform_int_distribution<int>(0, p.word(n).size() - 1)(rng);
    GaussParagraph q = gptest::rotate_word(p, n, shift);
    CHECK(p == q);
    for (int k = 0; k < p.word_count(); ++k) {
      CHECK(classify_letters(p, k) == classify_letters(q, k));
      CHECK(o_word(p, k) == o_word(q, k));
    }
    for (const Letter& x : p.alphabet()) {
      const auto& occ = p.occurrences(x);
      if (occ[0].word != occ[1].word) continue;
      CHECK(w_set(p, occ[0].word, x) == w_set(q, occ[0].word, x));
      // The p-sets may swap anchors under rotation but match as a pair.
      auto a = p_sets(p, x);
      auto b = p_sets(q, x);
      const bool same = a == b;
      const bool swapped = a.first == b.second && a.second == b.first;
      CHECK((same || swapped));
    }
  }
}

TEST_CASE("w-set symmetry") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 7);
    for (int n = 0; n < p.word_count(); ++n) {
      const auto doubles = classify_letters(p, n).second;
      for (const Letter& i : doubles) {
        for (const Letter& j : doubles) {
          if (i == j) continue;
          CHECK(w_set(p, n, i).count(j) == w_set(p, n, j).count(i));
        }
      }
    }
  }
}

TEST_CASE("p-sets contain the w-set") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 7);
    for (int n = 0; n < p.word_count(); ++n) {
      for (const Letter& i : classify_letters(p, n).second) {
        auto [pi, pip] = p_sets(p, i);
        std::set<Letter> uni = pi;
        uni.insert(pip.begin(), pip.end());
        for (const Letter& j : w_set(p, n, i)) {
          CHECK(uni.count(j) == 1);
          CHECK(pi.count(j) == pip.count(j));  // interlaced: one in each span
        }
        if (p.word_count() == 1) {
          std::set<Letter> inter;
          for (const Letter& x : pi)
            if (pip.count(x)) inter.insert(x);
          CHECK(inter == w_set(p, n, i));
        }
      }
    }
  }
}

namespace {

// Positional anchoring for an interlaced pair: w = i x1 j x2 i x3 j x4.
struct InterlacedSpans {
  int pi1, pi2, j_in, j_out;
};

InterlacedSpans anchor(const GaussParagraph& p, int n, const Letter& i,
                       const Letter& j) {
  const auto pi = p.positions_in_word(n, i);
  const auto pj = p.positions_in_word(n, j);
  const int len = p.word(n).size();
  InterlacedSpans s{pi[0], pi[1], 0, 0};
  s.j_in = in_open_span(pj[0], pi[0], pi[1], len) ? pj[0] : pj[1];
  s.j_out = (s.j_in == pj[0]) ? pj[1] : pj[0];
  return s;
}

}  // namespace

TEST_CASE("intersection and size identities for interlaced pairs") {
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int rep = 0; rep < 120; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 8);
    for (int n = 0; n < p.word_count(); ++n) {
      const auto doubles = classify_letters(p, n).second;
      for (const Letter& i : doubles) {
        // Size identity: #(p_i) = #(w_i) + out(x1), and the primed sibling.
        const auto pos = p.positions_in_word(n, i);
        auto [pi_set, pip_set] = p_sets(p, i);
        const int wi = static_cast<int>(w_set(p, n, i).size());
        CHECK(static_cast<int>(pi_set.size()) ==
              wi + out_count(p, Arc{n, pos[0], pos[1]}));
        CHECK(static_cast<int>(pip_set.size()) ==
              wi + out_count(p, Arc{n, pos[1], pos[0]}));

        for (const Letter& j : doubles) {
          if (j <= i || !interlaced(p, n, i, j)) continue;
          ++checked;
          const InterlacedSpans s = anchor(p, n, i, j);
          const auto pi_ = o_span(p, Arc{n, s.pi1, s.pi2});
          const auto pip_ = o_span(p, Arc{n, s.pi2, s.pi1});
          const auto pj_ = o_span(p, Arc{n, s.j_in, s.j_out});
          const auto pjp_ = o_span(p, Arc{n, s.j_out, s.j_in});
          const int wij =
              intersection_size(w_set(p, n, i), w_set(p, n, j));
          const int out1 = out_count(p, Arc{n, s.pi1, s.j_in});
          const int out2 = out_count(p, Arc{n, s.j_in, s.pi2});
          const int out3 = out_count(p, Arc{n, s.pi2, s.j_out});
          const int out4 = out_count(p, Arc{n, s.j_out, s.pi1});
          CHECK(intersection_size(pi_, pj_) == wij + out2);
          CHECK(intersection_size(pi_, pjp_) == wij + out1);
          CHECK(intersection_size(pip_, pj_) == wij + out3);
          CHECK(intersection_size(pip_, pjp_) == wij + out4);
        }
      }
    }
  }
  CHECK(checked > 20);  // the generator must actually hit interlaced pairs
}

TEST_CASE("four-way parity equivalence for interlaced pairs") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 120; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 8);
    for (int n = 0; n < p.word_count(); ++n) {
      const auto doubles = classify_letters(p, n).second;
      for (const Letter& i : doubles) {
        for (const Letter& j : doubles) {
          if (j <= i || !interlaced(p, n, i, j)) continue;
          const InterlacedSpans s = anchor(p, n, i, j);
          const auto pi_ = o_span(p, Arc{n, s.pi1, s.pi2});
          const auto pip_ = o_span(p, Arc{n, s.pi2, s.pi1});
          const auto pj_ = o_span(p, Arc{n, s.j_in, s.j_out});
          const auto pjp_ = o_span(p, Arc{n, s.j_out, s.j_in});

          const int i11 = intersection_size(pi_, pj_) % 2;
          const int i12 = intersection_size(pi_, pjp_) % 2;
          const int i21 = intersection_size(pip_, pj_) % 2;
          const int i22 = intersection_size(pip_, pjp_) % 2;
          const bool st1 = i11 == i12 && i12 == i21 && i21 == i22;

          const int o1 = out_count(p, Arc{n, s.pi1, s.j_in}) % 2;
          const int o2 = out_count(p, Arc{n, s.j_in, s.pi2}) % 2;
          const int o3 = out_count(p, Arc{n, s.pi2, s.j_out}) % 2;
          const int o4 = out_count(p, Arc{n, s.j_out, s.pi1}) % 2;
          const bool st2 = o1 == o2 && o2 == o3 && o3 == o4;

          const bool st3 = out_count(p, Arc{n, s.pi1, s.pi2}) % 2 == 0 &&
                           out_count(p, Arc{n, s.j_in, s.j_out}) % 2 == 0 &&
                           out_count(p, Arc{n, s.pi2, s.pi1}) % 2 == 0 &&
                           out_count(p, Arc{n, s.j_out, s.j_in}) % 2 == 0;

          const int wi = static_cast<int>(w_set(p, n, i).size());
          const int wj = static_cast<int>(w_set(p, n, j).size());
          auto [psi, psip] = p_sets(p, i);
          auto [psj, psjp] = p_sets(p, j);
          const bool st4 =
              static_cast<int>(psi.size()) % 2 == wi % 2 &&
              static_cast<int>(psip.size()) % 2 == wi % 2 &&
              static_cast<int>(psj.size()) % 2 == wj % 2 &&
              static_cast<int>(psjp.size()) % 2 == wj % 2;

          CHECK(st1 == st2);
          CHECK(st2 == st3);
          CHECK(st3 == st4);
        }
      }
    }
  }
}

TEST_CASE("even cross-word p-set overlap forces even sharing") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 120; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 8);
    for (int m = 0; m < p.word_count(); ++m) {
      for (int n = 0; n < p.word_count(); ++n) {
        if (m == n) continue;
        for (const Letter& i : classify_letters(p, m).second) {
          for (const Letter& j : classify_letters(p, n).second) {
            auto [pi, pip] = p_sets(p, i);
            auto [pj, pjp] = p_sets(p, j);
            const int a = intersection_size(pi, pj) % 2;
            if (intersection_size(pi, pjp) % 2 != a) continue;
            if (intersection_size(pip, pj) % 2 != a) continue;
            if (intersection_size(pip, pjp) % 2 != a) continue;
            // Hypothesis holds; p_i and p'_i must meet the other word
            // evenly, and so must the words themselves.
            auto count_in_word = [&](const std::set<Letter>& s) {
              int c = 0;
              for (const Letter& x : s)
                if (p.occurs_in(n, x)) ++c;
              return c;
            };
            CHECK(count_in_word(pi) % 2 == 0);
            CHECK(count_in_word(pip) % 2 == 0);
            CHECK(common_letters(p, m, n).size() % 2 == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("pairwise even sharing forces even word lengths") {
  std::mt19937_64 rng(31);
  int hit = 0;
  for (int rep = 0; rep < 200; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 4, 8);
    bool all_even = true;
    for (int m = 0; m < p.word_count() && all_even; ++m) {
      for (int n = m + 1; n < p.word_count(); ++n) {
        if (common_letters(p, m, n).size() % 2 != 0) {
          all_even = false;
          break;
        }
      }
    }
    if (!all_even) continue;
    ++hit;
    for (int n = 0; n < p.word_count(); ++n)
      CHECK(p.word(n).size() % 2 == 0);
  }
  CHECK(hit > 10);
}
