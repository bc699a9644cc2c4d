#include <doctest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "gp/partition.hpp"

using namespace gp;

namespace {

WordWisePartition make_partition(
    std::vector<std::pair<std::set<Letter>, std::set<Letter>>> sets) {
  WordWisePartition P;
  for (auto& [a, ap] : sets) {
    P.A.push_back(std::move(a));
    P.Ap.push_back(std::move(ap));
  }
  return P;
}

// Independent enumeration oracle: try every assignment of every letter to
// any of the 2N sets, keep the word-wise ones, canonicalize, dedup.
std::vector<WordWisePartition> brute_force_partitions(const GaussParagraph& p) {
  const int N = p.word_count();
  std::vector<Letter> letters(p.alphabet().begin(), p.alphabet().end());
  std::vector<WordWisePartition> out;
  WordWisePartition cur;
  cur.A.assign(N, {});
  cur.Ap.assign(N, {});
  std::vector<int> choice(letters.size(), 0);
  const int n_slots = 2 * N;
  for (;;) {
    for (size_t k = 0; k < letters.size(); ++k) {
      const int word = choice[k] / 2;
      (choice[k] % 2 == 0 ? cur.A[word] : cur.Ap[word]).insert(letters[k]);
    }
    if (is_word_wise(p, cur).ok) {
      WordWisePartition canon = canonicalize(cur);
      bool seen = false;
      for (const auto& q : out)
        if (q == canon) seen = true;
      if (!seen) out.push_back(canon);
    }
    for (int n = 0; n < N; ++n) {
      cur.A[n].clear();
      cur.Ap[n].clear();
    }
    size_t k = 0;
    while (k < letters.size() && ++choice[k] == n_slots) choice[k++] = 0;
    if (letters.size() == 0 || k == letters.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("word-wise examples") {
  GaussParagraph aa = GaussParagraph::parse("a a\n");
  CHECK(is_word_wise(aa, make_partition({{{"a"}, {}}})).ok);

  GaussParagraph hopf = GaussParagraph::parse("a b\na b\n");
  CHECK(is_word_wise(hopf, make_partition({{{"a"}, {}}, {{"b"}, {}}})).ok);

  WordWiseCheck bad =
      is_word_wise(hopf, make_partition({{{"a", "b"}, {}}, {{}, {}}}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violated_clause == "iii");

  CHECK_THROWS_AS(is_word_wise(aa, make_partition({{{"z"}, {}}})),
                  UnknownLetter);
}

TEST_CASE("enumeration matches brute force") {
  std::mt19937_64 rng(37);
  for (int rep = 0; rep < 25; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 5);
    auto fast = enumerate_partitions(p);
    auto slow = brute_force_partitions(p);
    CHECK(fast.size() == slow.size());
    for (const auto& P : fast) {
      CHECK(is_word_wise(p, P).ok);
      bool found = false;
      for (const auto& Q : slow)
        if (P == Q) found = true;
      CHECK(found);
    }
    // No duplicates under swap canonicalization.
    for (size_t i = 0; i < fast.size(); ++i) {
      for (size_t j = i + 1; j < fast.size(); ++j)
        CHECK_FALSE(equal_up_to_swap(fast[i], fast[j]));
    }
  }
}

TEST_CASE("enumeration counts on known paragraphs") {
  CHECK(enumerate_partitions(GaussParagraph::parse("a a\n")).size() == 1);
  CHECK(enumerate_partitions(GaussParagraph::parse("a b\na b\n")).size() == 2);
  // Odd sharing: no partition can split one shared letter evenly.
  CHECK(enumerate_partitions(GaussParagraph::parse("a b b\na c c\n")).empty());
}

TEST_CASE("enumeration is deterministic") {
  GaussParagraph p = GaussParagraph::parse("a b c a\nb d c d\n");
  auto first = enumerate_partitions(p);
  auto second = enumerate_partitions(p);
  CHECK(first == second);
  CHECK(!first.empty());
}

TEST_CASE("compatibility with p") {
  GaussParagraph aa = GaussParagraph::parse("a a\n");
  CHECK(compatible_with_p(aa, make_partition({{{"a"}, {}}})).ok);

  GaussParagraph abab = GaussParagraph::parse("a b a b\n");
  // Same subset wants odd parity, but the interlaced pair computes even.
  CHECK_FALSE(
      compatible_with_p(abab, make_partition({{{"a", "b"}, {}}})).ok);
  CHECK(compatible_with_p(abab, make_partition({{{"a"}, {"b"}}})).ok);
}

TEST_CASE("gamma") {
  GaussParagraph p = GaussParagraph::parse("a b a c\nb c\n");
  // b, c are single letters of both words; the even split forces exactly
  // one of them into each word's sets.
  auto P1 = make_partition({{{"a", "b"}, {}}, {{"c"}, {}}});
  REQUIRE(is_word_wise(p, P1).ok);
  CHECK(gamma(p, P1, 0, "b", "c") == 0);  // exactly one in word 1's sets
  CHECK(gamma(p, P1, 1, "b", "c") == 0);
  CHECK_THROWS_AS(gamma(p, P1, 0, "a", "b"), NotSingleLetter);

  // Four shared letters leave room to put two singles on the same side.
  GaussParagraph q = GaussParagraph::parse("a b c d\na b c d\n");
  auto P2 = make_partition({{{"a", "b"}, {}}, {{"c"}, {"d"}}});
  REQUIRE(is_word_wise(q, P2).ok);
  CHECK(gamma(q, P2, 0, "a", "b") == 1);  // both in word 1's sets
  CHECK(gamma(q, P2, 0, "c", "d") == 1);  // neither in word 1's sets
  CHECK(gamma(q, P2, 0, "a", "c") == 0);
}

TEST_CASE("swap invariance") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 20; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 6);
    for (const WordWisePartition& P : enumerate_partitions(p)) {
      const int n =
          std::uniform_int_distribution<int>(0, p.word_count() - 1)(rng);
      WordWisePartition swapped = gptest::swap_word_sides(P, n);
      CHECK(is_word_wise(p, swapped).ok);
      CHECK(compatible_with_p(p, P).ok == compatible_with_p(p, swapped).ok);
    }
  }
}

TEST_CASE("every enumerated representative is canonical") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    GaussParagraph p = gptest::random_paragraph(rng, 3, 6);
    for (const WordWisePartition& P : enumerate_partitions(p)) {
      CHECK(P == canonicalize(P));
    }
  }
}
