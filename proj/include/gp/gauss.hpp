#ifndef GP_GAUSS_HPP
#define GP_GAUSS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gp {

// Letters are tokens over [A-Za-z0-9_]; they compare by byte order.
using Letter = std::string;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line, int col)
      : Error(msg + " (line " + std::to_string(line) + ", col " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct LetterCountError : Error {
  using Error::Error;
};
struct DisconnectedParagraph : Error {
  using Error::Error;
};
struct EmptyWord : Error {
  using Error::Error;
};
struct NotDoubleLetter : Error {
  using Error::Error;
};
struct NotSingleLetter : Error {
  using Error::Error;
};
struct UnknownLetter : Error {
  using Error::Error;
};
struct SpanNotInWord : Error {
  using Error::Error;
};

// Position of one letter occurrence: word index and index into the stored
// rotation of that word. Both 0-based.
struct Occurrence {
  int word = 0;
  int pos = 0;
  auto operator<=>(const Occurrence&) const = default;
};

// Forward circular span on one word, from position `start` to position
// `end`. The endpoints are the span's first and last letters; interior
// queries exclude them. start == end is a degenerate span with empty
// interior.
struct Arc {
  int word = 0;
  int start = 0;
  int end = 0;
  auto operator<=>(const Arc&) const = default;
};

// A circular word. Queries are rotation-invariant; the canonical rotation
// (lexicographically least) is used for equality and serialization only.
class Word {
 public:
  explicit Word(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  const std::vector<Letter>& canonical() const { return canonical_; }
  int size() const { return static_cast<int>(letters_.size()); }

  // Letter at a circular position (any integer offset welcome).
  const Letter& at(int pos) const;

  bool operator==(const Word& other) const {
    return canonical_ == other.canonical_;
  }

 private:
  std::vector<Letter> letters_;
  std::vector<Letter> canonical_;
};

// A Gauss paragraph: ordered circular words in which every alphabet letter
// occurs exactly twice overall and the word-sharing graph is connected.
class GaussParagraph {
 public:
  explicit GaussParagraph(std::vector<Word> words);

  // Text format: one word per line, whitespace-separated tokens, `#`
  // comments, blank lines ignored.
  static GaussParagraph parse(std::string_view text);

  // Canonical rotations, single spaces, trailing newline. Parsing the
  // output reproduces the same bytes.
  std::string serialize() const;

  int word_count() const { return static_cast<int>(words_.size()); }
  const Word& word(int n) const { return words_.at(n); }
  const std::vector<Word>& words() const { return words_; }
  const std::set<Letter>& alphabet() const { return alphabet_; }

  // Both occurrences of a letter, ordered by (word, pos).
  const std::vector<Occurrence>& occurrences(const Letter& x) const;

  // Positions of x within word n, ascending (empty, one, or two entries).
  std::vector<int> positions_in_word(int n, const Letter& x) const;

  bool occurs_in(int n, const Letter& x) const;
  bool is_double_in(int n, const Letter& x) const;
  bool is_single_in(int n, const Letter& x) const;

  bool operator==(const GaussParagraph& other) const;

 private:
  void validate_and_index();

  std::vector<Word> words_;
  std::set<Letter> alphabet_;
  std::map<Letter, std::vector<Occurrence>> occurrence_index_;
};

// Singles and doubles of word n.
std::pair<std::set<Letter>, std::set<Letter>> classify_letters(
    const GaussParagraph& p, int n);

// True iff the four occurrences of i and j in word n alternate i,j,i,j in
// cyclic order. Both must be double letters of word n.
bool interlaced(const GaussParagraph& p, int n, const Letter& i,
                const Letter& j);

// Letters interlaced with i in word n.
std::set<Letter> w_set(const GaussParagraph& p, int n, const Letter& i);

// The two p-sets of a double letter i: letters occurring exactly once in
// each of the two spans cut out by the occurrences of i. The first
// component is anchored at the occurrence with the smaller stored
// position; the two components swap under rotation of the stored word.
std::pair<std::set<Letter>, std::set<Letter>> p_sets(const GaussParagraph& p,
                                                     const Letter& i);

// Letters occurring exactly once strictly inside the span.
std::set<Letter> o_span(const GaussParagraph& p, const Arc& arc);

// Single letters of word n.
std::set<Letter> o_word(const GaussParagraph& p, int n);

// Number of distinct letters strictly inside the span that also occur in a
// different word.
int out_count(const GaussParagraph& p, const Arc& arc);

std::set<Letter> common_letters(const GaussParagraph& p, int m, int n);

// Positions strictly between arc.start and arc.end going forward.
std::vector<int> interior_positions(const GaussParagraph& p, const Arc& arc);

int intersection_size(const std::set<Letter>& a, const std::set<Letter>& b);

// True iff pos lies strictly inside the forward span from start to end on a
// circle of the given length.
bool in_open_span(int pos, int start, int end, int length);

}  // namespace gp

#endif
