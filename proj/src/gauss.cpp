#include "gp/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gp {

namespace {

std::vector<Letter> least_rotation(const std::vector<Letter>& v) {
  std::vector<Letter> best = v;
  const int n = static_cast<int>(v.size());
  for (int r = 1; r < n; ++r) {
    std::vector<Letter> cand(v.begin() + r, v.end());
    cand.insert(cand.end(), v.begin(), v.begin() + r);
    if (cand < best) best = cand;
  }
  return best;
}

bool valid_token(const std::string& t) {
  if (t.empty()) return false;
  for (char c : t) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  }
  return true;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw EmptyWord("empty word");
  canonical_ = least_rotation(letters_);
}

const Letter& Word::at(int pos) const {
  const int n = size();
  int m = pos % n;
  if (m < 0) m += n;
  return letters_[static_cast<size_t>(m)];
}

GaussParagraph::GaussParagraph(std::vector<Word> words)
    : words_(std::move(words)) {
  validate_and_index();
}

void GaussParagraph::validate_and_index() {
  if (words_.empty()) throw EmptyWord("paragraph has no words");
  for (int n = 0; n < word_count(); ++n) {
    const Word& w = words_[n];
    for (int k = 0; k < w.size(); ++k) {
      occurrence_index_[w.letters()[k]].push_back(Occurrence{n, k});
      alphabet_.insert(w.letters()[k]);
    }
  }
  for (const auto& [letter, occ] : occurrence_index_) {
    if (occ.size() != 2)
      throw LetterCountError("letter '" + letter + "' occurs " +
                             std::to_string(occ.size()) +
                             " times, expected 2");
  }
  // Word-sharing graph must be connected.
  const int n_words = word_count();
  std::vector<int> parent(n_words);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [letter, occ] : occurrence_index_) {
    parent[find(occ[0].word)] = find(occ[1].word);
  }
  for (int n = 0; n < n_words; ++n) {
    if (find(n) != find(0))
      throw DisconnectedParagraph(
          "words cannot be split into groups with no shared letter");
  }
}

GaussParagraph GaussParagraph::parse(std::string_view text) {
  std::vector<Word> words;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t eol = text.find('\n', start);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, eol - start);
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Letter> letters;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      std::string tok(line.substr(i, j - i));
      if (!valid_token(tok))
        throw SyntaxError("bad token '" + tok + "'", line_no,
                          static_cast<int>(i) + 1);
      letters.push_back(std::move(tok));
      i = j;
    }
    if (!letters.empty()) words.emplace_back(std::move(letters));

    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }
  if (words.empty()) throw SyntaxError("no words in input", line_no, 1);
  return GaussParagraph(std::move(words));
}

std::string GaussParagraph::serialize() const {
  std::ostringstream out;
  for (const Word& w : words_) {
    const auto& ls = w.canonical();
    for (size_t k = 0; k < ls.size(); ++k) {
      if (k) out << ' ';
      out << ls[k];
    }
    out << '\n';
  }
  return out.str();
}

const std::vector<Occurrence>& GaussParagraph::occurrences(
    const Letter& x) const {
  auto it = occurrence_index_.find(x);
  if (it == occurrence_index_.end())
    throw UnknownLetter("letter '" + x + "' not in alphabet");
  return it->second;
}

std::vector<int> GaussParagraph::positions_in_word(int n,
                                                   const Letter& x) const {
  std::vector<int> out;
  for (const Occurrence& o : occurrences(x)) {
    if (o.word == n) out.push_back(o.pos);
  }
  return out;
}

bool GaussParagraph::occurs_in(int n, const Letter& x) const {
  return !positions_in_word(n, x).empty();
}

bool GaussParagraph::is_double_in(int n, const Letter& x) const {
  return positions_in_word(n, x).size() == 2;
}

bool GaussParagraph::is_single_in(int n, const Letter& x) const {
  return positions_in_word(n, x).size() == 1;
}

bool GaussParagraph::operator==(const GaussParagraph& other) const {
  return words_ == other.words_;
}

std::pair<std::set<Letter>, std::set<Letter>> classify_letters(
    const GaussParagraph& p, int n) {
  std::set<Letter> singles, doubles;
  for (const Letter& x : p.word(n).letters()) {
    if (p.is_double_in(n, x))
      doubles.insert(x);
    else
      singles.insert(x);
  }
  return {singles, doubles};
}

bool in_open_span(int pos, int start, int end, int length) {
  if (start == end) return false;
  int off = (pos - start) % length;
  if (off < 0) off += length;
  int span = (end - start) % length;
  if (span < 0) span += length;
  return 0 < off && off < span;
}

std::vector<int> interior_positions(const GaussParagraph& p, const Arc& arc) {
  std::vector<int> out;
  const int len = p.word(arc.word).size();
  if (arc.start == arc.end) return out;
  int span = (arc.end - arc.start) % len;
  if (span < 0) span += len;
  for (int t = 1; t < span; ++t) out.push_back((arc.start + t) % len);
  return out;
}

bool interlaced(const GaussParagraph& p, int n, const Letter& i,
                const Letter& j) {
  if (!p.is_double_in(n, i))
    throw NotDoubleLetter("'" + i + "' is not a double letter of word " +
                          std::to_string(n));
  if (!p.is_double_in(n, j))
    throw NotDoubleLetter("'" + j + "' is not a double letter of word " +
                          std::to_string(n));
  if (i == j) return false;
  const auto pi = p.positions_in_word(n, i);
  const auto pj = p.positions_in_word(n, j);
  const int len = p.word(n).size();
  // Interlaced iff exactly one occurrence of j lies between the two
  // occurrences of i.
  int inside = 0;
  for (int q : pj) {
    if (in_open_span(q, pi[0], pi[1], len)) ++inside;
  }
  return inside == 1;
}

std::set<Letter> w_set(const GaussParagraph& p, int n, const Letter& i) {
  if (!p.is_double_in(n, i))
    throw NotDoubleLetter("'" + i + "' is not a double letter of word " +
                          std::to_string(n));
  std::set<Letter> out;
  auto [singles, doubles] = classify_letters(p, n);
  for (const Letter& j : doubles) {
    if (j != i && interlaced(p, n, i, j)) out.insert(j);
  }
  return out;
}

std::set<Letter> o_span(const GaussParagraph& p, const Arc& arc) {
  std::map<Letter, int> counts;
  for (int pos : interior_positions(p, arc)) {
    ++counts[p.word(arc.word).at(pos)];
  }
  std::set<Letter> out;
  for (const auto& [letter, c] : counts) {
    if (c == 1) out.insert(letter);
  }
  return out;
}

std::pair<std::set<Letter>, std::set<Letter>> p_sets(const GaussParagraph& p,
                                                     const Letter& i) {
  const auto& occ = p.occurrences(i);
  if (occ[0].word != occ[1].word)
    throw NotDoubleLetter("'" + i + "' is not a double letter");
  const int n = occ[0].word;
  return {o_span(p, Arc{n, occ[0].pos, occ[1].pos}),
          o_span(p, Arc{n, occ[1].pos, occ[0].pos})};
}

std::set<Letter> o_word(const GaussParagraph& p, int n) {
  return classify_letters(p, n).first;
}

int out_count(const GaussParagraph& p, const Arc& arc) {
  std::set<Letter> seen;
  for (int pos : interior_positions(p, arc)) {
    const Letter& x = p.word(arc.word).at(pos);
    const auto& occ = p.occurrences(x);
    if (occ[0].word != occ[1].word) seen.insert(x);
  }
  return static_cast<int>(seen.size());
}

int intersection_size(const std::set<Letter>& a, const std::set<Letter>& b) {
  int c = 0;
  for (const Letter& x : a) {
    if (b.count(x)) ++c;
  }
  return c;
}

std::set<Letter> common_letters(const GaussParagraph& p, int m, int n) {
  std::set<Letter> out;
  for (const Letter& x : p.alphabet()) {
    if (p.occurs_in(m, x) && p.occurs_in(n, x)) out.insert(x);
  }
  return out;
}

}  // namespace gp
