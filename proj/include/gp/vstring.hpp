#ifndef GP_VSTRING_HPP
#define GP_VSTRING_HPP

#include <random>
#include <vector>

#include "gp/gauss.hpp"
#include "gp/partition.hpp"

namespace gp {

struct EndpointsNotOnCommonCircle : Error {
  using Error::Error;
};
struct ArrowNotOnCircle : Error {
  using Error::Error;
};
struct QUndefined : Error {
  using Error::Error;
};
struct TailsNotOnCircle : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  PreconditionViolated(const std::string& condition, const std::string& msg)
      : Error("condition (" + condition + ") violated: " + msg),
        condition(condition) {}
  std::string condition;
};

struct VEndpoint {
  Letter label;
  bool is_tail = false;
  auto operator<=>(const VEndpoint&) const = default;
};

struct EndpointRef {
  int circle = 0;
  int slot = 0;
  auto operator<=>(const EndpointRef&) const = default;
};

// Circles carrying ordered arrow endpoints. Every label has exactly one
// tail and one head; the circles cannot be split into two groups with no
// arrow between them.
class VirtualString {
 public:
  explicit VirtualString(std::vector<std::vector<VEndpoint>> circles);

  int circle_count() const { return static_cast<int>(circles_.size()); }
  const std::vector<VEndpoint>& circle(int n) const { return circles_.at(n); }
  const std::set<Letter>& labels() const { return labels_; }

  EndpointRef tail(const Letter& e) const;
  EndpointRef head(const Letter& e) const;

  bool even_endpoints_everywhere() const;

  bool operator==(const VirtualString&) const = default;

 private:
  std::vector<std::vector<VEndpoint>> circles_;
  std::set<Letter> labels_;
  std::map<Letter, EndpointRef> tails_, heads_;
};

GaussParagraph underlying_paragraph(const VirtualString& alpha);

enum class Linking { positive, negative, none };

// How arrow f links arrow e on their common circle: positive when the
// endpoints run tail(e), head(f), head(e), tail(f) in cyclic order,
// negative when they run tail(e), tail(f), head(e), head(f).
Linking links(const VirtualString& alpha, const Letter& e, const Letter& f);

// Positive minus negative linkings of e among same-circle arrows.
int n_of(const VirtualString& alpha, const Letter& e);

// Heads of circle-j-to-circle-i arrows inside the tail-to-head arc of e,
// minus tails of i-to-j arrows inside it. e must have both endpoints on
// circle i.
int n_ij(const VirtualString& alpha, int i, int j, const Letter& e);

// Same count over the complementary head-to-tail arc.
int n_star_ij(const VirtualString& alpha, int i, int j, const Letter& e);

int arr_count(const VirtualString& alpha, int i, int j);

// Heads minus tails on the semi-open arc from tail(e) to tail(f),
// excluding tail(e) and including tail(f); zero when e == f. Defined only
// when every circle carries an even number of endpoints.
int q_pairing(const VirtualString& alpha, int circle, const Letter& e,
              const Letter& f);

// The word-wise partition induced by the parity classes of the q-pairing
// on each circle's tail set. Satisfies the partition and double-letter
// clauses by construction; the even-split clause additionally requires
// every circle pair to share evenly many arrows.
WordWisePartition induced_partition(const VirtualString& alpha);

// Build the virtual string whose underlying paragraph is p and whose
// induced partition is P (up to per-word swaps). `validate` checks the
// three construction preconditions: even w- and p-set parities, even
// pairwise sharing, and compatibility of P with p; pass false to force a
// best-effort string for inputs that violate them.
VirtualString construct_from_pair(const GaussParagraph& p,
                                  const WordWisePartition& P,
                                  bool validate = true);

// Random connected string with even endpoint counts per circle.
VirtualString random_virtual_string(std::mt19937_64& rng, int max_arrows,
                                    int max_circles);

}  // namespace gp

#endif
