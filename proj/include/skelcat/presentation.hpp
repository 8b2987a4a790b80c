#ifndef SKELCAT_PRESENTATION_HPP_
#define SKELCAT_PRESENTATION_HPP_

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skelcat/fincat.hpp"

namespace skelcat {

/// One generator occurrence, possibly formally inverted.
struct GenRef {
  int gen = -1;
  bool inv = false;

  bool operator==(const GenRef&) const = default;
  auto operator<=>(const GenRef&) const = default;
};

using PWord = std::vector<GenRef>;

struct Generator {
  std::string name;
  int dom = -1;
  int cod = -1;
  bool invertible = false;

  bool operator==(const Generator&) const = default;
};

/// A finitely presented category: generators over a finite object set, a
/// subset formally inverted, and endpoint-compatible relation pairs.
struct Presentation {
  std::vector<std::string> objects;
  std::vector<Generator> generators;
  std::vector<std::pair<PWord, PWord>> relations;

  int gen_index(const std::string& name) const;
  int ref_dom(const GenRef& r) const;
  int ref_cod(const GenRef& r) const;
  /// -1 for the empty word (endpoint left open).
  int word_dom(const PWord& w) const;
  int word_cod(const PWord& w) const;
  /// True iff consecutive refs chain and all inverted refs are invertible.
  bool word_valid(const PWord& w) const;

  /// Cancels adjacent g g^-1 / g^-1 g pairs of invertible generators.
  PWord free_reduce(PWord w) const;

  std::string format(const GenRef& r) const;
  std::string format_pword(const PWord& w) const;
  PWord parse_pword(const std::string& comma_separated) const;
};

enum class VerdictKind { Equal, Distinct, Unknown };

struct BoundedVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::vector<std::string> trace;  // replayable steps for Equal
  std::string reason;              // separating invariant for Distinct
  int bound = 0;                   // exhausted bound for Unknown
};

inline constexpr int kDefaultSearchBound = 8;
inline constexpr int kDefaultLengthCap = 12;

/// Generators: the non-identity arrows, all invertible. Relations: the
/// composition table plus the formal cancellation pairs.
Presentation localization_presentation(const FinCat& cat);

struct CokernelResult {
  Presentation pres;
  /// image of each arrow of the functor's source under the cokernel map,
  /// keyed by arrow name; identities map to the empty word
  std::map<std::string, PWord> arrow_images;
};

/// Localization followed by collapsing each zigzag-connected component to a
/// single object: the skeletal reflection of the groupoid of fractions.
CokernelResult z_cokernel_of_identity(const FinCat& cat, int bound);

/// The pushout of the Z-cokernel of the identity on the source along f.
/// Source-side generators are prefixed "A.", target-side "B.".
CokernelResult z_cokernel(const Functor& f, int bound);

/// Bidirectional bounded search over relation applications (both directions)
/// with free cancellation. Distinct verdicts use only sound invariants.
BoundedVerdict word_equal_bounded(const Presentation& p, const PWord& w1,
                                  const PWord& w2, int bound,
                                  int length_cap = kDefaultLengthCap);

/// Partition of all endpoint-valid freely reduced words of length <= bound
/// into equivalence classes, computed by saturation within bound + slack.
struct PresClasses {
  std::vector<PWord> words;                      // length <= bound
  std::vector<std::pair<int, int>> endpoints;    // (src, tgt) per word
  std::vector<int> class_of;                     // parallel to words
  int num_classes = 0;
};

PresClasses bounded_classes(const Presentation& p, int bound, int slack,
                            Budget& budget);

}  // namespace skelcat

#endif  // SKELCAT_PRESENTATION_HPP_
