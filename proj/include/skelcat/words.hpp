#ifndef SKELCAT_WORDS_HPP_
#define SKELCAT_WORDS_HPP_

#include <map>
#include <string>
#include <vector>

#include "skelcat/fincat.hpp"

namespace skelcat {

/// An element of the free monoid on the arrows of a category, in
/// diagrammatic order. No composability constraint between entries.
using WordSeq = std::vector<ArrId>;

/// True iff the word contains no identity and no adjacent composable pair.
bool is_reduced(const FinCat& cat, const WordSeq& word);

/// The reduction recursion on (arrow, reduced word):
///  - prepend-and-fuse while the head of beta composes with a,
///  - drop a when it ends up an identity,
///  - otherwise prepend a.
/// beta must be reduced; the result is reduced.
WordSeq phi(const FinCat& cat, ArrId a, WordSeq beta);

/// Left fold of phi: star((), nu) = nu, star(a.beta, nu) = phi(a, star(beta, nu)).
WordSeq star(const FinCat& cat, const WordSeq& alpha, WordSeq nu);

/// The unique reduced representative of alpha's congruence class,
/// star(alpha, ()).
WordSeq reduce(const FinCat& cat, const WordSeq& alpha);

WordSeq parse_word(const FinCat& cat, const std::string& comma_separated);
std::string format_word(const FinCat& cat, const WordSeq& word);

/// The partition of all words of length <= bound into classes of the monoid
/// congruence generated by fusing adjacent composable pairs and deleting
/// identities. Built by forward saturation with union-find; independent of
/// phi/star, for testing.
struct ClosureClasses {
  std::vector<WordSeq> universe;  // by length, then lexicographic on ids
  std::vector<int> class_of;      // parallel to universe
  int num_classes = 0;

  /// -1 when the word is outside the bounded universe.
  int class_index(const WordSeq& word) const;

 private:
  std::map<WordSeq, int> index_;
  friend ClosureClasses closure_oracle(const FinCat&, int, Budget&);
};

ClosureClasses closure_oracle(const FinCat& cat, int max_len, Budget& budget);

}  // namespace skelcat

#endif  // SKELCAT_WORDS_HPP_
