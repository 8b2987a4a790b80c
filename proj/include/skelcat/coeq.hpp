#ifndef SKELCAT_COEQ_HPP_
#define SKELCAT_COEQ_HPP_

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "skelcat/words.hpp"

namespace skelcat {

/// A discrete-domain functor pair into `base`, given by the object pairs
/// identified by its indexing set.
struct IdentificationSpec {
  FinCat base;
  std::vector<std::pair<ObjId, ObjId>> pairs;
};

/// An arrow of the quotient category: a reduced word over the base whose
/// chain is composable at the level of object classes. The empty word is the
/// identity of its class (src == tgt).
struct QArrow {
  int src = -1;
  WordSeq word;
  int tgt = -1;

  bool operator==(const QArrow&) const = default;
  auto operator<=>(const QArrow&) const = default;
};

/// The coequalizer of a discrete-domain functor pair. Objects are classes of
/// base objects; hom-sets may be infinite and are only enumerated up to a
/// length bound.
class QuotientCat {
 public:
  const FinCat& base() const { return base_; }
  int num_classes() const { return static_cast<int>(class_rep_.size()); }
  int class_of(ObjId o) const { return class_of_.at(o); }
  ObjId class_rep(int cls) const { return class_rep_.at(cls); }
  /// "[X]" where X is the lexicographically least member.
  std::string class_name(int cls) const;
  std::vector<ObjId> class_members(int cls) const;

  QArrow identity(int cls) const { return QArrow{cls, {}, cls}; }
  QArrow q_map(ArrId f) const;
  QArrow q_compose(const QArrow& a, const QArrow& b) const;
  bool q_is_iso(const QArrow& a) const;

  /// True iff the triple satisfies the QArrow invariants.
  bool is_valid(const QArrow& a) const;

  /// All arrows src -> tgt with word length <= max_len, ordered by length
  /// then lexicographically on arrow names.
  std::vector<QArrow> enumerate(int src, int tgt, int max_len,
                                Budget& budget) const;
  /// All arrows between all class pairs, stable order.
  std::vector<QArrow> enumerate_all(int max_len, Budget& budget) const;

  std::string format(const QArrow& a) const;

  bool operator==(const QuotientCat&) const = default;

 private:
  FinCat base_;
  std::vector<int> class_of_;
  std::vector<ObjId> class_rep_;

  friend QuotientCat coequalize(const IdentificationSpec& spec);
};

QuotientCat coequalize(const IdentificationSpec& spec);

}  // namespace skelcat

#endif  // SKELCAT_COEQ_HPP_
