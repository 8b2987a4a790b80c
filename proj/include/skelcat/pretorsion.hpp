#ifndef SKELCAT_PRETORSION_HPP_
#define SKELCAT_PRETORSION_HPP_

#include <string>
#include <vector>

#include "skelcat/coeq.hpp"

namespace skelcat {

/// The short Z-exact sequence Iso(C) -> C -> Q of a finite category:
/// torsion part, inclusion, ambient category and skeletal quotient.
struct ZExactSequence {
  FinCat kernel;      // Iso(C)
  Functor inclusion;  // kernel -> ambient
  FinCat ambient;     // C
  QuotientCat quotient;
  // identification pairs used to build the quotient, one per non-identity iso
  std::vector<std::pair<ObjId, ObjId>> pairs;
};

struct CheckReport {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

/// A functor is trivial when every arrow lands on an automorphism of the
/// target, i.e. when it factors through Aut(target).
bool is_trivial_functor(const Functor& f);

/// Triviality of the composite q . g for g: X -> base(q).
bool is_trivial_into_quotient(const QuotientCat& q, const Functor& g);

/// Iso(C) with its inclusion: the coreflection into groupoids.
SubcatResult torsion_coreflection(const FinCat& cat);

/// Builds the coequalizer identifying dom/cod of every isomorphism and
/// returns the whole sequence Iso(C) -> C -> Q.
ZExactSequence torsionfree_reflection(const FinCat& cat);

/// The wide subcategory of the source on arrows whose image is an
/// automorphism of the target, with its inclusion.
SubcatResult z_kernel(const Functor& f);

/// Z-kernel of the quotient functor: arrows of the base whose image is an
/// automorphism of the quotient.
SubcatResult z_kernel_of_quotient(const QuotientCat& q);

/// Given g: X -> C with q . g trivial, the unique h: X -> Iso(C) with
/// inclusion . h = g. Throws std::logic_error when some g(x) is not an iso
/// (that would contradict isomorphism reflection).
Functor factor_through_coreflection(const Functor& g,
                                    const ZExactSequence& seq);

/// The action Q -> S induced by h: C -> S with S skeletal: classes go to the
/// common h-image, a word (f1,...,fn) to h(f1) |> ... |> h(fn).
class ReflectionFactorization {
 public:
  ReflectionFactorization(const ZExactSequence& seq, const Functor& h);

  ObjId apply_class(int cls) const { return class_image_.at(cls); }
  ArrId apply(const QArrow& a) const;
  const FinCat& target() const { return target_; }

 private:
  FinCat target_;
  std::vector<ObjId> class_image_;   // per quotient class
  std::vector<ArrId> arrow_image_;   // per ambient arrow
};

/// Checks S skeletal and h . i trivial, verifies well-definedness on the
/// identification pairs, and returns the induced action.
ReflectionFactorization factor_through_reflection(const Functor& h,
                                                  const ZExactSequence& seq);

/// Probe-based verification that (inclusion, q) is a short Z-exact sequence:
/// structural checks plus existence/uniqueness of both factorizations over
/// every probe category.
CheckReport verify_short_z_exact(const ZExactSequence& seq,
                                 const std::vector<FinCat>& probes,
                                 int max_len, Budget& budget);

/// PT1 on a (groupoid, skeletal) pair: every functor T -> F is trivial.
/// Throws std::invalid_argument when the precondition fails.
CheckReport pt1_check(const FinCat& torsion, const FinCat& torsion_free,
                      Budget& budget);

}  // namespace skelcat

#endif  // SKELCAT_PRETORSION_HPP_
