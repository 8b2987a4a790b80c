#ifndef SKELCAT_FINCAT_HPP_
#define SKELCAT_FINCAT_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skelcat {

using ObjId = int;
using ArrId = int;

inline constexpr const char* kIdentityPrefix = "id:";

/// Thrown when an exhaustive search exceeds its configured budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Counts work units for exhaustive searches. The limit defaults to the
/// SKELCAT_BUDGET environment variable when set.
struct Budget {
  std::size_t limit;
  std::size_t used = 0;

  Budget() : limit(default_limit()) {}
  explicit Budget(std::size_t limit_) : limit(limit_) {}

  void charge(std::size_t n = 1) {
    used += n;
    if (used > limit) {
      throw BudgetExceeded("enumeration budget exceeded (" +
                           std::to_string(limit) + " units)");
    }
  }

  static std::size_t default_limit();
};

struct Arrow {
  std::string name;
  ObjId dom = -1;
  ObjId cod = -1;
  bool is_identity = false;

  bool operator==(const Arrow&) const = default;
};

// Raw input as it appears in category files, before validation.
struct RawArrow {
  std::string name, dom, cod;
};
struct RawCompose {
  std::string first, then, equals;  // first |> then = equals
};
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawArrow> arrows;
  std::vector<RawCompose> compose;
};

struct ValidationResult;

/// A finite category with a total composition table.
///
/// Identities are auto-generated during validation and named "id:<object>".
/// Objects are stored in lexicographic order; arrows are stored identities
/// first (in object order), then non-identity arrows in lexicographic order,
/// so equal categories compare equal structurally.
class FinCat {
 public:
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  ObjId object_index(const std::string& name) const;
  ArrId arrow_index(const std::string& name) const;
  const Arrow& arrow(ArrId a) const { return arrows_.at(a); }
  const std::string& object_name(ObjId o) const { return objects_.at(o); }

  ArrId identity(ObjId o) const { return identity_of_.at(o); }
  bool is_identity(ArrId a) const { return arrows_.at(a).is_identity; }

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  std::size_t num_nonidentity_arrows() const {
    return arrows_.size() - objects_.size();
  }

  bool composable(ArrId f, ArrId g) const {
    return arrows_.at(f).cod == arrows_.at(g).dom;
  }

  /// f |> g, i.e. "first f, then g". Throws on a non-composable pair.
  ArrId compose(ArrId f, ArrId g) const;

  std::optional<ArrId> inverse(ArrId f) const;
  bool is_iso(ArrId f) const { return inverse(f).has_value(); }
  bool is_endo(ArrId f) const { return arrows_.at(f).dom == arrows_.at(f).cod; }
  bool is_automorphism(ArrId f) const { return is_endo(f) && is_iso(f); }

  bool operator==(const FinCat&) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<ArrId> identity_of_;
  std::vector<std::vector<ArrId>> table_;  // -1 where not composable

  friend struct ValidationResult;
  friend ValidationResult validate_category(const RawCategory& raw);
};

struct ValidationResult {
  std::optional<FinCat> category;
  std::vector<std::string> errors;

  bool ok() const { return category.has_value(); }
};

/// Checks every category law exhaustively and either returns a FinCat or a
/// report listing every violation with the offending arrows.
ValidationResult validate_category(const RawCategory& raw);

/// Like validate_category but throws std::invalid_argument on failure.
FinCat build_category(const RawCategory& raw);

/// Converts a FinCat back to its raw form (canonical ordering, identities and
/// identity-involving composition entries omitted).
RawCategory to_raw(const FinCat& cat);

struct CatFlags {
  bool is_groupoid = false;
  bool is_skeletal = false;
  bool is_trivial = false;

  bool operator==(const CatFlags&) const = default;
};

CatFlags classify(const FinCat& cat);

/// A composition- and identity-preserving map between finite categories.
/// Equality is extensional: same categories, same object and arrow maps.
class Functor {
 public:
  Functor(FinCat source, FinCat target, std::vector<ObjId> object_map,
          std::vector<ArrId> arrow_map);

  const FinCat& source() const { return source_; }
  const FinCat& target() const { return target_; }
  ObjId map_object(ObjId o) const { return object_map_.at(o); }
  ArrId map_arrow(ArrId a) const { return arrow_map_.at(a); }
  const std::vector<ObjId>& object_map() const { return object_map_; }
  const std::vector<ArrId>& arrow_map() const { return arrow_map_; }

  bool operator==(const Functor&) const = default;

 private:
  FinCat source_;
  FinCat target_;
  std::vector<ObjId> object_map_;
  std::vector<ArrId> arrow_map_;
};

/// Exhaustive functor-law check; empty result means the data is a functor.
std::vector<std::string> functor_violations(const FinCat& source,
                                            const FinCat& target,
                                            const std::vector<ObjId>& omap,
                                            const std::vector<ArrId>& amap);

Functor identity_functor(const FinCat& cat);
Functor compose_functors(const Functor& first, const Functor& then);

enum class SubMode { Iso, Aut };

struct SubcatResult {
  FinCat sub;
  Functor inclusion;  // sub -> ambient
};

/// The wide subcategory on all objects whose arrows are the isomorphisms
/// (Iso) or the automorphisms (Aut), with its inclusion functor.
SubcatResult subgroupoid(const FinCat& cat, SubMode mode);

/// All functors A -> B, duplicate-free, in a stable order.
std::vector<Functor> enumerate_functors(const FinCat& a, const FinCat& b,
                                        Budget& budget);

}  // namespace skelcat

#endif  // SKELCAT_FINCAT_HPP_
