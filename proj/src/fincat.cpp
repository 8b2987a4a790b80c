#include "skelcat/fincat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace skelcat {

std::size_t Budget::default_limit() {
  if (const char* env = std::getenv("SKELCAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

ObjId FinCat::object_index(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  return it == objects_.end() ? -1
                              : static_cast<ObjId>(it - objects_.begin());
}

ArrId FinCat::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return static_cast<ArrId>(i);
  }
  return -1;
}

ArrId FinCat::compose(ArrId f, ArrId g) const {
  if (!composable(f, g)) {
    throw std::invalid_argument("arrows not composable: cod(" +
                                arrows_.at(f).name + ") != dom(" +
                                arrows_.at(g).name + ")");
  }
  return table_.at(f).at(g);
}

std::optional<ArrId> FinCat::inverse(ArrId f) const {
  const Arrow& a = arrows_.at(f);
  for (ArrId g = 0; g < static_cast<ArrId>(arrows_.size()); ++g) {
    const Arrow& b = arrows_[g];
    if (b.dom != a.cod || b.cod != a.dom) continue;
    if (compose(f, g) == identity(a.dom) && compose(g, f) == identity(a.cod)) {
      return g;
    }
  }
  return std::nullopt;
}

namespace {

bool bad_name(const std::string& s) {
  if (s.empty()) return true;
  if (s.rfind(kIdentityPrefix, 0) == 0) return true;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      return true;
    }
  }
  return false;
}

}  // namespace

ValidationResult validate_category(const RawCategory& raw) {
  ValidationResult result;
  auto& errors = result.errors;

  std::vector<std::string> objects = raw.objects;
  std::sort(objects.begin(), objects.end());
  if (std::adjacent_find(objects.begin(), objects.end()) != objects.end()) {
    errors.push_back("duplicate object name");
  }
  for (const auto& o : objects) {
    if (bad_name(o)) {
      errors.push_back("invalid object name '" + o +
                       "' (empty, reserved 'id:' prefix, or whitespace/comma)");
    }
  }

  std::vector<RawArrow> nonid = raw.arrows;
  std::sort(nonid.begin(), nonid.end(),
            [](const RawArrow& x, const RawArrow& y) { return x.name < y.name; });
  std::set<std::string> arrow_names;
  for (const auto& a : nonid) {
    if (bad_name(a.name)) {
      errors.push_back("invalid arrow name '" + a.name + "'");
    }
    if (!arrow_names.insert(a.name).second) {
      errors.push_back("duplicate arrow name '" + a.name + "'");
    }
    if (std::find(objects.begin(), objects.end(), a.dom) == objects.end()) {
      errors.push_back("arrow '" + a.name + "' has unknown dom '" + a.dom + "'");
    }
    if (std::find(objects.begin(), objects.end(), a.cod) == objects.end()) {
      errors.push_back("arrow '" + a.name + "' has unknown cod '" + a.cod + "'");
    }
  }
  if (!errors.empty()) return result;

  FinCat cat;
  cat.objects_ = objects;
  cat.identity_of_.resize(objects.size());
  for (ObjId o = 0; o < static_cast<ObjId>(objects.size()); ++o) {
    cat.identity_of_[o] = static_cast<ArrId>(cat.arrows_.size());
    cat.arrows_.push_back(
        Arrow{kIdentityPrefix + objects[o], o, o, /*is_identity=*/true});
  }
  for (const auto& a : nonid) {
    cat.arrows_.push_back(Arrow{a.name, cat.object_index(a.dom),
                                cat.object_index(a.cod),
                                /*is_identity=*/false});
  }

  const auto n = static_cast<ArrId>(cat.arrows_.size());
  cat.table_.assign(n, std::vector<ArrId>(n, -1));
  // identity-involving composites are derived
  for (ArrId f = 0; f < n; ++f) {
    const Arrow& af = cat.arrows_[f];
    cat.table_[cat.identity_of_[af.dom]][f] = f;
    cat.table_[f][cat.identity_of_[af.cod]] = f;
  }

  for (const auto& e : raw.compose) {
    ArrId f = cat.arrow_index(e.first);
    ArrId g = cat.arrow_index(e.then);
    ArrId h = cat.arrow_index(e.equals);
    if (f < 0 || g < 0 || h < 0) {
      errors.push_back("compose entry (" + e.first + ", " + e.then + ") = " +
                       e.equals + " names an unknown arrow");
      continue;
    }
    if (!cat.composable(f, g)) {
      errors.push_back("compose entry for non-composable pair (" + e.first +
                       ", " + e.then + ")");
      continue;
    }
    const Arrow& af = cat.arrows_[f];
    const Arrow& ag = cat.arrows_[g];
    const Arrow& ah = cat.arrows_[h];
    if (ah.dom != af.dom || ah.cod != ag.cod) {
      errors.push_back("endpoint-incorrect composite: " + e.first + " |> " +
                       e.then + " = " + e.equals + " should go " +
                       cat.objects_[af.dom] + " -> " + cat.objects_[ag.cod]);
      continue;
    }
    ArrId existing = cat.table_[f][g];
    if (existing >= 0 && existing != h) {
      errors.push_back("conflicting composite for (" + e.first + ", " + e.then +
                       "): " + cat.arrows_[existing].name + " vs " + e.equals);
      continue;
    }
    if (existing == h && !af.is_identity && !ag.is_identity) {
      errors.push_back("duplicate compose entry for (" + e.first + ", " +
                       e.then + ")");
      continue;
    }
    cat.table_[f][g] = h;
  }
  if (!errors.empty()) return result;

  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      if (cat.composable(f, g) && cat.table_[f][g] < 0) {
        errors.push_back("missing composite for composable pair (" +
                         cat.arrows_[f].name + ", " + cat.arrows_[g].name +
                         ")");
      }
    }
  }
  if (!errors.empty()) return result;

  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      if (!cat.composable(f, g)) continue;
      ArrId fg = cat.table_[f][g];
      for (ArrId h = 0; h < n; ++h) {
        if (!cat.composable(g, h)) continue;
        ArrId gh = cat.table_[g][h];
        if (cat.table_[fg][h] != cat.table_[f][gh]) {
          errors.push_back("associativity failure on triple (" +
                           cat.arrows_[f].name + ", " + cat.arrows_[g].name +
                           ", " + cat.arrows_[h].name + ")");
        }
      }
    }
  }
  if (!errors.empty()) return result;

  result.category = std::move(cat);
  return result;
}

FinCat build_category(const RawCategory& raw) {
  ValidationResult r = validate_category(raw);
  if (!r.ok()) {
    std::string msg = "invalid category:";
    for (const auto& e : r.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  return *std::move(r.category);
}

RawCategory to_raw(const FinCat& cat) {
  RawCategory raw;
  raw.objects = cat.objects();
  for (const Arrow& a : cat.arrows()) {
    if (a.is_identity) continue;
    raw.arrows.push_back(
        RawArrow{a.name, cat.object_name(a.dom), cat.object_name(a.cod)});
  }
  const auto n = static_cast<ArrId>(cat.num_arrows());
  for (ArrId f = 0; f < n; ++f) {
    if (cat.is_identity(f)) continue;
    for (ArrId g = 0; g < n; ++g) {
      if (cat.is_identity(g) || !cat.composable(f, g)) continue;
      raw.compose.push_back(RawCompose{cat.arrow(f).name, cat.arrow(g).name,
                                       cat.arrow(cat.compose(f, g)).name});
    }
  }
  return raw;
}

CatFlags classify(const FinCat& cat) {
  CatFlags flags;
  flags.is_groupoid = true;
  flags.is_skeletal = true;
  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    bool iso = cat.is_iso(f);
    if (!iso) flags.is_groupoid = false;
    if (iso && !cat.is_endo(f)) flags.is_skeletal = false;
  }
  flags.is_trivial = flags.is_groupoid && flags.is_skeletal;
  return flags;
}

Functor::Functor(FinCat source, FinCat target, std::vector<ObjId> object_map,
                 std::vector<ArrId> arrow_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      arrow_map_(std::move(arrow_map)) {
  auto bad = functor_violations(source_, target_, object_map_, arrow_map_);
  if (!bad.empty()) {
    std::string msg = "not a functor:";
    for (const auto& e : bad) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
}

std::vector<std::string> functor_violations(const FinCat& source,
                                            const FinCat& target,
                                            const std::vector<ObjId>& omap,
                                            const std::vector<ArrId>& amap) {
  std::vector<std::string> errors;
  if (omap.size() != source.num_objects() ||
      amap.size() != source.num_arrows()) {
    errors.push_back("object/arrow map size mismatch");
    return errors;
  }
  for (ObjId o : omap) {
    if (o < 0 || o >= static_cast<ObjId>(target.num_objects())) {
      errors.push_back("object image out of range");
      return errors;
    }
  }
  for (ArrId a : amap) {
    if (a < 0 || a >= static_cast<ArrId>(target.num_arrows())) {
      errors.push_back("arrow image out of range");
      return errors;
    }
  }
  const auto n = static_cast<ArrId>(source.num_arrows());
  for (ArrId f = 0; f < n; ++f) {
    const Arrow& a = source.arrow(f);
    const Arrow& img = target.arrow(amap[f]);
    if (img.dom != omap[a.dom] || img.cod != omap[a.cod]) {
      errors.push_back("endpoints not preserved on '" + a.name + "'");
    }
    if (a.is_identity && amap[f] != target.identity(omap[a.dom])) {
      errors.push_back("identity not preserved on '" +
                       source.object_name(a.dom) + "'");
    }
  }
  if (!errors.empty()) return errors;
  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      if (!source.composable(f, g)) continue;
      if (amap[source.compose(f, g)] != target.compose(amap[f], amap[g])) {
        errors.push_back("composition not preserved on (" +
                         source.arrow(f).name + ", " + source.arrow(g).name +
                         ")");
      }
    }
  }
  return errors;
}

Functor identity_functor(const FinCat& cat) {
  std::vector<ObjId> omap(cat.num_objects());
  std::vector<ArrId> amap(cat.num_arrows());
  for (std::size_t i = 0; i < omap.size(); ++i) omap[i] = static_cast<ObjId>(i);
  for (std::size_t i = 0; i < amap.size(); ++i) amap[i] = static_cast<ArrId>(i);
  return Functor(cat, cat, std::move(omap), std::move(amap));
}

Functor compose_functors(const Functor& first, const Functor& then) {
  if (!(first.target() == then.source())) {
    throw std::invalid_argument("functors not composable");
  }
  std::vector<ObjId> omap(first.source().num_objects());
  std::vector<ArrId> amap(first.source().num_arrows());
  for (std::size_t o = 0; o < omap.size(); ++o) {
    omap[o] = then.map_object(first.map_object(static_cast<ObjId>(o)));
  }
  for (std::size_t a = 0; a < amap.size(); ++a) {
    amap[a] = then.map_arrow(first.map_arrow(static_cast<ArrId>(a)));
  }
  return Functor(first.source(), then.target(), std::move(omap),
                 std::move(amap));
}

SubcatResult subgroupoid(const FinCat& cat, SubMode mode) {
  RawCategory raw;
  raw.objects = cat.objects();
  std::vector<ArrId> kept;
  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    if (cat.is_identity(f)) continue;
    bool keep = mode == SubMode::Iso ? cat.is_iso(f) : cat.is_automorphism(f);
    if (keep) {
      kept.push_back(f);
      const Arrow& a = cat.arrow(f);
      raw.arrows.push_back(
          RawArrow{a.name, cat.object_name(a.dom), cat.object_name(a.cod)});
    }
  }
  for (ArrId f : kept) {
    for (ArrId g : kept) {
      if (!cat.composable(f, g)) continue;
      raw.compose.push_back(RawCompose{cat.arrow(f).name, cat.arrow(g).name,
                                       cat.arrow(cat.compose(f, g)).name});
    }
  }
  FinCat sub = build_category(raw);
  std::vector<ObjId> omap(sub.num_objects());
  std::vector<ArrId> amap(sub.num_arrows());
  for (ObjId o = 0; o < static_cast<ObjId>(sub.num_objects()); ++o) {
    omap[o] = cat.object_index(sub.object_name(o));
  }
  for (ArrId a = 0; a < static_cast<ArrId>(sub.num_arrows()); ++a) {
    amap[a] = cat.arrow_index(sub.arrow(a).name);
  }
  Functor incl(sub, cat, std::move(omap), std::move(amap));
  return SubcatResult{std::move(sub), std::move(incl)};
}

namespace {

void enumerate_arrow_maps(const FinCat& a, const FinCat& b,
                          const std::vector<ObjId>& omap,
                          std::vector<ArrId>& nonid_choice, std::size_t pos,
                          const std::vector<ArrId>& nonid_arrows,
                          Budget& budget, std::vector<Functor>& out) {
  budget.charge();
  if (pos == nonid_arrows.size()) {
    std::vector<ArrId> amap(a.num_arrows());
    for (ObjId o = 0; o < static_cast<ObjId>(a.num_objects()); ++o) {
      amap[a.identity(o)] = b.identity(omap[o]);
    }
    for (std::size_t i = 0; i < nonid_arrows.size(); ++i) {
      amap[nonid_arrows[i]] = nonid_choice[i];
    }
    if (functor_violations(a, b, omap, amap).empty()) {
      out.emplace_back(a, b, omap, std::move(amap));
    }
    return;
  }
  const Arrow& arr = a.arrow(nonid_arrows[pos]);
  for (ArrId img = 0; img < static_cast<ArrId>(b.num_arrows()); ++img) {
    const Arrow& bi = b.arrow(img);
    if (bi.dom != omap[arr.dom] || bi.cod != omap[arr.cod]) continue;
    nonid_choice[pos] = img;
    enumerate_arrow_maps(a, b, omap, nonid_choice, pos + 1, nonid_arrows,
                         budget, out);
  }
}

void enumerate_object_maps(const FinCat& a, const FinCat& b,
                           std::vector<ObjId>& omap, std::size_t pos,
                           Budget& budget, std::vector<Functor>& out) {
  budget.charge();
  if (pos == a.num_objects()) {
    std::vector<ArrId> nonid_arrows;
    for (ArrId f = 0; f < static_cast<ArrId>(a.num_arrows()); ++f) {
      if (!a.is_identity(f)) nonid_arrows.push_back(f);
    }
    std::vector<ArrId> choice(nonid_arrows.size());
    enumerate_arrow_maps(a, b, omap, choice, 0, nonid_arrows, budget, out);
    return;
  }
  for (ObjId o = 0; o < static_cast<ObjId>(b.num_objects()); ++o) {
    omap[pos] = o;
    enumerate_object_maps(a, b, omap, pos + 1, budget, out);
  }
}

}  // namespace

std::vector<Functor> enumerate_functors(const FinCat& a, const FinCat& b,
                                        Budget& budget) {
  std::vector<Functor> out;
  if (b.num_objects() == 0) {
    if (a.num_objects() == 0) out.push_back(identity_functor(a));
    return out;
  }
  std::vector<ObjId> omap(a.num_objects());
  enumerate_object_maps(a, b, omap, 0, budget, out);
  return out;
}

}  // namespace skelcat
