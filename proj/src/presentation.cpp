#include "skelcat/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace skelcat {

int Presentation::gen_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int Presentation::ref_dom(const GenRef& r) const {
  const Generator& g = generators.at(r.gen);
  return r.inv ? g.cod : g.dom;
}

int Presentation::ref_cod(const GenRef& r) const {
  const Generator& g = generators.at(r.gen);
  return r.inv ? g.dom : g.cod;
}

int Presentation::word_dom(const PWord& w) const {
  return w.empty() ? -1 : ref_dom(w.front());
}

int Presentation::word_cod(const PWord& w) const {
  return w.empty() ? -1 : ref_cod(w.back());
}

bool Presentation::word_valid(const PWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen < 0 || w[i].gen >= static_cast<int>(generators.size())) {
      return false;
    }
    if (w[i].inv && !generators[w[i].gen].invertible) return false;
    if (i + 1 < w.size() && ref_cod(w[i]) != ref_dom(w[i + 1])) return false;
  }
  return true;
}

PWord Presentation::free_reduce(PWord w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].gen == w[i + 1].gen && w[i].inv != w[i + 1].inv &&
          generators[w[i].gen].invertible) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

std::string Presentation::format(const GenRef& r) const {
  return generators.at(r.gen).name + (r.inv ? "^-1" : "");
}

std::string Presentation::format_pword(const PWord& w) const {
  if (w.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += format(w[i]);
  }
  return out;
}

PWord Presentation::parse_pword(const std::string& text) const {
  PWord word;
  if (text.empty() || text == "()") return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string name = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    bool inv = false;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      inv = true;
      name.resize(name.size() - 3);
    }
    int gen = gen_index(name);
    if (gen < 0) {
      throw std::invalid_argument("unknown generator '" + name + "'");
    }
    word.push_back(GenRef{gen, inv});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return word;
}

Presentation localization_presentation(const FinCat& cat) {
  Presentation p;
  p.objects = cat.objects();
  std::vector<int> gen_of(cat.num_arrows(), -1);
  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    if (cat.is_identity(f)) continue;
    gen_of[f] = static_cast<int>(p.generators.size());
    const Arrow& a = cat.arrow(f);
    p.generators.push_back(Generator{a.name, a.dom, a.cod, true});
  }
  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    if (cat.is_identity(f)) continue;
    for (ArrId g = 0; g < static_cast<ArrId>(cat.num_arrows()); ++g) {
      if (cat.is_identity(g) || !cat.composable(f, g)) continue;
      ArrId h = cat.compose(f, g);
      PWord lhs{GenRef{gen_of[f], false}, GenRef{gen_of[g], false}};
      PWord rhs;
      if (!cat.is_identity(h)) rhs.push_back(GenRef{gen_of[h], false});
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    int g = static_cast<int>(i);
    p.relations.emplace_back(PWord{GenRef{g, false}, GenRef{g, true}},
                             PWord{});
    p.relations.emplace_back(PWord{GenRef{g, true}, GenRef{g, false}},
                             PWord{});
  }
  return p;
}

namespace {

std::vector<int> zigzag_components(const FinCat& cat) {
  std::vector<int> parent(cat.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arrow& a : cat.arrows()) {
    int rd = find(a.dom);
    int rc = find(a.cod);
    if (rd != rc) parent[std::max(rd, rc)] = std::min(rd, rc);
  }
  for (std::size_t i = 0; i < parent.size(); ++i) {
    parent[i] = find(static_cast<int>(i));
  }
  return parent;  // root object id per object, root = least member
}

}  // namespace

CokernelResult z_cokernel_of_identity(const FinCat& cat, int /*bound*/) {
  std::vector<int> root = zigzag_components(cat);
  std::vector<ObjId> reps;
  for (ObjId o = 0; o < static_cast<ObjId>(cat.num_objects()); ++o) {
    if (root[o] == o) reps.push_back(o);
  }
  std::vector<int> comp_index(cat.num_objects(), -1);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    comp_index[reps[i]] = static_cast<int>(i);
  }
  CokernelResult result;
  Presentation& p = result.pres;
  for (ObjId r : reps) p.objects.push_back(cat.object_name(r));

  Presentation loc = localization_presentation(cat);
  p.generators = loc.generators;
  for (Generator& g : p.generators) {
    g.dom = comp_index[root[g.dom]];
    g.cod = comp_index[root[g.cod]];
  }
  p.relations = loc.relations;

  for (ArrId f = 0; f < static_cast<ArrId>(cat.num_arrows()); ++f) {
    const Arrow& a = cat.arrow(f);
    PWord img;
    if (!a.is_identity) img.push_back(GenRef{loc.gen_index(a.name), false});
    result.arrow_images[a.name] = std::move(img);
  }
  return result;
}

CokernelResult z_cokernel(const Functor& f, int bound) {
  const FinCat& a = f.source();
  const FinCat& b = f.target();
  CokernelResult cok_a = z_cokernel_of_identity(a, bound);

  // pushout on objects: merge the f-images of each zigzag component of A
  std::vector<int> acomp = zigzag_components(a);
  std::vector<int> parent(b.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ObjId o = 0; o < static_cast<ObjId>(a.num_objects()); ++o) {
    int ri = find(f.map_object(static_cast<ObjId>(acomp[o])));
    int ro = find(f.map_object(o));
    if (ri != ro) parent[std::max(ri, ro)] = std::min(ri, ro);
  }
  std::vector<int> cls(b.num_objects(), -1);
  std::vector<ObjId> reps;
  for (ObjId o = 0; o < static_cast<ObjId>(b.num_objects()); ++o) {
    int r = find(o);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(reps.size());
      reps.push_back(r);
    }
    cls[o] = cls[r];
  }

  CokernelResult result;
  Presentation& p = result.pres;
  for (ObjId r : reps) p.objects.push_back(b.object_name(r));

  // source-side generators come from the Z-cokernel of the identity
  std::vector<int> a_gen(cok_a.pres.generators.size(), -1);
  for (std::size_t i = 0; i < cok_a.pres.generators.size(); ++i) {
    const Generator& g = cok_a.pres.generators[i];
    ArrId orig = a.arrow_index(g.name);
    a_gen[i] = static_cast<int>(p.generators.size());
    p.generators.push_back(Generator{
        "A." + g.name, cls[f.map_object(a.arrow(orig).dom)],
        cls[f.map_object(a.arrow(orig).cod)], g.invertible});
  }
  std::vector<int> b_gen(b.num_arrows(), -1);
  for (ArrId u = 0; u < static_cast<ArrId>(b.num_arrows()); ++u) {
    if (b.is_identity(u)) continue;
    const Arrow& arr = b.arrow(u);
    b_gen[u] = static_cast<int>(p.generators.size());
    p.generators.push_back(
        Generator{"B." + arr.name, cls[arr.dom], cls[arr.cod], false});
  }

  auto remap = [&](const PWord& w) {
    PWord out;
    for (const GenRef& r : w) out.push_back(GenRef{a_gen[r.gen], r.inv});
    return out;
  };
  for (const auto& [lhs, rhs] : cok_a.pres.relations) {
    p.relations.emplace_back(remap(lhs), remap(rhs));
  }
  for (ArrId u = 0; u < static_cast<ArrId>(b.num_arrows()); ++u) {
    if (b.is_identity(u)) continue;
    for (ArrId v = 0; v < static_cast<ArrId>(b.num_arrows()); ++v) {
      if (b.is_identity(v) || !b.composable(u, v)) continue;
      ArrId h = b.compose(u, v);
      PWord lhs{GenRef{b_gen[u], false}, GenRef{b_gen[v], false}};
      PWord rhs;
      if (!b.is_identity(h)) rhs.push_back(GenRef{b_gen[h], false});
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  }
  // each source arrow is identified with its image
  for (ArrId x = 0; x < static_cast<ArrId>(a.num_arrows()); ++x) {
    if (a.is_identity(x)) continue;
    PWord lhs{GenRef{a_gen[cok_a.pres.gen_index(a.arrow(x).name)], false}};
    PWord rhs;
    ArrId img = f.map_arrow(x);
    if (!b.is_identity(img)) rhs.push_back(GenRef{b_gen[img], false});
    p.relations.emplace_back(std::move(lhs), std::move(rhs));
  }

  for (ArrId u = 0; u < static_cast<ArrId>(b.num_arrows()); ++u) {
    const Arrow& arr = b.arrow(u);
    PWord img;
    if (!arr.is_identity) img.push_back(GenRef{b_gen[u], false});
    result.arrow_images[arr.name] = std::move(img);
  }
  return result;
}

namespace {

// integer lattice membership via gcd elimination; sound but conservative
bool in_lattice(std::vector<std::vector<long long>> rows,
                std::vector<long long> target) {
  const std::size_t n = target.size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < rows.size(); ++col) {
    // eliminate until at most one row has a nonzero entry in this column
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool others = false;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        long long q = rows[r][col] / rows[pivot_row][col];
        for (std::size_t c = 0; c < n; ++c) {
          rows[r][c] -= q * rows[pivot_row][c];
        }
        if (rows[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[pivot_row][col] != 0) {
      if (target[col] % rows[pivot_row][col] != 0) return false;
      long long q = target[col] / rows[pivot_row][col];
      for (std::size_t c = 0; c < n; ++c) {
        target[c] -= q * rows[pivot_row][c];
      }
      ++pivot_row;
    }
  }
  return std::all_of(target.begin(), target.end(),
                     [](long long v) { return v == 0; });
}

std::vector<long long> abelianize(const Presentation& p, const PWord& w) {
  std::vector<long long> v(p.generators.size(), 0);
  for (const GenRef& r : w) v[r.gen] += r.inv ? -1 : 1;
  return v;
}

struct SearchNode {
  PWord parent;
  std::string step;
};

// one-step rewrites: every relation in both directions at every position
std::vector<std::pair<PWord, std::string>> neighbors(const Presentation& p,
                                                     const PWord& w,
                                                     int length_cap) {
  std::vector<std::pair<PWord, std::string>> out;
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    for (int dir = 0; dir < 2; ++dir) {
      const PWord& from = dir == 0 ? p.relations[ri].first
                                   : p.relations[ri].second;
      const PWord& to = dir == 0 ? p.relations[ri].second
                                 : p.relations[ri].first;
      if (!from.empty()) {
        for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(),
                          w.begin() + static_cast<std::ptrdiff_t>(pos))) {
            continue;
          }
          PWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(),
                      w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()),
                      w.end());
          if (static_cast<int>(next.size()) > length_cap) continue;
          next = p.free_reduce(std::move(next));
          if (!p.word_valid(next)) continue;
          out.emplace_back(std::move(next),
                           "rel#" + std::to_string(ri) + (dir ? "<-" : "->") +
                               " at " + std::to_string(pos));
        }
      } else if (!to.empty()) {
        // insertion of the other side at every position
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
          PWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos),
                      w.end());
          if (static_cast<int>(next.size()) > length_cap) continue;
          next = p.free_reduce(std::move(next));
          if (!p.word_valid(next)) continue;
          out.emplace_back(std::move(next),
                           "rel#" + std::to_string(ri) +
                               (dir ? "<-" : "->") + " insert at " +
                               std::to_string(pos));
        }
      }
    }
  }
  return out;
}

}  // namespace

BoundedVerdict word_equal_bounded(const Presentation& p, const PWord& w1_in,
                                  const PWord& w2_in, int bound,
                                  int length_cap) {
  if (!p.word_valid(w1_in) || !p.word_valid(w2_in)) {
    throw std::invalid_argument("word is not a valid chain over the "
                                "presentation");
  }
  PWord w1 = p.free_reduce(w1_in);
  PWord w2 = p.free_reduce(w2_in);
  if (w1 == w2) {
    return BoundedVerdict{VerdictKind::Equal, {}, "", 0};
  }
  if (!w1.empty() && !w2.empty() &&
      (p.word_dom(w1) != p.word_dom(w2) || p.word_cod(w1) != p.word_cod(w2))) {
    return BoundedVerdict{VerdictKind::Distinct, {}, "endpoint mismatch", 0};
  }
  std::vector<std::vector<long long>> lattice;
  for (const auto& [lhs, rhs] : p.relations) {
    std::vector<long long> l = abelianize(p, lhs);
    std::vector<long long> r = abelianize(p, rhs);
    for (std::size_t i = 0; i < l.size(); ++i) l[i] -= r[i];
    lattice.push_back(std::move(l));
  }
  std::vector<long long> diff = abelianize(p, w1);
  std::vector<long long> d2 = abelianize(p, w2);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= d2[i];
  if (!in_lattice(lattice, diff)) {
    return BoundedVerdict{VerdictKind::Distinct, {},
                          "abelianized exponent vectors differ modulo the "
                          "relation lattice",
                          0};
  }

  // bidirectional BFS over rewrite applications
  std::map<PWord, SearchNode> seen_a{{w1, {w1, ""}}};
  std::map<PWord, SearchNode> seen_b{{w2, {w2, ""}}};
  std::deque<PWord> frontier_a{w1};
  std::deque<PWord> frontier_b{w2};
  constexpr std::size_t kStateCap = 200000;

  auto build_trace = [&](const PWord& meet) {
    std::vector<std::string> trace;
    for (PWord at = meet; seen_a.at(at).step != "";
         at = seen_a.at(at).parent) {
      trace.push_back(seen_a.at(at).step + " => " + p.format_pword(at));
    }
    std::reverse(trace.begin(), trace.end());
    trace.insert(trace.begin(), "start " + p.format_pword(w1));
    for (PWord at = meet; seen_b.at(at).step != "";
         at = seen_b.at(at).parent) {
      trace.push_back("undo(" + seen_b.at(at).step + ") => " +
                      p.format_pword(seen_b.at(at).parent));
    }
    trace.push_back("reach " + p.format_pword(w2));
    return trace;
  };

  for (int depth = 0; depth < bound; ++depth) {
    for (bool expand_a : {true, false}) {
      auto& frontier = expand_a ? frontier_a : frontier_b;
      auto& mine = expand_a ? seen_a : seen_b;
      auto& other = expand_a ? seen_b : seen_a;
      std::deque<PWord> next_frontier;
      for (const PWord& w : frontier) {
        for (auto& [next, step] : neighbors(p, w, length_cap)) {
          if (mine.count(next)) continue;
          if (mine.size() + other.size() > kStateCap) {
            return BoundedVerdict{VerdictKind::Unknown, {}, "state cap", bound};
          }
          mine.emplace(next, SearchNode{w, step});
          if (other.count(next)) {
            return BoundedVerdict{VerdictKind::Equal, build_trace(next), "",
                                  depth + 1};
          }
          next_frontier.push_back(next);
        }
      }
      frontier = std::move(next_frontier);
    }
    if (frontier_a.empty() && frontier_b.empty()) break;
  }
  return BoundedVerdict{VerdictKind::Unknown, {}, "bound exhausted", bound};
}

PresClasses bounded_classes(const Presentation& p, int bound, int slack,
                            Budget& budget) {
  const int cap = bound + slack;
  PresClasses out;
  std::vector<PWord> universe;
  std::vector<int> src_of;
  std::map<std::pair<int, PWord>, int> index;

  // empty word once per object
  for (int o = 0; o < static_cast<int>(p.objects.size()); ++o) {
    index[{o, {}}] = static_cast<int>(universe.size());
    universe.push_back({});
    src_of.push_back(o);
  }
  std::vector<GenRef> alphabet;
  for (int g = 0; g < static_cast<int>(p.generators.size()); ++g) {
    alphabet.push_back(GenRef{g, false});
    if (p.generators[g].invertible) alphabet.push_back(GenRef{g, true});
  }
  std::size_t level_start = 0;
  std::size_t level_end = universe.size();
  for (int len = 1; len <= cap; ++len) {
    for (std::size_t i = level_start; i < level_end; ++i) {
      int at = universe[i].empty() ? src_of[i] : p.ref_cod(universe[i].back());
      for (const GenRef& r : alphabet) {
        budget.charge();
        if (p.ref_dom(r) != at) continue;
        PWord w = universe[i];
        w.push_back(r);
        int src = src_of[i];
        index[{src, w}] = static_cast<int>(universe.size());
        universe.push_back(std::move(w));
        src_of.push_back(src);
      }
    }
    level_start = level_end;
    level_end = universe.size();
  }

  std::vector<int> parent(universe.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  for (std::size_t i = 0; i < universe.size(); ++i) {
    const PWord& w = universe[i];
    int src = src_of[i];
    // free cancellation
    for (std::size_t q = 0; q + 1 < w.size(); ++q) {
      budget.charge();
      if (w[q].gen == w[q + 1].gen && w[q].inv != w[q + 1].inv &&
          p.generators[w[q].gen].invertible) {
        PWord shorter = w;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(q),
                      shorter.begin() + static_cast<std::ptrdiff_t>(q) + 2);
        unite(static_cast<int>(i), index.at({src, shorter}));
      }
    }
    // relation applications that stay within the cap
    for (const auto& [lhs, rhs] : p.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const PWord& from = dir == 0 ? lhs : rhs;
        const PWord& to = dir == 0 ? rhs : lhs;
        if (to.size() > from.size() &&
            w.size() - from.size() + to.size() > static_cast<std::size_t>(cap)) {
          continue;
        }
        for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
          budget.charge();
          if (!from.empty() &&
              !std::equal(from.begin(), from.end(),
                          w.begin() + static_cast<std::ptrdiff_t>(pos))) {
            continue;
          }
          if (from.empty()) {
            // insertion: endpoints of `to` must match the chain here
            int at = pos == 0 ? (w.empty() ? src : p.ref_dom(w.front()))
                              : p.ref_cod(w[pos - 1]);
            if (!to.empty() && (p.word_dom(to) != at || p.word_cod(to) != at)) {
              continue;
            }
            if (to.empty()) continue;
          }
          PWord next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(),
                      w.begin() + static_cast<std::ptrdiff_t>(pos + from.size()),
                      w.end());
          if (static_cast<int>(next.size()) > cap) continue;
          auto it = index.find({src, next});
          if (it != index.end()) unite(static_cast<int>(i), it->second);
        }
      }
    }
  }

  std::vector<int> class_of_universe(universe.size(), -1);
  std::vector<int> class_label(universe.size(), -1);
  for (std::size_t i = 0; i < universe.size(); ++i) {
    int root = find(static_cast<int>(i));
    class_of_universe[i] = root;
  }
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (static_cast<int>(universe[i].size()) > bound) continue;
    int root = class_of_universe[i];
    if (class_label[root] < 0) class_label[root] = out.num_classes++;
    out.words.push_back(universe[i]);
    int src = src_of[i];
    int tgt = universe[i].empty() ? src : p.ref_cod(universe[i].back());
    out.endpoints.emplace_back(src, tgt);
    out.class_of.push_back(class_label[root]);
  }
  return out;
}

}  // namespace skelcat
