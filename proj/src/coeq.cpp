#include "skelcat/coeq.hpp"

#include <algorithm>
#include <numeric>

namespace skelcat {

namespace {

int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

QuotientCat coequalize(const IdentificationSpec& spec) {
  QuotientCat q;
  q.base_ = spec.base;
  const auto n = static_cast<int>(spec.base.num_objects());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : spec.pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw std::invalid_argument("identification pair names unknown object");
    }
    int ra = uf_find(parent, a);
    int rb = uf_find(parent, b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // class order follows the least object of each class; objects are already
  // sorted lexicographically
  q.class_of_.assign(n, -1);
  for (int o = 0; o < n; ++o) {
    int root = uf_find(parent, o);
    if (q.class_of_[root] < 0) {
      q.class_of_[root] = static_cast<int>(q.class_rep_.size());
      q.class_rep_.push_back(root);
    }
    q.class_of_[o] = q.class_of_[root];
  }
  return q;
}

std::string QuotientCat::class_name(int cls) const {
  return "[" + base_.object_name(class_rep_.at(cls)) + "]";
}

std::vector<ObjId> QuotientCat::class_members(int cls) const {
  std::vector<ObjId> members;
  for (ObjId o = 0; o < static_cast<ObjId>(class_of_.size()); ++o) {
    if (class_of_[o] == cls) members.push_back(o);
  }
  return members;
}

QArrow QuotientCat::q_map(ArrId f) const {
  const Arrow& a = base_.arrow(f);
  return QArrow{class_of_[a.dom], reduce(base_, {f}), class_of_[a.cod]};
}

QArrow QuotientCat::q_compose(const QArrow& a, const QArrow& b) const {
  if (a.tgt != b.src) {
    throw std::invalid_argument("quotient arrows not composable: " +
                                class_name(a.tgt) + " != " +
                                class_name(b.src));
  }
  WordSeq concat = a.word;
  concat.insert(concat.end(), b.word.begin(), b.word.end());
  return QArrow{a.src, reduce(base_, concat), b.tgt};
}

bool QuotientCat::q_is_iso(const QArrow& a) const {
  for (ArrId f : a.word) {
    if (!base_.is_iso(f)) return false;
  }
  return true;
}

bool QuotientCat::is_valid(const QArrow& a) const {
  if (a.src < 0 || a.src >= num_classes() || a.tgt < 0 ||
      a.tgt >= num_classes()) {
    return false;
  }
  if (a.word.empty()) return a.src == a.tgt;
  if (!is_reduced(base_, a.word)) return false;
  if (class_of_[base_.arrow(a.word.front()).dom] != a.src) return false;
  if (class_of_[base_.arrow(a.word.back()).cod] != a.tgt) return false;
  for (std::size_t i = 0; i + 1 < a.word.size(); ++i) {
    if (class_of_[base_.arrow(a.word[i]).cod] !=
        class_of_[base_.arrow(a.word[i + 1]).dom]) {
      return false;
    }
  }
  return true;
}

std::vector<QArrow> QuotientCat::enumerate(int src, int tgt, int max_len,
                                           Budget& budget) const {
  // reduced chains are enumerated directly, so every triple is distinct
  std::vector<QArrow> out;
  if (src == tgt) out.push_back(identity(src));
  std::vector<WordSeq> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<WordSeq> next;
    for (const WordSeq& w : frontier) {
      int at = w.empty() ? src
                         : class_of_[base_.arrow(w.back()).cod];
      for (ArrId f = 0; f < static_cast<ArrId>(base_.num_arrows()); ++f) {
        budget.charge();
        if (base_.is_identity(f)) continue;
        const Arrow& arr = base_.arrow(f);
        if (class_of_[arr.dom] != at) continue;
        if (!w.empty() && base_.composable(w.back(), f)) continue;
        WordSeq extended = w;
        extended.push_back(f);
        if (class_of_[arr.cod] == tgt) {
          out.push_back(QArrow{src, extended, tgt});
        }
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const QArrow& x, const QArrow& y) {
    return x.word.size() != y.word.size() ? x.word.size() < y.word.size()
                                          : x.word < y.word;
  });
  return out;
}

std::vector<QArrow> QuotientCat::enumerate_all(int max_len,
                                               Budget& budget) const {
  std::vector<QArrow> out;
  for (int src = 0; src < num_classes(); ++src) {
    for (int tgt = 0; tgt < num_classes(); ++tgt) {
      auto arrows = enumerate(src, tgt, max_len, budget);
      out.insert(out.end(), arrows.begin(), arrows.end());
    }
  }
  return out;
}

std::string QuotientCat::format(const QArrow& a) const {
  return class_name(a.src) + " --" + format_word(base_, a.word) + "--> " +
         class_name(a.tgt);
}

}  // namespace skelcat
