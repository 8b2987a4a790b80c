#include "skelcat/words.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace skelcat {

bool is_reduced(const FinCat& cat, const WordSeq& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (cat.is_identity(word[i])) return false;
    if (i + 1 < word.size() && cat.composable(word[i], word[i + 1])) {
      return false;
    }
  }
  return true;
}

WordSeq phi(const FinCat& cat, ArrId a, WordSeq beta) {
  std::size_t drop = 0;
  while (drop < beta.size() && cat.composable(a, beta[drop])) {
    a = cat.compose(a, beta[drop]);
    ++drop;
  }
  beta.erase(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(drop));
  if (cat.is_identity(a)) return beta;
  beta.insert(beta.begin(), a);
  return beta;
}

WordSeq star(const FinCat& cat, const WordSeq& alpha, WordSeq nu) {
  for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
    nu = phi(cat, *it, std::move(nu));
  }
  return nu;
}

WordSeq reduce(const FinCat& cat, const WordSeq& alpha) {
  return star(cat, alpha, {});
}

WordSeq parse_word(const FinCat& cat, const std::string& text) {
  WordSeq word;
  if (text.empty() || text == "()") return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string name = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    ArrId a = cat.arrow_index(name);
    if (a < 0) {
      throw std::invalid_argument("unknown arrow '" + name + "' in word");
    }
    word.push_back(a);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string format_word(const FinCat& cat, const WordSeq& word) {
  if (word.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += cat.arrow(word[i]).name;
  }
  return out;
}

int ClosureClasses::class_index(const WordSeq& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : class_of[it->second];
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

ClosureClasses closure_oracle(const FinCat& cat, int max_len, Budget& budget) {
  const auto n_arrows = cat.num_arrows();
  // the forward rewrites only shorten words, so the bounded universe is
  // closed under them; union-find symmetry covers the reverse rewrites
  ClosureClasses cc;
  cc.universe.push_back({});
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = cc.universe.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (ArrId a = 0; a < static_cast<ArrId>(n_arrows); ++a) {
        budget.charge();
        WordSeq w = cc.universe[i];
        w.push_back(a);
        cc.universe.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  std::sort(cc.universe.begin(), cc.universe.end(),
            [](const WordSeq& x, const WordSeq& y) {
              return x.size() != y.size() ? x.size() < y.size() : x < y;
            });
  for (std::size_t i = 0; i < cc.universe.size(); ++i) {
    cc.index_[cc.universe[i]] = static_cast<int>(i);
  }

  UnionFind uf(cc.universe.size());
  for (std::size_t i = 0; i < cc.universe.size(); ++i) {
    const WordSeq& w = cc.universe[i];
    for (std::size_t p = 0; p < w.size(); ++p) {
      budget.charge();
      if (cat.is_identity(w[p])) {
        WordSeq shorter = w;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p));
        uf.unite(static_cast<int>(i), cc.index_.at(shorter));
      }
      if (p + 1 < w.size() && cat.composable(w[p], w[p + 1])) {
        WordSeq shorter = w;
        shorter[p] = cat.compose(w[p], w[p + 1]);
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(p) + 1);
        uf.unite(static_cast<int>(i), cc.index_.at(shorter));
      }
    }
  }

  cc.class_of.assign(cc.universe.size(), -1);
  for (std::size_t i = 0; i < cc.universe.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (cc.class_of[root] < 0) cc.class_of[root] = cc.num_classes++;
    cc.class_of[i] = cc.class_of[root];
  }
  return cc;
}

}  // namespace skelcat
