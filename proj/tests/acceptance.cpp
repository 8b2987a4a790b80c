// Acceptance suite: one pass/fail line per criterion. Exits nonzero when any
// criterion fails. Usage: acceptance <corpus-dir> <cli-binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skelcat/io.hpp"
#include "skelcat/pretorsion.hpp"

namespace fs = std::filesystem;
using namespace skelcat;

namespace {

std::string g_corpus_dir;
std::string g_cli;

std::vector<std::string> corpus_files() {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(g_corpus_dir)) {
    if (entry.path().extension() == ".json") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<FinCat> corpus() {
  std::vector<FinCat> cats;
  for (const auto& path : corpus_files()) cats.push_back(load_category(path));
  return cats;
}

std::vector<FinCat> probe_family() {
  std::vector<FinCat> probes;
  for (FinCat& cat : corpus()) {
    if (cat.num_objects() <= 2 && cat.num_nonidentity_arrows() <= 4) {
      probes.push_back(std::move(cat));
    }
  }
  return probes;
}

std::vector<WordSeq> all_words(const FinCat& cat, int max_len) {
  std::vector<WordSeq> out{{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (ArrId a = 0; a < static_cast<ArrId>(cat.num_arrows()); ++a) {
        WordSeq w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

int run_cli(const std::string& args, const std::string& out_file) {
  std::string cmd = g_cli + " " + args + " > " + out_file + " 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- criteria -------------------------------------------------------------

std::string criterion1_normal_forms() {
  auto start = std::chrono::steady_clock::now();
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    Budget budget(200'000'000);
    ClosureClasses cc = closure_oracle(cat, 4, budget);
    std::map<int, WordSeq> reduced_of_class;
    std::set<WordSeq> seen;
    for (const WordSeq& w : all_words(cat, 4)) {
      WordSeq r = reduce(cat, w);
      int cls = cc.class_index(w);
      if (cls != cc.class_index(r)) {
        return "reduce not sound on " + path + " word " + format_word(cat, w);
      }
      auto it = reduced_of_class.find(cls);
      if (it == reduced_of_class.end()) {
        reduced_of_class.emplace(cls, r);
        if (!seen.insert(r).second) {
          return "two classes share reduced form " + format_word(cat, r) +
                 " in " + path;
        }
      } else if (it->second != r) {
        return "class of " + format_word(cat, w) + " has two reduced forms " +
               "in " + path;
      }
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  if (elapsed.count() >= 60) {
    return "runtime " + std::to_string(elapsed.count()) + "s >= 60s";
  }
  return "";
}

std::string criterion2_integers() {
  FinCat i = load_category(g_corpus_dir + "/two_iso.json");
  ZExactSequence seq = torsionfree_reflection(i);
  if (seq.quotient.num_classes() != 1) return "expected a single class";
  Budget budget;
  for (int k = 0; k <= 5; ++k) {
    std::size_t n = seq.quotient.enumerate(0, 0, k, budget).size();
    if (n != static_cast<std::size_t>(2 * k + 1)) {
      return "bound " + std::to_string(k) + " has " + std::to_string(n) +
             " arrows, expected " + std::to_string(2 * k + 1);
    }
  }
  ArrId f = i.arrow_index("f");
  ArrId g = i.arrow_index("g");
  auto power = [&](int n) {
    WordSeq w;
    for (int j = 0; j < std::abs(n); ++j) w.push_back(n > 0 ? f : g);
    return QArrow{0, w, 0};
  };
  for (int a = -5; a <= 5; ++a) {
    for (int b = -5; b <= 5; ++b) {
      if (!(seq.quotient.q_compose(power(a), power(b)) == power(a + b))) {
        return "composition at " + std::to_string(a) + " + " +
               std::to_string(b) + " does not match integer addition";
      }
    }
  }
  return "";
}

std::string criterion3_faithful_reflects() {
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    std::vector<ArrId> isos;
    for (ArrId x = 0; x < static_cast<ArrId>(cat.num_arrows()); ++x) {
      if (!cat.is_identity(x) && cat.is_iso(x)) isos.push_back(x);
    }
    for (std::size_t mask = 0; mask < (1u << isos.size()); ++mask) {
      IdentificationSpec spec{cat, {}};
      for (std::size_t j = 0; j < isos.size(); ++j) {
        if (mask & (1u << j)) {
          spec.pairs.emplace_back(cat.arrow(isos[j]).dom,
                                  cat.arrow(isos[j]).cod);
        }
      }
      QuotientCat q = coequalize(spec);
      const auto n = static_cast<ArrId>(cat.num_arrows());
      for (ArrId x = 0; x < n; ++x) {
        for (ArrId y = 0; y < n; ++y) {
          if (x == y || cat.arrow(x).dom != cat.arrow(y).dom ||
              cat.arrow(x).cod != cat.arrow(y).cod) {
            continue;
          }
          if (q.q_map(x) == q.q_map(y)) {
            return "q_map not injective on parallel arrows in " + path;
          }
        }
        if (q.q_is_iso(q.q_map(x)) && !cat.is_iso(x)) {
          return "non-iso arrow with iso image in " + path;
        }
      }
    }
  }
  return "";
}

std::string criterion4_iso_lemma() {
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    ZExactSequence seq = torsionfree_reflection(cat);
    const QuotientCat& q = seq.quotient;
    Budget budget(500'000'000);
    for (const QArrow& a : q.enumerate_all(4, budget)) {
      bool has_inverse = false;
      for (const QArrow& b : q.enumerate(a.tgt, a.src, 8, budget)) {
        if (q.q_compose(a, b) == q.identity(a.src) &&
            q.q_compose(b, a) == q.identity(a.tgt)) {
          has_inverse = true;
        }
      }
      if (q.q_is_iso(a) != has_inverse) {
        return "iso characterization fails on " + q.format(a) + " in " + path;
      }
    }
  }
  return "";
}

std::string criterion5_short_z_exact() {
  auto probes = probe_family();
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    ZExactSequence seq = torsionfree_reflection(cat);
    Budget budget(500'000'000);
    CheckReport report = verify_short_z_exact(seq, probes, 4, budget);
    if (!report.ok()) {
      return path + ": " + report.failures.front();
    }
  }
  // mutation: dropping one identification pair must be detected somewhere
  int detected = 0;
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    ZExactSequence seq = torsionfree_reflection(cat);
    if (seq.pairs.empty()) continue;
    ZExactSequence corrupted = seq;
    corrupted.pairs.erase(corrupted.pairs.begin());
    corrupted.quotient = coequalize({corrupted.ambient, corrupted.pairs});
    Budget budget(500'000'000);
    if (!verify_short_z_exact(corrupted, probes, 4, budget).ok()) ++detected;
  }
  if (detected < 1) return "no corpus category detects a dropped pair";
  return "";
}

std::string criterion6_pt1() {
  auto cats = corpus();
  for (const FinCat& t : cats) {
    if (!classify(t).is_groupoid) continue;
    for (const FinCat& f : cats) {
      if (!classify(f).is_skeletal) continue;
      Budget budget(500'000'000);
      CheckReport report = pt1_check(t, f, budget);
      if (!report.ok()) return "PT1 fails: " + report.failures.front();
    }
  }
  FinCat i = load_category(g_corpus_dir + "/two_iso.json");
  FinCat two = load_category(g_corpus_dir + "/arrow.json");
  Budget budget;
  auto fs2 = enumerate_functors(i, two, budget);
  if (fs2.size() != 2) {
    return "enumerate_functors(I, 2) returned " + std::to_string(fs2.size());
  }
  for (const Functor& f : fs2) {
    if (!is_trivial_functor(f)) return "a functor I -> 2 is not trivial";
  }
  return "";
}

std::string criterion7_z_kernel() {
  auto probes = probe_family();
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    ZExactSequence seq = torsionfree_reflection(cat);
    if (!(z_kernel_of_quotient(seq.quotient).sub ==
          subgroupoid(cat, SubMode::Iso).sub)) {
      return "z_kernel(q) != Iso(C) for " + path;
    }
    if (!(z_kernel(identity_functor(cat)).sub ==
          subgroupoid(cat, SubMode::Aut).sub)) {
      return "z_kernel(id) != Aut(C) for " + path;
    }
    // universal property over the probes
    Budget budget(500'000'000);
    for (const FinCat& probe : probes) {
      auto hs = enumerate_functors(probe, seq.kernel, budget);
      for (const Functor& g : enumerate_functors(probe, cat, budget)) {
        if (!is_trivial_into_quotient(seq.quotient, g)) continue;
        int count = 0;
        for (const Functor& h : hs) {
          if (compose_functors(h, seq.inclusion) == g) ++count;
        }
        if (count != 1) {
          return "kernel factorization count " + std::to_string(count) +
                 " for " + path;
        }
      }
    }
  }
  return "";
}

std::string criterion8_presentations() {
  // the arrow category: normal forms u^n, |n| <= 6
  FinCat two = load_category(g_corpus_dir + "/arrow.json");
  CokernelResult cok2 = z_cokernel_of_identity(two, 8);
  Budget budget(500'000'000);
  PresClasses classes = bounded_classes(cok2.pres, 6, 2, budget);
  if (classes.num_classes != 13) {
    return "z_cokernel_of_identity(2) has " +
           std::to_string(classes.num_classes) + " bounded classes, not 13";
  }
  auto upow = [&](int n) {
    PWord w;
    for (int j = 0; j < std::abs(n); ++j) w.push_back(GenRef{0, n < 0});
    return w;
  };
  for (int a = -6; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      BoundedVerdict v = word_equal_bounded(cok2.pres, upow(a), upow(b), 8);
      if (v.kind != VerdictKind::Distinct) {
        return "u^" + std::to_string(a) + " vs u^" + std::to_string(b) +
               " not Distinct";
      }
    }
  }
  if (word_equal_bounded(cok2.pres, upow(1),
                         PWord{GenRef{0, false}, GenRef{0, true},
                               GenRef{0, false}},
                         8)
          .kind != VerdictKind::Equal) {
    return "u not Equal to u u^-1 u";
  }
  PWord cancel{GenRef{0, false}, GenRef{0, true}};
  if (word_equal_bounded(cok2.pres, cancel, {}, 8).kind !=
      VerdictKind::Equal) {
    return "u u^-1 not Equal to the empty word";
  }

  // pushout along the identity is bounded-equivalent to the direct form
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    CokernelResult direct = z_cokernel_of_identity(cat, 8);
    CokernelResult pushout = z_cokernel(identity_functor(cat), 8);
    for (const Generator& g : direct.pres.generators) {
      int a_side = pushout.pres.gen_index("A." + g.name);
      int b_side = pushout.pres.gen_index("B." + g.name);
      if (a_side < 0 || b_side < 0) return "missing generator in pushout";
      BoundedVerdict v = word_equal_bounded(
          pushout.pres, {GenRef{a_side, false}}, {GenRef{b_side, false}}, 8);
      if (v.kind != VerdictKind::Equal) {
        return "generator '" + g.name + "' not identified with its image in " +
               path;
      }
    }
  }

  // groupoid consistency: bounded normal forms biject with the enumerated
  // arrows of the skeletal reflection
  for (const auto& path : corpus_files()) {
    FinCat cat = load_category(path);
    if (!classify(cat).is_groupoid) continue;
    CokernelResult cok = z_cokernel_of_identity(cat, 4);
    Budget b2(500'000'000);
    PresClasses pc = bounded_classes(cok.pres, 4, 2, b2);
    ZExactSequence seq = torsionfree_reflection(cat);
    std::map<int, QArrow> image_of_class;
    std::set<QArrow> images;
    for (std::size_t i = 0; i < pc.words.size(); ++i) {
      WordSeq chain;
      for (const GenRef& r : pc.words[i]) {
        ArrId a = cat.arrow_index(cok.pres.generators[r.gen].name);
        chain.push_back(r.inv ? *cat.inverse(a) : a);
      }
      WordSeq red = reduce(cat, chain);
      ObjId rep = cat.object_index(cok.pres.objects[pc.endpoints[i].first]);
      int src = seq.quotient.class_of(rep);
      int tgt = red.empty() ? src
                            : seq.quotient.class_of(cat.arrow(red.back()).cod);
      QArrow img{src, red, tgt};
      auto it = image_of_class.find(pc.class_of[i]);
      if (it == image_of_class.end()) {
        image_of_class.emplace(pc.class_of[i], img);
        images.insert(img);
      } else if (!(it->second == img)) {
        return "presentation class maps to two distinct arrows in " + path;
      }
    }
    if (images.size() != static_cast<std::size_t>(pc.num_classes)) {
      return "presentation classes not injective into the quotient for " +
             path;
    }
    auto q_arrows = seq.quotient.enumerate_all(4, b2);
    if (images != std::set<QArrow>(q_arrows.begin(), q_arrows.end())) {
      return "bounded normal forms do not biject with quotient arrows for " +
             path;
    }
  }
  return "";
}

std::string criterion9_cli() {
  std::string tmp = fs::temp_directory_path().string();
  for (const auto& path : corpus_files()) {
    std::string emitted = tmp + "/skelcat_acc_emit.json";
    std::string out = tmp + "/skelcat_acc_out.txt";
    if (run_cli("validate " + path + " --emit " + emitted, out) != 0) {
      return "validate failed on " + path;
    }
    FinCat original = load_category(path);
    FinCat reloaded = load_category(emitted);
    if (!(original == reloaded)) return "round trip differs for " + path;
    // idempotence of the canonical form
    if (category_to_json(reloaded) != category_to_json(original)) {
      return "canonical form not idempotent for " + path;
    }
    if (run_cli("check-pretorsion " + path, out) != 0) {
      return "check-pretorsion nonzero exit for " + path + ":\n" + slurp(out);
    }
  }
  // determinism: byte-identical reports across consecutive runs
  std::string a = fs::temp_directory_path().string() + "/skelcat_acc_a.txt";
  std::string b = fs::temp_directory_path().string() + "/skelcat_acc_b.txt";
  for (std::string args :
       {std::string("reflect ") + g_corpus_dir + "/two_iso.json --max-len 3",
        std::string("corpus list --dir ") + g_corpus_dir,
        std::string("zcok-id ") + g_corpus_dir + "/two_iso.json"}) {
    if (run_cli(args, a) != run_cli(args, b)) {
      return "exit codes differ across runs of: " + args;
    }
    if (slurp(a) != slurp(b)) {
      return "reports differ across runs of: " + args;
    }
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <corpus-dir> <cli-binary>\n";
    return 2;
  }
  g_corpus_dir = argv[1];
  g_cli = argv[2];

  std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"1 normal-form soundness & uniqueness", criterion1_normal_forms},
      {"2 integers reproduction", criterion2_integers},
      {"3 faithfulness & iso reflection", criterion3_faithful_reflects},
      {"4 iso characterization", criterion4_iso_lemma},
      {"5 short Z-exact sequences (PT2)", criterion5_short_z_exact},
      {"6 PT1", criterion6_pt1},
      {"7 Z-kernels", criterion7_z_kernel},
      {"8 presentations & Z-cokernels", criterion8_presentations},
      {"9 CLI round trip & determinism", criterion9_cli},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    std::string err;
    try {
      err = fn();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    if (err.empty()) {
      std::cout << "PASS criterion " << name << "\n";
    } else {
      std::cout << "FAIL criterion " << name << ": " << err << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
