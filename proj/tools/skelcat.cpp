// Command-line frontend for finite-category computations: validation,
// word reduction, coequalizers, skeletal reflections, Z-kernels/Z-cokernels
// and the pretorsion verification suite.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "skelcat/io.hpp"
#include "skelcat/pretorsion.hpp"

namespace fs = std::filesystem;
using namespace skelcat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

#ifndef SKELCAT_CORPUS_DIR
#define SKELCAT_CORPUS_DIR ""
#endif

std::string corpus_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SKELCAT_CORPUS")) return env;
  return SKELCAT_CORPUS_DIR;
}

std::vector<std::string> corpus_paths(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") {
      paths.push_back(entry.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::vector<FinCat> default_probes(const std::string& dir) {
  std::vector<FinCat> probes;
  for (const auto& path : corpus_paths(dir)) {
    FinCat cat = load_category(path);
    if (cat.num_objects() <= 2 && cat.num_nonidentity_arrows() <= 4) {
      probes.push_back(std::move(cat));
    }
  }
  return probes;
}

void print_category(const FinCat& cat) {
  std::cout << "objects:";
  for (const auto& o : cat.objects()) std::cout << ' ' << o;
  std::cout << "\narrows:\n";
  for (const Arrow& a : cat.arrows()) {
    if (a.is_identity) continue;
    std::cout << "  " << a.name << ": " << cat.object_name(a.dom) << " -> "
              << cat.object_name(a.cod) << "\n";
  }
  CatFlags flags = classify(cat);
  std::cout << "groupoid: " << (flags.is_groupoid ? "yes" : "no")
            << "  skeletal: " << (flags.is_skeletal ? "yes" : "no")
            << "  trivial: " << (flags.is_trivial ? "yes" : "no") << "\n";
}

void print_quotient(const QuotientCat& q, int max_len) {
  std::cout << "classes:";
  for (int cls = 0; cls < q.num_classes(); ++cls) {
    std::cout << ' ' << q.class_name(cls) << "={";
    auto members = q.class_members(cls);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << q.base().object_name(members[i]);
    }
    std::cout << "}";
  }
  std::cout << "\n";
  Budget budget;
  auto arrows = q.enumerate_all(max_len, budget);
  std::cout << "arrows up to length " << max_len << " (" << arrows.size()
            << "):\n";
  for (const QArrow& a : arrows) {
    std::cout << "  " << q.format(a) << "\n";
  }
}

std::vector<std::pair<ObjId, ObjId>> parse_identify(const FinCat& cat,
                                                    const std::string& text) {
  std::vector<std::pair<ObjId, ObjId>> pairs;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw ParseError("--identify items must look like X=Y");
    }
    ObjId a = cat.object_index(item.substr(0, eq));
    ObjId b = cat.object_index(item.substr(eq + 1));
    if (a < 0 || b < 0) {
      throw ParseError("unknown object in --identify item '" + item + "'");
    }
    pairs.emplace_back(a, b);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return pairs;
}

int run_check_pretorsion(const std::string& cat_path,
                         const std::string& probes_flag, int max_len) {
  FinCat cat = load_category(cat_path);
  std::string dir = corpus_dir(probes_flag);
  std::vector<FinCat> probes = default_probes(dir);
  ZExactSequence seq = torsionfree_reflection(cat);
  Budget budget;
  CheckReport report = verify_short_z_exact(seq, probes, max_len, budget);
  for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
  if (!report.ok()) {
    for (const auto& f : report.failures) std::cout << "FAIL: " << f << "\n";
    return kExitFail;
  }
  std::cout << "short Z-exact sequence verified for " << cat_path << "\n";
  return kExitPass;
}

int print_cokernel(const CokernelResult& result, const FinCat& source,
                   int bound) {
  std::cout << presentation_to_text(result.pres);
  std::cout << "arrow images:\n";
  for (const auto& [name, word] : result.arrow_images) {
    std::cout << "  " << name << " |-> " << result.pres.format_pword(word)
              << "\n";
  }
  (void)source;
  // every generator must be provably invertible within the bound
  bool unknown = false;
  for (int g = 0; g < static_cast<int>(result.pres.generators.size()); ++g) {
    if (!result.pres.generators[g].invertible) continue;
    PWord pair{GenRef{g, false}, GenRef{g, true}};
    BoundedVerdict v = word_equal_bounded(result.pres, pair, {}, bound);
    if (v.kind == VerdictKind::Unknown) {
      std::cout << "unknown: invertibility of "
                << result.pres.generators[g].name << " unresolved at bound "
                << bound << "\n";
      unknown = true;
    }
  }
  return unknown ? kExitUnknown : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite categories: normal forms, coequalizers, skeletal "
               "reflections and the (groupoids, skeletal) pretorsion theory"};
  app.require_subcommand(1);

  std::string cat_path, functor_path, word_text, identify_text, out_path;
  std::string probes_flag, dir_flag;
  int max_len = 4;
  int bound = kDefaultSearchBound;

  auto* validate = app.add_subcommand("validate", "check category laws");
  validate->add_option("file", cat_path)->required();
  validate->add_option("--emit", out_path, "write the canonical JSON form");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a word of arrows");
  reduce_cmd->add_option("file", cat_path)->required();
  reduce_cmd->add_option("--word", word_text)->required();

  auto* coeq_cmd =
      app.add_subcommand("coeq", "coequalizer of an object identification");
  coeq_cmd->add_option("file", cat_path)->required();
  coeq_cmd->add_option("--identify", identify_text, "pairs X=Y,U=V,...");
  coeq_cmd->add_option("--max-len", max_len);

  auto* iso_cmd = app.add_subcommand("iso", "wide subgroupoid of isomorphisms");
  iso_cmd->add_option("file", cat_path)->required();
  auto* aut_cmd =
      app.add_subcommand("aut", "wide subgroupoid of automorphisms");
  aut_cmd->add_option("file", cat_path)->required();

  auto* reflect_cmd =
      app.add_subcommand("reflect", "skeletal (torsion-free) reflection");
  reflect_cmd->add_option("file", cat_path)->required();
  reflect_cmd->add_option("--max-len", max_len);

  auto* zker_cmd = app.add_subcommand("zkernel", "Z-kernel of a functor");
  zker_cmd->add_option("file", functor_path)->required();

  auto* zcokid_cmd = app.add_subcommand(
      "zcok-id", "Z-cokernel of the identity, as a presentation");
  zcokid_cmd->add_option("file", cat_path)->required();
  zcokid_cmd->add_option("--bound", bound);

  auto* zcok_cmd =
      app.add_subcommand("zcok", "Z-cokernel of a functor, as a presentation");
  zcok_cmd->add_option("file", functor_path)->required();
  zcok_cmd->add_option("--bound", bound);

  auto* check_cmd = app.add_subcommand(
      "check-pretorsion", "verify the short Z-exact sequence with probes");
  check_cmd->add_option("file", cat_path)->required();
  check_cmd->add_option("--probes", probes_flag, "probe category directory");
  check_cmd->add_option("--max-len", max_len);

  auto* dot_cmd = app.add_subcommand("export-dot", "emit a DOT digraph");
  dot_cmd->add_option("file", cat_path)->required();
  dot_cmd->add_option("-o,--output", out_path);

  auto* corpus_cmd = app.add_subcommand("corpus", "bundled example set");
  std::string corpus_verb;
  corpus_cmd->add_option("verb", corpus_verb, "list or run-all")->required();
  corpus_cmd->add_option("--dir", dir_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*validate) {
      ValidationResult r = validate_category(load_raw_category(cat_path));
      if (!r.ok()) {
        std::cout << "invalid category (" << r.errors.size()
                  << " violations):\n";
        for (const auto& e : r.errors) std::cout << "  " << e << "\n";
        return kExitFail;
      }
      print_category(*r.category);
      if (!out_path.empty()) save_category(*r.category, out_path);
      return kExitPass;
    }
    if (*reduce_cmd) {
      FinCat cat = load_category(cat_path);
      WordSeq word = parse_word(cat, word_text);
      std::cout << format_word(cat, reduce(cat, word)) << "\n";
      return kExitPass;
    }
    if (*coeq_cmd) {
      FinCat cat = load_category(cat_path);
      IdentificationSpec spec{cat, parse_identify(cat, identify_text)};
      print_quotient(coequalize(spec), max_len);
      return kExitPass;
    }
    if (*iso_cmd || *aut_cmd) {
      FinCat cat = load_category(cat_path);
      SubcatResult r =
          subgroupoid(cat, *iso_cmd ? SubMode::Iso : SubMode::Aut);
      print_category(r.sub);
      return kExitPass;
    }
    if (*reflect_cmd) {
      FinCat cat = load_category(cat_path);
      ZExactSequence seq = torsionfree_reflection(cat);
      print_quotient(seq.quotient, max_len);
      return kExitPass;
    }
    if (*zker_cmd) {
      Functor f = load_functor(functor_path);
      SubcatResult r = z_kernel(f);
      print_category(r.sub);
      return kExitPass;
    }
    if (*zcokid_cmd) {
      FinCat cat = load_category(cat_path);
      CokernelResult r = z_cokernel_of_identity(cat, bound);
      return print_cokernel(r, cat, bound);
    }
    if (*zcok_cmd) {
      Functor f = load_functor(functor_path);
      CokernelResult r = z_cokernel(f, bound);
      return print_cokernel(r, f.source(), bound);
    }
    if (*check_cmd) {
      return run_check_pretorsion(cat_path, probes_flag, max_len);
    }
    if (*dot_cmd) {
      FinCat cat = load_category(cat_path);
      std::string dot = to_dot(cat);
      if (out_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << dot;
      }
      return kExitPass;
    }
    if (*corpus_cmd) {
      std::string dir = corpus_dir(dir_flag);
      if (corpus_verb == "list") {
        for (const auto& path : corpus_paths(dir)) {
          FinCat cat = load_category(path);
          CatFlags flags = classify(cat);
          std::cout << fs::path(path).filename().string() << ": "
                    << cat.num_objects() << " objects, "
                    << cat.num_nonidentity_arrows() << " arrows"
                    << (flags.is_groupoid ? ", groupoid" : "")
                    << (flags.is_skeletal ? ", skeletal" : "") << "\n";
        }
        return kExitPass;
      }
      if (corpus_verb == "run-all") {
        int worst = kExitPass;
        for (const auto& path : corpus_paths(dir)) {
          std::cout << "== " << fs::path(path).filename().string() << "\n";
          int code = run_check_pretorsion(path, dir, max_len);
          worst = std::max(worst, code);
        }
        return worst;
      }
      std::cerr << "unknown corpus verb '" << corpus_verb << "'\n";
      return kExitUsage;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
