#include "skelcat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace skelcat {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON in " + what);
  return j;
}

}  // namespace

RawCategory parse_category_text(const std::string& text) {
  json j = parse_json(text, "category file");
  if (!j.is_object() || !j.contains("objects") || !j["objects"].is_array()) {
    throw ParseError("category file must be an object with an \"objects\" "
                     "array");
  }
  RawCategory raw;
  for (const auto& o : j["objects"]) {
    if (!o.is_string()) throw ParseError("object names must be strings");
    raw.objects.push_back(o.get<std::string>());
  }
  for (const auto& a : j.value("arrows", json::array())) {
    if (!a.is_object() || !a.contains("name") || !a.contains("dom") ||
        !a.contains("cod")) {
      throw ParseError("each arrow needs \"name\", \"dom\", \"cod\"");
    }
    raw.arrows.push_back(RawArrow{a["name"].get<std::string>(),
                                  a["dom"].get<std::string>(),
                                  a["cod"].get<std::string>()});
  }
  for (const auto& c : j.value("compose", json::array())) {
    if (!c.is_object() || !c.contains("first") || !c.contains("then") ||
        !c.contains("equals")) {
      throw ParseError("each compose entry needs \"first\", \"then\", "
                       "\"equals\"");
    }
    raw.compose.push_back(RawCompose{c["first"].get<std::string>(),
                                     c["then"].get<std::string>(),
                                     c["equals"].get<std::string>()});
  }
  return raw;
}

RawCategory load_raw_category(const std::string& path) {
  return parse_category_text(read_file(path));
}

FinCat load_category(const std::string& path) {
  ValidationResult r = validate_category(load_raw_category(path));
  if (!r.ok()) {
    std::string msg = "invalid category in " + path + ":";
    for (const auto& e : r.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  return *std::move(r.category);
}

std::string category_to_json(const FinCat& cat) {
  RawCategory raw = to_raw(cat);
  json j;
  j["objects"] = raw.objects;
  j["arrows"] = json::array();
  for (const auto& a : raw.arrows) {
    j["arrows"].push_back({{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}});
  }
  j["compose"] = json::array();
  for (const auto& c : raw.compose) {
    j["compose"].push_back(
        {{"first", c.first}, {"then", c.then}, {"equals", c.equals}});
  }
  return j.dump(2) + "\n";
}

void save_category(const FinCat& cat, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << category_to_json(cat);
}

Functor load_functor(const std::string& path) {
  json j = parse_json(read_file(path), "functor file");
  if (!j.is_object() || !j.contains("source") || !j.contains("target")) {
    throw ParseError("functor file needs \"source\" and \"target\" paths");
  }
  auto dir = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (dir / fp).string();
  };
  FinCat source = load_category(resolve(j["source"].get<std::string>()));
  FinCat target = load_category(resolve(j["target"].get<std::string>()));

  std::vector<ObjId> omap(source.num_objects(), -1);
  const json jobjects = j.value("objects", json::object());
  for (const auto& [from, to] : jobjects.items()) {
    ObjId o = source.object_index(from);
    ObjId t = target.object_index(to.get<std::string>());
    if (o < 0) throw ParseError("unknown source object '" + from + "'");
    if (t < 0) {
      throw ParseError("unknown target object '" + to.get<std::string>() +
                       "'");
    }
    omap[o] = t;
  }
  for (ObjId o = 0; o < static_cast<ObjId>(omap.size()); ++o) {
    if (omap[o] < 0) {
      throw ParseError("no image given for object '" + source.object_name(o) +
                       "'");
    }
  }
  std::vector<ArrId> amap(source.num_arrows(), -1);
  for (ObjId o = 0; o < static_cast<ObjId>(source.num_objects()); ++o) {
    amap[source.identity(o)] = target.identity(omap[o]);
  }
  const json jarrows = j.value("arrows", json::object());
  for (const auto& [from, to] : jarrows.items()) {
    ArrId a = source.arrow_index(from);
    ArrId t = target.arrow_index(to.get<std::string>());
    if (a < 0) throw ParseError("unknown source arrow '" + from + "'");
    if (t < 0) {
      throw ParseError("unknown target arrow '" + to.get<std::string>() + "'");
    }
    amap[a] = t;
  }
  for (ArrId a = 0; a < static_cast<ArrId>(amap.size()); ++a) {
    if (amap[a] < 0) {
      throw ParseError("no image given for arrow '" + source.arrow(a).name +
                       "'");
    }
  }
  auto bad = functor_violations(source, target, omap, amap);
  if (!bad.empty()) {
    std::string msg = "functor laws violated in " + path + ":";
    for (const auto& e : bad) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  return Functor(std::move(source), std::move(target), std::move(omap),
                 std::move(amap));
}

std::string to_dot(const FinCat& cat) {
  std::ostringstream out;
  out << "digraph category {\n";
  for (const auto& o : cat.objects()) {
    out << "  \"" << o << "\";\n";
  }
  for (const Arrow& a : cat.arrows()) {
    if (a.is_identity) continue;
    out << "  \"" << cat.object_name(a.dom) << "\" -> \""
        << cat.object_name(a.cod) << "\" [label=\"" << a.name << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const QuotientCat& q, int max_len, Budget& budget) {
  std::ostringstream out;
  out << "digraph quotient {\n";
  for (int cls = 0; cls < q.num_classes(); ++cls) {
    out << "  \"" << q.class_name(cls) << "\";\n";
  }
  for (const QArrow& a : q.enumerate_all(max_len, budget)) {
    if (a.word.empty()) continue;
    out << "  \"" << q.class_name(a.src) << "\" -> \"" << q.class_name(a.tgt)
        << "\" [label=\"" << format_word(q.base(), a.word) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream out;
  out << "objects:";
  for (const auto& o : p.objects) out << ' ' << o;
  out << "\ngenerators:\n";
  for (const Generator& g : p.generators) {
    out << "  " << g.name << ": " << p.objects.at(g.dom) << " -> "
        << p.objects.at(g.cod) << (g.invertible ? " (invertible)" : "")
        << "\n";
  }
  out << "relations:\n";
  for (const auto& [lhs, rhs] : p.relations) {
    out << "  " << p.format_pword(lhs) << " = " << p.format_pword(rhs) << "\n";
  }
  return out.str();
}

}  // namespace skelcat
