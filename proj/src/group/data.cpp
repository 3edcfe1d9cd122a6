#include "symcc/group/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace symcc {

using nlohmann::json;

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<int>(i);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw GroupDataError("bad cycle notation: " + text);
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw GroupDataError("unclosed cycle: " + text);
    std::vector<int> cyc;
    std::stringstream ss(text.substr(pos + 1, close - pos - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      int v = std::stoi(item);
      if (v < 1 || static_cast<std::size_t>(v) > degree) throw GroupDataError("point out of range in " + text);
      cyc.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (p[static_cast<std::size_t>(cyc[i])] != cyc[i]) throw GroupDataError("cycles overlap in " + text);
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) p[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return p;
}

GroupData parse_group_data(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw GroupDataError(std::string("group data is not valid JSON: ") + e.what());
  }
  GroupData out;
  const std::string name = doc.at("name").get<std::string>();
  const std::size_t degree = doc.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& g : doc.at("generators")) gens.push_back(parse_cycles(g.get<std::string>(), degree));
  auto group = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(name, gens));
  try {
    group->validate();
  } catch (const ValidationFailed& e) {
    throw GroupDataError(name + ": " + e.what());
  }
  if (doc.contains("order") && doc["order"].get<std::size_t>() != group->order())
    throw GroupDataError(name + ": generators give order " + std::to_string(group->order()) + ", file states " +
                         std::to_string(doc["order"].get<std::size_t>()));
  out.group = group;
  if (doc.contains("points"))
    for (const auto& pt : doc["points"]) {
      std::vector<FieldElement> v;
      for (const auto& x : pt) v.push_back(FieldElement::parse(x.get<std::string>()));
      out.points.push_back(std::move(v));
    }
  if (!out.points.empty() && out.points.size() != degree)
    throw GroupDataError(name + ": expected " + std::to_string(degree) + " points");
  std::size_t sum_sq = 0;
  for (const auto& ir : doc.at("irreps")) {
    const std::string label = ir.at("label").get<std::string>();
    const std::size_t n = ir.at("degree").get<std::size_t>();
    std::vector<FieldMatrix> mats;
    for (const auto& m : ir.at("matrices")) {
      FieldMatrix fm = parse_matrix(m.get<std::vector<std::vector<std::string>>>());
      if (fm.rows() != n || fm.cols() != n) throw GroupDataError(name + "/" + label + ": matrix size differs from degree");
      mats.push_back(std::move(fm));
    }
    try {
      out.irreps.push_back(GroupRep::from_generators(group, mats, label));
    } catch (const ValidationFailed& e) {
      throw GroupDataError(name + "/" + std::string(e.what()));
    }
    sum_sq += n * n;
  }
  std::vector<Character> chars;
  for (const auto& r : out.irreps) chars.emplace_back(r);
  for (std::size_t a = 0; a < chars.size(); ++a)
    for (std::size_t b = a; b < chars.size(); ++b) {
      FieldElement ip = char_inner_product(chars[a], chars[b]);
      FieldElement want(a == b ? 1 : 0);
      if (ip != want)
        throw GroupDataError(name + ": <chi_" + out.irreps[a].label() + ", chi_" + out.irreps[b].label() + "> = " +
                             ip.to_string() + ", expected " + want.to_string());
    }
  if (sum_sq != group->order())
    throw GroupDataError(name + ": sum of squared irrep degrees is " + std::to_string(sum_sq) + ", group order is " +
                         std::to_string(group->order()));
  return out;
}

GroupData load_group_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupDataError("cannot open group data file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_data(ss.str());
}

std::string data_directory() {
  if (const char* env = std::getenv("SYMCC_DATA_DIR")) return env;
#ifdef SYMCC_DATA_DIR
  return SYMCC_DATA_DIR;
#else
  return "data";
#endif
}

GroupData load_builtin_group(const std::string& name) { return load_group_data(data_directory() + "/" + name + ".json"); }

}  // namespace symcc
