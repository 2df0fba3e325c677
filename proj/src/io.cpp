#include "gitgraph/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace gitgraph {

namespace {

std::vector<Branch> branches_by_end(const GitGraph& g) {
  std::vector<Branch> branches = g.branches;
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return a.end < b.end; });
  return branches;
}

}  // namespace

std::string serialize_json(const GitGraph& g) {
  if (auto why = validate(g)) throw GraphInvariantError("invalid graph: " + *why);
  nlohmann::ordered_json j;
  j["n"] = g.size();
  j["k"] = g.main_length;
  j["branches"] = nlohmann::ordered_json::array();
  for (const auto& b : branches_by_end(g)) {
    nlohmann::ordered_json jb;
    jb["start"] = b.start;
    jb["end"] = b.end;
    jb["length"] = b.length;
    j["branches"].push_back(std::move(jb));
  }
  return j.dump();
}

GitGraph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("branches") ||
      !j["n"].is_number_integer() || !j["k"].is_number_integer() || !j["branches"].is_array())
    throw JsonFormatError("expected object with integer n, k and array branches");

  GitGraph g;
  g.main_length = j["k"].get<std::int64_t>();
  for (const auto& jb : j["branches"]) {
    if (!jb.is_object() || !jb.contains("start") || !jb.contains("end") ||
        !jb.contains("length") || !jb["start"].is_number_integer() ||
        !jb["end"].is_number_integer() || !jb["length"].is_number_integer())
      throw JsonFormatError("branch must be an object with integer start, end, length");
    g.branches.push_back(Branch{jb["start"].get<std::int64_t>(), jb["end"].get<std::int64_t>(),
                                jb["length"].get<std::int64_t>()});
  }
  if (auto why = validate(g)) throw GraphInvariantError("invalid graph: " + *why);
  if (j["n"].get<std::int64_t>() != g.size())
    throw GraphInvariantError("declared n does not match k plus branch lengths");
  return g;
}

std::string serialize_dot(const GitGraph& g) {
  if (auto why = validate(g)) throw GraphInvariantError("invalid graph: " + *why);
  std::ostringstream os;
  os << "digraph gitgraph {\n";
  os << "  rankdir=LR;\n";
  for (std::int64_t j = 1; j <= g.main_length; ++j)
    os << "  m" << j << " [style=filled, fillcolor=black, fontcolor=white];\n";
  const auto branches = branches_by_end(g);
  for (const auto& b : branches)
    for (std::int64_t i = 1; i <= b.length; ++i) os << "  w" << b.end << "_" << i << ";\n";
  for (std::int64_t j = 1; j < g.main_length; ++j)
    os << "  m" << j << " -> m" << (j + 1) << ";\n";
  for (const auto& b : branches) {
    os << "  m" << b.start << " -> w" << b.end << "_1;\n";
    for (std::int64_t i = 1; i < b.length; ++i)
      os << "  w" << b.end << "_" << i << " -> w" << b.end << "_" << (i + 1) << ";\n";
    os << "  w" << b.end << "_" << b.length << " -> m" << b.end << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize_edges(const GitGraph& g) {
  if (auto why = validate(g)) throw GraphInvariantError("invalid graph: " + *why);
  std::ostringstream os;
  for (std::int64_t j = 1; j < g.main_length; ++j) os << "m" << j << " m" << (j + 1) << "\n";
  for (const auto& b : branches_by_end(g)) {
    os << "m" << b.start << " w" << b.end << "_1\n";
    for (std::int64_t i = 1; i < b.length; ++i)
      os << "w" << b.end << "_" << i << " w" << b.end << "_" << (i + 1) << "\n";
    os << "w" << b.end << "_" << b.length << " m" << b.end << "\n";
  }
  return os.str();
}

std::string emit_git_script(const GitGraph& g) {
  if (auto why = validate(g)) throw GraphInvariantError("invalid graph: " + *why);
  if (g.main_length < 1) throw GraphInvariantError("nothing to emit for an empty graph");

  std::map<std::int64_t, Branch> by_end;
  for (const auto& b : g.branches) by_end[b.end] = b;

  std::ostringstream os;
  os << "#!/bin/sh\n";
  os << "set -e\n";
  os << "git init -q -b main .\n";
  os << "git config user.name gitgraph\n";
  os << "git config user.email gitgraph@localhost\n";
  os << "git config commit.gpgsign false\n";
  os << "git commit -q --allow-empty -m M1\n";
  os << "git tag m1\n";
  for (std::int64_t j = 2; j <= g.main_length; ++j) {
    const auto it = by_end.find(j);
    if (it == by_end.end()) {
      os << "git commit -q --allow-empty -m M" << j << "\n";
    } else {
      const Branch& b = it->second;
      os << "git checkout -q -b feat" << j << " m" << b.start << "\n";
      for (std::int64_t i = 1; i <= b.length; ++i)
        os << "git commit -q --allow-empty -m F" << j << "-" << i << "\n";
      os << "git checkout -q main\n";
      os << "git merge -q --no-ff -m M" << j << " feat" << j << "\n";
    }
    os << "git tag m" << j << "\n";
  }
  return os.str();
}

}  // namespace gitgraph
