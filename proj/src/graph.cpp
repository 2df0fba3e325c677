#include "gitgraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gitgraph {

namespace {

void append_i64(std::string& out, std::int64_t v) {
  unsigned char buf[8];
  auto u = static_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(u >> (8 * i));
  out.append(reinterpret_cast<const char*>(buf), 8);
}

// Prefix-sum tree over labels 1..n, used for the rank formula in the
// bijection.
class FenwickTree {
 public:
  explicit FenwickTree(std::int64_t n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(std::int64_t i, std::int64_t v) {
    for (; i < static_cast<std::int64_t>(tree_.size()); i += i & -i) tree_[static_cast<std::size_t>(i)] += v;
  }

  std::int64_t prefix(std::int64_t i) const {
    std::int64_t s = 0;
    for (; i > 0; i -= i & -i) s += tree_[static_cast<std::size_t>(i)];
    return s;
  }

 private:
  std::vector<std::int64_t> tree_;
};

}  // namespace

std::int64_t GitGraph::size() const {
  std::int64_t n = main_length;
  for (const auto& b : branches) n += b.length;
  return n;
}

std::int64_t GitGraph::free_count() const {
  return main_length - static_cast<std::int64_t>(branches.size());
}

std::optional<std::string> validate(const GitGraph& g) {
  if (g.main_length < 0) return "main branch length is negative";
  if (g.main_length == 0 && !g.branches.empty())
    return "size-0 main branch cannot carry feature branches";
  std::set<std::int64_t> ends;
  for (const auto& b : g.branches) {
    std::ostringstream os;
    if (b.end < 2 || b.end > g.main_length) {
      os << "branch end " << b.end << " outside 2.." << g.main_length;
      return os.str();
    }
    if (b.start < 1 || b.start >= b.end) {
      os << "branch start " << b.start << " outside 1.." << (b.end - 1);
      return os.str();
    }
    if (b.length < 1) {
      os << "branch into " << b.end << " has empty white chain";
      return os.str();
    }
    if (!ends.insert(b.end).second) {
      os << "two feature branches end on vertex " << b.end;
      return os.str();
    }
  }
  return std::nullopt;
}

std::string canonical_encode(const GitGraph& g) {
  std::vector<Branch> branches = g.branches;
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return a.end < b.end; });
  std::string out;
  out.reserve(8 * (1 + 3 * branches.size()));
  append_i64(out, g.main_length);
  for (const auto& b : branches) {
    append_i64(out, b.end);
    append_i64(out, b.start);
    append_i64(out, b.length);
  }
  return out;
}

std::int64_t Cyclarium::label_count() const {
  std::int64_t k = 0;
  for (const auto& cyc : cycles) k += static_cast<std::int64_t>(cyc.size());
  return k;
}

std::int64_t Cyclarium::size() const {
  std::int64_t n = label_count();
  for (const auto& cyc : cycles)
    for (const auto& v : cyc) n += v.chain;
  return n;
}

std::optional<std::string> validate(const Cyclarium& c) {
  const std::int64_t k = c.label_count();
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (const auto& cyc : c.cycles) {
    if (cyc.empty()) return "empty cycle";
    std::int64_t max_label = 0;
    for (const auto& v : cyc) max_label = std::max(max_label, v.label);
    for (const auto& v : cyc) {
      if (v.label < 1 || v.label > k) return "label outside 1..k";
      if (seen[static_cast<std::size_t>(v.label)]) return "duplicate label";
      seen[static_cast<std::size_t>(v.label)] = true;
      if (v.label == max_label && v.chain != 0)
        return "cycle maximum carries a chain";
      if (v.label != max_label && v.chain < 1)
        return "non-maximum vertex without a chain";
    }
  }
  return std::nullopt;
}

namespace {

// Rotate a cycle so it begins at its maximum label.
std::vector<Cyclarium::Vertex> path_of_cycle(const std::vector<Cyclarium::Vertex>& cyc) {
  std::size_t max_pos = 0;
  for (std::size_t i = 1; i < cyc.size(); ++i)
    if (cyc[i].label > cyc[max_pos].label) max_pos = i;
  std::vector<Cyclarium::Vertex> path;
  path.reserve(cyc.size());
  for (std::size_t i = 0; i < cyc.size(); ++i) path.push_back(cyc[(max_pos + i) % cyc.size()]);
  return path;
}

}  // namespace

std::string canonical_encode(const Cyclarium& c) {
  std::vector<std::vector<Cyclarium::Vertex>> paths;
  paths.reserve(c.cycles.size());
  for (const auto& cyc : c.cycles) paths.push_back(path_of_cycle(cyc));
  std::sort(paths.begin(), paths.end(),
            [](const auto& a, const auto& b) { return a[0].label < b[0].label; });
  std::string out;
  append_i64(out, c.label_count());
  for (const auto& p : paths) {
    append_i64(out, static_cast<std::int64_t>(p.size()));
    for (const auto& v : p) {
      append_i64(out, v.label);
      append_i64(out, v.chain);
    }
  }
  return out;
}

GitGraph cyclarium_to_git_graph(const Cyclarium& c) {
  if (auto why = validate(c)) throw std::invalid_argument("invalid cyclarium: " + *why);

  std::vector<std::vector<Cyclarium::Vertex>> paths;
  paths.reserve(c.cycles.size());
  for (const auto& cyc : c.cycles) paths.push_back(path_of_cycle(cyc));
  std::sort(paths.begin(), paths.end(),
            [](const auto& a, const auto& b) { return a[0].label < b[0].label; });

  const std::int64_t k = c.label_count();
  std::vector<std::int64_t> label(static_cast<std::size_t>(k) + 1, 0);
  std::vector<std::int64_t> chain(static_cast<std::size_t>(k) + 1, 0);
  std::int64_t pos = 0;
  for (const auto& p : paths) {
    for (const auto& v : p) {
      ++pos;
      label[static_cast<std::size_t>(pos)] = v.label;
      chain[static_cast<std::size_t>(pos)] = v.chain;
    }
  }

  // rank[j] = |{p <= j : l_p <= l_j}|
  FenwickTree tree(k);
  std::vector<std::int64_t> rank(static_cast<std::size_t>(k) + 1, 0);
  for (std::int64_t j = 1; j <= k; ++j) {
    tree.add(label[static_cast<std::size_t>(j)], 1);
    rank[static_cast<std::size_t>(j)] = tree.prefix(label[static_cast<std::size_t>(j)]);
  }

  GitGraph g;
  g.main_length = k;
  for (std::int64_t j = k; j >= 1; --j) {
    const std::int64_t len = chain[static_cast<std::size_t>(j)];
    if (len == 0) continue;
    const std::int64_t r = rank[static_cast<std::size_t>(j)];
    assert(r <= j - 1);  // the cycle maximum sits left of j
    g.branches.push_back(Branch{r, j, len});
  }
  std::reverse(g.branches.begin(), g.branches.end());
  return g;
}

}  // namespace gitgraph
