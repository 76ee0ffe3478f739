#include "redchev/fgraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "redchev/encoding.hpp"

namespace redchev {

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : components) {
    if (!first) os << " ";
    os << c.cycle_len << ":[";
    for (size_t i = 0; i < c.trees.size(); ++i) {
      if (i) os << ",";
      os << c.trees[i];
    }
    os << "]";
    first = false;
  }
  return os.str();
}

FunctionalGraph build_graph(const std::function<Point(const Point&)>& f,
                            const std::vector<Point>& domain) {
  std::unordered_map<uint64_t, uint32_t> index;
  auto key = [](const Point& p) {
    return p.is_inf() ? ~uint64_t{0} : p.value().index();
  };
  for (size_t i = 0; i < domain.size(); ++i) {
    index[key(domain[i])] = static_cast<uint32_t>(i);
  }
  FunctionalGraph g;
  g.succ.resize(domain.size());
  g.labels.resize(domain.size());
  for (size_t i = 0; i < domain.size(); ++i) {
    Point img = f(domain[i]);
    auto it = index.find(key(img));
    if (it == index.end()) {
      throw std::domain_error("build_graph: the map leaves the domain at " +
                              point_string(domain[i]) + " -> " +
                              point_string(img));
    }
    g.succ[i] = it->second;
    g.labels[i] = point_string(domain[i]);
  }
  return g;
}

namespace {

// Nodes with a positive in-degree after repeatedly peeling indegree-0
// nodes are exactly the cycle nodes.
std::vector<bool> cycle_nodes(const FunctionalGraph& g) {
  size_t n = g.size();
  std::vector<uint32_t> indeg(n, 0);
  for (uint32_t s : g.succ) ++indeg[s];
  std::vector<uint32_t> stack;
  for (uint32_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) stack.push_back(i);
  }
  std::vector<bool> on_cycle(n, true);
  while (!stack.empty()) {
    uint32_t v = stack.back();
    stack.pop_back();
    on_cycle[v] = false;
    uint32_t s = g.succ[v];
    if (--indeg[s] == 0) stack.push_back(s);
  }
  return on_cycle;
}

// AHU encoding of the tree of non-cycle predecessors rooted at each cycle
// node; iterative post-order so deep tails cannot overflow the stack.
std::vector<std::string> tree_encodings(const FunctionalGraph& g,
                                        const std::vector<bool>& on_cycle) {
  size_t n = g.size();
  std::vector<std::vector<uint32_t>> children(n);
  for (uint32_t v = 0; v < n; ++v) {
    if (!on_cycle[v]) children[g.succ[v]].push_back(v);
  }
  std::vector<std::string> enc(n);
  std::vector<std::pair<uint32_t, bool>> stack;
  for (uint32_t root = 0; root < n; ++root) {
    if (!on_cycle[root]) continue;
    stack.emplace_back(root, false);
    while (!stack.empty()) {
      auto [v, expanded] = stack.back();
      stack.pop_back();
      if (!expanded) {
        stack.emplace_back(v, true);
        for (uint32_t c : children[v]) stack.emplace_back(c, false);
      } else {
        std::vector<std::string> parts;
        parts.reserve(children[v].size());
        for (uint32_t c : children[v]) parts.push_back(enc[c]);
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) s += p;
        s += ")";
        enc[v] = std::move(s);
      }
    }
  }
  return enc;
}

// Lexicographically least rotation of a token sequence.
std::vector<std::string> least_rotation(std::vector<std::string> t) {
  size_t n = t.size();
  if (n <= 1) return t;
  if (std::all_of(t.begin(), t.end(),
                  [&](const std::string& s) { return s == t[0]; })) {
    return t;
  }
  size_t best = 0;
  for (size_t c = 1; c < n; ++c) {
    for (size_t i = 0; i < n; ++i) {
      const std::string& a = t[(best + i) % n];
      const std::string& b = t[(c + i) % n];
      if (a != b) {
        if (b < a) best = c;
        break;
      }
    }
  }
  std::rotate(t.begin(), t.begin() + best, t.end());
  return t;
}

}  // namespace

CanonicalForm canonical_form(const FunctionalGraph& g) {
  std::vector<bool> on_cycle = cycle_nodes(g);
  std::vector<std::string> enc = tree_encodings(g, on_cycle);
  std::vector<bool> visited(g.size(), false);
  CanonicalForm form;
  for (uint32_t i = 0; i < g.size(); ++i) {
    if (!on_cycle[i] || visited[i]) continue;
    std::vector<std::string> trees;
    uint32_t v = i;
    do {
      visited[v] = true;
      trees.push_back(enc[v]);
      v = g.succ[v];
    } while (v != i);
    GraphComponent comp;
    comp.cycle_len = trees.size();
    comp.trees = least_rotation(std::move(trees));
    form.components.push_back(std::move(comp));
  }
  std::sort(form.components.begin(), form.components.end());
  return form;
}

bool iso_check(const FunctionalGraph& a, const FunctionalGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

FunctionalGraph power_map_graph(const Extension& E, uint64_t n) {
  if (n == 0) throw std::domain_error("power_map_graph: n must be positive");
  std::vector<Point> domain;
  for (const Elem& u : E.mu_elements()) domain.push_back(Point::finite(u));
  return build_graph([n](const Point& p) { return proj_pow(p, n); }, domain);
}

std::string to_dot(const FunctionalGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph functional_graph {\n";
  for (size_t i = 0; i < g.size(); ++i) {
    os << "  " << quote(g.labels[i]) << " -> " << quote(g.labels[g.succ[i]])
       << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string cycle_stats(const FunctionalGraph& g) {
  std::vector<bool> on_cycle = cycle_nodes(g);
  std::vector<bool> visited(g.size(), false);
  std::map<uint64_t, uint64_t> cycles;
  for (uint32_t i = 0; i < g.size(); ++i) {
    if (!on_cycle[i] || visited[i]) continue;
    uint64_t len = 0;
    uint32_t v = i;
    do {
      visited[v] = true;
      ++len;
      v = g.succ[v];
    } while (v != i);
    ++cycles[len];
  }
  // depth of a tail node = steps to reach a cycle
  std::map<uint64_t, uint64_t> tails;
  std::vector<uint64_t> depth(g.size(), 0);
  for (uint32_t i = 0; i < g.size(); ++i) {
    if (on_cycle[i] || depth[i] != 0) continue;
    std::vector<uint32_t> path;
    uint32_t v = i;
    while (!on_cycle[v] && depth[v] == 0) {
      path.push_back(v);
      v = g.succ[v];
    }
    uint64_t d = on_cycle[v] ? 0 : depth[v];
    for (size_t j = path.size(); j-- > 0;) {
      depth[path[j]] = ++d;
    }
  }
  for (uint32_t i = 0; i < g.size(); ++i) {
    if (!on_cycle[i]) ++tails[depth[i]];
  }
  std::ostringstream os;
  os << "cycles: ";
  bool first = true;
  for (const auto& [len, count] : cycles) {
    if (!first) os << ", ";
    os << len << "x" << count;
    first = false;
  }
  os << "; tails: ";
  if (tails.empty()) {
    os << "none";
  } else {
    first = true;
    for (const auto& [d, count] : tails) {
      if (!first) os << ", ";
      os << d << "x" << count;
      first = false;
    }
  }
  return os.str();
}

bool all_cycles(const FunctionalGraph& g) {
  std::vector<bool> on_cycle = cycle_nodes(g);
  return std::all_of(on_cycle.begin(), on_cycle.end(),
                     [](bool b) { return b; });
}

}  // namespace redchev
