#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace locount {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Simple undirected graph over dense vertex indices [0, n). Adjacency lists
// are kept sorted; duplicate edges are collapsed and self-loops rejected.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  int add_vertex() {
    adj_.emplace_back();
    return vertex_count() - 1;
  }

  void ensure_vertex(int v) {
    if (v >= vertex_count()) adj_.resize(v + 1);
  }

  // Returns false if the edge was already present.
  bool add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    check_vertex(u);
    check_vertex(v);
    if (!insert_sorted(adj_[u], v)) return false;
    insert_sorted(adj_[v], u);
    ++edge_count_;
    return true;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<int>& neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

  int min_degree() const {
    int m = vertex_count() == 0 ? 0 : degree(0);
    for (int v = 1; v < vertex_count(); ++v) m = std::min(m, degree(v));
    return m;
  }

  bool connected() const {
    int n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj_[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    return reached == n;
  }

  const std::string& label(int v) const {
    static const std::string empty;
    if (v < static_cast<int>(external_names.size())) return external_names[v];
    return empty;
  }

  // Dense index -> original label, filled by the parsers; empty for
  // programmatically built graphs.
  std::vector<std::string> external_names;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex index");
  }

  static bool insert_sorted(std::vector<int>& vec, int x) {
    auto it = std::lower_bound(vec.begin(), vec.end(), x);
    if (it != vec.end() && *it == x) return false;
    vec.insert(it, x);
    return true;
  }

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

namespace detail {

// Strips '#' comments and splits a line into whitespace-separated tokens.
inline std::vector<std::string> tokenize_line(const std::string& raw) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
  std::istringstream iss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace detail

// Parses an edge-list document: one edge per line as two whitespace-separated
// labels, '#' starts a comment. Labels are mapped to dense indices in
// first-seen order.
inline Graph parse_graph(const std::string& text) {
  Graph g;
  std::map<std::string, int> ids;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, g.vertex_count());
    if (inserted) {
      g.add_vertex();
      g.external_names.push_back(label);
    }
    return it->second;
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = detail::tokenize_line(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two endpoint labels");
    if (tokens[0] == tokens[1])
      throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
    // two statements: argument evaluation order must not decide the ids
    int u = intern(tokens[0]);
    int v = intern(tokens[1]);
    g.add_edge(u, v);
  }
  return g;
}

// A graph together with a total vertex order. order[i] is the i-th vertex,
// position is the inverse permutation.
struct OrderedGraph {
  Graph graph;
  std::vector<int> order;
  std::vector<int> position;

  OrderedGraph() = default;
  OrderedGraph(Graph g, std::vector<int> ord) : graph(std::move(g)), order(std::move(ord)) {
    position.assign(order.size(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) position[order[i]] = i;
    for (int p : position)
      if (p < 0) throw std::invalid_argument("order is not a permutation");
  }

  int max_left_degree() const {
    int m = 0;
    for (int v = 0; v < graph.vertex_count(); ++v) {
      int deg = 0;
      for (int u : graph.neighbours(v))
        if (position[u] < position[v]) ++deg;
      m = std::max(m, deg);
    }
    return m;
  }
};

// Neighbours of v that precede it in the order.
inline std::vector<int> left_neighbourhood(const OrderedGraph& og, int v) {
  if (v < 0 || v >= og.graph.vertex_count()) throw std::out_of_range("vertex index");
  std::vector<int> result;
  for (int u : og.graph.neighbours(v))
    if (og.position[u] < og.position[v]) result.push_back(u);
  return result;
}

inline std::vector<int> closed_left_neighbourhood(const OrderedGraph& og, int v) {
  auto result = left_neighbourhood(og, v);
  result.insert(std::lower_bound(result.begin(), result.end(), v), v);
  return result;
}

// N^-[X]: union of closed left neighbourhoods over X, plus X itself. Sorted.
inline std::vector<int> closed_left_neighbourhood(const OrderedGraph& og,
                                                  const std::vector<int>& xs) {
  std::set<int> acc(xs.begin(), xs.end());
  for (int v : xs)
    for (int u : left_neighbourhood(og, v)) acc.insert(u);
  return {acc.begin(), acc.end()};
}

// Smallest-last peeling; among minimum-degree vertices the lowest index is
// removed first. The returned order is the reverse of the removal sequence,
// so every vertex has at most degeneracy(g) neighbours preceding it.
inline OrderedGraph degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::set<int>> buckets(max_deg + 1);
  for (int v = 0; v < n; ++v) buckets[deg[v]].insert(v);

  std::vector<char> removed(n, 0);
  std::vector<int> removal;
  removal.reserve(n);
  int cursor = 0;
  for (int step = 0; step < n; ++step) {
    cursor = std::min(cursor, max_deg);
    while (buckets[cursor].empty()) ++cursor;
    int v = *buckets[cursor].begin();
    buckets[cursor].erase(buckets[cursor].begin());
    removed[v] = 1;
    removal.push_back(v);
    for (int u : g.neighbours(v)) {
      if (removed[u]) continue;
      buckets[deg[u]].erase(u);
      --deg[u];
      buckets[deg[u]].insert(u);
    }
    cursor = std::max(0, cursor - 1);
  }
  std::reverse(removal.begin(), removal.end());
  return OrderedGraph(g, std::move(removal));
}

inline int degeneracy(const Graph& g) { return degeneracy_order(g).max_left_degree(); }

// Partition of T by exact trace N(t) ∩ S. Keys are canonical sorted tuples.
struct NeighbourhoodClasses {
  std::map<std::vector<int>, std::vector<int>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }
};

inline NeighbourhoodClasses neighbourhood_classes(const Graph& g,
                                                  const std::vector<int>& S,
                                                  const std::vector<int>& T) {
  std::set<int> s_set(S.begin(), S.end());
  for (int t : T)
    if (s_set.count(t)) throw std::invalid_argument("S and T overlap");
  NeighbourhoodClasses result;
  for (int t : T) {
    std::vector<int> trace;
    for (int u : g.neighbours(t))
      if (s_set.count(u)) trace.push_back(u);
    result.classes[trace].push_back(t);
  }
  return result;
}

}  // namespace locount
