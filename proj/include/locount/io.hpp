#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "locount/graph.hpp"
#include "locount/pattern.hpp"

namespace locount {

// Pattern document: an edge-list document plus exactly one "S:" line and one
// "T:" line naming the two sides. Side lines may appear anywhere; every label
// in them must also appear in some edge (isolated pattern vertices cannot
// exist in a valid pattern anyway).
//
//   S: a b
//   T: x y z
//   a x
//   ...
inline Pattern parse_pattern(const std::string& text) {
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

  std::vector<std::string> s_labels, t_labels;
  bool saw_s = false, saw_t = false;
  int s_line = 0, t_line = 0;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = detail::tokenize_line(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "S:" || tokens[0] == "T:") {
      bool is_s = tokens[0] == "S:";
      if (is_s ? saw_s : saw_t)
        throw ParseError(line_no, std::string("duplicate ") + tokens[0] + " line");
      (is_s ? saw_s : saw_t) = true;
      (is_s ? s_line : t_line) = line_no;
      auto& side = is_s ? s_labels : t_labels;
      side.assign(tokens.begin() + 1, tokens.end());
      if (side.empty()) throw ParseError(line_no, "empty side");
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected two endpoint labels");
    if (tokens[0] == tokens[1])
      throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
    // two statements: argument evaluation order must not decide the ids
    int u = intern(tokens[0]);
    int v = intern(tokens[1]);
    g.add_edge(u, v);
  }
  if (!saw_s) throw ParseError(line_no, "missing S: line");
  if (!saw_t) throw ParseError(line_no, "missing T: line");

  auto resolve = [&](const std::vector<std::string>& labels, int at_line) {
    std::vector<int> side;
    for (const auto& label : labels) {
      auto it = ids.find(label);
      if (it == ids.end())
        throw ParseError(at_line, "label '" + label + "' appears in no edge");
      side.push_back(it->second);
    }
    return side;
  };
  return validate_pattern(g, resolve(s_labels, s_line), resolve(t_labels, t_line));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
inline Pattern load_pattern(const std::string& path) {
  return parse_pattern(read_file(path));
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  auto name = [&](int v) {
    const std::string& label = g.label(v);
    return label.empty() ? std::to_string(v) : label;
  };
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbours(u))
      if (u < v) out << name(u) << ' ' << name(v) << '\n';
  return out.str();
}

inline std::string serialize_pattern(const Pattern& p) {
  std::ostringstream out;
  auto name = [&](int v) {
    const std::string& label = p.graph.label(v);
    return label.empty() ? std::to_string(v) : label;
  };
  out << "S:";
  for (int v : p.S) out << ' ' << name(v);
  out << "\nT:";
  for (int v : p.T) out << ' ' << name(v);
  out << '\n';
  out << serialize_graph(p.graph);
  return out.str();
}

}  // namespace locount
