#pragma once

// Line-based text formats for posets, diagrams, truncated simplicial sets
// and functor presentations. '#' starts a comment; tokens are separated by
// whitespace. Every parse failure throws Error with ErrorKind::Parse and the
// offending line number.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "posetcat/colimit.hpp"
#include "posetcat/comma.hpp"
#include "posetcat/poset.hpp"
#include "posetcat/simplicial.hpp"

namespace posetcat {

struct NamedPoset {
  std::string name;
  FinPoset poset;
};

struct NamedDiagram {
  std::string name;
  PosetDiagram diagram;
};

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(std::move(w));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] inline void parse_error(const Line& line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line.number) + ": " + what);
}

inline void expect_arity(const Line& line, std::size_t at_least, bool exact = true) {
  if (exact ? line.tokens.size() != at_least : line.tokens.size() < at_least) {
    parse_error(line, "wrong number of fields for '" + line.tokens[0] + "'");
  }
}

inline int parse_int(const Line& line, const std::string& token) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    parse_error(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) parse_error(line, "expected an integer, got '" + token + "'");
  return value;
}

/// Parses a poset body starting at lines[pos] (the "poset" header) and stops
/// before the first line that is not elem/le.
inline NamedPoset parse_poset_block(const std::vector<Line>& lines, std::size_t& pos) {
  const Line& header = lines.at(pos);
  if (header.tokens[0] != "poset") parse_error(header, "expected 'poset <name>'");
  expect_arity(header, 2);
  NamedPoset out{header.tokens[1], {}};
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, int> known;
  for (++pos; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    const std::string& kw = line.tokens[0];
    if (kw == "elem") {
      expect_arity(line, 2, false);
      for (std::size_t k = 1; k < line.tokens.size(); ++k) {
        if (!known.emplace(line.tokens[k], 0).second) parse_error(line, "duplicate element '" + line.tokens[k] + "'");
        elements.push_back(line.tokens[k]);
      }
    } else if (kw == "le") {
      expect_arity(line, 3);
      for (int k = 1; k <= 2; ++k)
        if (!known.count(line.tokens[k])) parse_error(line, "unknown element '" + line.tokens[k] + "'");
      pairs.emplace_back(line.tokens[1], line.tokens[2]);
    } else {
      break;
    }
  }
  try {
    out.poset = make_poset(std::move(elements), pairs);
  } catch (const Error& e) {
    parse_error(header, std::string("poset '") + out.name + "': " + e.what());
  }
  return out;
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// --- posets ----------------------------------------------------------------

inline NamedPoset parse_poset(const std::string& text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty poset file");
  std::size_t pos = 0;
  NamedPoset out = detail::parse_poset_block(lines, pos);
  if (pos != lines.size()) detail::parse_error(lines[pos], "unexpected '" + lines[pos].tokens[0] + "'");
  return out;
}

inline NamedPoset load_poset(const std::filesystem::path& path) { return parse_poset(read_file(path)); }

/// Writes elements in order and the covering pairs.
inline std::string write_poset(const std::string& name, const FinPoset& p) {
  std::ostringstream out;
  out << "poset " << name << "\n";
  if (!p.empty()) {
    out << "elem";
    for (const auto& e : p.elements()) out << " " << e;
    out << "\n";
  }
  for (auto [a, b] : p.covers()) out << "le " << p.element(a) << " " << p.element(b) << "\n";
  return out.str();
}

// --- diagrams --------------------------------------------------------------

/// Node references resolve, in order, to: an inline poset block of the same
/// file, the ordinal "[n]", or a poset file relative to base_dir.
inline NamedDiagram parse_diagram(const std::string& text, const std::filesystem::path& base_dir = ".") {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty diagram file");
  if (lines[0].tokens[0] != "diagram") detail::parse_error(lines[0], "expected 'diagram <name>'");
  detail::expect_arity(lines[0], 2);
  NamedDiagram out{lines[0].tokens[1], {}};

  std::map<std::string, PosetRef> inline_posets;
  struct PendingNode {
    detail::Line line;
  };
  struct PendingEdge {
    detail::Line line;
    std::vector<std::pair<std::string, std::string>> assignments;
  };
  std::vector<PendingNode> nodes;
  std::vector<PendingEdge> edges;
  std::map<std::string, std::size_t> edge_index;

  for (std::size_t pos = 1; pos < lines.size();) {
    const auto& line = lines[pos];
    const std::string& kw = line.tokens[0];
    if (kw == "poset") {
      NamedPoset p = detail::parse_poset_block(lines, pos);
      if (!inline_posets.emplace(p.name, share(std::move(p.poset))).second) {
        detail::parse_error(line, "duplicate inline poset '" + p.name + "'");
      }
      continue;
    }
    if (kw == "node") {
      detail::expect_arity(line, 3);
      nodes.push_back({line});
    } else if (kw == "edge") {
      detail::expect_arity(line, 4);
      if (!edge_index.emplace(line.tokens[1], edges.size()).second) {
        detail::parse_error(line, "duplicate edge '" + line.tokens[1] + "'");
      }
      edges.push_back({line, {}});
    } else if (kw == "map") {
      detail::expect_arity(line, 4);
      auto it = edge_index.find(line.tokens[1]);
      if (it == edge_index.end()) detail::parse_error(line, "map for undeclared edge '" + line.tokens[1] + "'");
      edges[it->second].assignments.emplace_back(line.tokens[2], line.tokens[3]);
    } else {
      detail::parse_error(line, "unknown directive '" + kw + "'");
    }
    ++pos;
  }

  auto resolve = [&](const detail::Line& line) -> PosetRef {
    const std::string& ref = line.tokens[2];
    if (auto it = inline_posets.find(ref); it != inline_posets.end()) return it->second;
    if (ref.size() >= 3 && ref.front() == '[' && ref.back() == ']') {
      const int n = detail::parse_int(line, ref.substr(1, ref.size() - 2));
      if (n < 0) detail::parse_error(line, "ordinal must be non-negative");
      return share(ordinal_poset(n));
    }
    try {
      return share(load_poset(base_dir / ref).poset);
    } catch (const Error& e) {
      detail::parse_error(line, "node '" + line.tokens[1] + "': " + e.what());
    }
  };
  for (const auto& n : nodes) {
    try {
      out.diagram.add_node(n.line.tokens[1], resolve(n.line));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      detail::parse_error(n.line, e.what());
    }
  }
  for (const auto& e : edges) {
    const auto src = out.diagram.node_index(e.line.tokens[2]);
    const auto dst = out.diagram.node_index(e.line.tokens[3]);
    if (!src || !dst) detail::parse_error(e.line, "edge '" + e.line.tokens[1] + "' has an unknown endpoint");
    const FinPoset& from = out.diagram.node(*src);
    const FinPoset& to = out.diagram.node(*dst);
    std::vector<int> values(from.size(), -1);
    for (const auto& [a, b] : e.assignments) {
      const auto x = from.index_of(a);
      const auto y = to.index_of(b);
      if (!x || !y) detail::parse_error(e.line, "edge '" + e.line.tokens[1] + "' maps unknown element " + a + " -> " + b);
      if (values[*x] != -1 && values[*x] != *y) {
        detail::parse_error(e.line, "edge '" + e.line.tokens[1] + "' maps " + a + " twice");
      }
      values[*x] = *y;
    }
    for (int x = 0; x < from.size(); ++x)
      if (values[x] == -1) {
        detail::parse_error(e.line, "edge '" + e.line.tokens[1] + "' leaves " + from.element(x) + " unmapped");
      }
    try {
      out.diagram.add_edge(e.line.tokens[1], *src, *dst,
                           MonotoneMap(out.diagram.node_ref(*src), out.diagram.node_ref(*dst), std::move(values)));
    } catch (const Error& err) {
      detail::parse_error(e.line, "edge '" + e.line.tokens[1] + "': " + err.what());
    }
  }
  return out;
}

inline NamedDiagram load_diagram(const std::filesystem::path& path) {
  return parse_diagram(read_file(path), path.parent_path().empty() ? "." : path.parent_path());
}

// --- simplicial sets -------------------------------------------------------

/// Parses the tables only; identity checking is left to make_sset or the
/// continuity checker so that malformed inputs can still be diagnosed.
inline SimplicialData parse_sset_data(const std::string& text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty simplicial set file");
  const auto& header = lines[0];
  if (header.tokens[0] != "sset" || header.tokens.size() != 4 || header.tokens[2] != "trunc") {
    detail::parse_error(header, "expected 'sset <name> trunc <K>'");
  }
  SimplicialData data;
  data.name = header.tokens[1];
  data.truncation = detail::parse_int(header, header.tokens[3]);
  const int k = data.truncation;
  if (k < 0) detail::parse_error(header, "truncation must be non-negative");
  data.simplices.resize(k + 1);
  data.faces.resize(k + 1);
  data.degeneracies.resize(k + 1);
  std::vector<std::map<std::string, int>> index(k + 1);

  auto level = [&](const detail::Line& line, const std::string& token) {
    const int n = detail::parse_int(line, token);
    if (n < 0 || n > k) detail::parse_error(line, "level " + token + " outside 0.." + std::to_string(k));
    return n;
  };
  auto lookup = [&](const detail::Line& line, int n, const std::string& id) {
    auto it = index[n].find(id);
    if (it == index[n].end()) {
      detail::parse_error(line, "unknown " + std::to_string(n) + "-simplex '" + id + "'");
    }
    return it->second;
  };
  struct Pending {
    detail::Line line;
    bool face;
    int n, i;
  };
  std::vector<Pending> tables;
  for (std::size_t pos = 1; pos < lines.size(); ++pos) {
    const auto& line = lines[pos];
    const std::string& kw = line.tokens[0];
    if (kw == "simplex") {
      detail::expect_arity(line, 3);
      const int n = level(line, line.tokens[1]);
      if (!index[n].emplace(line.tokens[2], static_cast<int>(data.simplices[n].size())).second) {
        detail::parse_error(line, "duplicate " + std::to_string(n) + "-simplex '" + line.tokens[2] + "'");
      }
      data.simplices[n].push_back(line.tokens[2]);
    } else if (kw == "d" || kw == "s") {
      detail::expect_arity(line, 5);
      const int n = level(line, line.tokens[1]);
      const int i = detail::parse_int(line, line.tokens[2]);
      if (kw == "d" && (n < 1 || i < 0 || i > n)) detail::parse_error(line, "no face d_" + line.tokens[2] + " at this level");
      if (kw == "s" && (n >= k || i < 0 || i > n)) {
        detail::parse_error(line, "no degeneracy s_" + line.tokens[2] + " at this level");
      }
      tables.push_back({line, kw == "d", n, i});
    } else {
      detail::parse_error(line, "unknown directive '" + kw + "'");
    }
  }
  for (int n = 0; n <= k; ++n) {
    data.faces[n].assign(n == 0 ? 0 : n + 1, std::vector<int>(data.simplices[n].size(), -1));
    data.degeneracies[n].assign(n < k ? n + 1 : 0, std::vector<int>(data.simplices[n].size(), -1));
  }
  for (const auto& t : tables) {
    const int x = lookup(t.line, t.n, t.line.tokens[3]);
    const int y = lookup(t.line, t.face ? t.n - 1 : t.n + 1, t.line.tokens[4]);
    int& slot = (t.face ? data.faces : data.degeneracies)[t.n][t.i][x];
    if (slot != -1 && slot != y) detail::parse_error(t.line, "conflicting entry for " + t.line.tokens[3]);
    slot = y;
  }
  for (int n = 0; n <= k; ++n) {
    for (std::size_t i = 0; i < data.faces[n].size(); ++i)
      for (std::size_t x = 0; x < data.faces[n][i].size(); ++x)
        if (data.faces[n][i][x] == -1) {
          throw Error(ErrorKind::Parse, "missing d " + std::to_string(n) + " " + std::to_string(i) + " " +
                                            data.simplices[n][x]);
        }
    for (std::size_t i = 0; i < data.degeneracies[n].size(); ++i)
      for (std::size_t x = 0; x < data.degeneracies[n][i].size(); ++x)
        if (data.degeneracies[n][i][x] == -1) {
          throw Error(ErrorKind::Parse, "missing s " + std::to_string(n) + " " + std::to_string(i) + " " +
                                            data.simplices[n][x]);
        }
  }
  return data;
}

inline TruncatedSimplicialSet parse_sset(const std::string& text) { return make_sset(parse_sset_data(text)); }

inline std::string write_sset(const TruncatedSimplicialSet& x) {
  std::ostringstream out;
  out << "sset " << x.name() << " trunc " << x.truncation() << "\n";
  for (int n = 0; n <= x.truncation(); ++n)
    for (const auto& id : x.level(n)) out << "simplex " << n << " " << id << "\n";
  for (int n = 1; n <= x.truncation(); ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.level_size(n); ++s)
        out << "d " << n << " " << i << " " << x.simplex(n, s) << " " << x.simplex(n - 1, x.face(n, i, s)) << "\n";
  for (int n = 0; n < x.truncation(); ++n)
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s < x.level_size(n); ++s)
        out << "s " << n << " " << i << " " << x.simplex(n, s) << " " << x.simplex(n + 1, x.degeneracy(n, i, s))
            << "\n";
  return out.str();
}

// --- functors --------------------------------------------------------------

/// "functor inclusion", "functor product-with <poset-file>" or "functor point".
inline FunctorPresentation parse_functor(const std::string& text, const std::filesystem::path& base_dir = ".",
                                         int max_n = 8) {
  const auto lines = detail::tokenize(text);
  if (lines.size() != 1 || lines[0].tokens[0] != "functor" || lines[0].tokens.size() < 2) {
    throw Error(ErrorKind::Parse, "expected a single 'functor <family> [args]' line");
  }
  const auto& line = lines[0];
  const std::string& family = line.tokens[1];
  if (family == "inclusion") {
    detail::expect_arity(line, 2);
    return FunctorPresentation::inclusion(max_n);
  }
  if (family == "point") {
    detail::expect_arity(line, 2);
    return FunctorPresentation::point(max_n);
  }
  if (family == "product-with") {
    detail::expect_arity(line, 3);
    return FunctorPresentation::product_with(load_poset(base_dir / line.tokens[2]).poset, max_n);
  }
  detail::parse_error(line, "unknown functor family '" + family + "'");
}

inline FunctorPresentation load_functor(const std::filesystem::path& path, int max_n = 8) {
  return parse_functor(read_file(path), path.parent_path().empty() ? "." : path.parent_path(), max_n);
}

}  // namespace posetcat
