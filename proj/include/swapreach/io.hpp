#pragma once

// Line-oriented text formats for instances and certificates.
//
//   agents: <n>
//   objects: <id> <id> ...
//   names: <agent>=<name> ...            (optional)
//   edges: <i>-<j> ...   |   graph: path|clique
//   assign: <agent>=<object> ...
//   pref <agent>: <object> ...           (most preferred first)
//   target: agent=<agent> object=<object>
//
// Agents are numbered from 1. '#' starts a comment. Certificates hold one
// "i j" pair per line.

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

inline long long parse_int(std::string_view s, std::size_t line, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) parse_fail(line, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  return v;
}

inline std::pair<std::string_view, std::string_view> split_pair(std::string_view tok, char sep, std::size_t line) {
  auto pos = tok.find(sep);
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == tok.size())
    parse_fail(line, "malformed token '" + std::string(tok) + "'");
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

inline bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '=' || c == '#' || c == '\n' || c == '\r') return false;
  return true;
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  using namespace detail;
  std::optional<std::size_t> n;
  std::size_t objects_line = 0;
  std::vector<std::string> objects;
  std::vector<std::pair<std::size_t, std::string>> edge_lines, assign_lines, name_lines;
  std::map<long long, std::pair<std::size_t, std::string>> pref_lines;
  std::optional<std::pair<std::size_t, std::string>> graph_line, target_line;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_fail(line_no, "expected '<key>: ...'");
    std::string_view key = trim(line.substr(0, colon));
    std::string rest(trim(line.substr(colon + 1)));
    if (key == "agents") {
      if (n) parse_fail(line_no, "duplicate 'agents' line");
      long long v = parse_int(rest, line_no, "agent count");
      if (v <= 0) parse_fail(line_no, "agent count must be positive");
      n = static_cast<std::size_t>(v);
    } else if (key == "objects") {
      if (objects_line) parse_fail(line_no, "duplicate 'objects' line");
      objects_line = line_no;
      objects = split_ws(rest);
      for (const auto& o : objects)
        if (!valid_identifier(o)) parse_fail(line_no, "invalid object identifier '" + o + "'");
    } else if (key == "edges") {
      edge_lines.emplace_back(line_no, rest);
    } else if (key == "graph") {
      if (graph_line) parse_fail(line_no, "duplicate 'graph' line");
      graph_line.emplace(line_no, rest);
    } else if (key == "assign") {
      assign_lines.emplace_back(line_no, rest);
    } else if (key == "names") {
      name_lines.emplace_back(line_no, rest);
    } else if (key == "target") {
      if (target_line) parse_fail(line_no, "duplicate 'target' line");
      target_line.emplace(line_no, rest);
    } else if (key.substr(0, 4) == "pref" && key.size() > 4 && (key[4] == ' ' || key[4] == '\t')) {
      long long a = parse_int(trim(key.substr(5)), line_no, "agent in 'pref'");
      if (!pref_lines.emplace(a, std::make_pair(line_no, rest)).second)
        parse_fail(line_no, "duplicate preference list for agent " + std::to_string(a));
    } else {
      parse_fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!n) throw InputError("missing 'agents' line");
  if (!objects_line) throw InputError("missing 'objects' line");
  if (objects.size() != *n)
    parse_fail(objects_line, "expected " + std::to_string(*n) + " objects, got " + std::to_string(objects.size()));
  if (!target_line) throw InputError("missing 'target' line");
  if (graph_line && !edge_lines.empty()) parse_fail(graph_line->first, "'graph' and 'edges' are mutually exclusive");

  std::map<std::string, Object> object_of;
  for (std::size_t k = 0; k < objects.size(); ++k)
    if (!object_of.emplace(objects[k], object_at(k)).second)
      parse_fail(objects_line, "duplicate object identifier '" + objects[k] + "'");

  auto agent_of = [&](std::string_view tok, std::size_t line) {
    long long a = parse_int(tok, line, "agent");
    if (a < 1 || static_cast<std::size_t>(a) > *n) parse_fail(line, "agent " + std::string(tok) + " out of range");
    return agent_at(static_cast<std::size_t>(a - 1));
  };
  auto lookup_object = [&](std::string_view tok, std::size_t line) {
    auto it = object_of.find(std::string(tok));
    if (it == object_of.end()) parse_fail(line, "unknown object '" + std::string(tok) + "'");
    return it->second;
  };

  InstanceSpec spec;
  spec.objects = objects;

  std::vector<std::optional<Object>> initial(*n);
  for (const auto& [ln, text] : assign_lines) {
    for (const auto& tok : split_ws(text)) {
      auto [a, o] = split_pair(tok, '=', ln);
      Agent ag = agent_of(a, ln);
      if (initial[idx(ag)]) parse_fail(ln, "agent " + std::string(a) + " assigned twice");
      initial[idx(ag)] = lookup_object(o, ln);
    }
  }
  for (std::size_t a = 0; a < *n; ++a) {
    if (!initial[a]) throw InputError("agent " + std::to_string(a + 1) + " has no initial object");
    spec.initial.push_back(*initial[a]);
  }

  if (graph_line) {
    std::string kind(trim(graph_line->second));
    if (kind == "path") {
      for (std::size_t a = 0; a + 1 < *n; ++a) spec.edges.emplace_back(agent_at(a), agent_at(a + 1));
    } else if (kind == "clique") {
      for (std::size_t a = 0; a < *n; ++a)
        for (std::size_t b = a + 1; b < *n; ++b) spec.edges.emplace_back(agent_at(a), agent_at(b));
    } else {
      parse_fail(graph_line->first, "unknown graph shorthand '" + kind + "' (expected path or clique)");
    }
  }
  for (const auto& [ln, text] : edge_lines) {
    for (const auto& tok : split_ws(text)) {
      auto [u, v] = split_pair(tok, '-', ln);
      spec.edges.emplace_back(agent_of(u, ln), agent_of(v, ln));
    }
  }

  spec.prefs.assign(*n, {});
  for (const auto& [a, entry] : pref_lines) {
    const auto& [ln, text] = entry;
    if (a < 1 || static_cast<std::size_t>(a) > *n) parse_fail(ln, "agent " + std::to_string(a) + " out of range");
    auto& list = spec.prefs[static_cast<std::size_t>(a - 1)];
    for (const auto& tok : split_ws(text)) list.push_back(lookup_object(tok, ln));
  }
  // An omitted initial object is understood to sit at the bottom of the list.
  for (std::size_t a = 0; a < *n; ++a) {
    auto& list = spec.prefs[a];
    if (std::find(list.begin(), list.end(), spec.initial[a]) == list.end()) list.push_back(spec.initial[a]);
  }

  if (!name_lines.empty()) {
    spec.agent_names.assign(*n, "");
    for (const auto& [ln, text] : name_lines) {
      for (const auto& tok : split_ws(text)) {
        auto [a, name] = split_pair(tok, '=', ln);
        Agent ag = agent_of(a, ln);
        if (!spec.agent_names[idx(ag)].empty()) parse_fail(ln, "agent " + std::string(a) + " named twice");
        spec.agent_names[idx(ag)] = std::string(name);
      }
    }
    for (std::size_t a = 0; a < *n; ++a)
      if (spec.agent_names[a].empty()) throw InputError("agent " + std::to_string(a + 1) + " has no name");
  }

  {
    const auto& [ln, text] = *target_line;
    std::optional<Agent> ta;
    std::optional<Object> to;
    for (const auto& tok : split_ws(text)) {
      auto [k, v] = split_pair(tok, '=', ln);
      if (k == "agent") ta = agent_of(v, ln);
      else if (k == "object") to = lookup_object(v, ln);
      else parse_fail(ln, "unknown target field '" + std::string(k) + "'");
    }
    if (!ta || !to) parse_fail(ln, "target needs agent=<agent> and object=<object>");
    spec.target_agent = *ta;
    spec.target_object = *to;
  }

  try {
    return Instance::create(std::move(spec));
  } catch (const InputError& e) {
    throw InputError(std::string("invalid instance: ") + e.what());
  }
}

inline Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  try {
    return parse_instance(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline bool is_path_1_to_n(const Instance& inst) {
  const auto& e = inst.edges();
  if (e.size() + 1 != inst.agent_count()) return false;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] != std::make_pair(agent_at(k), agent_at(k + 1))) return false;
  return true;
}

inline bool is_complete_graph(const Instance& inst) {
  std::size_t n = inst.agent_count();
  return inst.edge_count() == n * (n - 1) / 2;
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const std::size_t n = inst.agent_count();
  out << "agents: " << n << '\n';
  out << "objects:";
  for (const auto& o : inst.object_names()) out << ' ' << o;
  out << '\n';
  if (inst.has_agent_names()) {
    out << "names:";
    for (std::size_t a = 0; a < n; ++a) out << ' ' << a + 1 << '=' << inst.agent_names()[a];
    out << '\n';
  }
  if (n > 2 && is_path_1_to_n(inst)) {
    out << "graph: path\n";
  } else if (n > 2 && is_complete_graph(inst)) {
    out << "graph: clique\n";
  } else {
    out << "edges:";
    for (auto [u, v] : inst.edges()) out << ' ' << idx(u) + 1 << '-' << idx(v) + 1;
    out << '\n';
  }
  out << "assign:";
  for (std::size_t a = 0; a < n; ++a) out << ' ' << a + 1 << '=' << inst.object_name(inst.initial(agent_at(a)));
  out << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    out << "pref " << a + 1 << ':';
    for (Object o : inst.prefs(agent_at(a))) out << ' ' << inst.object_name(o);
    out << '\n';
  }
  out << "target: agent=" << idx(inst.target_agent()) + 1 << " object=" << inst.object_name(inst.target_object())
      << '\n';
  return out.str();
}

inline SwapSequence parse_certificate(std::istream& in) {
  using namespace detail;
  SwapSequence seq;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(trim(line));
    if (toks.empty()) continue;
    if (toks.size() != 2) parse_fail(line_no, "expected two agents per line");
    long long i = parse_int(toks[0], line_no, "agent");
    long long j = parse_int(toks[1], line_no, "agent");
    if (i < 1 || j < 1) parse_fail(line_no, "agents are numbered from 1");
    seq.push_back({agent_at(static_cast<std::size_t>(i - 1)), agent_at(static_cast<std::size_t>(j - 1))});
  }
  return seq;
}

inline SwapSequence parse_certificate_string(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

inline SwapSequence load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open certificate file '" + path + "'");
  return parse_certificate(in);
}

inline std::string serialize_certificate(const SwapSequence& seq) {
  std::ostringstream out;
  for (auto [i, j] : seq) out << idx(i) + 1 << ' ' << idx(j) + 1 << '\n';
  return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

/// "Name: a > b > [init]" per agent; the initial object is boxed.
inline std::string render_preference_table(const Instance& inst) {
  std::ostringstream out;
  for (std::size_t a = 0; a < inst.agent_count(); ++a) {
    Agent ag = agent_at(a);
    out << inst.agent_name(ag) << ':';
    auto list = inst.prefs(ag);
    for (std::size_t k = 0; k < list.size(); ++k) {
      out << (k == 0 ? " " : " > ");
      if (list[k] == inst.initial(ag)) out << '[' << inst.object_name(list[k]) << ']';
      else out << inst.object_name(list[k]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace swapreach
