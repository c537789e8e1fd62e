#pragma once

// Text spec parsers shared by the CLI and tests.
//   group spec:   cyclic:m | dihedral:m | quaternion | symmetric:m
//                 | product:<spec>,<spec> | trivial | file:<path>
//   cocycle spec: trivial | cyclic:q | file:<path>
//   filtration file: `group <spec>`, `level k: <indices>`, `aut: <permutation>`

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tqd/cocycle.hpp"
#include "tqd/filtration.hpp"
#include "tqd/group.hpp"

namespace tqd {

namespace detail {

inline bool eat(const std::string& s, std::size_t& pos, const std::string& word) {
  if (s.compare(pos, word.size(), word) != 0) return false;
  pos += word.size();
  return true;
}

inline int parse_int_at(const std::string& s, std::size_t& pos, const std::string& what) {
  std::size_t start = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == start) throw std::runtime_error("expected a number for " + what + " in '" + s + "'");
  long long v = 0;
  for (std::size_t i = start; i < pos; ++i) {
    v = v * 10 + (s[i] - '0');
    if (v > 1000000000) throw std::runtime_error(what + " is out of range in '" + s + "'");
  }
  return static_cast<int>(v);
}

inline FiniteGroup parse_group_at(const std::string& s, std::size_t& pos) {
  if (eat(s, pos, "trivial")) return make_trivial();
  if (eat(s, pos, "quaternion")) return make_quaternion8();
  if (eat(s, pos, "cyclic:")) return make_cyclic(parse_int_at(s, pos, "cyclic order"));
  if (eat(s, pos, "dihedral:")) return make_dihedral(parse_int_at(s, pos, "dihedral parameter"));
  if (eat(s, pos, "symmetric:")) return make_symmetric(parse_int_at(s, pos, "symmetric degree"));
  if (eat(s, pos, "product:")) {
    FiniteGroup left = parse_group_at(s, pos);
    if (pos >= s.size() || s[pos] != ',')
      throw std::runtime_error("product spec needs ',' between factors in '" + s + "'");
    ++pos;
    FiniteGroup right = parse_group_at(s, pos);
    return make_product(left, right);
  }
  if (eat(s, pos, "file:")) {
    std::size_t end = s.find(',', pos);  // nested inside product: stop at the separator
    if (end == std::string::npos) end = s.size();
    std::string path = s.substr(pos, end - pos);
    pos = end;
    if (path.empty()) throw std::runtime_error("file spec needs a path in '" + s + "'");
    return from_cayley_file(path);
  }
  throw std::runtime_error("unrecognized group spec at '" + s.substr(pos) +
                           "' (expected cyclic:m, dihedral:m, quaternion, symmetric:m, "
                           "product:<spec>,<spec>, trivial, or file:<path>)");
}

}  // namespace detail

inline FiniteGroup parse_group_spec(const std::string& s) {
  std::size_t pos = 0;
  FiniteGroup G = detail::parse_group_at(s, pos);
  if (pos != s.size())
    throw std::runtime_error("trailing characters '" + s.substr(pos) + "' in group spec '" + s +
                             "'");
  return G;
}

inline Cocycle3 parse_cocycle_spec(const std::string& s, const FiniteGroup& G) {
  if (s == "trivial") return trivial_cocycle(G);
  if (s.rfind("cyclic:", 0) == 0) {
    std::size_t pos = 7;
    int q = detail::parse_int_at(s, pos, "cocycle parameter");
    if (pos != s.size())
      throw std::runtime_error("trailing characters in cocycle spec '" + s + "'");
    if (G.name().rfind("cyclic:", 0) != 0)
      throw std::runtime_error("cocycle '" + s + "' is only defined on a cyclic:m group, got '" +
                               G.name() + "'");
    Cocycle3 w = cyclic_cocycle(G.order(), q);
    return w;
  }
  if (s.rfind("file:", 0) == 0) {
    std::string path = s.substr(5);
    if (path.empty()) throw std::runtime_error("file cocycle spec needs a path");
    return from_cocycle_file(G, path);
  }
  throw std::runtime_error("unrecognized cocycle spec '" + s +
                           "' (expected trivial, cyclic:q, or file:<path>)");
}

// Filtration description: one `group <spec>` line, then `level k: <indices>`
// for k = 0..N in order, then zero or more `aut: <permutation>` lines.
struct FiltrationFile {
  FiltrationSpec spec;
  std::vector<std::vector<int>> auts;
};

inline FiltrationFile parse_filtration_stream(std::istream& in, const std::string& where) {
  std::string line;
  int lineno = 0;
  std::string group_spec;
  std::vector<std::vector<int>> levels;
  std::vector<std::vector<int>> auts;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(where + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "group") {
      if (!group_spec.empty()) fail("duplicate group line");
      if (!(ls >> group_spec)) fail("group line needs a spec");
    } else if (head == "level") {
      int k = 0;
      std::string colon;
      if (!(ls >> k >> colon) || colon != ":") fail("expected 'level k: <indices>'");
      if (k != static_cast<int>(levels.size()))
        fail("levels must appear in order; expected level " + std::to_string(levels.size()));
      std::vector<int> idx;
      int v = 0;
      while (ls >> v) idx.push_back(v);
      if (!ls.eof()) fail("non-numeric entry in level line");
      levels.push_back(std::move(idx));
    } else if (head == "aut:") {
      std::vector<int> perm;
      int v = 0;
      while (ls >> v) perm.push_back(v);
      if (!ls.eof()) fail("non-numeric entry in aut line");
      auts.push_back(std::move(perm));
    } else {
      fail("unrecognized line '" + head + "' (expected group, level, or aut:)");
    }
  }
  lineno = 0;  // end-of-file diagnostics
  if (group_spec.empty()) fail("missing 'group <spec>' line");
  if (levels.size() < 2) fail("need at least levels 0 and 1");
  FiltrationFile out{FiltrationSpec{parse_group_spec(group_spec), std::move(levels)},
                     std::move(auts)};
  return out;
}

inline FiltrationFile parse_filtration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open filtration file '" + path + "'");
  return parse_filtration_stream(in, path);
}

}  // namespace tqd
