#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netcay/group.hpp"

namespace netcay {

// Table file format: line 1 = order n, then n lines of n whitespace-separated
// element ids (row g of the multiplication table).
inline GroupRef read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open table file '" + path + "'");
  int n;
  if (!(in >> n) || n <= 0) fail(errc::parse_error, "bad order line in '" + path + "'");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!(in >> table[r][c])) fail(errc::parse_error, "truncated table in '" + path + "'");
  return build_from_table(table, "table:" + path);
}

// Group specification mini-language:
//   cyclic:N | dihedral:N | elemab:P^K | product(SPEC,SPEC) | table:PATH
inline GroupRef parse_group_spec(const std::string& spec) {
  auto trim = [](const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  std::string s = trim(spec);
  if (s.empty()) fail(errc::parse_error, "empty group spec");

  auto parse_int = [&](const std::string& t, const char* what) {
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const error&) {
      throw;
    } catch (...) {
      fail(errc::parse_error, std::string("bad ") + what + " in group spec '" + s + "'");
    }
  };

  if (s.rfind("cyclic:", 0) == 0) {
    int n = parse_int(s.substr(7), "order");
    if (n < 2) fail(errc::parse_error, "cyclic:N requires N >= 2");
    return build_cyclic(n);
  }
  if (s.rfind("dihedral:", 0) == 0) {
    int n = parse_int(s.substr(9), "parameter");
    if (n < 2) fail(errc::parse_error, "dihedral:N requires N >= 2");
    return build_dihedral(n);
  }
  if (s.rfind("elemab:", 0) == 0) {
    std::string body = s.substr(7);
    size_t caret = body.find('^');
    if (caret == std::string::npos) fail(errc::parse_error, "elemab spec must be elemab:P^K");
    int p = parse_int(body.substr(0, caret), "prime");
    int k = parse_int(body.substr(caret + 1), "exponent");
    if (!is_prime_int(p)) fail(errc::parse_error, "elemab base must be prime");
    if (k < 1) fail(errc::parse_error, "elemab exponent must be >= 1");
    return build_elementary_abelian(p, k);
  }
  if (s.rfind("product(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(8, s.size() - 9);
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')') --depth;
      else if (body[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) fail(errc::parse_error, "product spec needs two comma-separated factors");
    GroupRef left = parse_group_spec(body.substr(0, split));
    GroupRef right = parse_group_spec(body.substr(split + 1));
    return direct_product(left, right).group;
  }
  if (s.rfind("table:", 0) == 0) return read_table_file(s.substr(6));
  fail(errc::parse_error, "unrecognized group spec '" + s + "'");
}

}  // namespace netcay
