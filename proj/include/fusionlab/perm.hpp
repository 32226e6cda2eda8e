// Permutations on {0..degree-1} with 1-based cycle notation for I/O.
// Products are left-to-right everywhere: (a.b)(x) = b(a(x)), a applied first.
#pragma once

#include <string>
#include <vector>

#include "fusionlab/error.hpp"

namespace fusionlab {

using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

inline bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// a applied first, then b.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

// Disjoint-cycle notation, 1-based, cycles sorted by smallest moved point,
// each cycle starting at its smallest point. Identity prints as "()".
inline std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

// Parse cycle notation like "(1 2)(3 4)" into a permutation of the given
// degree. Cycles compose left to right. Throws Error on bad syntax; callers
// that read files wrap this into a ParseError with the line number.
inline Perm parse_cycles(const std::string& text, int degree) {
  Perm result = perm_identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("expected cycle notation");
  bool saw_any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw Error("unexpected character '" + std::string(1, text[i]) + "' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw Error("expected point number in cycle");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw Error("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      for (int u : cycle)
        if (u == v - 1) throw Error("point " + std::to_string(v) + " repeated within a cycle");
      cycle.push_back(v - 1);
    }
    saw_any = true;
    if (cycle.size() >= 2) {
      Perm c = perm_identity(degree);
      for (size_t k = 0; k < cycle.size(); ++k)
        c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      result = perm_compose(result, c);
    }
  }
  skip_ws();
  if (i != text.size()) throw Error("trailing characters after cycle notation");
  if (!saw_any) throw Error("expected cycle notation");
  return result;
}

}  // namespace fusionlab
