// Deterministic constructors for the built-in group corpus, plus the
// group-file loader. Builders return permutation groups where a natural
// action exists and explicit Cayley tables otherwise; either way the full
// axiom validation in group_core runs on every construction.
#pragma once

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fusionlab/error.hpp"
#include "fusionlab/group.hpp"

namespace fusionlab {

inline const char* kCorpusVersion = "builtin-1";

// ---- builders ----------------------------------------------------------------

inline Group cyclic(int n, std::string id = "") {
  detail::precondition(n >= 1, "cyclic group order must be positive");
  if (id.empty()) id = "C" + std::to_string(n);
  if (n == 1) return from_permutation_generators(1, {}, 5000, id);
  Perm shift(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) shift[static_cast<size_t>(i)] = (i + 1) % n;
  return from_permutation_generators(n, {shift}, 5000, id);
}

inline Group dihedral(int order, std::string id = "") {
  detail::precondition(order >= 6 && order % 2 == 0,
                       "dihedral builder needs an even order >= 6");
  int n = order / 2;
  if (id.empty()) id = "D" + std::to_string(order);
  Perm rot(static_cast<size_t>(n)), ref(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<size_t>(i)] = (i + 1) % n;
    ref[static_cast<size_t>(i)] = (n - i) % n;
  }
  return from_permutation_generators(n, {rot, ref}, 5000, id);
}

// Generalized quaternion group of order 2^t (8, 16 or 32), as the table of
// the presentation <a,b | a^{2^{t-1}}=1, b^2=a^{2^{t-2}}, a^b=a^{-1}>;
// element a^i b^j has index j*(order/2)+i.
inline Group generalized_quaternion(int order, std::string id = "") {
  detail::precondition(order == 8 || order == 16 || order == 32,
                       "generalized quaternion builder supports orders 8, 16, 32");
  if (id.empty()) id = "Q" + std::to_string(order);
  const int m = order / 2;
  auto idx = [&](int i, int j) { return j * m + ((i % m) + m) % m; };
  std::vector<std::vector<int>> rows(static_cast<size_t>(order),
                                     std::vector<int>(static_cast<size_t>(order)));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          int i = i1 + (j1 == 0 ? i2 : -i2) + (j1 == 1 && j2 == 1 ? m / 2 : 0);
          rows[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] =
              idx(i, (j1 + j2) % 2);
        }
  std::vector<std::string> labels(static_cast<size_t>(order));
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i) {
      std::string l = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
      if (j == 1) l += l.empty() ? "b" : " b";
      labels[static_cast<size_t>(idx(i, j))] = l.empty() ? "e" : l;
    }
  return from_cayley_table(rows, labels, id);
}

inline Group quaternion(std::string id = "Q8") { return generalized_quaternion(8, std::move(id)); }

inline Group symmetric(int n, std::string id = "") {
  detail::precondition(n >= 1 && n <= 6, "symmetric builder supports degrees 1..6");
  if (id.empty()) id = "S" + std::to_string(n);
  if (n == 1) return from_permutation_generators(1, {}, 5000, id);
  Perm swap = perm_identity(n);
  swap[0] = 1;
  swap[1] = 0;
  Perm cyc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % n;
  return from_permutation_generators(n, {swap, cyc}, 5000, id);
}

inline Group alternating(int n, std::string id = "") {
  detail::precondition(n >= 1 && n <= 6, "alternating builder supports degrees 1..6");
  if (id.empty()) id = "A" + std::to_string(n);
  if (n <= 2) return from_permutation_generators(n, {}, 5000, id);
  Perm three = perm_identity(n);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  Perm big = perm_identity(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) big[static_cast<size_t>(i)] = (i + 1) % n;  // n-cycle, even
  } else {
    for (int i = 1; i < n; ++i) big[static_cast<size_t>(i)] = i % (n - 1) + 1;  // (2..n), even
  }
  return from_permutation_generators(n, {three, big}, 5000, id);
}

// C_p^k as k disjoint p-cycles.
inline Group elementary_abelian(int p, int k, std::string id = "") {
  detail::precondition(is_prime(p) && k >= 1, "elementary abelian builder needs a prime and k >= 1");
  if (id.empty()) id = "C" + std::to_string(p) + "^" + std::to_string(k);
  int degree = p * k;
  std::vector<Perm> gens;
  for (int b = 0; b < k; ++b) {
    Perm g = perm_identity(degree);
    for (int i = 0; i < p; ++i) g[static_cast<size_t>(b * p + i)] = b * p + (i + 1) % p;
    gens.push_back(std::move(g));
  }
  return from_permutation_generators(degree, gens, 5000, id);
}

// Heisenberg group mod p: extraspecial of order p^3 and exponent p (p odd).
// Triples (a,b,c) with (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2);
// index = a*p^2 + b*p + c.
inline Group extraspecial_exp_p(int p, std::string id = "") {
  detail::precondition(is_prime(p) && p % 2 == 1, "extraspecial exponent-p builder needs an odd prime");
  if (id.empty()) id = "He" + std::to_string(p);
  const int n = p * p * p;
  auto idx = [&](int a, int b, int c) { return a * p * p + b * p + c; };
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              rows[static_cast<size_t>(idx(a1, b1, c1))][static_cast<size_t>(idx(a2, b2, c2))] =
                  idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        labels[static_cast<size_t>(idx(a, b, c))] = "(" + std::to_string(a) + "," +
                                                    std::to_string(b) + "," + std::to_string(c) + ")";
  return from_cayley_table(rows, labels, id);
}

inline Group direct_product(const Group& a, const Group& b, std::string id = "") {
  if (id.empty()) id = a.id + "x" + b.id;
  const int n = a.order * b.order;
  auto idx = [&](int x, int y) { return x * b.order + y; };
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          rows[static_cast<size_t>(idx(x1, y1))][static_cast<size_t>(idx(x2, y2))] =
              idx(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::string> labels(static_cast<size_t>(n));
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y)
      labels[static_cast<size_t>(idx(x, y))] = a.labels[static_cast<size_t>(x)] + "|" +
                                               b.labels[static_cast<size_t>(y)];
  return from_cayley_table(rows, labels, id);
}

// C_n x| C_m with the generator of C_m acting by x -> x^k; requires
// k^m = 1 (mod n). Element x^i y^j has index j*n+i.
inline Group semidirect_cyclic(int n, int m, int k, std::string id = "") {
  detail::precondition(n >= 1 && m >= 1 && k >= 0, "semidirect_cyclic parameters must be positive");
  long long km = 1;
  for (int t = 0; t < m; ++t) km = (km * k) % n;
  detail::precondition(km % n == 1 % n,
                       "semidirect_cyclic action invalid: k^m != 1 mod n");
  if (id.empty()) id = "C" + std::to_string(n) + ":C" + std::to_string(m);
  const int order = n * m;
  auto idx = [&](int i, int j) { return j * n + i; };
  // Precompute k^j mod n.
  std::vector<long long> kj(static_cast<size_t>(m), 1);
  for (int j = 1; j < m; ++j) kj[static_cast<size_t>(j)] = (kj[static_cast<size_t>(j - 1)] * k) % n;
  std::vector<std::vector<int>> rows(static_cast<size_t>(order),
                                     std::vector<int>(static_cast<size_t>(order)));
  for (int j1 = 0; j1 < m; ++j1)
    for (int i1 = 0; i1 < n; ++i1)
      for (int j2 = 0; j2 < m; ++j2)
        for (int i2 = 0; i2 < n; ++i2)
          rows[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] =
              idx(static_cast<int>((i1 + kj[static_cast<size_t>(j1)] * i2) % n), (j1 + j2) % m);
  std::vector<std::string> labels(static_cast<size_t>(order));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      std::string l = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
      if (j > 0) l += (l.empty() ? "" : " ") + std::string(j == 1 ? "y" : "y^" + std::to_string(j));
      labels[static_cast<size_t>(idx(i, j))] = l.empty() ? "e" : l;
    }
  return from_cayley_table(rows, labels, id);
}

// (C_p x C_p) x| <M> with M a 2x2 matrix over F_p, realized as affine
// permutations of the p^2 points (x,y); point index = x*p + y.
inline Group semidirect_matrix(int p, std::array<int, 4> mat, std::string id = "") {
  detail::precondition(is_prime(p), "semidirect_matrix needs a prime p");
  for (int& v : mat) v = ((v % p) + p) % p;
  int det = (mat[0] * mat[3] - mat[1] * mat[2]) % p;
  det = (det + p) % p;
  detail::precondition(det != 0, "semidirect_matrix action matrix is singular mod p");
  if (id.empty())
    id = "(C" + std::to_string(p) + "xC" + std::to_string(p) + "):M";
  const int deg = p * p;
  auto pt = [&](int x, int y) { return x * p + y; };
  Perm t1(static_cast<size_t>(deg)), t2(static_cast<size_t>(deg)), mm(static_cast<size_t>(deg));
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      t1[static_cast<size_t>(pt(x, y))] = pt((x + 1) % p, y);
      t2[static_cast<size_t>(pt(x, y))] = pt(x, (y + 1) % p);
      mm[static_cast<size_t>(pt(x, y))] = pt((mat[0] * x + mat[1] * y) % p,
                                             (mat[2] * x + mat[3] * y) % p);
    }
  return from_permutation_generators(deg, {t1, t2, mm}, 5000, id);
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2, listed lexicographically.
inline Group sl23(std::string id = "SL(2,3)") {
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 0 || y != 0) pts.emplace_back(x, y);
  auto pidx = [&](int x, int y) {
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i].first == x && pts[i].second == y) return static_cast<int>(i);
    return -1;
  };
  auto act = [&](std::array<int, 4> m) {
    Perm out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
      int x = pts[i].first, y = pts[i].second;
      out[i] = pidx((m[0] * x + m[1] * y) % 3, (m[2] * x + m[3] * y) % 3);
    }
    return out;
  };
  // Generators [[1,1],[0,1]] and [[0,2],[1,0]]; both have determinant 1.
  return from_permutation_generators(8, {act({1, 1, 0, 1}), act({0, 2, 1, 0})}, 5000,
                                     std::move(id));
}

// ---- built-in corpus ----------------------------------------------------------

inline std::vector<Group> builtin_corpus() {
  std::vector<Group> out;
  for (int n = 1; n <= 24; ++n) out.push_back(cyclic(n));
  out.push_back(elementary_abelian(2, 2, "V4"));
  out.push_back(elementary_abelian(2, 3, "C2^3"));
  out.push_back(elementary_abelian(3, 2, "C3^2"));
  out.push_back(dihedral(8));
  out.push_back(dihedral(10));
  out.push_back(dihedral(12));
  out.push_back(quaternion());
  out.push_back(generalized_quaternion(16));
  out.push_back(symmetric(3));
  out.push_back(symmetric(4));
  out.push_back(symmetric(5));
  out.push_back(alternating(4));
  out.push_back(alternating(5));
  out.push_back(sl23());
  out.push_back(semidirect_cyclic(7, 3, 2, "C7:C3"));
  out.push_back(semidirect_matrix(5, {0, 4, 1, 4}, "(C5xC5):C3"));
  out.push_back(extraspecial_exp_p(3, "He3"));
  out.push_back(direct_product(symmetric(3), cyclic(2), "S3xC2"));
  out.push_back(direct_product(alternating(4), cyclic(2), "A4xC2"));
  out.push_back(direct_product(quaternion(), cyclic(3), "Q8xC3"));
  return out;
}

// ---- group file format ---------------------------------------------------------

// Line-oriented, UTF-8. '#' lines are comments. First directive is
// 'format perm' or 'format table'; perm files follow with 'degree N' and
// 'gen (cycles)' lines, table files with 'order N' and N 'row ...' lines.
inline Group parse_group_text(const std::string& text, const std::string& id,
                              int max_order = 5000) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string format;
  int degree = -1;
  int order = -1;
  std::vector<Perm> gens;
  std::vector<std::vector<int>> rows;
  auto fail = [&](const std::string& msg) { throw ParseError(lineno, msg); };

  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "format") {
      if (!format.empty()) fail("duplicate 'format' directive");
      if (!(ls >> format) || (format != "perm" && format != "table"))
        fail("expected 'format perm' or 'format table'");
      std::string extra;
      if (ls >> extra) fail("trailing characters after format directive");
    } else if (tok == "degree") {
      if (format != "perm") fail("'degree' requires 'format perm' first");
      if (degree >= 0) fail("duplicate 'degree' directive");
      if (!(ls >> degree) || degree < 1) fail("degree must be a positive integer");
      if (degree > 100000) fail("degree too large");
      std::string extra;
      if (ls >> extra) fail("trailing characters after degree directive");
    } else if (tok == "gen") {
      if (degree < 0) fail("'gen' requires 'degree' first");
      std::string rest;
      std::getline(ls, rest);
      try {
        gens.push_back(parse_cycles(rest, degree));
      } catch (const Error& e) {
        fail(e.what());
      }
    } else if (tok == "order") {
      if (format != "table") fail("'order' requires 'format table' first");
      if (order >= 0) fail("duplicate 'order' directive");
      if (!(ls >> order) || order < 1) fail("order must be a positive integer");
      if (order > max_order)
        throw ResourceLimitError("table order " + std::to_string(order) + " exceeds max order " +
                                 std::to_string(max_order));
      std::string extra;
      if (ls >> extra) fail("trailing characters after order directive");
    } else if (tok == "row") {
      if (order < 0) fail("'row' requires 'order' first");
      if (static_cast<int>(rows.size()) >= order) fail("more rows than the declared order");
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      if (!ls.eof()) fail("row entries must be integers");
      if (static_cast<int>(row.size()) != order)
        fail("row has " + std::to_string(row.size()) + " entries, expected " +
             std::to_string(order));
      rows.push_back(std::move(row));
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (format.empty()) fail("missing 'format' directive");
  if (format == "perm") {
    if (degree < 0) fail("missing 'degree' directive");
    return from_permutation_generators(degree, gens, max_order, id);
  }
  if (order < 0) fail("missing 'order' directive");
  if (static_cast<int>(rows.size()) != order)
    fail("expected " + std::to_string(order) + " rows, got " + std::to_string(rows.size()));
  return from_cayley_table(rows, {}, id);
}

inline Group load_group_file(const std::string& path, int max_order = 5000) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  size_t slash = stem.find_last_of("/\\");
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_group_text(buf.str(), stem, max_order);
}

}  // namespace fusionlab
