// Finite groups as immutable Cayley tables.
//
// Conventions, fixed across the whole library:
//   * element indices are 0..order-1 and index 0 is the identity,
//   * table[a][b] = a.b with products read left to right; for permutations
//     that means a is applied first,
//   * conjugation is x^g = g^-1.x.g, and A^g = { x^g : x in A }.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionlab/elemset.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/perm.hpp"

namespace fusionlab {

struct Group {
  int order = 0;
  std::vector<int> table;      // row-major, order x order
  std::vector<int> inverse;    // two-sided inverses
  std::vector<std::string> labels;
  std::string id;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
  int inv(int a) const { return inverse[static_cast<size_t>(a)]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }

  ElemSet full_set() const {
    ElemSet s(order);
    for (int i = 0; i < order; ++i) s.set(i);
    return s;
  }
  ElemSet trivial_set() const { return ElemSet::single(order, 0); }
  const std::string& label(int i) const { return labels[static_cast<size_t>(i)]; }
};

// A homomorphism given by its value on every source element.
struct GroupHom {
  std::string source;
  std::string target;
  std::vector<int> image;  // image[x] = phi(x)
};

inline bool is_homomorphism(const Group& src, const Group& dst, const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != src.order) return false;
  for (int v : image)
    if (v < 0 || v >= dst.order) return false;
  if (image[0] != 0) return false;
  for (int a = 0; a < src.order; ++a)
    for (int b = 0; b < src.order; ++b)
      if (image[src.mul(a, b)] != dst.mul(image[a], image[b])) return false;
  return true;
}

// ---- small arithmetic helpers ----------------------------------------------

inline std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline int p_part(int n, int p) {
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline int smallest_prime_divisor(int n) {
  auto ps = prime_factors(n);
  return ps.empty() ? 0 : ps.front();
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// ---- construction -----------------------------------------------------------

namespace detail {

// Exhaustive for small tables, deterministic sampling above that. Throws
// MalformedTableError naming a failing triple.
inline void check_associativity(const Group& g, bool exhaustive_if_small) {
  const int n = g.order;
  auto fail = [&](int a, int b, int c) {
    throw MalformedTableError("associativity fails in '" + g.id + "' at (" + std::to_string(a) +
                              "," + std::to_string(b) + "," + std::to_string(c) + "): (a.b).c=" +
                              std::to_string(g.mul(g.mul(a, b), c)) + " but a.(b.c)=" +
                              std::to_string(g.mul(a, g.mul(b, c))));
  };
  if (exhaustive_if_small && n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) fail(a, b, c);
    return;
  }
  std::mt19937 rng(0x5eedu);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < 10 * n; ++k) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) fail(a, b, c);
  }
}

inline void check_identity_and_inverses(Group& g) {
  const int n = g.order;
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw MalformedTableError("element 0 is not a two-sided identity in '" + g.id +
                                "' (fails at element " + std::to_string(a) + ")");
  }
  g.inverse.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse[static_cast<size_t>(a)] = b;
        break;
      }
    if (g.inverse[static_cast<size_t>(a)] < 0)
      throw MalformedTableError("element " + std::to_string(a) + " has no two-sided inverse in '" +
                                g.id + "'");
  }
}

inline std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(static_cast<size_t>(n));
  labels[0] = "e";
  for (int i = 1; i < n; ++i) labels[static_cast<size_t>(i)] = "g" + std::to_string(i);
  return labels;
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace detail

// Breadth-first closure of the generators, identity first, generators applied
// in input order; element indexing is therefore stable run to run.
inline Group from_permutation_generators(int degree, const std::vector<Perm>& gens,
                                         int max_order = 5000, std::string id = "") {
  detail::precondition(degree >= 1, "degree must be positive");
  for (const Perm& p : gens) {
    detail::precondition(static_cast<int>(p.size()) == degree,
                         "generator degree mismatch in '" + id + "'");
    detail::precondition(is_permutation(p), "generator is not a bijection in '" + id + "'");
  }
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, detail::PermHash> index;
  elems.push_back(perm_identity(degree));
  index.emplace(elems[0], 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    Perm cur = elems[head];
    for (const Perm& gen : gens) {
      Perm next = perm_compose(cur, gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > max_order)
          throw ResourceLimitError("group '" + id + "' exceeds max order " +
                                   std::to_string(max_order));
      }
    }
  }
  Group g;
  g.order = static_cast<int>(elems.size());
  g.id = id.empty() ? ("perm" + std::to_string(degree)) : std::move(id);
  g.table.resize(static_cast<size_t>(g.order) * g.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      g.table[static_cast<size_t>(a) * g.order + b] = index.at(perm_compose(elems[a], elems[b]));
  g.inverse.resize(static_cast<size_t>(g.order));
  for (int a = 0; a < g.order; ++a) g.inverse[static_cast<size_t>(a)] = index.at(perm_inverse(elems[a]));
  g.labels.resize(static_cast<size_t>(g.order));
  for (int a = 0; a < g.order; ++a) g.labels[static_cast<size_t>(a)] = cycle_notation(elems[a]);
  // Associative by construction; sampled anyway as a guard against table
  // assembly bugs.
  detail::check_associativity(g, /*exhaustive_if_small=*/false);
  return g;
}

inline Group from_cayley_table(const std::vector<std::vector<int>>& rows,
                               std::vector<std::string> labels = {}, std::string id = "") {
  const int n = static_cast<int>(rows.size());
  detail::precondition(n >= 1, "empty Cayley table");
  Group g;
  g.order = n;
  g.id = id.empty() ? ("table" + std::to_string(n)) : std::move(id);
  g.table.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[static_cast<size_t>(a)].size()) != n)
      throw MalformedTableError("row " + std::to_string(a) + " of '" + g.id + "' has " +
                                std::to_string(rows[static_cast<size_t>(a)].size()) +
                                " entries, expected " + std::to_string(n));
    for (int b = 0; b < n; ++b) {
      int v = rows[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (v < 0 || v >= n)
        throw MalformedTableError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") = " + std::to_string(v) + " out of range in '" + g.id + "'");
      g.table[static_cast<size_t>(a) * n + b] = v;
    }
  }
  detail::check_identity_and_inverses(g);
  detail::check_associativity(g, /*exhaustive_if_small=*/true);
  g.labels = labels.empty() ? detail::default_labels(n) : std::move(labels);
  detail::precondition(static_cast<int>(g.labels.size()) == n, "label count mismatch");
  return g;
}

// ---- elementwise operations -------------------------------------------------

inline int element_order(const Group& g, int x) {
  int o = 1;
  int cur = x;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++o;
  }
  return o;
}

// Exponent of a subgroup (lcm of member orders); pass g.full_set() for G.
inline int exponent_of(const Group& g, const ElemSet& h) {
  int e = 1;
  h.for_each([&](int x) { e = std::lcm(e, element_order(g, x)); });
  return e;
}

// Subgroup generated by the seed set: all left-to-right words over the seed,
// plus the identity. Closure under inverses is automatic in a finite group.
inline ElemSet generated_subgroup(const Group& g, const ElemSet& seed) {
  ElemSet out(g.order);
  out.set(0);
  std::vector<int> gens = seed.members();
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!out.test(y)) {
        out.set(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

inline bool is_subgroup_set(const Group& g, const ElemSet& h);

inline ElemSet product_set(const Group& g, const ElemSet& a, const ElemSet& b) {
  ElemSet out(g.order);
  std::vector<int> bs = b.members();
  a.for_each([&](int x) {
    for (int y : bs) out.set(g.mul(x, y));
  });
#ifndef NDEBUG
  // For subgroup arguments the product-size identity must hold.
  if (is_subgroup_set(g, a) && is_subgroup_set(g, b)) {
    long long lhs = static_cast<long long>(out.count()) * (a & b).count();
    long long rhs = static_cast<long long>(a.count()) * b.count();
    detail::require(lhs == rhs, "|AB| |A n B| != |A||B| for subgroups in '" + g.id + "'");
  }
#endif
  return out;
}

inline ElemSet conjugate_subgroup(const Group& g, const ElemSet& a, int gg) {
  ElemSet out(g.order);
  int gi = g.inv(gg);
  a.for_each([&](int x) { out.set(g.mul(g.mul(gi, x), gg)); });
  return out;
}

inline ElemSet centralizer_in(const Group& g, const ElemSet& ambient, const ElemSet& a) {
  ElemSet out(g.order);
  std::vector<int> as = a.members();
  ambient.for_each([&](int c) {
    for (int x : as)
      if (g.mul(c, x) != g.mul(x, c)) return;
    out.set(c);
  });
  return out;
}

inline ElemSet centralizer(const Group& g, const ElemSet& a) {
  return centralizer_in(g, g.full_set(), a);
}

inline ElemSet normalizer_in(const Group& g, const ElemSet& ambient, const ElemSet& a) {
  ElemSet out(g.order);
  ambient.for_each([&](int c) {
    int ci = g.inv(c);
    bool ok = true;
    a.for_each([&](int x) {
      if (ok && !a.test(g.mul(g.mul(ci, x), c))) ok = false;
    });
    if (ok) out.set(c);
  });
  return out;
}

inline ElemSet normalizer(const Group& g, const ElemSet& a) {
  return normalizer_in(g, g.full_set(), a);
}

// Does every element of u normalize a?
inline bool normalizes(const Group& g, const ElemSet& u, const ElemSet& a) {
  bool ok = true;
  u.for_each([&](int c) {
    if (!ok) return;
    int ci = g.inv(c);
    a.for_each([&](int x) {
      if (ok && !a.test(g.mul(g.mul(ci, x), c))) ok = false;
    });
  });
  return ok;
}

inline bool is_subgroup_set(const Group& g, const ElemSet& h) {
  if (!h.test(0)) return false;
  std::vector<int> hs = h.members();
  for (int a : hs)
    for (int b : hs)
      if (!h.test(g.mul(a, b))) return false;
  return true;
}

// Smallest subgroup of `ambient` containing h and closed under conjugation by
// ambient; h must lie inside ambient.
inline ElemSet normal_closure_in(const Group& g, const ElemSet& ambient, const ElemSet& h) {
  ElemSet seed = h;
  while (true) {
    ElemSet sub = generated_subgroup(g, seed);
    ElemSet bigger = sub;
    ambient.for_each([&](int c) {
      int ci = g.inv(c);
      sub.for_each([&](int x) { bigger.set(g.mul(g.mul(ci, x), c)); });
    });
    if (bigger == sub) return sub;
    seed = bigger;
  }
}

// <[a,b] : a in A, b in B> with [a,b] = a^-1 b^-1 a b.
inline ElemSet commutator_subgroup(const Group& g, const ElemSet& a, const ElemSet& b) {
  ElemSet seed(g.order);
  std::vector<int> bs = b.members();
  a.for_each([&](int x) {
    int xi = g.inv(x);
    for (int y : bs) seed.set(g.mul(g.mul(g.mul(xi, g.inv(y)), x), y));
  });
  return generated_subgroup(g, seed);
}

inline ElemSet derived_subgroup(const Group& g, const ElemSet& h) {
  return commutator_subgroup(g, h, h);
}

inline bool commute_elementwise(const Group& g, const ElemSet& a, const ElemSet& b) {
  std::vector<int> bs = b.members();
  bool ok = true;
  a.for_each([&](int x) {
    if (!ok) return;
    for (int y : bs)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        return;
      }
  });
  return ok;
}

inline bool is_abelian_set(const Group& g, const ElemSet& h) {
  return commute_elementwise(g, h, h);
}

inline bool is_cyclic_subgroup(const Group& g, const ElemSet& h) {
  int n = h.count();
  bool found = false;
  h.for_each([&](int x) {
    if (!found && element_order(g, x) == n) found = true;
  });
  return found;
}

// ---- subgroup realization and quotients -------------------------------------

// A subgroup repackaged as a Group of its own. Element k of the realized group
// is parent element to_parent[k]; members are taken in ascending parent index,
// so the identity stays at index 0.
struct Realized {
  Group grp;
  std::vector<int> to_parent;
  std::vector<int> to_local;  // parent index -> local index, -1 outside

  ElemSet lift(const ElemSet& local) const {
    ElemSet out(static_cast<int>(to_local.size()));
    local.for_each([&](int k) { out.set(to_parent[static_cast<size_t>(k)]); });
    return out;
  }
  ElemSet restrict(const ElemSet& parent_set) const {
    ElemSet out(grp.order);
    parent_set.for_each([&](int x) {
      int k = to_local[static_cast<size_t>(x)];
      if (k >= 0) out.set(k);
    });
    return out;
  }
};

inline Realized realize_subgroup(const Group& g, const ElemSet& h) {
  detail::precondition(is_subgroup_set(g, h), "realize_subgroup: set is not a subgroup of '" + g.id + "'");
  Realized r;
  r.to_parent = h.members();
  r.to_local.assign(static_cast<size_t>(g.order), -1);
  for (size_t k = 0; k < r.to_parent.size(); ++k)
    r.to_local[static_cast<size_t>(r.to_parent[k])] = static_cast<int>(k);
  const int m = static_cast<int>(r.to_parent.size());
  r.grp.order = m;
  r.grp.id = g.id + "#sub" + std::to_string(m);
  r.grp.table.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      r.grp.table[static_cast<size_t>(a) * m + b] =
          r.to_local[static_cast<size_t>(g.mul(r.to_parent[static_cast<size_t>(a)],
                                               r.to_parent[static_cast<size_t>(b)]))];
  r.grp.inverse.resize(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a)
    r.grp.inverse[static_cast<size_t>(a)] =
        r.to_local[static_cast<size_t>(g.inv(r.to_parent[static_cast<size_t>(a)]))];
  r.grp.labels.resize(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) r.grp.labels[static_cast<size_t>(a)] = g.labels[static_cast<size_t>(r.to_parent[static_cast<size_t>(a)])];
  return r;
}

// Quotient by a normal subgroup. Cosets are indexed by their minimal member,
// sorted ascending, so the coset of the identity is element 0.
struct Quotient {
  Group grp;
  GroupHom hom;  // projection, hom.image[x] = coset index of x

  ElemSet image_of(const ElemSet& parent_set) const {
    ElemSet out(grp.order);
    parent_set.for_each([&](int x) { out.set(hom.image[static_cast<size_t>(x)]); });
    return out;
  }
  ElemSet preimage_of(const ElemSet& coset_set) const {
    ElemSet out(static_cast<int>(hom.image.size()));
    for (size_t x = 0; x < hom.image.size(); ++x)
      if (coset_set.test(hom.image[x])) out.set(static_cast<int>(x));
    return out;
  }
};

inline Quotient quotient_group(const Group& g, const ElemSet& n) {
  detail::precondition(is_subgroup_set(g, n), "quotient_group: N is not a subgroup of '" + g.id + "'");
  detail::precondition(normalizes(g, g.full_set(), n),
                       "quotient_group: N is not normal in '" + g.id + "'");
  const std::vector<int> ns = n.members();
  std::vector<int> coset_of(static_cast<size_t>(g.order), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (coset_of[static_cast<size_t>(a)] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int x : ns) coset_of[static_cast<size_t>(g.mul(a, x))] = c;
  }
  const int m = static_cast<int>(reps.size());
  Quotient q;
  q.grp.order = m;
  q.grp.id = g.id + "/" + std::to_string(n.count()) + "." + std::to_string(n.first());
  q.grp.table.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      q.grp.table[static_cast<size_t>(a) * m + b] =
          coset_of[static_cast<size_t>(g.mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(b)]))];
  q.grp.inverse.resize(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a)
    q.grp.inverse[static_cast<size_t>(a)] = coset_of[static_cast<size_t>(g.inv(reps[static_cast<size_t>(a)]))];
  q.grp.labels.resize(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a)
    q.grp.labels[static_cast<size_t>(a)] = "[" + g.labels[static_cast<size_t>(reps[static_cast<size_t>(a)])] + "]";
  q.hom.source = g.id;
  q.hom.target = q.grp.id;
  q.hom.image.assign(coset_of.begin(), coset_of.end());
  return q;
}

}  // namespace fusionlab
