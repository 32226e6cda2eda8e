// Per-group evaluation context: the subgroup lattice plus memoized derived
// data. Every quantifier-style operation ("all Sylow p-subgroups of U",
// "normal subgroups of U", ...) is answered relative to an ambient subgroup U
// using the parent lattice, since the subgroups of U are exactly the lattice
// members contained in U. Realizing a subgroup as a standalone Group is only
// done where unavoidable (quotients, chief series).
//
// Not thread-safe; use one context per worker thread.
#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fusionlab/elemset.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/group.hpp"
#include "fusionlab/lattice.hpp"

namespace fusionlab {

struct SupplementProfile;

class GroupContext : public std::enable_shared_from_this<GroupContext> {
 public:
  Group g;
  int max_subgroups;

  explicit GroupContext(Group grp, int max_subs = 100000)
      : g(std::move(grp)), max_subgroups(max_subs) {}

  const SubgroupLattice& lattice() {
    if (!lat_) lat_ = all_subgroups(g, max_subgroups);
    return *lat_;
  }

  int sub_index(const ElemSet& s) {
    int i = lattice().index_of(s);
    detail::require(i >= 0, "set is not a subgroup of '" + g.id + "'");
    return i;
  }

  const ElemSet& sub(int idx) { return lattice().at(idx); }
  int full_idx() { return lattice().full_idx; }
  int trivial_idx() { return lattice().trivial_idx; }

  int join_idx(const ElemSet& a, const ElemSet& b) {
    return sub_index(generated_subgroup(g, a | b));
  }

  // ---- cached elementwise data ----

  int element_order_of(int x) {
    if (elem_order_.empty()) {
      elem_order_.resize(static_cast<size_t>(g.order));
      for (int i = 0; i < g.order; ++i) elem_order_[static_cast<size_t>(i)] = element_order(g, i);
    }
    return elem_order_[static_cast<size_t>(x)];
  }

  const std::vector<std::vector<int>>& element_classes() {
    if (elem_classes_.empty()) {
      elem_class_id_.assign(static_cast<size_t>(g.order), -1);
      for (int x = 0; x < g.order; ++x) {
        if (elem_class_id_[static_cast<size_t>(x)] >= 0) continue;
        int cid = static_cast<int>(elem_classes_.size());
        std::vector<int> cls;
        ElemSet seen(g.order);
        for (int c = 0; c < g.order; ++c) {
          int y = g.conj(x, c);
          if (!seen.test(y)) {
            seen.set(y);
            cls.push_back(y);
            elem_class_id_[static_cast<size_t>(y)] = cid;
          }
        }
        std::sort(cls.begin(), cls.end());
        elem_classes_.push_back(std::move(cls));
      }
    }
    return elem_classes_;
  }

  int element_class_of(int x) {
    element_classes();
    return elem_class_id_[static_cast<size_t>(x)];
  }

  const ElemSet& center() {
    if (!center_) center_ = centralizer(g, g.full_set());
    return *center_;
  }

  const std::vector<int>& primes() {
    if (primes_.empty()) primes_ = prime_factors(g.order);
    return primes_;
  }

  int smallest_prime() {
    detail::precondition(g.order > 1, "trivial group has no prime divisor");
    return primes().front();
  }

  // ---- quantifier operations, all relative to an ambient subgroup U ----

  // Lattice indices of all subgroups contained in U, canonical order.
  std::vector<int> subgroups_in(const ElemSet& u) {
    const SubgroupLattice& lat = lattice();
    std::vector<int> out;
    for (int i = 0; i < lat.size(); ++i)
      if (lat.at(i).subset_of(u)) out.push_back(i);
    return out;
  }

  // Maximal proper subgroups of U.
  std::vector<int> maximal_subgroups_in(const ElemSet& u) {
    std::vector<int> inside = subgroups_in(u);
    std::vector<int> out;
    for (int i : inside) {
      if (sub(i) == u) continue;
      bool maximal = true;
      for (int j : inside)
        if (sub(j) != u && sub(i).proper_subset_of(sub(j))) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(i);
    }
    return out;
  }

  // Minimal subgroups of U: fixed to mean the prime-order ones (equivalent
  // to inclusion-minimal among nontrivial subgroups).
  std::vector<int> minimal_subgroups_in(const ElemSet& u) {
    std::vector<int> out;
    for (int i : subgroups_in(u))
      if (is_prime(sub(i).count())) out.push_back(i);
    return out;
  }

  // Subgroups of U normalized by all of U.
  std::vector<int> normal_in(const ElemSet& u, bool minimal_nontrivial_only = false) {
    std::vector<int> inside = subgroups_in(u);
    std::vector<int> norm;
    for (int i : inside)
      if (normalizes(g, u, sub(i))) norm.push_back(i);
    if (!minimal_nontrivial_only) return norm;
    std::vector<int> out;
    for (int i : norm) {
      if (sub(i).count() == 1) continue;
      bool minimal = true;
      for (int j : norm)
        if (sub(j).count() > 1 && sub(j).proper_subset_of(sub(i))) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(i);
    }
    return out;
  }

  // Sylow p-subgroups of U: the subgroups of U of order p_part(|U|). Their
  // number is checked against the Sylow congruence as an internal invariant.
  std::vector<int> sylows_in(const ElemSet& u, int p) {
    uint64_t key = (static_cast<uint64_t>(sub_index(u)) << 32) | static_cast<uint32_t>(p);
    auto it = sylow_cache_.find(key);
    if (it != sylow_cache_.end()) return it->second;
    int target = p_part(u.count(), p);
    std::vector<int> out;
    const SubgroupLattice& lat = lattice();
    for (int i = 0; i < lat.size(); ++i)
      if (lat.at(i).count() == target && lat.at(i).subset_of(u)) out.push_back(i);
    detail::require(!out.empty() && static_cast<int>(out.size()) % p == 1 &&
                        u.count() % static_cast<int>(out.size()) == 0,
                    "Sylow count violation in '" + g.id + "'");
    sylow_cache_.emplace(key, out);
    return out;
  }

  // Subnormality of H in U by iterated normal closures: the chain
  // U >= H^U >= H^{H^U} >= ... reaches H exactly when H is subnormal in U.
  bool is_subnormal_in(const ElemSet& u, const ElemSet& h) {
    ElemSet k = u;
    while (h != k) {
      ElemSet next = normal_closure_in(g, k, h);
      if (next == k) return false;
      k = next;
    }
    return true;
  }

  std::vector<int> subnormal_in(const ElemSet& u) {
    std::vector<int> out;
    for (int i : subgroups_in(u))
      if (is_subnormal_in(u, sub(i))) out.push_back(i);
    return out;
  }

  // ---- cached geometry ----

  int normalizer_idx(int sub_idx) {
    auto it = normalizer_cache_.find(sub_idx);
    if (it != normalizer_cache_.end()) return it->second;
    int n = sub_index(normalizer(g, sub(sub_idx)));
    normalizer_cache_.emplace(sub_idx, n);
    return n;
  }

  int centralizer_idx(int sub_idx) {
    auto it = centralizer_cache_.find(sub_idx);
    if (it != centralizer_cache_.end()) return it->second;
    int c = sub_index(centralizer(g, sub(sub_idx)));
    centralizer_cache_.emplace(sub_idx, c);
    return c;
  }

  // ---- realization and quotients ----

  const Realized& realized(int sub_idx) {
    auto it = realized_.find(sub_idx);
    if (it == realized_.end())
      it = realized_.emplace(sub_idx, std::make_unique<Realized>(realize_subgroup(g, sub(sub_idx)))).first;
    return *it->second;
  }

  struct QuotientCtx {
    Quotient q;
    std::shared_ptr<GroupContext> ctx;
  };

  // Quotient of the full group by a normal subgroup, with its own context.
  const QuotientCtx& quotient_ctx(int normal_idx) {
    auto it = quotients_.find(normal_idx);
    if (it == quotients_.end()) {
      detail::require(lattice().is_normal(normal_idx), "quotient by a non-normal subgroup");
      auto qc = std::make_unique<QuotientCtx>();
      qc->q = quotient_group(g, sub(normal_idx));
      qc->ctx = std::make_shared<GroupContext>(qc->q.grp, max_subgroups);
      it = quotients_.emplace(normal_idx, std::move(qc)).first;
    }
    return *it->second;
  }

  // Is the realized subgroup supersolvable (all chief factors of prime
  // order)? Heavily reused by supplement scans, hence the cache.
  bool sub_supersolvable(int sub_idx) {
    auto it = supersolvable_cache_.find(sub_idx);
    if (it != supersolvable_cache_.end()) return it->second != 0;
    bool val;
    if (sub(sub_idx).count() == 1) {
      val = true;
    } else {
      const Realized& r = realized(sub_idx);
      val = true;
      for (const ChiefFactor& f : chief_series(r.grp))
        if (!is_prime(f.order)) {
          val = false;
          break;
        }
    }
    supersolvable_cache_.emplace(sub_idx, val ? 1 : 0);
    return val;
  }

  // Scratch caches owned here, filled by the supplement/characteristic
  // subgroup routines; keys pack (ambient_idx << 32) | sub_idx.
  std::unordered_map<uint64_t, char> spermutable_cache_;
  std::unordered_map<uint64_t, int> frattini_cache_;
  std::unordered_map<uint64_t, int> core_cache_;
  std::unordered_map<uint64_t, int> sclosure_cache_;
  std::unordered_map<uint64_t, std::shared_ptr<const SupplementProfile>> profile_cache_;

  static uint64_t pack(int ambient_idx, int sub_idx) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(ambient_idx)) << 32) |
           static_cast<uint32_t>(sub_idx);
  }

 private:
  std::optional<SubgroupLattice> lat_;
  std::vector<int> elem_order_;
  std::vector<int> elem_class_id_;
  std::vector<std::vector<int>> elem_classes_;
  std::optional<ElemSet> center_;
  std::vector<int> primes_;
  std::unordered_map<int, int> normalizer_cache_;
  std::unordered_map<int, int> centralizer_cache_;
  std::unordered_map<int, std::unique_ptr<Realized>> realized_;
  std::unordered_map<int, std::unique_ptr<QuotientCtx>> quotients_;
  std::unordered_map<int, char> supersolvable_cache_;
  std::unordered_map<uint64_t, std::vector<int>> sylow_cache_;
};

}  // namespace fusionlab
