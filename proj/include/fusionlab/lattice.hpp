// Full subgroup lattice of a finite group, plus chief series machinery.
//
// Enumeration is the classical closure: start from all cyclic subgroups and
// repeatedly join pairs until nothing new appears. Subgroups are stored in a
// canonical order (size, then lexicographic member list) so downstream output
// is deterministic.
#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "fusionlab/elemset.hpp"
#include "fusionlab/error.hpp"
#include "fusionlab/group.hpp"

namespace fusionlab {

struct SubgroupLattice {
  std::vector<ElemSet> subs;  // canonical order
  std::unordered_map<ElemSet, int, ElemSetHash> index;
  std::vector<char> normal_;
  std::vector<int> conj_class_id;
  std::vector<std::vector<int>> conj_classes;  // each class sorted ascending
  int trivial_idx = -1;
  int full_idx = -1;

  int size() const { return static_cast<int>(subs.size()); }
  const ElemSet& at(int i) const { return subs[static_cast<size_t>(i)]; }
  bool is_normal(int i) const { return normal_[static_cast<size_t>(i)] != 0; }
  int index_of(const ElemSet& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
  }
  bool includes(int big, int small) const { return at(small).subset_of(at(big)); }

  std::vector<std::pair<int, int>> inclusion_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b)
        if (a != b && at(a).proper_subset_of(at(b))) out.emplace_back(a, b);
    return out;
  }
};

inline SubgroupLattice all_subgroups(const Group& g, int max_subgroups = 100000) {
  std::vector<ElemSet> found;
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  auto add = [&](const ElemSet& s) -> bool {
    if (seen.emplace(s, static_cast<int>(found.size())).second) {
      found.push_back(s);
      if (static_cast<int>(found.size()) > max_subgroups)
        throw ResourceLimitError("subgroup lattice of '" + g.id + "' exceeds " +
                                 std::to_string(max_subgroups) + " subgroups");
      return true;
    }
    return false;
  };
  add(g.trivial_set());
  for (int x = 1; x < g.order; ++x) add(generated_subgroup(g, ElemSet::single(g.order, x)));
  // Pairwise join closure. New subgroups are appended and themselves joined
  // against everything already present.
  for (size_t a = 1; a < found.size(); ++a) {
    for (size_t b = 0; b < a; ++b) {
      const ElemSet& A = found[a];
      const ElemSet& B = found[b];
      if (A.subset_of(B) || B.subset_of(A)) continue;
      add(generated_subgroup(g, A | B));
    }
  }

  SubgroupLattice lat;
  lat.subs = std::move(found);
  std::sort(lat.subs.begin(), lat.subs.end(), ElemSet::canon_less);
  for (int i = 0; i < lat.size(); ++i) lat.index.emplace(lat.subs[static_cast<size_t>(i)], i);
  lat.trivial_idx = lat.index.at(g.trivial_set());
  lat.full_idx = lat.index.at(g.full_set());

  lat.normal_.assign(lat.subs.size(), 0);
  lat.conj_class_id.assign(lat.subs.size(), -1);
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.conj_class_id[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> cls{i};
    for (int c = 0; c < g.order; ++c) {
      ElemSet img = conjugate_subgroup(g, lat.at(i), c);
      int j = lat.index.at(img);
      if (std::find(cls.begin(), cls.end(), j) == cls.end()) cls.push_back(j);
    }
    std::sort(cls.begin(), cls.end());
    int cid = static_cast<int>(lat.conj_classes.size());
    for (int j : cls) lat.conj_class_id[static_cast<size_t>(j)] = cid;
    if (cls.size() == 1) lat.normal_[static_cast<size_t>(cls[0])] = 1;
    lat.conj_classes.push_back(std::move(cls));
  }
  return lat;
}

// Minimal normal subgroups computed directly from element normal closures,
// with no lattice required. Used by chief series so quotient towers stay
// cheap.
inline std::vector<ElemSet> minimal_normal_subgroups_direct(const Group& g) {
  std::vector<ElemSet> closures;
  for (int x = 1; x < g.order; ++x) {
    ElemSet cl = normal_closure_in(g, g.full_set(), ElemSet::single(g.order, x));
    if (std::find(closures.begin(), closures.end(), cl) == closures.end())
      closures.push_back(cl);
  }
  // A minimal normal subgroup is a normal closure of one of its nonidentity
  // elements, so the inclusion-minimal closures are exactly the minimal
  // normal subgroups.
  std::vector<ElemSet> out;
  for (const ElemSet& c : closures) {
    bool minimal = true;
    for (const ElemSet& d : closures)
      if (d.proper_subset_of(c)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), ElemSet::canon_less);
  return out;
}

// One chief factor: the normal pair N_prev < N_next of G with nothing normal
// strictly between.
struct ChiefFactor {
  ElemSet below;
  ElemSet above;
  int order = 0;  // |above| / |below|
};

namespace detail {

// Composes the projection maps of the quotient tower built so far:
// parent element -> element of the current quotient group.
struct Tower {
  const Group* top;             // current quotient group (owned by stack)
  std::vector<int> down;        // original index -> current quotient index
};

inline std::vector<ChiefFactor> chief_series_impl(const Group& g, const ElemSet* through) {
  std::vector<ChiefFactor> factors;
  // Work on successive quotients; `down[x]` maps an original element to its
  // image, `cur` owns the current quotient group.
  std::vector<int> down(static_cast<size_t>(g.order));
  for (int i = 0; i < g.order; ++i) down[static_cast<size_t>(i)] = i;
  Group cur = g;
  ElemSet reached = g.trivial_set();
  ElemSet target = through ? *through : g.trivial_set();
  bool below_target = through != nullptr && target.count() > 1;

  while (cur.order > 1) {
    std::vector<ElemSet> mins = minimal_normal_subgroups_direct(cur);
    require(!mins.empty(), "nontrivial group with no minimal normal subgroup");
    const ElemSet* chosen = nullptr;
    if (below_target) {
      // Target image in the current quotient.
      ElemSet timg(cur.order);
      target.for_each([&](int x) { timg.set(down[static_cast<size_t>(x)]); });
      if (timg.count() > 1) {
        for (const ElemSet& m : mins)
          if (m.subset_of(timg)) {
            chosen = &m;
            break;
          }
        require(chosen != nullptr,
                "chief series: no minimal normal subgroup below the requested subgroup");
      } else {
        below_target = false;
      }
    }
    if (chosen == nullptr) chosen = &mins.front();

    // Preimage of the chosen minimal normal subgroup in the original group.
    ElemSet pre(g.order);
    for (int x = 0; x < g.order; ++x)
      if (chosen->test(down[static_cast<size_t>(x)])) pre.set(x);
    ChiefFactor f;
    f.below = reached;
    f.above = pre;
    f.order = pre.count() / reached.count();
    factors.push_back(f);
    reached = pre;

    Quotient q = quotient_group(cur, *chosen);
    for (int x = 0; x < g.order; ++x)
      down[static_cast<size_t>(x)] = q.hom.image[static_cast<size_t>(down[static_cast<size_t>(x)])];
    cur = std::move(q.grp);
  }
  return factors;
}

}  // namespace detail

// Chief series 1 = N_0 < N_1 < ... < N_k = G, each factor a minimal normal
// subgroup of the quotient above it. Deterministic: at every level the
// canonically smallest minimal normal subgroup is taken.
inline std::vector<ChiefFactor> chief_series(const Group& g) {
  return detail::chief_series_impl(g, nullptr);
}

// Same, but factors below `through` stay inside it, so `through` appears as
// one of the terms. Requires `through` normal in g.
inline std::vector<ChiefFactor> chief_series_through(const Group& g, const ElemSet& through) {
  detail::precondition(is_subgroup_set(g, through) && normalizes(g, g.full_set(), through),
                       "chief_series_through requires a normal subgroup");
  return detail::chief_series_impl(g, &through);
}

}  // namespace fusionlab
