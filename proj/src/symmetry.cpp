#include "omt/symmetry.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

#include "omt/error.hpp"
#include "omt/faces.hpp"

namespace omt {

namespace {

// Sign comparison result of chi∘p against chi over all sorted subsets.
struct MapFit {
  bool abs_ok = true;    // zero patterns agree
  bool plus_ok = true;   // chi∘p == chi on every subset seen so far
  bool minus_ok = true;  // chi∘p == -chi
};

MapFit fit_of(const Chirotope& chi, const Permutation& p) {
  MapFit fit;
  int r = chi.rank(), n = chi.ground_size();
  if (p.size() != n) throw std::invalid_argument("permutation size mismatch");
  if (r == 0) return fit;
  std::vector<int> s = first_subset(r);
  std::array<int, 32> img;
  do {
    Sign v = chi.sorted_value(s);
    for (int i = 0; i < r; ++i) img[i] = p(s[i]);
    Sign w = chi.value(std::span<const int>(img.data(), r));
    if ((v == Sign::Zero) != (w == Sign::Zero)) {
      fit.abs_ok = fit.plus_ok = fit.minus_ok = false;
      return fit;
    }
    if (v != Sign::Zero) {
      if (w != v) fit.plus_ok = false;
      if (w != -v) fit.minus_ok = false;
    }
  } while (next_subset(s, n));
  return fit;
}

}  // namespace

SymmetryKind classify_permutation(const Chirotope& chi, const Permutation& p) {
  MapFit fit = fit_of(chi, p);
  if (!fit.abs_ok) return SymmetryKind::None;
  if (fit.plus_ok) return SymmetryKind::Rotation;
  if (fit.minus_ok) return SymmetryKind::Reflection;
  return SymmetryKind::MOnly;
}

bool verify_m_symmetry(const Chirotope& chi, const Permutation& p) {
  return fit_of(chi, p).abs_ok;
}

namespace {

struct GroupSearch {
  const Chirotope& chi;
  int n, r;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
  std::vector<int> img;        // img[i-1] = image of i (0 = unassigned)
  std::vector<bool> used;      // used[v-1]
  // For each k, the sorted r-subsets of {1..k} that contain k, with their
  // chirotope values: checking these at depth k covers every subset once.
  std::vector<std::vector<std::pair<std::vector<int>, Sign>>> checks;
  SymmetryGroup out;

  GroupSearch(const Chirotope& c, std::uint64_t cap)
      : chi(c), n(c.ground_size()), r(c.rank()), max_nodes(cap),
        img(n, 0), used(n, false), checks(n + 1) {
    if (r >= 1) {
      std::vector<int> s = first_subset(r);
      do {
        checks[s.back()].emplace_back(s, chi.sorted_value(s));
      } while (next_subset(s, n));
    }
  }

  // sign_mode: 0 undecided, +1 rotation branch, -1 reflection branch.
  void descend(int k, int sign_mode) {
    if (k > n) {
      // sign_mode 0 can only survive to a full map if the chirotope were
      // zero, which the caller excludes.
      out.elements.emplace_back(img);
      out.kinds.push_back(sign_mode > 0 ? SymmetryKind::Rotation
                                        : SymmetryKind::Reflection);
      return;
    }
    std::array<int, 32> buf;
    for (int v = 1; v <= n; ++v) {
      if (used[v - 1]) continue;
      if (++nodes > max_nodes)
        throw ValidationError("symmetry search exceeded the node cap");
      img[k - 1] = v;
      used[v - 1] = true;
      int mode = sign_mode;
      bool ok = true;
      for (const auto& [subset, value] : checks[k]) {
        for (std::size_t i = 0; i < subset.size(); ++i)
          buf[i] = img[subset[i] - 1];
        Sign w = chi.value(std::span<const int>(buf.data(), subset.size()));
        if ((value == Sign::Zero) != (w == Sign::Zero)) {
          ok = false;
          break;
        }
        if (value == Sign::Zero) continue;
        int ratio = w == value ? 1 : -1;
        if (mode == 0) mode = ratio;
        else if (mode != ratio) {
          ok = false;
          break;
        }
      }
      if (ok) descend(k + 1, mode);
      used[v - 1] = false;
      img[k - 1] = 0;
    }
  }
};

}  // namespace

SymmetryGroup symmetry_group(const Chirotope& chi, const SymmetryOptions& options) {
  if (chi.is_zero_map())
    throw std::invalid_argument("symmetry_group: zero chirotope");
  GroupSearch search(chi, options.max_nodes);
  search.descend(1, 0);
  // Lexicographic image generation already yields canonical order with the
  // identity first.
  return std::move(search.out);
}

namespace {

std::vector<Permutation> close_under_product(std::vector<Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("identify_group: empty input");
  std::set<Permutation> seen;
  std::vector<Permutation> frontier;
  auto add = [&](const Permutation& p) {
    if (seen.insert(p).second) frontier.push_back(p);
  };
  add(Permutation::identity(gens[0].size()));
  for (const auto& g : gens) add(g);
  while (!frontier.empty()) {
    Permutation p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      add(p * g);
      add(g * p);
    }
  }
  return {seen.begin(), seen.end()};
}

bool generates(const std::vector<Permutation>& gens, std::size_t order) {
  return close_under_product(gens).size() == order;
}

// Greedy small generating set, deterministic in canonical element order.
std::vector<Permutation> greedy_generators(const std::vector<Permutation>& g) {
  std::vector<Permutation> gens;
  std::set<Permutation> span;
  span.insert(Permutation::identity(g[0].size()));
  for (const auto& p : g) {
    if (span.count(p)) continue;
    gens.push_back(p);
    auto closed = close_under_product(gens);
    span = std::set<Permutation>(closed.begin(), closed.end());
    if (span.size() == g.size()) break;
  }
  return gens;
}

}  // namespace

GroupDescriptor identify_group(const std::vector<Permutation>& elements) {
  auto group = close_under_product(elements);
  std::sort(group.begin(), group.end());

  GroupDescriptor desc;
  desc.order = group.size();
  std::vector<int> ord(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    ord[i] = group[i].order();
    desc.element_orders[ord[i]]++;
  }
  std::size_t n_ord = desc.order;

  // Cyclic first: a single element of full order.
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (static_cast<std::size_t>(ord[i]) == n_ord) {
      desc.name = "C_" + std::to_string(n_ord);
      desc.parameter = static_cast<int>(n_ord);
      desc.generators = {group[i]};
      return desc;
    }
  }

  // Dihedral: an index-2 cyclic subgroup plus an inverting involution
  // outside it. <g, h> then has at least 2k elements, hence everything.
  if (n_ord % 2 == 0 && n_ord >= 4) {
    int k = static_cast<int>(n_ord / 2);
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (ord[i] != k) continue;
      const Permutation& g = group[i];
      std::set<Permutation> h_span;
      {
        Permutation p = Permutation::identity(g.size());
        for (int t = 0; t < k; ++t) {
          h_span.insert(p);
          p = p * g;
        }
      }
      Permutation ginv = g.inverse();
      for (std::size_t j = 0; j < group.size(); ++j) {
        if (ord[j] != 2 || h_span.count(group[j])) continue;
        const Permutation& h = group[j];
        if (h * g * h.inverse() == ginv) {
          desc.name = "D_" + std::to_string(n_ord);
          desc.parameter = k;
          desc.generators = {g, h};
          return desc;
        }
      }
    }
  }

  // The three exceptional rotation groups, pinned down by their order
  // profiles (unique among groups of orders 12, 24, 60).
  auto profile_is = [&](std::map<int, int> want) { return desc.element_orders == want; };
  if (n_ord == 12 && profile_is({{1, 1}, {2, 3}, {3, 8}})) desc.name = "A4";
  else if (n_ord == 24 && profile_is({{1, 1}, {2, 9}, {3, 8}, {4, 6}})) desc.name = "S4";
  else if (n_ord == 60 && profile_is({{1, 1}, {2, 15}, {3, 20}, {5, 24}})) desc.name = "A5";
  else desc.name = "other";

  desc.generators = greedy_generators(group);
  if (!desc.generators.empty() && !generates(desc.generators, n_ord))
    throw ValidationError("identify_group: generator witness failed");
  return desc;
}

std::vector<Orbit> orbits(const std::vector<Permutation>& group,
                          const Chirotope& chi) {
  int n = chi.ground_size();
  std::vector<int> parent(n + 1);
  for (int i = 0; i <= n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : group) {
    if (p.size() != n) throw std::invalid_argument("orbits: size mismatch");
    for (int e = 1; e <= n; ++e) {
      int a = find(e), b = find(p(e));
      if (a != b) parent[a] = b;
    }
  }
  std::map<int, Orbit> by_root;
  for (int e = 1; e <= n; ++e) by_root[find(e)].elements.push_back(e);
  std::vector<Orbit> out;
  for (auto& [root, orb] : by_root) {
    orb.rank = chi.rank_of(orb.elements);
    out.push_back(std::move(orb));
  }
  return out;
}

FixedRankResult fixed_rank_check(const Chirotope& chi, const Permutation& p) {
  if (!chi.loops().empty())
    throw std::invalid_argument("fixed_rank_check: chirotope has loops");
  if (classify_permutation(chi, p) != SymmetryKind::Rotation)
    throw std::invalid_argument("fixed_rank_check: p is not a rotation");

  // Nontrivial: some element moves to a non-parallel image.
  auto rep = simplicity_report(chi);
  auto parallel = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(rep.parallel.begin(), rep.parallel.end(),
                              std::make_pair(a, b));
  };
  bool nontrivial = false;
  for (int e = 1; e <= chi.ground_size() && !nontrivial; ++e)
    if (p(e) != e && !parallel(e, p(e))) nontrivial = true;
  if (!nontrivial)
    throw std::invalid_argument(
        "fixed_rank_check: rotation moves every element within its parallel class");

  FixedRankResult res;
  for (int e = 1; e <= chi.ground_size(); ++e)
    if (p(e) == e) res.fixed_elements.push_back(e);
  res.fixed_rank = chi.rank_of(res.fixed_elements);
  res.bound_holds = res.fixed_rank <= chi.rank() - 2;
  return res;
}

RigidityVerdict rigidity_check(const Chirotope& chi, const Permutation& p,
                               const Permutation& q, const std::vector<int>& x) {
  if (classify_permutation(chi, p) != SymmetryKind::Rotation ||
      classify_permutation(chi, q) != SymmetryKind::Rotation)
    throw std::invalid_argument("rigidity_check: both maps must be rotations");
  for (int e : x) {
    if (e < 1 || e > chi.ground_size())
      throw std::invalid_argument("rigidity_check: element out of range");
    if (p(e) != q(e))
      throw std::invalid_argument("rigidity_check: p and q differ on the subset");
  }
  if (chi.rank_of(x) < chi.rank() - 1) return RigidityVerdict::NotApplicable;
  return p == q ? RigidityVerdict::Holds : RigidityVerdict::Violated;
}

namespace {

void require_rotation_subgroup(const Chirotope& chi,
                               const std::vector<Permutation>& g,
                               const char* who) {
  if (g.empty()) throw std::invalid_argument(std::string(who) + ": empty subgroup");
  std::set<Permutation> set(g.begin(), g.end());
  for (const auto& p : g) {
    if (classify_permutation(chi, p) != SymmetryKind::Rotation)
      throw std::invalid_argument(std::string(who) + ": non-rotation element");
    for (const auto& q : g)
      if (!set.count(p * q))
        throw std::invalid_argument(std::string(who) + ": set is not closed");
  }
}

void require_rank4_simple_acyclic(const Chirotope& chi, const char* who) {
  if (chi.rank() != 4)
    throw std::invalid_argument(std::string(who) + ": rank must be 4");
  if (!simplicity_report(chi).simple())
    throw std::invalid_argument(std::string(who) + ": chirotope must be simple");
  if (!is_acyclic(chi))
    throw std::invalid_argument(std::string(who) + ": chirotope must be acyclic");
}

}  // namespace

CyclicityResult cyclicity_criterion(const Chirotope& chi,
                                    const std::vector<Permutation>& g) {
  require_rank4_simple_acyclic(chi, "cyclicity_criterion");
  require_rotation_subgroup(chi, g, "cyclicity_criterion");

  CyclicityResult res;
  GroupDescriptor desc = identify_group(g);
  res.group_name = desc.name;
  res.group_cyclic = desc.name.rfind("C_", 0) == 0;
  for (const auto& orb : orbits(g, chi))
    res.max_orbit_rank = std::max(res.max_orbit_rank, orb.rank);
  res.criterion_consistent = res.group_cyclic == (res.max_orbit_rank <= 3);
  return res;
}

MaxCyclicReport maximal_cyclic_intersection_check(const Chirotope& chi) {
  require_rank4_simple_acyclic(chi, "maximal_cyclic_intersection_check");
  auto rotations = symmetry_group(chi).rotations();

  // Cyclic subgroups generated by each element, deduped, then filtered to
  // the inclusion-maximal ones.
  std::vector<std::set<Permutation>> cyclic;
  std::set<std::vector<Permutation>> seen;
  for (const auto& p : rotations) {
    auto sub = close_under_product({p});
    std::sort(sub.begin(), sub.end());
    if (seen.insert(sub).second)
      cyclic.emplace_back(sub.begin(), sub.end());
  }
  std::vector<std::set<Permutation>> maximal;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < cyclic.size() && !contained; ++j) {
      if (i == j || cyclic[j].size() <= cyclic[i].size()) continue;
      contained = std::includes(cyclic[j].begin(), cyclic[j].end(),
                                cyclic[i].begin(), cyclic[i].end());
    }
    if (!contained) maximal.push_back(cyclic[i]);
  }

  MaxCyclicReport rep;
  rep.count = maximal.size();
  rep.all_intersections_trivial = true;
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      std::vector<Permutation> common;
      std::set_intersection(maximal[i].begin(), maximal[i].end(),
                            maximal[j].begin(), maximal[j].end(),
                            std::back_inserter(common));
      if (common.size() > 1) {  // more than the identity
        rep.all_intersections_trivial = false;
        rep.offending.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return rep;
}

FlatOrderingsResult flat_orderings(const Chirotope& chi,
                                   const std::vector<Permutation>& g) {
  require_rank4_simple_acyclic(chi, "flat_orderings");
  require_rotation_subgroup(chi, g, "flat_orderings");
  GroupDescriptor desc = identify_group(g);
  if (desc.name.rfind("C_", 0) != 0 || desc.order <= 2)
    throw std::invalid_argument("flat_orderings: need a cyclic subgroup of order > 2");

  FlatOrderingsResult res;
  {
    std::set<std::vector<int>> dedup;
    for (const auto& orb : orbits(g, chi)) {
      if (orb.rank != 3) continue;
      auto flat = chi.flat_closure(orb.elements);
      if (dedup.insert(flat).second) res.flats.push_back(flat);
    }
  }
  int m = static_cast<int>(res.flats.size());
  if (m < 2) {
    res.degenerate = true;
    return res;
  }

  auto covs = covectors(chi);
  int n = chi.ground_size();

  // perm[i] = flat index at stacking position i; valid when for every i some
  // covector vanishes on flat perm[i], is - on all earlier, + on all later.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  auto position_ok = [&](const std::vector<int>& order, int i) {
    std::vector<Sign> want(n + 1, Sign::Zero);
    std::vector<bool> constrained(n + 1, false);
    for (int j = 0; j < m; ++j) {
      Sign s = j < i ? Sign::Minus : (j > i ? Sign::Plus : Sign::Zero);
      for (int e : res.flats[order[j]]) {
        want[e] = s;
        constrained[e] = true;
      }
    }
    for (const auto& v : covs) {
      bool match = true;
      for (int e = 1; e <= n && match; ++e)
        if (constrained[e] && v[e] != want[e]) match = false;
      if (match) return true;
    }
    return false;
  };

  do {
    bool valid = true;
    for (int i = 0; i < m && valid; ++i) valid = position_ok(perm, i);
    if (valid) res.orderings.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  res.lemma_holds = res.orderings.size() == 2 &&
                    std::equal(res.orderings[0].begin(), res.orderings[0].end(),
                               res.orderings[1].rbegin());
  return res;
}

Rank4Classification classify_rank4(const Chirotope& chi) {
  require_rank4_simple_acyclic(chi, "classify_rank4");
  auto group = symmetry_group(chi);
  Rank4Classification res;
  res.full_group_order = group.elements.size();
  auto rotations = group.rotations();
  res.reflection_count = group.elements.size() - rotations.size();
  res.rotation_group = identify_group(rotations);
  const std::string& name = res.rotation_group.name;
  res.in_allowed_families = name.rfind("C_", 0) == 0 || name.rfind("D_", 0) == 0 ||
                            name == "A4" || name == "S4" || name == "A5";
  return res;
}

}  // namespace omt
