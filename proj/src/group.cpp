#include "tidykit/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>

namespace tidykit {

namespace {

std::atomic<std::uint64_t> next_uid{1};

constexpr int kHardOrderCap = 65535;   // elements are 16-bit indices
constexpr int kFullAssocLimit = 512;   // full O(n^3) associativity up to here

int initial_max_order() {
  if (const char* s = std::getenv("TIDYKIT_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= kHardOrderCap) return int(v);
  }
  return 5000;
}

int g_max_order = initial_max_order();

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

int max_group_order() { return g_max_order; }

void set_max_group_order(int n) {
  if (n < 1 || n > kHardOrderCap)
    fail("bad_parameter", "max group order must be between 1 and " +
                              std::to_string(kHardOrderCap));
  g_max_order = n;
}

namespace detail {

Group build_group(std::vector<std::uint16_t> mul, int n, std::string label,
                  bool force_full_assoc) {
  if (n < 1) fail("not_a_group", "table is empty");
  if (n > kHardOrderCap)
    fail("bad_parameter", "order " + std::to_string(n) + " exceeds the 16-bit cap");
  if (n > g_max_order)
    fail("order_bound_exceeded", "order " + std::to_string(n) +
                                     " exceeds the configured ceiling of " +
                                     std::to_string(g_max_order));

  auto at = [&](int a, int b) -> int { return mul[static_cast<std::size_t>(a) * n + b]; };

  // Cancellation: each row and column is a permutation of the elements.
  std::vector<int> seen(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int c = 0; c < n; ++c) {
      int v = at(r, c);
      if (seen[v] >= 0)
        fail("not_a_group", "row " + std::to_string(r) + " repeats value " +
                                std::to_string(v) + " (columns " +
                                std::to_string(seen[v]) + " and " +
                                std::to_string(c) + "), so cancellation fails");
      seen[v] = c;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int r = 0; r < n; ++r) {
      int v = at(r, c);
      if (seen[v] >= 0)
        fail("not_a_group", "column " + std::to_string(c) + " repeats value " +
                                std::to_string(v) + " (rows " +
                                std::to_string(seen[v]) + " and " +
                                std::to_string(r) + "), so cancellation fails");
      seen[v] = r;
    }
  }

  // Two-sided identity.
  int e = -1;
  for (int x = 0; x < n && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      ok = at(x, y) == y && at(y, x) == y;
    if (ok) e = x;
  }
  if (e < 0) fail("not_a_group", "no two-sided identity element");

  // Two-sided inverses. The row permutation property gives a unique right
  // inverse; it must also work from the left.
  for (int x = 0; x < n; ++x) {
    int y = -1;
    for (int c = 0; c < n; ++c)
      if (at(x, c) == e) {
        y = c;
        break;
      }
    if (at(y, x) != e)
      fail("not_a_group", "element " + std::to_string(x) +
                              " has right inverse " + std::to_string(y) +
                              " which is not a left inverse");
  }

  // Associativity: full scan for small tables, a fixed-seed sample of
  // 10*n^2 triples above the limit (callers can force the full scan).
  auto check_triple = [&](int a, int b, int c) {
    int u = at(at(a, b), c);
    int w = at(a, at(b, c));
    if (u != w)
      fail("not_a_group",
           "associativity fails at " + triple_str(a, b, c) + ": (a*b)*c = " +
               std::to_string(u) + " but a*(b*c) = " + std::to_string(w));
  };
  if (n <= kFullAssocLimit || force_full_assoc) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x7af1d00dULL);
    long long samples = 10LL * n * n;
    for (long long i = 0; i < samples; ++i) {
      int a = int(rng() % std::uint64_t(n));
      int b = int(rng() % std::uint64_t(n));
      int c = int(rng() % std::uint64_t(n));
      check_triple(a, b, c);
    }
  }

  // Renumber so the identity is element 0 (swap 0 <-> e).
  if (e != 0) {
    auto p = [&](int x) -> int { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<std::uint16_t> t(mul.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t[static_cast<std::size_t>(p(a)) * n + p(b)] = std::uint16_t(p(at(a, b)));
    mul.swap(t);
  }

  Group g;
  g.n_ = n;
  g.label_ = std::move(label);
  g.uid_ = next_uid.fetch_add(1);
  g.mul_ = std::move(mul);
  g.inv_.assign(static_cast<std::size_t>(n), 0);
  g.ord_.assign(static_cast<std::size_t>(n), 0);
  g.cyc_.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ElementSet s(g.uid_, n);
    s.set(0);
    int y = x, prev = 0, k = 1;
    while (y != 0) {
      s.set(y);
      prev = y;
      y = g.mul_[static_cast<std::size_t>(y) * n + x];
      ++k;
    }
    g.ord_[x] = k;
    g.inv_[x] = std::uint16_t(prev == 0 && x != 0 ? x : prev);
    g.cyc_.push_back(std::move(s));
  }
  g.inv_[0] = 0;
  return g;
}

}  // namespace detail

Group from_cayley_table(const std::vector<std::vector<int>>& table,
                        const std::string& label, bool force_full_validation) {
  int n = int(table.size());
  if (n == 0) fail("not_a_group", "table is empty");
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (int(table[r].size()) != n)
      fail("not_a_group", "row " + std::to_string(r) + " has " +
                              std::to_string(table[r].size()) +
                              " entries, expected " + std::to_string(n));
    for (int c = 0; c < n; ++c) {
      int v = table[r][c];
      if (v < 0 || v >= n)
        fail("not_a_group", "entry at (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") is " +
                                std::to_string(v) + ", outside 0.." +
                                std::to_string(n - 1));
      flat[static_cast<std::size_t>(r) * n + c] = std::uint16_t(v);
    }
  }
  return detail::build_group(std::move(flat), n, label, force_full_validation);
}

Group from_permutation_generators(const std::vector<std::vector<int>>& gens,
                                  const std::string& label) {
  // Validate the generators as permutations of a common point set.
  std::size_t m = gens.empty() ? 1 : gens[0].size();
  if (m == 0) fail("invalid_permutation", "generator on an empty point set");
  std::vector<char> hit(m);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& p = gens[gi];
    if (p.size() != m)
      fail("invalid_permutation",
           "generator " + std::to_string(gi) + " acts on " +
               std::to_string(p.size()) + " points, expected " +
               std::to_string(m));
    std::fill(hit.begin(), hit.end(), 0);
    for (int v : p) {
      if (v < 0 || v >= int(m) || hit[v])
        fail("invalid_permutation", "generator " + std::to_string(gi) +
                                        " is not a permutation of 0.." +
                                        std::to_string(m - 1));
      hit[v] = 1;
    }
  }

  // Breadth-first closure. Element 0 is the identity; new elements appear in
  // discovery order, expanding each known element by every generator (input
  // order) on the right.
  std::vector<int> id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = int(i);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[id] = 0;
  elems.push_back(id);
  int k = int(gens.size());
  std::vector<std::vector<std::uint16_t>> step;  // step[gi][x] = x * gen[gi]
  for (int gi = 0; gi < k; ++gi) step.emplace_back();
  struct Origin {
    int parent, gen;
  };
  std::vector<Origin> origin{{-1, -1}};
  std::vector<int> scratch(m);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (int gi = 0; gi < k; ++gi) {
      for (std::size_t pt = 0; pt < m; ++pt)
        scratch[pt] = gens[gi][static_cast<std::size_t>(elems[qi][pt])];
      auto it = index.find(scratch);
      int target;
      if (it != index.end()) {
        target = it->second;
      } else {
        target = int(elems.size());
        if (target >= g_max_order)
          fail("closure_too_large",
               "permutation closure exceeds the ceiling of " +
                   std::to_string(g_max_order) + " elements");
        index[scratch] = target;
        elems.push_back(scratch);
        origin.push_back({int(qi), gi});
      }
      step[gi].push_back(std::uint16_t(target));
    }
  }

  // Fill the table column by column in discovery order: if e = a * gen, then
  // x * e = (x * a) * gen, and the column for a is already complete.
  int n = int(elems.size());
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) flat[static_cast<std::size_t>(x) * n] = std::uint16_t(x);
  for (int eidx = 1; eidx < n; ++eidx) {
    int a = origin[eidx].parent, gi = origin[eidx].gen;
    for (int x = 0; x < n; ++x) {
      int xa = flat[static_cast<std::size_t>(x) * n + a];
      flat[static_cast<std::size_t>(x) * n + eidx] = step[gi][xa];
    }
  }
  return detail::build_group(std::move(flat), n, label, false);
}

namespace {

std::optional<ElementSet> closure_impl(const Group& g, const ElementSet& seed,
                                       int cap) {
  ElementSet s = g.empty_set();
  std::vector<int> mem;
  mem.reserve(64);
  auto add = [&](int x) -> bool {
    if (s.test(x)) return true;
    if (int(mem.size()) >= cap) return false;
    s.set(x);
    mem.push_back(x);
    return true;
  };
  if (!add(0)) return std::nullopt;
  for (int x : seed.elements())
    if (!add(x)) return std::nullopt;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (!add(g.mul(mem[i], mem[j]))) return std::nullopt;
      if (!add(g.mul(mem[j], mem[i]))) return std::nullopt;
    }
  return s;
}

}  // namespace

ElementSet generated_subgroup(const Group& g, const ElementSet& seed) {
  g.check_owns(seed);
  return *closure_impl(g, seed, g.order());
}

ElementSet generated_subgroup(const Group& g, const std::vector<int>& seed) {
  return generated_subgroup(g, g.set_of(seed));
}

std::optional<ElementSet> generated_subgroup_bounded(const Group& g,
                                                     const ElementSet& seed,
                                                     int cap) {
  g.check_owns(seed);
  return closure_impl(g, seed, cap);
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  g.check_owns(s);
  if (s.empty()) fail("empty_set", "is_subgroup needs a nonempty set");
  if (!s.test(0)) return false;
  int sz = s.count();
  if (sz == g.order()) return true;
  if (g.order() % sz != 0) return false;
  auto mem = s.elements();
  for (int a : mem)
    if (!s.test(g.inv(a))) return false;
  for (int a : mem)
    for (int b : mem)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

ElementSet conjugate_set(const Group& g, const ElementSet& s, int by) {
  g.check_owns(s);
  g.check_element(by);
  ElementSet out = g.empty_set();
  int bi = g.inv(by);
  for (int x : s.elements()) out.set(g.mul(g.mul(bi, x), by));
  return out;
}

ElementSet normal_closure(const Group& g, const ElementSet& s) {
  g.check_owns(s);
  ElementSet n = generated_subgroup(g, s);
  for (;;) {
    ElementSet extra = g.empty_set();
    bool grew = false;
    for (int t = 0; t < g.order(); ++t) {
      ElementSet c = conjugate_set(g, n, t);
      if (!c.is_subset_of(n)) {
        extra |= c;
        grew = true;
      }
    }
    if (!grew) return n;
    n = generated_subgroup(g, n | extra);
  }
}

std::vector<ElementSet> conjugacy_classes(const Group& g) {
  std::vector<ElementSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ElementSet c = g.empty_set();
    for (int t = 0; t < g.order(); ++t) {
      int y = g.conj_elem(x, t);
      if (!c.test(y)) {
        c.set(y);
        seen[y] = 1;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

SubgroupView subgroup_group(const Group& g, const ElementSet& members) {
  g.check_owns(members);
  if (!is_subgroup(g, members))
    fail("not_a_subgroup", "the given " + std::to_string(members.count()) +
                               " elements do not form a subgroup of \"" +
                               g.label() + "\"");
  auto mem = members.elements();
  int m = int(mem.size());
  std::vector<int> to_local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) to_local[static_cast<std::size_t>(mem[i])] = i;
  std::vector<std::uint16_t> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] =
          std::uint16_t(to_local[static_cast<std::size_t>(g.mul(mem[i], mem[j]))]);
  SubgroupView v{detail::build_group(std::move(t), m,
                                     g.label() + "|H" + std::to_string(m), false),
                 std::move(mem), std::move(to_local)};
  return v;
}

ElementSet restrict_to(const SubgroupView& v, const ElementSet& parent_set) {
  if (parent_set.universe() != int(v.to_local.size()))
    fail("set_owner_mismatch", "set does not come from this view's parent group");
  ElementSet out = v.group.empty_set();
  for (int x : parent_set.elements())
    if (v.to_local[static_cast<std::size_t>(x)] >= 0) out.set(v.to_local[static_cast<std::size_t>(x)]);
  return out;
}

ElementSet lift_from(const SubgroupView& v, const Group& parent,
                     const ElementSet& local_set) {
  v.group.check_owns(local_set);
  if (parent.order() != int(v.to_local.size()))
    fail("set_owner_mismatch", "group is not this view's parent");
  ElementSet out = parent.empty_set();
  for (int x : local_set.elements()) out.set(v.to_parent[static_cast<std::size_t>(x)]);
  return out;
}

QuotientMap quotient(const Group& g, const ElementSet& n) {
  g.check_owns(n);
  if (!is_subgroup(g, n))
    fail("not_a_subgroup",
         "quotient kernel is not a subgroup of \"" + g.label() + "\"");
  for (int t = 0; t < g.order(); ++t)
    if (conjugate_set(g, n, t) != n)
      fail("not_normal", "kernel of size " + std::to_string(n.count()) +
                             " is not normal in \"" + g.label() +
                             "\" (conjugation by " + std::to_string(t) +
                             " moves it)");
  auto members = n.elements();
  int m = g.order() / int(members.size());
  std::vector<int> proj(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  reps.reserve(static_cast<std::size_t>(m));
  for (int x = 0; x < g.order(); ++x) {
    if (proj[x] >= 0) continue;
    int c = int(reps.size());
    reps.push_back(x);
    for (int kk : members) proj[static_cast<std::size_t>(g.mul(x, kk))] = c;
  }
  std::vector<std::uint16_t> t(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      t[static_cast<std::size_t>(a) * m + b] =
          std::uint16_t(proj[static_cast<std::size_t>(g.mul(reps[a], reps[b]))]);
  QuotientMap q{n,
                detail::build_group(std::move(t), m,
                                    g.label() + "/N" +
                                        std::to_string(members.size()),
                                    false),
                std::move(proj)};
  return q;
}

ElementSet project_set(const QuotientMap& q, const ElementSet& parent_set) {
  if (parent_set.universe() != int(q.proj.size()))
    fail("set_owner_mismatch", "set does not come from this quotient's parent");
  ElementSet out = q.child.empty_set();
  for (int x : parent_set.elements()) out.set(q.proj[static_cast<std::size_t>(x)]);
  return out;
}

ElementSet preimage_set(const QuotientMap& q, const Group& parent,
                        const ElementSet& child_set) {
  q.child.check_owns(child_set);
  if (parent.order() != int(q.proj.size()))
    fail("set_owner_mismatch", "group is not this quotient's parent");
  ElementSet out = parent.empty_set();
  for (int x = 0; x < parent.order(); ++x)
    if (child_set.test(q.proj[static_cast<std::size_t>(x)])) out.set(x);
  return out;
}

Group direct_product(const Group& a, const Group& b) {
  long long n = 1LL * a.order() * b.order();
  if (n > g_max_order)
    fail("closure_too_large", "direct product order " + std::to_string(n) +
                                  " exceeds the ceiling of " +
                                  std::to_string(g_max_order));
  int nb = b.order(), nn = int(n);
  std::vector<std::uint16_t> t(static_cast<std::size_t>(nn) * nn);
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < nb; ++y1) {
      std::size_t row = static_cast<std::size_t>(x1 * nb + y1) * nn;
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          t[row + static_cast<std::size_t>(x2 * nb + y2)] =
              std::uint16_t(a.mul(x1, x2) * nb + b.mul(y1, y2));
    }
  return detail::build_group(std::move(t), nn, a.label() + " x " + b.label(),
                             false);
}

Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<int>>& act) {
  if (int(act.size()) != h.order())
    fail("not_an_action", "need one automorphism per element of \"" +
                              h.label() + "\", got " +
                              std::to_string(act.size()));
  int nn = n.order(), nh = h.order();
  std::vector<char> hit(static_cast<std::size_t>(nn), 0);
  for (int t = 0; t < nh; ++t) {
    const auto& p = act[t];
    if (int(p.size()) != nn)
      fail("not_an_automorphism", "map for element " + std::to_string(t) +
                                      " has wrong size");
    std::fill(hit.begin(), hit.end(), 0);
    for (int v : p) {
      if (v < 0 || v >= nn || hit[v])
        fail("not_an_automorphism",
             "map for element " + std::to_string(t) + " is not a bijection");
      hit[v] = 1;
    }
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y)
        if (p[static_cast<std::size_t>(n.mul(x, y))] != n.mul(p[x], p[y]))
          fail("not_an_automorphism",
               "map for element " + std::to_string(t) +
                   " does not respect products at (" + std::to_string(x) +
                   ", " + std::to_string(y) + ")");
  }
  for (int t1 = 0; t1 < nh; ++t1)
    for (int t2 = 0; t2 < nh; ++t2) {
      const auto& composed = act[static_cast<std::size_t>(h.mul(t1, t2))];
      for (int x = 0; x < nn; ++x)
        if (composed[x] != act[t1][static_cast<std::size_t>(act[t2][x])])
          fail("not_an_action",
               "maps do not compose along the product of elements " +
                   std::to_string(t1) + " and " + std::to_string(t2));
    }

  long long total = 1LL * nn * nh;
  if (total > g_max_order)
    fail("closure_too_large", "semidirect product order " +
                                  std::to_string(total) +
                                  " exceeds the ceiling of " +
                                  std::to_string(g_max_order));
  int sz = int(total);
  std::vector<std::uint16_t> t(static_cast<std::size_t>(sz) * sz);
  for (int n1 = 0; n1 < nn; ++n1)
    for (int h1 = 0; h1 < nh; ++h1) {
      std::size_t row = static_cast<std::size_t>(n1 * nh + h1) * sz;
      const auto& twist = act[h1];
      for (int n2 = 0; n2 < nn; ++n2)
        for (int h2 = 0; h2 < nh; ++h2)
          t[row + static_cast<std::size_t>(n2 * nh + h2)] = std::uint16_t(
              n.mul(n1, twist[n2]) * nh + h.mul(h1, h2));
    }
  return detail::build_group(std::move(t), sz, n.label() + " : " + h.label(),
                             false);
}

// --- isomorphism -------------------------------------------------------------

namespace {

// Per-element key (order, class size, centralizer order); any isomorphism
// must match keys, which cuts the candidate lists down sharply.
std::vector<std::uint64_t> iso_keys(const Group& g) {
  auto classes = conjugacy_classes(g);
  std::vector<int> class_size(static_cast<std::size_t>(g.order()), 0);
  for (const auto& c : classes) {
    int sz = c.count();
    for (int x : c.elements()) class_size[static_cast<std::size_t>(x)] = sz;
  }
  std::vector<std::uint64_t> key(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    int cent = 0;
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++cent;
    key[static_cast<std::size_t>(x)] = (std::uint64_t(g.ord(x)) << 40) |
                          (std::uint64_t(class_size[static_cast<std::size_t>(x)]) << 20) |
                          std::uint64_t(cent);
  }
  return key;
}

// Short generating sequence, greedily picking the element whose addition
// grows the generated subgroup most (ties broken by least index, so the
// sequence is deterministic).
std::vector<int> greedy_generators(const Group& g) {
  std::vector<int> gens;
  ElementSet span = generated_subgroup(g, std::vector<int>{});
  while (span.count() < g.order()) {
    int best = -1, best_size = -1;
    for (int x = 0; x < g.order(); ++x) {
      if (span.test(x)) continue;
      ElementSet s = span;
      s.set(x);
      int sz = generated_subgroup(g, s).count();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    ElementSet s = span;
    s.set(best);
    span = generated_subgroup(g, s);
  }
  return gens;
}

// Extend the partial map phi (currently a full isomorphism on the subgroup
// listed in `domain`) by g -> c, closing under products. Returns false and
// leaves cleanup to the caller when a contradiction appears.
bool try_extend(const Group& A, const Group& B, std::vector<int>& phi,
                std::vector<int>& psi, std::vector<int>& domain,
                std::size_t old_size, int g, int c) {
  auto define = [&](int x, int y) -> bool {
    if (phi[static_cast<std::size_t>(x)] != -1) return phi[static_cast<std::size_t>(x)] == y;
    if (psi[static_cast<std::size_t>(y)] != -1) return false;
    phi[static_cast<std::size_t>(x)] = y;
    psi[static_cast<std::size_t>(y)] = x;
    domain.push_back(x);
    return true;
  };
  if (!define(g, c)) return false;
  for (std::size_t i = old_size; i < domain.size(); ++i) {
    int x = domain[i];
    for (std::size_t j = 0; j < domain.size(); ++j) {
      int d = domain[j];
      if (!define(A.mul(x, d), B.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(d)])))
        return false;
      if (!define(A.mul(d, x), B.mul(phi[static_cast<std::size_t>(d)], phi[static_cast<std::size_t>(x)])))
        return false;
    }
  }
  // Verify the map is multiplicative on the whole enlarged subgroup.
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = 0; j < domain.size(); ++j) {
      int u = domain[i], v = domain[j];
      if (phi[static_cast<std::size_t>(A.mul(u, v))] !=
          B.mul(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]))
        return false;
    }
  return true;
}

bool iso_search(const Group& A, const Group& B, const std::vector<int>& gens,
                std::size_t level, const std::vector<std::uint64_t>& keyA,
                const std::vector<std::uint64_t>& keyB, std::vector<int>& phi,
                std::vector<int>& psi, std::vector<int>& domain) {
  if (level == gens.size()) return true;
  int g = gens[level];
  std::size_t old_size = domain.size();
  auto rollback = [&] {
    for (std::size_t i = old_size; i < domain.size(); ++i) {
      psi[static_cast<std::size_t>(phi[static_cast<std::size_t>(domain[i])])] = -1;
      phi[static_cast<std::size_t>(domain[i])] = -1;
    }
    domain.resize(old_size);
  };
  for (int c = 0; c < B.order(); ++c) {
    if (keyB[static_cast<std::size_t>(c)] != keyA[static_cast<std::size_t>(g)] ||
        psi[static_cast<std::size_t>(c)] != -1)
      continue;
    if (try_extend(A, B, phi, psi, domain, old_size, g, c) &&
        iso_search(A, B, gens, level + 1, keyA, keyB, phi, psi, domain))
      return true;
    rollback();
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Group& a, const Group& b, int bound) {
  if (a.order() > bound || b.order() > bound)
    fail("order_bound_exceeded",
         "isomorphism test limited to order " + std::to_string(bound) +
             "; got " + std::to_string(a.order()) + " and " +
             std::to_string(b.order()));
  if (a.order() != b.order()) return false;
  if (a.order() == 1) return true;
  auto keyA = iso_keys(a), keyB = iso_keys(b);
  {
    auto sa = keyA, sb = keyB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto gens = greedy_generators(a);
  std::vector<int> phi(static_cast<std::size_t>(a.order()), -1);
  std::vector<int> psi(static_cast<std::size_t>(b.order()), -1);
  std::vector<int> domain;
  phi[0] = 0;
  psi[0] = 0;
  domain.push_back(0);
  return iso_search(a, b, gens, 0, keyA, keyB, phi, psi, domain);
}

}  // namespace tidykit
