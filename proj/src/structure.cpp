#include "tidykit/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tidykit {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; 1LL * p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

int p_part(int n, int p) {
  int k = 1;
  while (n % p == 0) {
    n /= p;
    k *= p;
  }
  return k;
}

bool is_prime_power(int n, int* p_out) {
  if (n < 2) return false;
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return false;
  if (p_out) *p_out = ps[0];
  return true;
}

ElementSet center(const Group& g) {
  ElementSet z = g.empty_set();
  for (int x = 0; x < g.order(); ++x) {
    bool c = true;
    for (int y = 0; y < g.order() && c; ++y) c = g.mul(x, y) == g.mul(y, x);
    if (c) z.set(x);
  }
  return z;
}

ElementSet centralizer_of(const Group& g, int x) {
  g.check_element(x);
  ElementSet c = g.empty_set();
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.set(y);
  return c;
}

ElementSet centralizer(const Group& g, const ElementSet& s) {
  g.check_owns(s);
  ElementSet c = g.full_set();
  for (int x : s.elements()) c &= centralizer_of(g, x);
  return c;
}

ElementSet normalizer(const Group& g, const ElementSet& s) {
  g.check_owns(s);
  ElementSet n = g.empty_set();
  for (int t = 0; t < g.order(); ++t)
    if (conjugate_set(g, s, t) == s) n.set(t);
  return n;
}

std::vector<ElementSet> upper_central_series(const Group& g) {
  std::vector<ElementSet> series;
  ElementSet z = g.singleton(0);
  series.push_back(z);
  for (;;) {
    ElementSet next = g.empty_set();
    for (int x = 0; x < g.order(); ++x) {
      bool in = true;
      for (int y = 0; y < g.order() && in; ++y) in = z.test(g.comm(x, y));
      if (in) next.set(x);
    }
    if (next == z) return series;
    series.push_back(next);
    z = next;
  }
}

ElementSet hypercenter(const Group& g) { return upper_central_series(g).back(); }

ElementSet derived_of_set(const Group& g, const ElementSet& s) {
  g.check_owns(s);
  auto mem = s.elements();
  ElementSet comms = g.empty_set();
  for (int a : mem)
    for (int b : mem) comms.set(g.comm(a, b));
  return generated_subgroup(g, comms);
}

std::vector<ElementSet> derived_series(const Group& g) {
  std::vector<ElementSet> series;
  ElementSet cur = g.full_set();
  series.push_back(cur);
  for (;;) {
    ElementSet next = derived_of_set(g, cur);
    if (next == cur) return series;
    series.push_back(next);
    cur = next;
  }
}

bool is_abelian(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

bool is_nilpotent(const Group& g) {
  return hypercenter(g).count() == g.order();
}

bool is_solvable(const Group& g) {
  return derived_series(g).back().count() == 1;
}

int derived_length(const Group& g) {
  auto series = derived_series(g);
  if (series.back().count() != 1)
    fail("not_solvable", "\"" + g.label() +
                             "\" is not solvable (derived series stalls at order " +
                             std::to_string(series.back().count()) + ")");
  return int(series.size()) - 1;
}

long long exponent(const Group& g) {
  long long e = 1;
  for (int x = 0; x < g.order(); ++x) e = std::lcm(e, (long long)g.ord(x));
  return e;
}

namespace {

bool is_p_element(const Group& g, int x, int p) {
  int o = g.ord(x);
  while (o % p == 0) o /= p;
  return o == 1;
}

}  // namespace

namespace {

bool is_prime(int p) {
  int w;
  return p >= 2 && is_prime_power(p, &w) && w == p;
}

}  // namespace

ElementSet sylow(const Group& g, int p) {
  if (!is_prime(p)) fail("bad_prime", "sylow needs a prime");
  int pk = p_part(g.order(), p);
  ElementSet pgrp = g.singleton(0);
  if (pk == 1) return pgrp;
  // Seed with the largest cyclic p-subgroup, then repeatedly pick up a
  // p-element of the normalizer that lies outside; the extension stays a
  // p-group because the new element normalizes what we have.
  int best = 0;
  for (int x = 1; x < g.order(); ++x)
    if (is_p_element(g, x, p) && g.ord(x) > g.ord(best)) best = x;
  pgrp = g.cyc_closure(best);
  while (pgrp.count() < pk) {
    ElementSet nrm = normalizer(g, pgrp);
    int fresh = -1;
    for (int y : nrm.elements())
      if (!pgrp.test(y) && is_p_element(g, y, p)) {
        fresh = y;
        break;
      }
    if (fresh < 0)
      fail("not_found", "sylow construction stalled in \"" + g.label() + "\"");
    ElementSet seed = pgrp;
    seed.set(fresh);
    pgrp = generated_subgroup(g, seed);
  }
  return pgrp;
}

ElementSet p_core(const Group& g, int p) {
  ElementSet s = sylow(g, p);
  ElementSet core = s;
  for (int t = 0; t < g.order() && core.count() > 1; ++t)
    core &= conjugate_set(g, s, t);
  return core;
}

ElementSet fitting_subgroup(const Group& g) {
  ElementSet all = g.singleton(0);
  for (int p : prime_divisors(g.order())) all |= p_core(g, p);
  return generated_subgroup(g, all);
}

int fitting_height(const Group& g) {
  int h = 0;
  Group cur = g;
  while (cur.order() > 1) {
    ElementSet f = fitting_subgroup(cur);
    if (f.count() == 1)
      fail("not_solvable", "\"" + g.label() +
                               "\" has a quotient with trivial Fitting subgroup");
    ++h;
    if (f.count() == cur.order()) break;
    cur = quotient(cur, f).child;
  }
  return h;
}

namespace {

// Join closure of `atoms` above the trivial subgroup. Every subgroup that is
// a join of atoms appears exactly once; results come back sorted by size,
// then by membership.
std::vector<ElementSet> join_closure(const Group& g,
                                     std::vector<ElementSet> atoms) {
  std::map<std::vector<std::uint64_t>, int> seen;
  std::vector<ElementSet> out;
  auto push = [&](const ElementSet& s) -> bool {
    auto r = seen.emplace(s.words(), int(out.size()));
    if (r.second) out.push_back(s);
    return r.second;
  };
  {
    std::map<std::vector<std::uint64_t>, int> uniq;
    std::vector<ElementSet> kept;
    for (auto& a : atoms)
      if (uniq.emplace(a.words(), 0).second) kept.push_back(a);
    atoms.swap(kept);
  }
  push(g.singleton(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    ElementSet base = out[i];  // copy: out may reallocate
    for (const auto& a : atoms) {
      if (a.is_subset_of(base)) continue;
      push(generated_subgroup(g, base | a));
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& x, const ElementSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x.words() < y.words();
  });
  return out;
}

}  // namespace

std::vector<ElementSet> normal_subgroups(const Group& g) {
  // A subgroup generated by whole conjugacy classes is normal, and every
  // normal subgroup is the join of the class-generated subgroups it
  // contains, so the join closure of class closures is exactly the set of
  // normal subgroups.
  std::vector<ElementSet> atoms;
  for (const auto& c : conjugacy_classes(g))
    atoms.push_back(generated_subgroup(g, c));
  return join_closure(g, std::move(atoms));
}

std::vector<ElementSet> all_subgroups(const Group& g, int bound) {
  if (g.order() > bound)
    fail("order_bound_exceeded",
         "subgroup enumeration limited to order " + std::to_string(bound) +
             "; \"" + g.label() + "\" has order " + std::to_string(g.order()));
  std::vector<ElementSet> atoms;
  for (int x = 1; x < g.order(); ++x) atoms.push_back(g.cyc_closure(x));
  return join_closure(g, std::move(atoms));
}

std::optional<ElementSet> normal_p_complement(const Group& g, int p) {
  if (!is_prime(p)) fail("bad_prime", "p-complement needs a prime");
  ElementSet k = g.empty_set();
  for (int x = 0; x < g.order(); ++x)
    if (g.ord(x) % p != 0) k.set(x);
  auto mem = k.elements();
  for (int a : mem)
    for (int b : mem)
      if (!k.test(g.mul(a, b))) return std::nullopt;
  // Closed under products, so a subgroup; it contains every Sylow q-subgroup
  // for q != p and consists of p'-elements, which pins its order to the
  // p'-part.
  return k;
}

namespace {

ElementSet extend_by_sylow(const Group& g, ElementSet have, int q,
                           long long target) {
  ElementSet syl = sylow(g, q);
  for (int t = 0; t < g.order(); ++t) {
    ElementSet seed = have | conjugate_set(g, syl, t);
    auto grown = generated_subgroup_bounded(g, seed, int(target));
    if (grown && grown->count() == target) return *grown;
  }
  fail("not_found", "no Hall subgroup of order " + std::to_string(target) +
                        " found in \"" + g.label() + "\"");
}

}  // namespace

bool is_normal(const Group& g, const ElementSet& s) {
  g.check_owns(s);
  auto mem = s.elements();
  for (int t = 0; t < g.order(); ++t)
    for (int a : mem)
      if (!s.test(g.conj_elem(a, t))) return false;
  return true;
}

ElementSet hall_subgroup(const Group& g, const std::vector<int>& primes) {
  ElementSet have = g.singleton(0);
  long long size = 1;
  std::vector<int> seen;
  for (int q : primes) {
    if (!is_prime(q)) fail("bad_prime", "Hall subgroup needs primes");
    if (std::find(seen.begin(), seen.end(), q) != seen.end()) continue;
    seen.push_back(q);
    if (g.order() % q != 0) continue;
    size *= p_part(g.order(), q);
    have = extend_by_sylow(g, have, q, size);
  }
  return have;
}

ElementSet hall_pq(const Group& g, int p, int q) {
  if (!is_prime(p) || !is_prime(q))
    fail("bad_prime", "Hall subgroup needs primes");
  if (p == q) fail("same_prime", "Hall {p,q} needs two distinct primes");
  if (!is_solvable(g))
    fail("not_solvable", "Hall {p,q} search assumes a solvable group");
  return hall_subgroup(g, {p, q});
}

ElementSet hall_complement(const Group& g, int p) {
  std::vector<int> rest;
  for (int q : prime_divisors(g.order()))
    if (q != p) rest.push_back(q);
  return hall_subgroup(g, rest);
}

bool is_frobenius_with_kernel(const Group& g, const ElementSet& k) {
  g.check_owns(k);
  int sz = k.count();
  if (sz <= 1 || sz == g.order()) return false;
  if (!is_subgroup(g, k)) return false;
  for (int t = 0; t < g.order(); ++t)
    if (conjugate_set(g, k, t) != k) return false;
  for (int x : k.elements()) {
    if (x == 0) continue;
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x) && !k.test(y)) return false;
  }
  return true;
}

std::optional<ElementSet> frobenius_kernel(const Group& g) {
  auto normals = normal_subgroups(g);
  for (auto it = normals.rbegin(); it != normals.rend(); ++it)
    if (is_frobenius_with_kernel(g, *it)) return *it;
  return std::nullopt;
}

std::optional<std::pair<ElementSet, ElementSet>> two_frobenius_pair(
    const Group& g) {
  auto normals = normal_subgroups(g);
  for (const auto& k : normals) {
    if (k.count() <= 1 || k.count() == g.order()) continue;
    // "N Frobenius with kernel K" read off inside the parent: K normal in N
    // (it is normal in G), and C_N(x) <= K for nonidentity x in K.
    auto centralizer_ok = [&](const ElementSet& n) {
      for (int x : k.elements()) {
        if (x == 0) continue;
        for (int y : n.elements())
          if (g.mul(x, y) == g.mul(y, x) && !k.test(y)) return false;
      }
      return true;
    };
    std::optional<QuotientMap> qm;
    for (const auto& n : normals) {
      if (n.count() <= k.count() || n.count() == g.order()) continue;
      if (!k.is_subset_of(n)) continue;
      if (!centralizer_ok(n)) continue;
      if (!qm) qm = quotient(g, k);
      if (is_frobenius_with_kernel(qm->child, project_set(*qm, n)))
        return std::make_pair(k, n);
    }
  }
  return std::nullopt;
}

}  // namespace tidykit
