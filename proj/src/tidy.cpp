#include "tidykit/tidy.hpp"

#include <chrono>
#include <optional>

#include "tidykit/structure.hpp"

namespace tidykit {

ElementSet cyc_set(const Group& g, int x) {
  g.check_element(x);
  ElementSet out = g.empty_set();
  for (int z = 0; z < g.order(); ++z)
    if (g.cyc_closure(z).test(x)) out |= g.cyc_closure(z);
  return out;
}

namespace {

// Least pair (a, b) in s, ordered by a then b, whose product escapes s.
std::optional<TidyWitness> least_violation(const Group& g, int x,
                                           const ElementSet& s) {
  auto mem = s.elements();
  for (int a : mem)
    for (int b : mem) {
      int ab = g.mul(a, b);
      if (!s.test(ab)) return TidyWitness{x, a, b, ab};
    }
  return std::nullopt;
}

}  // namespace

bool is_tidy_at(const Group& g, int x) {
  ElementSet s = cyc_set(g, x);
  if (s.count() == g.order()) return true;
  return !least_violation(g, x, s).has_value();
}

TidinessReport is_tidy_bruteforce(const Group& g, OracleMode mode,
                                  bool all_witnesses) {
  auto t0 = std::chrono::steady_clock::now();
  TidinessReport rep;
  rep.mode = mode;
  for (int x = 1; x < g.order(); ++x) {
    if (mode == OracleMode::PrimePowerOnly && !is_prime_power(g.ord(x)))
      continue;
    ElementSet s = cyc_set(g, x);
    if (s.count() == g.order()) continue;
    auto w = least_violation(g, x, s);
    if (!w) continue;
    rep.tidy = false;
    rep.witnesses.push_back(*w);
    if (!all_witnesses) break;
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

}  // namespace tidykit
