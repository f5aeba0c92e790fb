#pragma once

#include <cstdint>
#include <vector>

#include "tidykit/group.hpp"

namespace tidykit {

// The brute-force route only needs to inspect elements of prime-power order;
// the unrestricted mode exists so the two can be checked against each other.
enum class OracleMode { AllElements, PrimePowerOnly };

// A closure failure: a and b both generate a cyclic subgroup together with x,
// but their product does not.
struct TidyWitness {
  int x = 0;
  int a = 0;
  int b = 0;
  int product = 0;
};

struct TidinessReport {
  bool tidy = true;
  OracleMode mode = OracleMode::AllElements;
  // Empty when tidy; otherwise the least failing pair for each inspected x
  // whose set fails (just the first such x unless all witnesses were asked
  // for).
  std::vector<TidyWitness> witnesses;
  std::int64_t ms = 0;
};

// Everything that generates a cyclic subgroup together with x: the union of
// the cyclic subgroups <z> containing x.
ElementSet cyc_set(const Group& g, int x);

// Whether that union is closed under the operation (equivalently, is a
// subgroup).
bool is_tidy_at(const Group& g, int x);

TidinessReport is_tidy_bruteforce(const Group& g,
                                  OracleMode mode = OracleMode::AllElements,
                                  bool all_witnesses = false);

}  // namespace tidykit
