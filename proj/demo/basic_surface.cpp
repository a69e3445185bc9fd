// Fill a steady surface, dump it, and recover arrival indices from (S, T).

#include <iostream>

#include "downstream/downstream.hpp"

int main() {
  using namespace downstream;

  Surface surface(AlgorithmId::steady(), 8, 8);
  for (std::uint64_t v = 0; v < 100; ++v) surface.ingest(v % 256);

  std::cout << "T=" << surface.T() << " hex=" << surface.to_hex() << '\n';

  const LookupTable table = surface.lookup();
  for (site_t k = 0; k < surface.size(); ++k) {
    std::cout << "site " << k << ": arrival " << *table[k] << ", value " << surface.slots()[k]
              << '\n';
  }
}
