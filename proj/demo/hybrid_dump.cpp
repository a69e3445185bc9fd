// Write a small dump table that `dstream explode` can consume.

#include <iostream>
#include <random>

#include "downstream/downstream.hpp"

int main() {
  using namespace downstream;

  const AlgorithmId algo = parse_algorithm("hybrid:steady/8+tilted/8");
  std::mt19937_64 rng(42);
  std::cout << "replicate,dstream_algo,dstream_S,dstream_T,dstream_storage_hex\n";
  for (int replicate = 0; replicate < 3; ++replicate) {
    Surface surface(algo, 16, 8);
    const std::uint64_t n = 20 + rng() % 200;
    for (std::uint64_t i = 0; i < n; ++i) surface.ingest(rng() % 256);
    std::cout << replicate << ',' << to_string(algo) << ',' << surface.size() << ','
              << surface.T() << ',' << surface.to_hex() << '\n';
  }
}
