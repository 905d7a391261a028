#ifndef CANTUS_RNG_HPP_
#define CANTUS_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cantus {

// All sampling goes through these helpers instead of std:: distributions so
// that a given seed produces the same draws on every platform and standard
// library. Every sampling operation in the library takes the engine
// explicitly; nothing keeps hidden global state.
using Rng = std::mt19937_64;

inline std::uint64_t next_u64(Rng& rng) { return rng(); }

// Uniform integer in [0, n) by rejection, bias-free.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

// Draws k distinct elements from items, uniformly without replacement.
// Order of the result follows the draw order.
template <typename T>
std::vector<T> sample_without_replacement(Rng& rng, std::vector<T> items,
                                          std::size_t k) {
  std::vector<T> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k && !items.empty(); ++i) {
    const std::size_t j = static_cast<std::size_t>(uniform_index(rng, items.size()));
    out.push_back(items[j]);
    items[j] = items.back();
    items.pop_back();
  }
  return out;
}

// Knuth's product method; fine for the small lambdas used here.
inline int poisson(Rng& rng, double lambda) {
  const double threshold = std::exp(-lambda);
  int k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= uniform01(rng);
  } while (p > threshold);
  return k - 1;
}

}  // namespace cantus

#endif  // CANTUS_RNG_HPP_
