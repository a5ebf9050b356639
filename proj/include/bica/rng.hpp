#ifndef BICA_RNG_HPP_
#define BICA_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>

namespace bica {

using Rng = std::mt19937_64;

// splitmix64 finalizer; used to derive independent per-episode streams.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path) {
  uint64_t s = mix64(base);
  for (uint64_t p : path) s = mix64(s ^ mix64(p + 0x632be59bd9b4e019ULL));
  return s;
}

inline double uniform01(Rng& rng) {
  return std::generate_canonical<double, std::numeric_limits<double>::digits>(rng);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

inline int uniform_int(Rng& rng, int lo, int hi_inclusive) {
  return std::uniform_int_distribution<int>(lo, hi_inclusive)(rng);
}

inline double normal(Rng& rng, double mean = 0.0, double sd = 1.0) {
  return std::normal_distribution<double>(mean, sd)(rng);
}

inline double standard_gumbel(Rng& rng) {
  double u = uniform01(rng);
  // guard the open interval so the log never sees 0 or 1
  u = std::min(std::max(u, 1e-300), 1.0 - 1e-16);
  return -std::log(-std::log(u));
}

// Inverse-CDF draw; probabilities need not be perfectly normalized.
inline int sample_categorical(std::span<const double> probs, Rng& rng) {
  double total = 0.0;
  for (double p : probs) total += p;
  double u = uniform01(rng) * total;
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  for (size_t i = probs.size(); i-- > 0;)
    if (probs[i] > 0.0) return static_cast<int>(i);
  return 0;
}

}  // namespace bica

#endif  // BICA_RNG_HPP_
