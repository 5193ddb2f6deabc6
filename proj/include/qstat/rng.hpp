#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qstat {

namespace detail {
// splitmix64 step; used only to decorrelate (seed, stream) pairs before they
// reach the engine, so nearby ids do not produce nearby engine states.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

// Deterministic random stream addressed by (seed, stream). Identical ids
// produce identical draws on every platform: uniforms are built from raw
// engine words, never from distribution objects whose algorithms the
// standard leaves open. Child streams are pure functions of the parent id
// and an index, so work can be partitioned across any number of workers
// without changing what any trial sees.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    const std::uint64_t a = detail::splitmix64(seed);
    const std::uint64_t b = detail::splitmix64(a ^ stream);
    const std::uint64_t c = detail::splitmix64(b + 0x632be59bd9b4e019ULL);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 significant bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller. Uses two fresh uniforms per draw; no
  // cached second value, so interleaving with other draws stays reproducible.
  double next_normal() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Index in [0, m) without modulo bias (rejection on the top band).
  std::uint64_t next_below(std::uint64_t m) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % m;
  }

  RngStream child(std::uint64_t index) const {
    return RngStream(seed_, detail::splitmix64(stream_ ^ detail::splitmix64(
                                index + 0x9e3779b97f4a7c15ULL)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace qstat
