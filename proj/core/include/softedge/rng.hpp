#pragma once
// Seedable, splittable random streams for the Monte Carlo engines.
//
// Stream(seed, substream) derives an independent xoshiro256++ state for every
// (seed, substream) pair via the splitmix64 mixer, so sample i of a batch can
// use substream i: the batch is then bit-for-bit reproducible regardless of
// how the index range is partitioned across worker threads.

#include <cstdint>

namespace softedge::rng {

// One step of the splitmix64 sequence: advances state and returns the mixed
// output. Used for state derivation, not as the production generator.
std::uint64_t splitmix64(std::uint64_t& state);

class Stream {
 public:
  explicit Stream(std::uint64_t seed, std::uint64_t substream = 0);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1]: safe under log().
  double uniform_pos();
  // Standard normal (Box-Muller; the paired draw is cached).
  double normal();
  // Exponential with rate 1 (mean 1, variance 1).
  double exponential();
  // Gamma(shape, scale 1), shape > 0: Marsaglia-Tsang squeeze for
  // shape >= 1, with the standard power boost below 1.
  double gamma(double shape);
  bool bernoulli(double p);

 private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace softedge::rng
