#include "softedge/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace softedge::rng {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed, std::uint64_t substream) {
  // Distinct (seed, substream) pairs start the splitmix64 walk at distinct
  // points; four mixed outputs fill the 256-bit state.
  std::uint64_t st = seed + substream * kGolden;
  for (auto& w : s_) w = splitmix64(st);
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // forbidden all-zero state
}

std::uint64_t Stream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Stream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::uniform_pos() {
  return 1.0 - uniform();
}

double Stream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform_pos()));
  double th = 6.283185307179586476925286766559 * uniform();
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

double Stream::exponential() {
  return -std::log(uniform_pos());
}

double Stream::gamma(double shape) {
  if (!(shape > 0.0)) throw std::domain_error("gamma shape must be positive");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^{1/a}.
    return gamma(shape + 1.0) * std::pow(uniform_pos(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

bool Stream::bernoulli(double p) {
  return uniform() < p;
}

}  // namespace softedge::rng
