#pragma once

#include <random>
#include <string>
#include <vector>

#include "krullcert/polynomial.hpp"

namespace testing {

using namespace krullcert;

inline Polynomial P(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(text, ring);
}

inline std::vector<Polynomial> Ps(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

/// Seeded source for the hand-rolled property generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing
