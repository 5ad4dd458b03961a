#pragma once

#include <random>

#include "sidedisk/geometry.hpp"

namespace sidedisk::test {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_angle(std::mt19937_64& rng) {
  return uniform01(rng) * kTwoPi;
}

}  // namespace sidedisk::test
