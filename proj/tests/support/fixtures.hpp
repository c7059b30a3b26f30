#pragma once

#include "halfhopf/circle_function.hpp"

namespace fx {

using halfhopf::CircleFunction;
using halfhopf::Complex;
using halfhopf::from_modes;
using halfhopf::stack;

inline CircleFunction cos_k(int k, double amp = 1.0) {
  return from_modes(1, true, {{k, {0.5 * amp}}, {-k, {0.5 * amp}}});
}

inline CircleFunction sin_k(int k, double amp = 1.0) {
  return from_modes(1, true, {{k, {Complex{0.0, -0.5 * amp}}}, {-k, {Complex{0.0, 0.5 * amp}}}});
}

/// e^{ikθ} as a complex scalar.
inline CircleFunction exp_k(int k) { return from_modes(1, false, {{k, {1.0}}}); }

/// (cos θ, sin θ)
inline CircleFunction circle() { return stack({cos_k(1), sin_k(1)}); }

/// (cos θ, sin 2θ), the non-stationary witness.
inline CircleFunction witness() { return stack({cos_k(1), sin_k(2)}); }

}  // namespace fx
