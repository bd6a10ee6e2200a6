// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#include "fasp/membership.hpp"

#include <cmath>
#include <numbers>

#include "fasp/errors.hpp"

namespace fasp {

FuzzyLife::FuzzyLife(double mean_life, double scale)
    : mean_life_(mean_life), scale_(scale) {
  if (!(mean_life > 0.0) || !std::isfinite(mean_life)) {
    throw DomainError("FuzzyLife: mean life must be positive and finite");
  }
  if (!(scale > mean_life) || !std::isfinite(scale)) {
    throw DomainError("FuzzyLife: scale must exceed the mean life");
  }
}

FuzzyLevel::FuzzyLevel(double level, double slack)
    : level_(level), slack_(slack) {
  if (!(level > 0.0 && level < 1.0)) {
    throw DomainError("FuzzyLevel: level must lie in (0, 1)");
  }
  if (!(slack >= 0.0 && slack <= 1.0)) {
    throw DomainError("FuzzyLevel: slack must lie in [0, 1]");
  }
  if (level + slack > 1.0) {
    throw DomainError("FuzzyLevel: level + slack must not exceed 1");
  }
}

double life_membership(const FuzzyLife& f, double rate) {
  const double d = rate - f.center_rate();
  if (std::abs(d) >= f.half_width()) return 0.0;
  return 0.5 * (1.0 + std::cos(f.scale() * std::numbers::pi * d));
}

double life_membership_mass(const FuzzyLife& f) { return 1.0 / f.scale(); }

double level_membership(const FuzzyLevel& l, double x) {
  if (x < l.level()) return 1.0;
  if (x >= l.relaxed()) return 0.0;
  return (l.relaxed() - x) / l.slack();
}

double defuzzify_center_of_gravity(double center, double a) {
  if (!(a > 0.0) || !(center > 0.0)) {
    throw DomainError("defuzzify_center_of_gravity: center and a must be positive");
  }
  if (center - 1.0 / a <= 0.0) {
    throw DomainError("defuzzify_center_of_gravity: support crosses zero");
  }
  return center;
}

}  // namespace fasp
