// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace fasp {

/// Fuzzy mean life: a raised-cosine membership over the failure rate,
/// centered at 1 / mean_life with half-width 1 / scale.
class FuzzyLife {
 public:
  /// Throws DomainError unless 0 < mean_life < scale.
  FuzzyLife(double mean_life, double scale);

  double mean_life() const { return mean_life_; }
  double scale() const { return scale_; }
  double center_rate() const { return 1.0 / mean_life_; }
  double half_width() const { return 1.0 / scale_; }
  double support_lo() const { return center_rate() - half_width(); }
  double support_hi() const { return center_rate() + half_width(); }

 private:
  double mean_life_;
  double scale_;
};

/// Fuzzy risk level with a left-shoulder membership: fully satisfied below
/// `level`, falling linearly to zero at `level + slack`.
class FuzzyLevel {
 public:
  /// Throws DomainError unless 0 < level < 1, 0 <= slack <= 1 and
  /// level + slack <= 1.
  FuzzyLevel(double level, double slack);

  double level() const { return level_; }
  double slack() const { return slack_; }
  double relaxed() const { return level_ + slack_; }
  bool crisp() const { return slack_ == 0.0; }

 private:
  double level_;
  double slack_;
};

double life_membership(const FuzzyLife& f, double rate);

/// Area under life_membership; 1 / scale in closed form.
double life_membership_mass(const FuzzyLife& f);

/// With zero slack this is the crisp indicator x < level.
double level_membership(const FuzzyLevel& l, double x);

/// Centroid of a raised cosine centered at `center` with half-width 1 / a.
/// The shape is symmetric, so this returns `center`; throws DomainError if
/// the support reaches zero or below.
double defuzzify_center_of_gravity(double center, double a);

}  // namespace fasp
