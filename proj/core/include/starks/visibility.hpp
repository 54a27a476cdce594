#pragma once

#include "starks/games.hpp"
#include "starks/numbers.hpp"

namespace starks {

/// Winning probability of the KS strategy on the Werner state of visibility
/// V in local dimension d, from the closed forms.
Rational noisy_value(Variant v, int d, const Rational& visibility);

/// The same quantity assembled from the game itself: the pure part wins with
/// probability 1, the noise part gives each outcome pair rank_A * rank_B / d^2.
Rational noisy_value_direct(Variant v, int d, const Rational& visibility);

/// Optimal classical winning probability on N = d + 1 lines.
Rational classical_value(Variant v, int d);

/// Published closed form for the visibility above which the quantum value
/// beats the classical one.
Rational visibility_threshold(Variant v, int d);

/// Where the affine noisy value meets the classical value.
Rational visibility_crossing(Variant v, int d);

struct VisibilityReport {
  int d = 0;
  Variant variant = Variant::colored;
  Rational classical;
  Rational noisy_at_zero;
  Rational noisy_at_one;
  Rational threshold;
  Rational crossing;
  bool consistent() const { return threshold == crossing && noisy_at_one == 1 && threshold > 0 && threshold <= 1; }
};

VisibilityReport visibility_report(Variant v, int d);

}  // namespace starks
