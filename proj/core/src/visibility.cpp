#include "starks/visibility.hpp"

namespace starks {

namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

void require_dimension(int d, int minimum) {
  if (d < minimum || d % 2 != 0) throw InvalidArgument("visibility needs an even dimension >= " + std::to_string(minimum) + ", got " + std::to_string(d));
}

void require_visibility(const Rational& v) {
  if (v < 0 || v > 1) throw InvalidArgument("visibility " + to_string(v) + " is outside [0, 1]");
}

}  // namespace

Rational noisy_value(Variant v, int d, const Rational& vis) {
  require_dimension(d, 4);
  require_visibility(vis);
  const Rational D = q(d);
  const Rational p1 = ((D - 1) * vis + 1) / D;
  const Rational p2 = 1 - 3 * (D - 1) * (1 - vis) / (D * D);
  Rational w;
  switch (v) {
    case Variant::colored: {
      const Rational inputs = (D - 1) * (D - 1);
      w = ((D - 3) * p1 + (inputs - (D - 3)) * p2) / inputs;
      break;
    }
    case Variant::line_line: {
      const Rational inputs = (D + 1) * (D + 1);
      w = ((D + 1) * p1 + (inputs - (D + 1)) * p2) / inputs;
      break;
    }
    case Variant::point_line:
      w = (D * D - 2 * (D - 1) * (1 - vis)) / (D * D);
      break;
  }
  w.canonicalize();
  return w;
}

Rational noisy_value_direct(Variant v, int d, const Rational& vis) {
  require_dimension(d, 4);
  require_visibility(vis);
  const StarGame g = make_game(d + 1, v);
  // Sum over inputs of the noise-part winning probability, times d^2.
  long long weighted = 0;
  long long inputs = 0;
  for (std::size_t x = 0; x < g.alice_input_count(); ++x)
    for (std::size_t y = 0; y < g.bob_input_count(); ++y) {
      if (!g.input_allowed(x, y)) continue;
      ++inputs;
      for (int a : g.alice_outputs(x))
        for (int b : g.bob_outputs(y)) {
          if (!g.wins(x, y, a, b)) continue;
          const long long rank_b = v == Variant::point_line ? (b == 1 ? 1 : d - 1) : 1;
          weighted += rank_b;
        }
    }
  const Rational noise = q(weighted, inputs * static_cast<long long>(d) * d);
  Rational w = vis + (1 - vis) * noise;
  w.canonicalize();
  return w;
}

Rational classical_value(Variant v, int d) {
  require_dimension(d, 4);
  const long long D = d;
  switch (v) {
    case Variant::colored: return 1 - q(1, (D - 1) * (D - 1));
    case Variant::line_line: return 1 - q(4, (D + 1) * (D + 1));
    case Variant::point_line: return 1 - q(1, D * (D + 1));
  }
  return 0;
}

Rational visibility_threshold(Variant v, int d) {
  require_dimension(d, 6);
  const long long D = d;
  switch (v) {
    case Variant::colored: return q((D - 2) * (4 * D * D - 9 * D + 6), 4 * (D - 1) * (D * D - 3 * D + 3));
    case Variant::line_line: return q(D * D - D - 1, (D + 1) * (D - 1));
    case Variant::point_line: return q(2 * D * D - D - 2, 2 * (D + 1) * (D - 1));
  }
  return 0;
}

Rational visibility_crossing(Variant v, int d) {
  const Rational w0 = noisy_value(v, d, 0), w1 = noisy_value(v, d, 1);
  Rational t = (classical_value(v, d) - w0) / (w1 - w0);
  t.canonicalize();
  return t;
}

VisibilityReport visibility_report(Variant v, int d) {
  VisibilityReport r;
  r.d = d;
  r.variant = v;
  r.classical = classical_value(v, d);
  r.noisy_at_zero = noisy_value(v, d, 0);
  r.noisy_at_one = noisy_value(v, d, 1);
  r.threshold = visibility_threshold(v, d);
  r.crossing = visibility_crossing(v, d);
  return r;
}

}  // namespace starks
