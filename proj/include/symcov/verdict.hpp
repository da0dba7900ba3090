#pragma once

namespace symcov {

/// Three-state outcome attached to every separability decision. For the
/// entanglement tests an outcome is Entangled only when the decisive scalar
/// clears the tolerance; everything else is reported as consistent with
/// separability, since none of these tests can certify separability of a
/// boundary state from floating-point data. Indeterminate is produced by the
/// generic sign checks (psd_verdict) where the symmetric band is meaningful.
enum class Outcome { Entangled, SeparableConsistent, Indeterminate };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Entangled: return "entangled";
    case Outcome::SeparableConsistent: return "separable_consistent";
    case Outcome::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// Decision plus the scalar it was made on and the tolerance in force,
/// so sweeps can histogram margins instead of booleans.
struct Verdict {
  Outcome outcome;
  double decisive_value;  // the tested minimum eigenvalue or margin
  double tolerance;

  bool entangled() const { return outcome == Outcome::Entangled; }
  /// True when the decisive scalar sits inside the +-tolerance band.
  bool in_band() const {
    return decisive_value >= -tolerance && decisive_value <= tolerance;
  }
};

/// Entangled iff the margin is below -tol; otherwise consistent with
/// separability. Used by all entanglement tests.
inline Verdict negativity_verdict(double margin, double tol) {
  return {margin < -tol ? Outcome::Entangled : Outcome::SeparableConsistent, margin, tol};
}

inline constexpr double kDefaultTol = 1e-9;

}  // namespace symcov
