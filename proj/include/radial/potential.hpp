#pragma once

#include "radial/common.hpp"
#include "radial/expression.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace radial {

/// V(r) = sgn(nu) A r^nu with A > 0 and nu > -2, nu != 0. Attractive for
/// nu < 0, repulsive/confining for nu > 0.
struct PowerLaw {
  Real amplitude;  // A
  Real exponent;   // nu
};

/// V(r) = ln r.
struct Logarithmic {};

/// V(r) = D (exp(-2a(r - r_e)) - 2 exp(-a(r - r_e))).
struct Morse {
  Real depth;      // D
  Real steepness;  // a
  Real r_eq;       // r_e
};

/// V(r) = m omega^2 r^2 / 2 + lambda r^4 / 4.
struct AnharmonicOscillator {
  Real mass;
  Real omega;
  Real lambda;
};

/// User-defined V(r) from a parsed expression over r.
struct ExpressionPotential {
  std::string source;
  expr::NodePtr tree;
};

class PotentialSpec {
 public:
  using Kind = std::variant<PowerLaw, Logarithmic, Morse, AnharmonicOscillator,
                            ExpressionPotential>;

  PotentialSpec(Kind kind, std::string label);

  const Kind& kind() const { return kind_; }
  const std::string& label() const { return label_; }

  /// Cap applied to the diverging Morse wall before matrix assembly.
  Real value_cap() const { return value_cap_; }
  void set_value_cap(Real cap) { value_cap_ = cap; }

  /// lim V(r -> inf) when finite; bound states must lie below it. Empty for
  /// confining potentials (and expressions, whose limit is not inferred).
  std::optional<Real> asymptote() const;

 private:
  Kind kind_;
  std::string label_;
  Real value_cap_ = 1e12L;
};

PotentialSpec make_power_law(Real amplitude, Real exponent);
PotentialSpec make_logarithmic();
PotentialSpec make_morse(Real depth, Real steepness, Real r_eq);
PotentialSpec make_anharmonic(Real mass, Real omega, Real lambda);

/// Compile an expression source into a potential. Parse is total: every
/// accepted string evaluates deterministically.
PotentialSpec parse_potential(std::string_view source);

Real eval_potential(const PotentialSpec& spec, Real r);

/// Analytic bound levels of the Morse test case (depth 25, steepness 2,
/// r_eq 3): E_n = -(5 - sqrt(2)(n + 1/2))^2 for n = 0..3.
Real morse_exact_level(int n);

}  // namespace radial
