#include "radial/potential.hpp"

#include <cmath>
#include <sstream>

namespace radial {

namespace {

std::string format_param(Real v) {
  std::ostringstream os;
  os.precision(10);
  os << static_cast<double>(v);
  return os.str();
}

}  // namespace

PotentialSpec::PotentialSpec(Kind kind, std::string label)
    : kind_(std::move(kind)), label_(std::move(label)) {
  if (const auto* p = std::get_if<PowerLaw>(&kind_)) {
    if (!(p->amplitude > 0)) {
      throw domain_error("power-law potential: amplitude must be positive");
    }
    if (!(p->exponent > -2.0L) || p->exponent == 0.0L) {
      throw domain_error(
          "power-law potential: exponent must be > -2 and nonzero");
    }
  } else if (const auto* a = std::get_if<AnharmonicOscillator>(&kind_)) {
    if (a->lambda < 0) {
      throw domain_error("anharmonic oscillator: lambda must be >= 0");
    }
  } else if (const auto* e = std::get_if<ExpressionPotential>(&kind_)) {
    if (!e->tree) {
      throw domain_error("expression potential: missing tree");
    }
  }
}

std::optional<Real> PotentialSpec::asymptote() const {
  if (const auto* p = std::get_if<PowerLaw>(&kind_)) {
    return p->exponent < 0 ? std::optional<Real>(0.0L) : std::nullopt;
  }
  if (std::holds_alternative<Morse>(kind_)) return 0.0L;
  return std::nullopt;
}

PotentialSpec make_power_law(Real amplitude, Real exponent) {
  std::string label = "powerlaw:A=" + format_param(amplitude) +
                      ",nu=" + format_param(exponent);
  return PotentialSpec(PowerLaw{amplitude, exponent}, std::move(label));
}

PotentialSpec make_logarithmic() {
  return PotentialSpec(Logarithmic{}, "log");
}

PotentialSpec make_morse(Real depth, Real steepness, Real r_eq) {
  std::string label = "morse:D=" + format_param(depth) +
                      ",a=" + format_param(steepness) +
                      ",re=" + format_param(r_eq);
  return PotentialSpec(Morse{depth, steepness, r_eq}, std::move(label));
}

PotentialSpec make_anharmonic(Real mass, Real omega, Real lambda) {
  std::string label = "aho:m=" + format_param(mass) +
                      ",omega=" + format_param(omega) +
                      ",lambda=" + format_param(lambda);
  return PotentialSpec(AnharmonicOscillator{mass, omega, lambda},
                       std::move(label));
}

PotentialSpec parse_potential(std::string_view source) {
  if (source.empty()) throw parse_error("empty potential expression", 0);
  expr::NodePtr tree = expr::parse(source);
  return PotentialSpec(ExpressionPotential{std::string(source), tree},
                       "expr:" + std::string(source));
}

Real eval_potential(const PotentialSpec& spec, Real r) {
  if (!(r > 0.0L)) {
    throw domain_error("eval_potential: r must be positive");
  }
  Real v = 0.0L;
  bool clamped = false;
  if (const auto* p = std::get_if<PowerLaw>(&spec.kind())) {
    const Real sign = p->exponent < 0 ? -1.0L : 1.0L;
    v = sign * p->amplitude * std::pow(r, p->exponent);
  } else if (std::holds_alternative<Logarithmic>(spec.kind())) {
    v = std::log(r);
  } else if (const auto* m = std::get_if<Morse>(&spec.kind())) {
    const Real t = -m->steepness * (r - m->r_eq);
    v = m->depth * (std::exp(2.0L * t) - 2.0L * std::exp(t));
    // the repulsive wall only needs to be large on the grid
    if (!(v < spec.value_cap())) {
      v = spec.value_cap();
      clamped = true;
    }
  } else if (const auto* a = std::get_if<AnharmonicOscillator>(&spec.kind())) {
    const Real r2 = r * r;
    v = 0.5L * a->mass * a->omega * a->omega * r2 + 0.25L * a->lambda * r2 * r2;
  } else if (const auto* e = std::get_if<ExpressionPotential>(&spec.kind())) {
    v = expr::eval(*e->tree, r);
  }
  if (!clamped && !std::isfinite(v)) {
    throw numerical_error("eval_potential: non-finite value for " +
                          spec.label());
  }
  return v;
}

Real morse_exact_level(int n) {
  if (n < 0 || n > 3) {
    throw domain_error("morse_exact_level: only four bound states (n = 0..3)");
  }
  const Real x = 5.0L - std::sqrt(2.0L) * (Real(n) + 0.5L);
  return -x * x;
}

}  // namespace radial
