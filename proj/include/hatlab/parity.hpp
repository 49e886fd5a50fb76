#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/color.hpp"
#include "hatlab/coloring.hpp"
#include "hatlab/game.hpp"

namespace hatlab {

class Predictor;

// phi: colorings -> colors with phi(f[x|g1]) - phi(f[x|g2]) = g2 - g1.
// The domain is K^A for finite A, or the finite-support colorings of omega.
class ParityFunction {
 public:
  enum class Provenance { kNegativeSum, kFromRobustFep };

  ParityFunction(PrisonerCount prisoners, ColorSpace space, Provenance provenance,
                 std::function<Color(const Coloring&)> evaluate);

  PrisonerCount prisoners() const { return prisoners_; }
  const ColorSpace& space() const { return space_; }
  Provenance provenance() const { return provenance_; }
  // Throws kParityDomainMismatch for colorings outside the domain.
  Color operator()(const Coloring& f) const;
  bool accepts(const Coloring& f) const;
  bool matches(const Game& game) const;

 private:
  PrisonerCount prisoners_;
  ColorSpace space_;
  Provenance provenance_;
  std::function<Color(const Coloring&)> evaluate_;
};

std::string to_string(ParityFunction::Provenance p);

// phi(f) = -(sum of all hats); `slots` is |A| or kOmega (finite support).
ParityFunction finite_parity(const ColorSpace& space, PrisonerCount slots);

// phi(f) = sum over errors a of [P(f)(a) - f(a)], for a robust finite-error
// simultaneous predictor.
ParityFunction parity_from_robust_fep(const Game& game, const Predictor& p,
                                      std::uint64_t trials = 200, std::uint64_t seed = 0);

struct ParityFailure {
  Coloring f;
  Prisoner x = 0;
  Color g1;
  Color g2;
  Color lhs;  // phi(f[x|g1]) - phi(f[x|g2])
  Color rhs;  // g2 - g1
};

struct ParityCheckReport {
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  std::vector<ParityFailure> failures;
};

struct ParityCheckOptions {
  std::int64_t value_range = 1000;  // int colors drawn from [-range, range]
  std::size_t omega_window = 32;    // omega supports and x drawn from [0, window)
  std::size_t max_support = 5;
  bool equal_values = false;        // draw g1 == g2
  std::size_t max_failures = 16;    // witnesses kept
};

ParityCheckReport check_parity_equation(const ParityFunction& phi, std::uint64_t trials,
                                        std::uint64_t seed, const ParityCheckOptions& options = {});

// Bijection N^width <-> N by left-associated Cantor pairing.
class Tupler {
 public:
  explicit Tupler(std::size_t width);

  std::size_t width() const { return width_; }
  Color encode(const std::vector<Color>& tuple) const;
  std::vector<Color> decode(const Color& code) const;

  static Color pair(const Color& x, const Color& y);
  static std::pair<Color, Color> unpair(const Color& z);

 private:
  std::size_t width_;
};

Tupler nat_tupler(std::size_t width);

// Z <-> N: 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
Color zigzag(const Color& z);
Color unzigzag(const Color& n);

}  // namespace hatlab
