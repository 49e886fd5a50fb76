#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hatlab/color.hpp"
#include "hatlab/prisoner_set.hpp"

namespace hatlab {

// A total assignment of colors to prisoners. Finite games store a dense
// array; omega games store a base color plus finitely many exceptions.
// Finite-support colorings of omega are exactly those with base zero.
class Coloring {
 public:
  Coloring() = default;

  static Coloring dense(std::vector<Color> values);
  static Coloring sparse(std::map<Prisoner, Color> exceptions, Color base = 0);

  bool is_finite() const { return finite_; }
  // Number of prisoners; only for finite colorings.
  std::size_t size() const;
  const Color& at(Prisoner a) const;
  const Color& base() const { return base_; }

  const std::vector<Color>& values() const { return dense_; }
  // Never contains an entry equal to base().
  const std::map<Prisoner, Color>& exceptions() const { return exceptions_; }

  // Prisoners whose hat differs from zero.
  PrisonerSet support() const;

  // f[a|c]
  Coloring with(Prisoner a, const Color& c) const;

  std::string to_string() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  bool finite_ = true;
  std::vector<Color> dense_;
  Color base_ = 0;
  std::map<Prisoner, Color> exceptions_;
};

// A coloring restricted to a domain: views v_a^f and heard-declaration
// records h_a^f. A cofinite domain carries a base color for every prisoner
// not listed in `explicit_values()`.
class PartialColoring {
 public:
  PartialColoring() = default;

  // Builds a finite-domain partial coloring from explicit entries.
  static PartialColoring of(std::map<Prisoner, Color> values);
  // Builds a partial coloring over `domain`; values outside the map take `base`.
  static PartialColoring with_base(PrisonerSet domain, Color base, std::map<Prisoner, Color> values);
  static PartialColoring restrict(const Coloring& f, const PrisonerSet& domain);

  const PrisonerSet& domain() const { return domain_; }
  bool has(Prisoner a) const { return domain_.contains(a); }
  const Color& at(Prisoner a) const;
  const Color& base() const { return base_; }
  const std::map<Prisoner, Color>& explicit_values() const { return values_; }

  PartialColoring restricted_to(const PrisonerSet& subdomain) const;
  PartialColoring without(Prisoner a) const { return restricted_to(domain_.minus(PrisonerSet::single(a))); }
  // p[a|c]; a must lie in the domain.
  PartialColoring with(Prisoner a, const Color& c) const;
  // Union with a partial coloring over a disjoint domain.
  PartialColoring merged(const PartialColoring& other) const;
  // Converts a partial coloring whose domain is everyone in `prisoners`.
  Coloring to_coloring(std::optional<std::size_t> prisoners) const;

  std::string to_string() const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  void normalize();

  PrisonerSet domain_;
  Color base_ = 0;
  std::map<Prisoner, Color> values_;
};

}  // namespace hatlab
