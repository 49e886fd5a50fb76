#include "hatlab/coloring.hpp"

#include <sstream>

#include "hatlab/error.hpp"

namespace hatlab {

Coloring Coloring::dense(std::vector<Color> values) {
  Coloring f;
  f.finite_ = true;
  f.dense_ = std::move(values);
  return f;
}

Coloring Coloring::sparse(std::map<Prisoner, Color> exceptions, Color base) {
  Coloring f;
  f.finite_ = false;
  f.base_ = std::move(base);
  for (auto& [a, c] : exceptions) {
    if (c != f.base_) f.exceptions_.emplace(a, std::move(c));
  }
  return f;
}

std::size_t Coloring::size() const {
  if (!finite_) fail(ErrorCode::kInternal, "size of an omega coloring");
  return dense_.size();
}

const Color& Coloring::at(Prisoner a) const {
  if (finite_) {
    if (a >= dense_.size()) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a));
    return dense_[a];
  }
  auto it = exceptions_.find(a);
  return it == exceptions_.end() ? base_ : it->second;
}

PrisonerSet Coloring::support() const {
  std::vector<Prisoner> members;
  if (finite_) {
    for (Prisoner a = 0; a < dense_.size(); ++a) {
      if (dense_[a] != 0) members.push_back(a);
    }
    return PrisonerSet::finite(std::move(members));
  }
  if (base_ == 0) {
    for (const auto& [a, c] : exceptions_) members.push_back(a);
    return PrisonerSet::finite(std::move(members));
  }
  for (const auto& [a, c] : exceptions_) {
    if (c == 0) members.push_back(a);
  }
  return PrisonerSet::cofinite(std::move(members));
}

Coloring Coloring::with(Prisoner a, const Color& c) const {
  Coloring g = *this;
  if (finite_) {
    if (a >= dense_.size()) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a));
    g.dense_[a] = c;
  } else if (c == base_) {
    g.exceptions_.erase(a);
  } else {
    g.exceptions_[a] = c;
  }
  return g;
}

std::string Coloring::to_string() const {
  std::ostringstream out;
  if (finite_) {
    out << '(';
    for (std::size_t i = 0; i < dense_.size(); ++i) out << (i ? "," : "") << dense_[i];
    out << ')';
    return out.str();
  }
  out << "base " << base_ << " {";
  bool first = true;
  for (const auto& [a, c] : exceptions_) {
    out << (first ? "" : ", ") << a << "->" << c;
    first = false;
  }
  out << '}';
  return out.str();
}

PartialColoring PartialColoring::of(std::map<Prisoner, Color> values) {
  PartialColoring p;
  std::vector<Prisoner> members;
  for (const auto& [a, c] : values) members.push_back(a);
  p.domain_ = PrisonerSet::finite(std::move(members));
  p.values_ = std::move(values);
  return p;
}

PartialColoring PartialColoring::with_base(PrisonerSet domain, Color base, std::map<Prisoner, Color> values) {
  PartialColoring p;
  p.domain_ = std::move(domain);
  p.base_ = std::move(base);
  p.values_ = std::move(values);
  for (const auto& [a, c] : p.values_) {
    if (!p.domain_.contains(a)) fail(ErrorCode::kInternal, "value outside partial coloring domain");
  }
  if (p.domain_.is_finite()) {
    for (Prisoner a : p.domain_.listed()) p.values_.try_emplace(a, p.base_);
  }
  p.normalize();
  return p;
}

PartialColoring PartialColoring::restrict(const Coloring& f, const PrisonerSet& domain) {
  PartialColoring p;
  p.domain_ = domain;
  if (domain.is_finite()) {
    for (Prisoner a : domain.listed()) p.values_.emplace(a, f.at(a));
    return p;
  }
  if (f.is_finite()) fail(ErrorCode::kInternal, "cofinite restriction of a finite coloring");
  p.base_ = f.base();
  for (const auto& [a, c] : f.exceptions()) {
    if (domain.contains(a)) p.values_.emplace(a, c);
  }
  return p;
}

void PartialColoring::normalize() {
  if (domain_.is_finite()) {
    base_ = 0;
    return;
  }
  for (auto it = values_.begin(); it != values_.end();) {
    it = it->second == base_ ? values_.erase(it) : std::next(it);
  }
}

const Color& PartialColoring::at(Prisoner a) const {
  if (!domain_.contains(a)) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a) + " outside " + domain_.to_string());
  auto it = values_.find(a);
  return it == values_.end() ? base_ : it->second;
}

PartialColoring PartialColoring::restricted_to(const PrisonerSet& subdomain) const {
  PartialColoring p;
  p.domain_ = domain_.intersect(subdomain);
  p.base_ = base_;
  if (p.domain_.is_finite()) {
    for (Prisoner a : p.domain_.listed()) p.values_.emplace(a, at(a));
  } else {
    for (const auto& [a, c] : values_) {
      if (p.domain_.contains(a)) p.values_.emplace(a, c);
    }
  }
  p.normalize();
  return p;
}

PartialColoring PartialColoring::with(Prisoner a, const Color& c) const {
  if (!domain_.contains(a)) fail(ErrorCode::kUnknownPrisonerId, std::to_string(a) + " outside " + domain_.to_string());
  PartialColoring p = *this;
  p.values_[a] = c;
  p.normalize();
  return p;
}

PartialColoring PartialColoring::merged(const PartialColoring& other) const {
  if (!domain_.intersect(other.domain_).empty()) fail(ErrorCode::kInternal, "merging overlapping partial colorings");
  PartialColoring p;
  p.domain_ = domain_.unite(other.domain_);
  const bool mine_cofinite = !domain_.is_finite();
  p.base_ = mine_cofinite ? base_ : other.base_;
  p.values_ = values_;
  for (const auto& [a, c] : other.values_) p.values_.emplace(a, c);
  if (!p.domain_.is_finite()) {
    // values of the finite side must become explicit exceptions
    const PartialColoring& fin = mine_cofinite ? other : *this;
    for (Prisoner a : fin.domain_.listed()) p.values_[a] = fin.at(a);
  }
  p.normalize();
  return p;
}

Coloring PartialColoring::to_coloring(std::optional<std::size_t> prisoners) const {
  if (prisoners) {
    if (!PrisonerSet::range(*prisoners).subset_of(domain_)) {
      fail(ErrorCode::kInternal, "partial coloring does not cover every prisoner");
    }
    std::vector<Color> values(*prisoners);
    for (Prisoner a = 0; a < *prisoners; ++a) values[a] = at(a);
    return Coloring::dense(std::move(values));
  }
  if (!(domain_ == PrisonerSet::everyone())) fail(ErrorCode::kInternal, "partial coloring does not cover omega");
  return Coloring::sparse(values_, base_);
}

std::string PartialColoring::to_string() const {
  std::ostringstream out;
  out << domain_.to_string() << " {";
  bool first = true;
  for (const auto& [a, c] : values_) {
    out << (first ? "" : ", ") << a << "->" << c;
    first = false;
  }
  out << '}';
  if (!domain_.is_finite()) out << " base " << base_;
  return out.str();
}

}  // namespace hatlab
