#include "hatlab/prisoner_set.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "hatlab/error.hpp"

namespace hatlab {
namespace {

using List = std::vector<Prisoner>;

List set_union(const List& a, const List& b) {
  List out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

List set_intersection(const List& a, const List& b) {
  List out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

List set_difference(const List& a, const List& b) {
  List out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

PrisonerSet::PrisonerSet(bool cofinite, std::vector<Prisoner> listed)
    : cofinite_(cofinite), listed_(std::move(listed)) {
  std::sort(listed_.begin(), listed_.end());
  listed_.erase(std::unique(listed_.begin(), listed_.end()), listed_.end());
}

PrisonerSet PrisonerSet::finite(std::vector<Prisoner> members) { return PrisonerSet(false, std::move(members)); }

PrisonerSet PrisonerSet::cofinite(std::vector<Prisoner> excluded) { return PrisonerSet(true, std::move(excluded)); }

PrisonerSet PrisonerSet::range(std::size_t n) {
  List members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = i;
  return PrisonerSet(false, std::move(members));
}

bool PrisonerSet::contains(Prisoner p) const {
  return std::binary_search(listed_.begin(), listed_.end(), p) != cofinite_;
}

std::size_t PrisonerSet::size() const {
  if (cofinite_) fail(ErrorCode::kRequiresFiniteGame, "size of a cofinite prisoner set");
  return listed_.size();
}

PrisonerSet PrisonerSet::unite(const PrisonerSet& o) const {
  if (!cofinite_ && !o.cofinite_) return PrisonerSet(false, set_union(listed_, o.listed_));
  if (cofinite_ && o.cofinite_) return PrisonerSet(true, set_intersection(listed_, o.listed_));
  // finite u cofinite = cofinite minus the finite part
  const auto& fin = cofinite_ ? o.listed_ : listed_;
  const auto& excl = cofinite_ ? listed_ : o.listed_;
  return PrisonerSet(true, set_difference(excl, fin));
}

PrisonerSet PrisonerSet::intersect(const PrisonerSet& o) const {
  if (!cofinite_ && !o.cofinite_) return PrisonerSet(false, set_intersection(listed_, o.listed_));
  if (cofinite_ && o.cofinite_) return PrisonerSet(true, set_union(listed_, o.listed_));
  const auto& fin = cofinite_ ? o.listed_ : listed_;
  const auto& excl = cofinite_ ? listed_ : o.listed_;
  return PrisonerSet(false, set_difference(fin, excl));
}

PrisonerSet PrisonerSet::complement() const { return PrisonerSet(!cofinite_, listed_); }

PrisonerSet PrisonerSet::minus(const PrisonerSet& o) const { return intersect(o.complement()); }

bool PrisonerSet::subset_of(const PrisonerSet& o) const { return minus(o).empty(); }

std::string PrisonerSet::to_string() const {
  std::ostringstream out;
  if (cofinite_) out << "omega\\";
  out << '{';
  for (std::size_t i = 0; i < listed_.size(); ++i) out << (i ? "," : "") << listed_[i];
  out << '}';
  return out.str();
}

}  // namespace hatlab
