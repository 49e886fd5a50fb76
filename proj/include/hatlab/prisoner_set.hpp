#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hatlab {

using Prisoner = std::size_t;

// A set of prisoners that is either finite or cofinite in omega. Finite
// games only ever produce finite sets.
class PrisonerSet {
 public:
  PrisonerSet() = default;

  static PrisonerSet finite(std::vector<Prisoner> members);
  static PrisonerSet cofinite(std::vector<Prisoner> excluded);
  static PrisonerSet single(Prisoner p) { return finite({p}); }
  // {0, ..., n-1}
  static PrisonerSet range(std::size_t n);
  static PrisonerSet everyone() { return cofinite({}); }

  bool is_finite() const { return !cofinite_; }
  bool empty() const { return !cofinite_ && listed_.empty(); }
  bool contains(Prisoner p) const;
  // Members of a finite set, or the excluded prisoners of a cofinite one.
  const std::vector<Prisoner>& listed() const& { return listed_; }
  std::vector<Prisoner> listed() && { return std::move(listed_); }
  // Cardinality of a finite set; throws for cofinite sets.
  std::size_t size() const;

  PrisonerSet unite(const PrisonerSet& other) const;
  PrisonerSet intersect(const PrisonerSet& other) const;
  PrisonerSet minus(const PrisonerSet& other) const;
  PrisonerSet complement() const;
  bool subset_of(const PrisonerSet& other) const;

  std::string to_string() const;

  friend bool operator==(const PrisonerSet&, const PrisonerSet&) = default;

 private:
  PrisonerSet(bool cofinite, std::vector<Prisoner> listed);

  bool cofinite_ = false;
  std::vector<Prisoner> listed_;  // sorted, unique
};

}  // namespace hatlab
