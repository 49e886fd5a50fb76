#include "hatlab/search.hpp"

#include <algorithm>

#include "hatlab/error.hpp"

namespace hatlab {

std::string to_string(SearchCertificate::Verdict v) {
  switch (v) {
    case SearchCertificate::Verdict::kSat: return "SAT";
    case SearchCertificate::Verdict::kUnsat: return "UNSAT";
    case SearchCertificate::Verdict::kUnknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

constexpr int kUnset = -1;

struct Slot {
  Prisoner prisoner = 0;
  std::vector<Prisoner> heard;
  std::vector<Prisoner> seen;
  std::uint64_t offset = 0;
  std::uint64_t size = 0;
  bool fixed_inputs = false;            // first inning: the entry depends on the coloring only
  std::vector<std::uint64_t> free_weights;  // coloring-index weights of unseen positions
  std::uint64_t hits = 0;                   // colorings where a fixed-input entry is right
};

struct Decision {
  std::uint64_t entry;
  std::uint64_t coloring;
  int value;
  bool pinned;
  std::size_t trail_mark;
};

class Solver {
 public:
  Solver(const Game& game, const Goal& goal, const SearchOptions& options)
      : options_(options), n_(game.size()), k_(game.colors().modulus()) {
    max_wrong_ = goal.max_errors(n_);
    colorings_ = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (colorings_ > options.coloring_cap / k_) {
        fail(ErrorCode::kSpaceTooLarge, "more than " + std::to_string(options.coloring_cap) + " colorings");
      }
      colorings_ *= k_;
    }
    weights_.assign(n_, 1);
    for (std::size_t i = n_ - 1; i-- > 0;) weights_[i] = weights_[i + 1] * k_;

    order_.resize(n_);
    for (Prisoner a = 0; a < n_; ++a) order_[a] = a;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Prisoner x, Prisoner y) { return game.inning(x) < game.inning(y); });

    const std::string too_large = "strategy tables exceed " + std::to_string(options.table_cap) + " entries";
    std::uint64_t offset = 0;
    slots_.resize(n_);
    for (Prisoner a : order_) {
      Slot& s = slots_[a];
      s.prisoner = a;
      s.heard = game.heard_by(a).listed();
      s.seen = game.seen_by(a).listed();
      s.fixed_inputs = s.heard.empty();
      s.size = 1;
      for (std::size_t i = 0; i < s.heard.size() + s.seen.size(); ++i) {
        if (s.size > options.table_cap / k_) fail(ErrorCode::kSpaceTooLarge, too_large);
        s.size *= k_;
      }
      s.offset = offset;
      offset += s.size;
      if (offset > options.table_cap) fail(ErrorCode::kSpaceTooLarge, too_large);
      for (Prisoner b = 0; b < n_; ++b) {
        if (!std::binary_search(s.seen.begin(), s.seen.end(), b)) s.free_weights.push_back(weights_[b]);
      }
      if (s.fixed_inputs) {
        fixed_.push_back(a);
        s.hits = colorings_ / k_;
        for (std::size_t i = 0; i < s.seen.size(); ++i) s.hits /= k_;
        capacity_ += static_cast<long long>(s.hits * s.size);
      } else {
        capacity_ += static_cast<long long>(colorings_);
      }
    }
    owner_.resize(offset);
    for (const Slot& s : slots_) std::fill(owner_.begin() + s.offset, owner_.begin() + s.offset + s.size, s.prisoner);
    values_.assign(offset, kUnset);
    dead_.assign(colorings_, 0);
    right_.assign(colorings_, 0);
    needed_ = static_cast<long long>(n_) - max_wrong_;
    need_ = needed_ > 0 ? needed_ * static_cast<long long>(colorings_) : 0;
  }

  SearchCertificate solve() {
    SearchCertificate cert;
    cert.budget = options_.budget;
    if (max_wrong_ < 0 || (options_.capacity_bound && need_ > capacity_)) {
      cert.verdict = SearchCertificate::Verdict::kUnsat;
      return cert;
    }
    std::vector<std::uint32_t> f(n_);
    std::vector<std::uint32_t> decl(n_);
    std::uint64_t ci = 0;
    while (ci < colorings_) {
      decode(ci, f);
      long long wrong = 0;
      bool backtracked = false;
      for (Prisoner a : order_) {
        const Slot& s = slots_[a];
        std::uint64_t idx = 0;
        for (Prisoner b : s.heard) idx = idx * k_ + decl[b];
        for (Prisoner b : s.seen) idx = idx * k_ + f[b];
        const std::uint64_t e = s.offset + idx;
        if (values_[e] == kUnset) {
          if (!spend(cert)) return cert;
          const bool pinned = options_.symmetry && stack_.empty();
          stack_.push_back({e, ci, 0, pinned, trail_.size()});
          if (!settle(e, 0)) {
            if (!backtrack(cert, ci)) return cert;
            backtracked = true;
            break;
          }
        }
        decl[a] = static_cast<std::uint32_t>(values_[e]);
        if (decl[a] != f[a] && ++wrong > max_wrong_) {
          if (!backtrack(cert, ci)) return cert;
          backtracked = true;
          break;
        }
      }
      if (!backtracked) ++ci;
    }
    cert.verdict = SearchCertificate::Verdict::kSat;
    for (Prisoner a = 0; a < n_; ++a) {
      const Slot& s = slots_[a];
      std::vector<std::uint32_t> table(s.size);
      for (std::uint64_t i = 0; i < s.size; ++i) {
        const int v = values_[s.offset + i];
        table[i] = v == kUnset ? 0 : static_cast<std::uint32_t>(v);
      }
      cert.tables.emplace_back(a, s.heard, s.seen, k_, std::move(table));
    }
    return cert;
  }

 private:
  void decode(std::uint64_t ci, std::vector<std::uint32_t>& f) const {
    for (std::size_t i = n_; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(ci % k_);
      ci /= k_;
    }
  }

  // Counts one tried assignment; false once the budget is spent.
  bool spend(SearchCertificate& cert) {
    if (cert.nodes_explored >= options_.budget) {
      cert.verdict = SearchCertificate::Verdict::kUnknown;
      return false;
    }
    ++cert.nodes_explored;
    return true;
  }

  // Visits every coloring that consults first-inning entry e, telling
  // whether `value` is right there.
  template <typename Fn>
  void for_consumers(std::uint64_t e, int value, Fn&& fn) const {
    const Slot& s = slots_[owner_[e]];
    std::uint64_t idx = e - s.offset;
    std::uint64_t ci = 0;
    for (std::size_t i = s.seen.size(); i-- > 0;) {
      ci += (idx % k_) * weights_[s.seen[i]];
      idx /= k_;
    }
    const std::uint64_t own = weights_[s.prisoner];
    const std::size_t m = s.free_weights.size();
    std::vector<std::uint32_t> digits(m, 0);
    while (true) {
      fn(ci, (ci / own) % k_ == static_cast<std::uint64_t>(value));
      bool advanced = false;
      for (std::size_t d = m; d-- > 0;) {
        if (++digits[d] < k_) {
          ci += s.free_weights[d];
          advanced = true;
          break;
        }
        ci -= static_cast<std::uint64_t>(k_ - 1) * s.free_weights[d];
        digits[d] = 0;
      }
      if (!advanced) return;
    }
  }

  // Records entry e on the trail. Colorings that reach the error allowance
  // force every other first-inning prisoner there to guess right; those
  // implications are queued. Returns false on a conflict.
  bool assign(std::uint64_t e, int value) {
    values_[e] = value;
    trail_.push_back(e);
    if (!slots_[owner_[e]].fixed_inputs) return true;
    bool ok = true;
    capacity_ -= static_cast<long long>(slots_[owner_[e]].hits);
    for_consumers(e, value, [&](std::uint64_t ci, bool right) {
      if (right) {
        if (++right_[ci] <= needed_) --need_;
        return;
      }
      const long long d = ++dead_[ci];
      if (d > max_wrong_) ok = false;
      if (d == max_wrong_) saturated_.push_back(ci);
    });
    return ok && !(options_.capacity_bound && need_ > capacity_);
  }

  void unassign(std::uint64_t e) {
    const int value = values_[e];
    values_[e] = kUnset;
    if (!slots_[owner_[e]].fixed_inputs) return;
    capacity_ += static_cast<long long>(slots_[owner_[e]].hits);
    for_consumers(e, value, [&](std::uint64_t ci, bool right) {
      if (!right) {
        --dead_[ci];
      } else if (right_[ci]-- <= needed_) {
        ++need_;
      }
    });
  }

  // Assigns e and everything it forces.
  bool settle(std::uint64_t e, int value) {
    saturated_.clear();
    if (!assign(e, value)) return false;
    std::vector<std::uint32_t> f(n_);
    while (!saturated_.empty()) {
      const std::uint64_t ci = saturated_.back();
      saturated_.pop_back();
      decode(ci, f);
      for (Prisoner a : fixed_) {
        const Slot& s = slots_[a];
        std::uint64_t idx = 0;
        for (Prisoner b : s.seen) idx = idx * k_ + f[b];
        const std::uint64_t forced = s.offset + idx;
        const int want = static_cast<int>(f[a]);
        if (values_[forced] == kUnset && !assign(forced, want)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      unassign(trail_.back());
      trail_.pop_back();
    }
  }

  // Moves the most recent decision to its next color. On success `ci` is the
  // coloring to resume from; false when the search is over.
  bool backtrack(SearchCertificate& cert, std::uint64_t& ci) {
    while (!stack_.empty()) {
      Decision& top = stack_.back();
      undo_to(top.trail_mark);
      const int next = top.value + 1;
      if (top.pinned || next >= static_cast<int>(k_)) {
        stack_.pop_back();
        continue;
      }
      if (!spend(cert)) return false;
      top.value = next;
      if (!settle(top.entry, next)) continue;
      ci = top.coloring;
      return true;
    }
    cert.verdict = SearchCertificate::Verdict::kUnsat;
    return false;
  }

  SearchOptions options_;
  std::size_t n_;
  std::uint32_t k_;
  long long max_wrong_ = 0;
  std::uint64_t colorings_ = 0;
  std::vector<std::uint64_t> weights_;
  std::vector<Slot> slots_;
  std::vector<Prisoner> order_;
  std::vector<Prisoner> fixed_;
  std::vector<Prisoner> owner_;
  std::vector<int> values_;
  std::vector<long long> dead_;
  std::vector<long long> right_;
  long long needed_ = 0;    // right guesses each coloring needs
  long long need_ = 0;      // right guesses still missing, summed over colorings
  long long capacity_ = 0;  // right guesses unset entries and later innings can still supply
  std::vector<Decision> stack_;
  std::vector<std::uint64_t> trail_;
  std::vector<std::uint64_t> saturated_;
};

}  // namespace

SearchCertificate decide_ps(const Game& game, const Goal& goal, const SearchOptions& options) {
  if (!game.is_finite()) fail(ErrorCode::kRequiresFiniteGame, "search needs finitely many prisoners");
  if (!game.colors().is_finite()) fail(ErrorCode::kRequiresFiniteColors, "search needs mod(n) colors");
  return Solver(game, goal, options).solve();
}

Predictor certificate_predictor(const Game& game, const SearchCertificate& cert) {
  if (cert.verdict != SearchCertificate::Verdict::kSat) {
    fail(ErrorCode::kInvalidArgument, "only SAT certificates carry tables");
  }
  return table_predictor(game, cert.tables);
}

}  // namespace hatlab
