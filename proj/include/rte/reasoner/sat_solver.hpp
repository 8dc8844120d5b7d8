#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace rte::reasoner::sat {

using Var = int;
using Lit = int;

inline constexpr Lit pos(Var v) { return 2 * v; }
inline constexpr Lit neg(Var v) { return 2 * v + 1; }
inline constexpr Var var_of(Lit l) { return l >> 1; }
inline constexpr bool is_neg(Lit l) { return (l & 1) != 0; }

enum class Status { sat, unsat, aborted };

// Conflict-driven clause learning: two watched literals, first-UIP learning,
// VSIDS with a lazily updated heap, Luby restarts. Decisions assign false
// first.
class Solver {
 public:
  Var new_var() {
    const Var v = static_cast<Var>(assigns_.size());
    assigns_.push_back(undef);
    level_.push_back(0);
    reason_.push_back(-1);
    activity_.push_back(0.0);
    seen_.push_back(0);
    watches_.emplace_back();
    watches_.emplace_back();
    heap_.emplace(0.0, -v);
    return v;
  }

  std::size_t num_vars() const noexcept { return assigns_.size(); }

  // Raises the initial branching priority of `v`.
  void prioritize(Var v, double amount = 1.0) {
    activity_[v] += amount;
    heap_.emplace(activity_[v], -v);
  }

  // Returns false once the clause set is known to be unsatisfiable.
  bool add_clause(std::vector<Lit> lits) {
    if (unsat_) return false;
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    std::vector<Lit> kept;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && var_of(lits[i]) == var_of(lits[i + 1])) return true;
      const auto v = value(lits[i]);
      if (v == l_true) return true;
      if (v == l_undef) kept.push_back(lits[i]);
    }
    if (kept.empty()) return !(unsat_ = true);
    if (kept.size() == 1) {
      enqueue(kept[0], -1);
      if (propagate() != -1) unsat_ = true;
      return !unsat_;
    }
    attach(std::move(kept));
    return true;
  }

  // `should_stop` is polled every few hundred conflicts and decisions.
  Status solve(const std::function<bool()>& should_stop = {}) {
    if (unsat_) return Status::unsat;
    if (propagate() != -1) {
      unsat_ = true;
      return Status::unsat;
    }
    std::uint64_t conflicts = 0;
    std::uint64_t decisions = 0;
    std::uint64_t restart_index = 0;
    std::uint64_t restart_at = 100 * luby(restart_index);
    std::uint64_t since_restart = 0;
    while (true) {
      const int confl = propagate();
      if (confl != -1) {
        ++conflicts;
        ++since_restart;
        if (decision_level() == 0) {
          unsat_ = true;
          return Status::unsat;
        }
        auto [learnt, back] = analyze(confl);
        cancel_until(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], -1);
        } else {
          const Lit first = learnt[0];
          const int idx = attach(std::move(learnt));
          enqueue(first, idx);
        }
        var_inc_ /= 0.95;
        if ((conflicts & 255) == 0 && should_stop && should_stop()) return Status::aborted;
        if (since_restart >= restart_at) {
          cancel_until(0);
          since_restart = 0;
          restart_at = 100 * luby(++restart_index);
        }
        continue;
      }
      const Var v = pick_branch();
      if (v < 0) return Status::sat;
      if ((++decisions & 1023) == 0 && should_stop && should_stop()) return Status::aborted;
      trail_lim_.push_back(trail_.size());
      enqueue(neg(v), -1);
    }
  }

  // Assignment after Status::sat; unassigned variables read as false.
  bool model_value(Var v) const { return assigns_[v] == l_true; }

 private:
  static constexpr std::int8_t l_false = 0, l_true = 1, l_undef = 2;
  static constexpr std::int8_t undef = l_undef;

  std::int8_t value(Lit l) const {
    const auto a = assigns_[var_of(l)];
    return a == l_undef ? l_undef : static_cast<std::int8_t>(a ^ (l & 1));
  }

  std::size_t decision_level() const noexcept { return trail_lim_.size(); }

  int attach(std::vector<Lit> lits) {
    const int idx = static_cast<int>(clauses_.size());
    watches_[lits[0]].push_back(idx);
    watches_[lits[1]].push_back(idx);
    clauses_.push_back(std::move(lits));
    return idx;
  }

  void enqueue(Lit l, int reason) {
    const Var v = var_of(l);
    assigns_[v] = is_neg(l) ? l_false : l_true;
    level_[v] = static_cast<int>(decision_level());
    reason_[v] = reason;
    trail_.push_back(l);
  }

  // Returns the index of a falsified clause or -1.
  int propagate() {
    while (qhead_ < trail_.size()) {
      const Lit false_lit = trail_[qhead_++] ^ 1;
      auto& ws = watches_[false_lit];
      std::size_t i = 0, j = 0;
      while (i < ws.size()) {
        const int ci = ws[i++];
        auto& c = clauses_[ci];
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (value(c[0]) == l_true) {
          ws[j++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k)
          if (value(c[k]) != l_false) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back(ci);
            moved = true;
            break;
          }
        if (moved) continue;
        ws[j++] = ci;
        if (value(c[0]) == l_false) {
          while (i < ws.size()) ws[j++] = ws[i++];
          ws.resize(j);
          qhead_ = trail_.size();
          return ci;
        }
        enqueue(c[0], ci);
      }
      ws.resize(j);
    }
    return -1;
  }

  void bump(Var v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (auto& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
      rebuild_heap();
    } else {
      heap_.emplace(activity_[v], -v);
    }
  }

  void rebuild_heap() {
    heap_ = {};
    for (Var v = 0; v < static_cast<Var>(assigns_.size()); ++v) heap_.emplace(activity_[v], -v);
  }

  std::pair<std::vector<Lit>, std::size_t> analyze(int confl) {
    std::vector<Lit> learnt{0};
    int path = 0;
    Lit p = -1;
    std::size_t idx = trail_.size();
    const int dl = static_cast<int>(decision_level());
    do {
      const auto& c = clauses_[confl];
      for (std::size_t k = (p == -1 ? 0 : 1); k < c.size(); ++k) {
        const Var v = var_of(c[k]);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        bump(v);
        if (level_[v] == dl)
          ++path;
        else
          learnt.push_back(c[k]);
      }
      while (!seen_[var_of(trail_[--idx])]) {
      }
      p = trail_[idx];
      confl = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --path;
    } while (path > 0);
    learnt[0] = p ^ 1;

    std::size_t back = 0;
    if (learnt.size() > 1) {
      std::size_t best = 1;
      for (std::size_t k = 2; k < learnt.size(); ++k)
        if (level_[var_of(learnt[k])] > level_[var_of(learnt[best])]) best = k;
      std::swap(learnt[1], learnt[best]);
      back = static_cast<std::size_t>(level_[var_of(learnt[1])]);
    }
    for (std::size_t k = 1; k < learnt.size(); ++k) seen_[var_of(learnt[k])] = 0;
    return {std::move(learnt), back};
  }

  void cancel_until(std::size_t level) {
    if (decision_level() <= level) return;
    for (std::size_t k = trail_.size(); k-- > trail_lim_[level];) {
      const Var v = var_of(trail_[k]);
      assigns_[v] = l_undef;
      reason_[v] = -1;
      heap_.emplace(activity_[v], -v);
    }
    trail_.resize(trail_lim_[level]);
    trail_lim_.resize(level);
    qhead_ = trail_.size();
  }

  Var pick_branch() {
    while (!heap_.empty()) {
      auto [act, nv] = heap_.top();
      heap_.pop();
      const Var v = -nv;
      if (assigns_[v] == l_undef && act == activity_[v]) return v;
    }
    // Stale entries may have hidden an unassigned variable.
    for (Var v = 0; v < static_cast<Var>(assigns_.size()); ++v)
      if (assigns_[v] == l_undef) return v;
    return -1;
  }

  // Luby sequence 1,1,2,1,1,2,4,... indexed from 0.
  static std::uint64_t luby(std::uint64_t x) {
    std::uint64_t size = 1, seq = 0;
    while (size < x + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x %= size;
    }
    return std::uint64_t{1} << seq;
  }

  bool unsat_ = false;
  std::vector<std::int8_t> assigns_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<double> activity_;
  std::vector<char> seen_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  double var_inc_ = 1.0;
  std::priority_queue<std::pair<double, Var>> heap_;
};

}  // namespace rte::reasoner::sat
