#include "tasim/tas/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tasim/sim/task.hpp"
#include "tasim/util/iterated_log.hpp"

namespace tasim::tas {

using sim::ObjectKind;

Task<Outcome> as_outcome(Task<int> t) {
  const int r = co_await t;
  co_return r == 0 ? Outcome::zero : Outcome::one;
}

Task<Outcome> as_outcome(Task<bool> t, Outcome yes, Outcome no) {
  const bool r = co_await t;
  co_return r ? yes : no;
}

std::uint32_t nontrivial_elections(GeKind kind, std::uint32_t n) {
  const std::uint32_t m = kind == GeKind::locobl ? 2 * log_star(static_cast<double>(n)) : 16;
  return std::min(m, n);
}

// ---------------------------------------------------------------- GeTas

GeTas::GeTas(RegisterBank& bank, Journal& journal, std::uint32_t n, GeKind kind,
             const prim::Faults& faults)
    : journal_(&journal), id_(journal.add_object(ObjectKind::ge_tas, n)), n_(n),
      door_(bank, journal) {
  if (n == 0) throw std::invalid_argument("GeTas needs n >= 1");
  const auto m = nontrivial_elections(kind, n);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (kind == GeKind::locobl)
      ges_.push_back(std::make_unique<ge::LocOblElection>(bank, journal, n));
    else
      ges_.push_back(std::make_unique<ge::RwOblElection>(bank, journal, n));
  }
  splitters_.reserve(n);
  tas_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) splitters_.emplace_back(bank, journal, faults);
  for (std::uint32_t i = 0; i < n; ++i) tas_.emplace_back(bank, journal);
}

Task<int> GeTas::tas(Proc& p) {
  const auto rec = p.open(*journal_, id_);
  const int r = co_await body(p, rec);
  journal_->end(rec, p.last_step(), r == 0 ? Outcome::zero : Outcome::one);
  co_return r;
}

Task<int> GeTas::body(Proc& p, Journal::RecordId rec) {
  const bool passed = co_await door_.enter(p);
  if (!passed) co_return 1;
  std::uint32_t i = 0;
  Outcome s = Outcome::none;
  do {
    ++i;
    if (i > n_) {
      // Unreachable with at most n callers; aux > n flags it for the audit.
      journal_->set_aux(rec, i);
      co_return 1;
    }
    journal_->set_aux(rec, i);
    if (i <= ges_.size()) {
      const bool elected = co_await ges_[i - 1]->elect(p);
      if (!elected) co_return 1;
    }
    s = co_await splitters_[i - 1].split(p);
    if (s == Outcome::left) co_return 1;
  } while (s != Outcome::stop);

  int r = co_await tas_[i - 1].tas(p, 1);
  if (r != 0) co_return 1;
  while (i > 1) {
    --i;
    r = co_await tas_[i - 1].tas(p, 2);
    if (r != 0) co_return 1;
  }
  co_return 0;
}

// ------------------------------------------------------ EliminationPath

EliminationPath::EliminationPath(RegisterBank& bank, Journal& journal, std::uint32_t length,
                                 const prim::Faults& faults)
    : journal_(&journal), id_(journal.add_object(ObjectKind::elim_path, length)) {
  if (length == 0) throw std::invalid_argument("elimination path needs length >= 1");
  splitters_.reserve(length);
  tas_.reserve(length);
  for (std::uint32_t i = 0; i < length; ++i) splitters_.emplace_back(bank, journal, faults);
  for (std::uint32_t i = 0; i < length; ++i) tas_.emplace_back(bank, journal);
}

Task<Outcome> EliminationPath::enter(Proc& p) {
  const auto rec = p.open(*journal_, id_);
  const Outcome out = co_await body(p, rec);
  journal_->end(rec, p.last_step(), out);
  co_return out;
}

Task<Outcome> EliminationPath::body(Proc& p, Journal::RecordId rec) {
  const auto len = length();
  std::uint32_t i = 0;
  Outcome s = Outcome::none;
  do {
    ++i;
    if (i > len) co_return Outcome::fall_off;
    journal_->set_aux(rec, i);
    s = co_await splitters_[i - 1].split(p);
    if (s == Outcome::left) co_return Outcome::lose;
  } while (s != Outcome::stop);

  int r = co_await tas_[i - 1].tas(p, 1);
  if (r != 0) co_return Outcome::lose;
  while (i > 1) {
    --i;
    r = co_await tas_[i - 1].tas(p, 2);
    if (r != 0) co_return Outcome::lose;
  }
  co_return Outcome::win;
}

// -------------------------------------------------------------- RatRace

RatRaceShape RatRaceShape::for_n(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("RatRace needs n >= 1");
  RatRaceShape s{};
  const double lg = std::log2(static_cast<double>(n));
  const double h = lg > 1.0 ? std::ceil(lg - std::log2(lg) - 1e-9) : 1.0;
  s.height = static_cast<std::uint32_t>(std::max(1.0, h));
  s.leaves = 1u << s.height;
  s.path_length = static_cast<std::uint32_t>(std::max(1.0, std::ceil(4.0 * lg - 1e-9)));
  return s;
}

RatRace::RatRace(RegisterBank& bank, Journal& journal, std::uint32_t n, bool with_doorway,
                 const prim::Faults& faults)
    : journal_(&journal),
      id_(journal.add_object(ObjectKind::ratrace, n)),
      shape_(RatRaceShape::for_n(n)),
      backup_(bank, journal, n, faults),
      top_(bank, journal),
      leaf_visits_(shape_.leaves, 0) {
  if (with_doorway) door_.emplace(bank, journal);
  const std::uint32_t nodes = 2 * shape_.leaves - 1;
  splitters_.reserve(nodes);
  tas3_.reserve(nodes);
  for (std::uint32_t i = 0; i < nodes; ++i) splitters_.emplace_back(bank, journal);
  for (std::uint32_t i = 0; i < nodes; ++i) tas3_.emplace_back(bank, journal);
  paths_.reserve(shape_.leaves);
  for (std::uint32_t i = 0; i < shape_.leaves; ++i)
    paths_.emplace_back(bank, journal, shape_.path_length, faults);
}

Task<int> RatRace::tas(Proc& p) {
  const auto rec = p.open(*journal_, id_);
  const int r = co_await body(p);
  journal_->end(rec, p.last_step(), r == 0 ? Outcome::zero : Outcome::one);
  co_return r;
}

Task<bool> RatRace::ascend(Proc& p, std::uint32_t node, int sim_id) {
  int r = co_await tas3_[node].tas(p, sim_id);
  if (r != 0) co_return false;
  while (node != 0) {
    const std::uint32_t parent = (node - 1) / 2;
    const int from = node == 2 * parent + 1 ? 1 : 2;
    node = parent;
    r = co_await tas3_[node].tas(p, from);
    if (r != 0) co_return false;
  }
  co_return true;
}

Task<int> RatRace::body(Proc& p) {
  if (door_) {
    const bool passed = co_await door_->enter(p);
    if (!passed) co_return 1;
  }
  const std::uint32_t first_leaf = shape_.leaves - 1;
  std::uint32_t node = 0;
  bool won = false;
  for (;;) {
    const bool at_leaf = node >= first_leaf;
    if (at_leaf) ++leaf_visits_[node - first_leaf];
    const Outcome s = co_await splitters_[node].split(p);
    if (s == Outcome::stop) {
      won = co_await ascend(p, node, 3);
      break;
    }
    if (!at_leaf) {
      node = 2 * node + (s == Outcome::left ? 1 : 2);
      continue;
    }
    const Outcome path = co_await paths_[node - first_leaf].enter(p);
    if (path == Outcome::win) {
      won = co_await ascend(p, node, 1);
      break;
    }
    if (path == Outcome::lose) co_return 1;
    const Outcome backup = co_await backup_.enter(p);
    if (backup == Outcome::win) {
      const int r = co_await top_.tas(p, 2);
      co_return r;
    }
    if (backup == Outcome::fall_off) backup_fell_off_ = true;
    co_return 1;
  }
  if (!won) co_return 1;
  const int r = co_await top_.tas(p, 1);
  co_return r;
}

// ----------------------------------------------------------------- Comb

Comb::Comb(RegisterBank& bank, Journal& journal, std::uint32_t n, GeKind inner,
           const prim::Faults& faults)
    : n_(n),
      door_(bank, journal),
      inner_(bank, journal, n, inner, faults),
      race_(bank, journal, n, false, faults),
      top_(bank, journal),
      inner_result_(n, Outcome::none),
      race_result_(n, Outcome::none) {}

class CombMachine final : public sim::StepMachine {
 public:
  CombMachine(Comb& comb, Pid pid) : comb_(&comb), pid_(pid) {
    current_ = std::make_unique<sim::CoroutineMachine>(pid, [this](Proc& p) {
      return as_outcome(comb_->door_.enter(p), Outcome::pass, Outcome::deflect);
    });
    settle();
  }

  PendingAction peek() const override { return active().peek(); }

  void apply_coin(CoinWord w) override {
    active().apply_coin(w);
    after(false);
  }

  void apply_shared(Value v, StepIndex index) override {
    active().apply_shared(v, index);
    after(true);
  }

  bool finished() const override { return phase_ == Phase::done; }
  Outcome outcome() const override { return outcome_; }

 private:
  // door, then both sub-algorithms interleaved, then one of them alone,
  // then the final Tas2.
  enum class Phase { door, both, finish_split, race_only, inner_only, top, done };

  sim::CoroutineMachine& active() const {
    if (phase_ == Phase::both) return pairs_ % 2 == 0 ? *inner_ : *race_;
    if (phase_ == Phase::finish_split || phase_ == Phase::race_only) return *race_;
    if (phase_ == Phase::inner_only) return *inner_;
    return *current_;
  }

  void after(bool shared) {
    if (phase_ == Phase::both && (shared || active().finished())) ++pairs_;
    settle();
  }

  void start_top(int sim_id) {
    comb_->top_callers_.push_back(pid_);
    current_ = std::make_unique<sim::CoroutineMachine>(
        pid_, [this, sim_id](Proc& p) { return as_outcome(comb_->top_.tas(p, sim_id)); });
    phase_ = Phase::top;
  }

  void finish(Outcome o) {
    outcome_ = o;
    phase_ = Phase::done;
  }

  // Called once R may have finished. A process that loses R without ever
  // having stopped at one of its splitters (possible only by turning left
  // on an elimination path) did not block anyone in R, so it drops R and
  // keeps running I instead of losing outright.
  bool race_done() {
    if (!race_->finished()) return false;
    comb_->race_result_[pid_] = race_->outcome();
    if (race_->outcome() == Outcome::zero)
      start_top(2);
    else if (race_->proc().flags().stopped || phase_ != Phase::both)
      finish(Outcome::one);
    else
      phase_ = Phase::inner_only;
    return true;
  }

  void settle() {
    switch (phase_) {
      case Phase::door:
        if (!current_->finished()) return;
        if (current_->outcome() == Outcome::deflect) return finish(Outcome::one);
        inner_ = std::make_unique<sim::CoroutineMachine>(
            pid_, [this](Proc& p) { return as_outcome(comb_->inner_.tas(p)); });
        race_ = std::make_unique<sim::CoroutineMachine>(
            pid_, [this](Proc& p) { return as_outcome(comb_->race_.tas(p)); });
        phase_ = Phase::both;
        return;
      case Phase::both:
        if (inner_->finished()) {
          comb_->inner_result_[pid_] = inner_->outcome();
          if (inner_->outcome() == Outcome::zero) return start_top(1);
          const auto& flags = race_->proc().flags();
          if (flags.in_split) {
            phase_ = Phase::finish_split;
          } else if (flags.stopped) {
            phase_ = Phase::race_only;
          } else {
            return finish(Outcome::one);
          }
          settle();
          return;
        }
        race_done();
        return;
      case Phase::finish_split:
        if (race_done()) return;
        if (race_->proc().flags().in_split) return;
        if (race_->proc().flags().stopped)
          phase_ = Phase::race_only;
        else
          finish(Outcome::one);
        return;
      case Phase::race_only:
        race_done();
        return;
      case Phase::inner_only:
        if (!inner_->finished()) return;
        comb_->inner_result_[pid_] = inner_->outcome();
        if (inner_->outcome() == Outcome::zero) return start_top(1);
        return finish(Outcome::one);
      case Phase::top:
        if (current_->finished()) finish(current_->outcome());
        return;
      case Phase::done:
        return;
    }
  }

  Comb* comb_;
  Pid pid_;
  Phase phase_ = Phase::door;
  std::unique_ptr<sim::CoroutineMachine> current_;
  std::unique_ptr<sim::CoroutineMachine> inner_;
  std::unique_ptr<sim::CoroutineMachine> race_;
  std::uint64_t pairs_ = 0;
  Outcome outcome_ = Outcome::none;
};

std::unique_ptr<sim::StepMachine> Comb::machine(Pid pid) {
  if (pid >= n_) throw std::out_of_range("more Comb callers than n");
  return std::make_unique<CombMachine>(*this, pid);
}

}  // namespace tasim::tas
