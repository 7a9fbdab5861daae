#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tasim/ge/group_election.hpp"
#include "tasim/prim/primitives.hpp"

namespace tasim::tas {

using sim::Journal;
using sim::Proc;
using sim::RegisterBank;
using sim::Task;

enum class GeKind { locobl, rwobl };

// Number of non-trivial group elections a GeTas of size n uses.
std::uint32_t nontrivial_elections(GeKind kind, std::uint32_t n);

// Doorway, then rounds i = 1, 2, ...: group election G[i], splitter S[i];
// the process that stops at S[i] climbs T[i], T[i-1], ..., T[1].
class GeTas {
 public:
  GeTas(RegisterBank& bank, Journal& journal, std::uint32_t n, GeKind kind,
        const prim::Faults& faults = {});
  Task<int> tas(Proc& p);

  sim::ObjectId object() const { return id_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t nontrivial() const { return static_cast<std::uint32_t>(ges_.size()); }

 private:
  Task<int> body(Proc& p, Journal::RecordId rec);

  Journal* journal_;
  sim::ObjectId id_;
  std::uint32_t n_;
  prim::Doorway door_;
  std::vector<std::unique_ptr<ge::GroupElection>> ges_;
  std::vector<prim::Splitter> splitters_;
  std::vector<prim::Tas2> tas_;
};

// Chain of splitter + Tas2 nodes; a process that turns right at the last
// node falls off.
class EliminationPath {
 public:
  EliminationPath(RegisterBank& bank, Journal& journal, std::uint32_t length,
                  const prim::Faults& faults = {});
  EliminationPath(EliminationPath&&) = default;

  // win, lose or fall_off.
  Task<Outcome> enter(Proc& p);

  sim::ObjectId object() const { return id_; }
  std::uint32_t length() const { return static_cast<std::uint32_t>(splitters_.size()); }

 private:
  Task<Outcome> body(Proc& p, Journal::RecordId rec);

  Journal* journal_;
  sim::ObjectId id_;
  std::vector<prim::Splitter> splitters_;
  std::vector<prim::Tas2> tas_;
};

struct RatRaceShape {
  std::uint32_t height;  // levels 0..height
  std::uint32_t leaves;
  std::uint32_t path_length;

  static RatRaceShape for_n(std::uint32_t n);
};

// Tree of randomized splitters with a Tas3 per node, one elimination path
// below each leaf, a backup path of length n and a final Tas2 between the
// tree's winner and the backup's winner.
class RatRace {
 public:
  RatRace(RegisterBank& bank, Journal& journal, std::uint32_t n, bool with_doorway,
          const prim::Faults& faults = {});
  Task<int> tas(Proc& p);

  sim::ObjectId object() const { return id_; }
  const RatRaceShape& shape() const { return shape_; }
  const std::vector<std::uint32_t>& leaf_visits() const { return leaf_visits_; }
  bool backup_fell_off() const { return backup_fell_off_; }

 private:
  Task<int> body(Proc& p);
  Task<bool> ascend(Proc& p, std::uint32_t node, int sim_id);

  Journal* journal_;
  sim::ObjectId id_;
  RatRaceShape shape_;
  std::optional<prim::Doorway> door_;
  std::vector<prim::RSplitter> splitters_;
  std::vector<prim::Tas3> tas3_;
  std::vector<EliminationPath> paths_;
  EliminationPath backup_;
  prim::Tas2 top_;
  std::vector<std::uint32_t> leaf_visits_;
  bool backup_fell_off_ = false;
};

class CombMachine;

// Doorway, then one step pair of I (a GeTas) and one of R (a doorway-less
// RatRace) in turn; the winners of I and R meet at a final Tas2.
class Comb {
 public:
  Comb(RegisterBank& bank, Journal& journal, std::uint32_t n, GeKind inner,
       const prim::Faults& faults = {});

  std::unique_ptr<sim::StepMachine> machine(Pid pid);

  const GeTas& inner() const { return inner_; }
  const RatRace& race() const { return race_; }
  Outcome inner_result(Pid p) const { return inner_result_.at(p); }
  Outcome race_result(Pid p) const { return race_result_.at(p); }
  const std::vector<Pid>& top_callers() const { return top_callers_; }

 private:
  friend class CombMachine;

  std::uint32_t n_;
  prim::Doorway door_;
  GeTas inner_;
  RatRace race_;
  prim::Tas2 top_;
  std::vector<Outcome> inner_result_;
  std::vector<Outcome> race_result_;
  std::vector<Pid> top_callers_;
};

// Coroutine adapters mapping algorithm results onto machine outcomes.
Task<Outcome> as_outcome(Task<int> t);
Task<Outcome> as_outcome(Task<bool> t, Outcome yes, Outcome no);

}  // namespace tasim::tas
