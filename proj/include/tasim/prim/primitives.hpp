#pragma once

#include <array>

#include "tasim/sim/journal.hpp"
#include "tasim/sim/register_bank.hpp"
#include "tasim/sim/task.hpp"

namespace tasim::prim {

using sim::Journal;
using sim::Proc;
using sim::RegisterBank;
using sim::Task;

// One register B, initially 0.
class Doorway {
 public:
  Doorway(RegisterBank& bank, Journal& journal);
  // true: passed, false: deflected.
  Task<bool> enter(Proc& p);

  sim::ObjectId object() const { return id_; }
  RegisterId reg() const { return b_; }

 private:
  Journal* journal_;
  sim::ObjectId id_;
  RegisterId b_;
};

// Fault injection for mutation tests.
struct Faults {
  bool splitter_skips_doorway = false;
};

// Registers X and the doorway's B. Returns stop, left or right.
class Splitter {
 public:
  Splitter(RegisterBank& bank, Journal& journal, const Faults& faults = {});
  Task<Outcome> split(Proc& p);

  sim::ObjectId object() const { return id_; }

 private:
  Journal* journal_;
  sim::ObjectId id_;
  RegisterId x_;
  Doorway door_;
  bool skip_door_;
};

// As Splitter, but a process that does not stop picks its direction with
// one fair coin (the top bit of the word).
class RSplitter {
 public:
  RSplitter(RegisterBank& bank, Journal& journal);
  Task<Outcome> split(Proc& p);

  sim::ObjectId object() const { return id_; }

 private:
  Journal* journal_;
  sim::ObjectId id_;
  RegisterId x_;
  Doorway door_;
};

// Randomized 2-process test-and-set. Each side owns one register holding
// 2*round + (pref - 1), 0 meaning "not started", where pref in {1,2} is
// the id the process currently wants to win.
//
//   round = 1, pref = own id, publish
//   loop: read peer
//     peer ahead          -> adopt peer's (round, pref), publish
//     peer 2+ rounds back -> decide pref
//     peer 1 round back   -> round++, publish
//     same round, agree   -> decide pref
//     same round, differ  -> pref = coin, round++, publish
//
// A decided value v is sticky: a process that decides v leaves its
// register at (r, v), and the peer either already holds v or is at most
// r-1 and will adopt v on its next read. Only a disagreement at equal
// rounds flips a coin, and both sides then match with probability 1/2
// whatever the scheduler does.
class Tas2 {
 public:
  Tas2(RegisterBank& bank, Journal& journal);
  // Returns 0 (won) or 1. sim_id in {1,2}, distinct across callers.
  Task<int> tas(Proc& p, int sim_id);

  sim::ObjectId object() const { return id_; }
  static constexpr std::uint32_t kRegisters = 2;

 private:
  Journal* journal_;
  sim::ObjectId id_;
  RegisterId r_;
  std::array<bool, 2> used_{};
};

// Two Tas2 objects: ids 1 and 2 meet on A, A's winner meets id 3 on B.
class Tas3 {
 public:
  Tas3(RegisterBank& bank, Journal& journal);
  Task<int> tas(Proc& p, int sim_id);

  sim::ObjectId object() const { return id_; }

 private:
  Journal* journal_;
  sim::ObjectId id_;
  Tas2 a_;
  Tas2 b_;
  std::array<bool, 3> used_{};
};

}  // namespace tasim::prim
