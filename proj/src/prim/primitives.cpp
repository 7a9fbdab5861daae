#include "tasim/prim/primitives.hpp"

#include <stdexcept>
#include <string>

namespace tasim::prim {

using sim::ObjectKind;

Doorway::Doorway(RegisterBank& bank, Journal& journal)
    : journal_(&journal), id_(journal.add_object(ObjectKind::doorway)),
      b_(bank.allocate("doorway", 1, 0)) {}

Task<bool> Doorway::enter(Proc& p) {
  const auto rec = p.open(*journal_, id_);
  const Value seen = co_await p.read(b_);
  if (seen != 0) {
    journal_->end(rec, p.last_step(), Outcome::deflect);
    co_return false;
  }
  co_await p.write(b_, 1);
  journal_->end(rec, p.last_step(), Outcome::pass);
  co_return true;
}

Splitter::Splitter(RegisterBank& bank, Journal& journal, const Faults& faults)
    : journal_(&journal), id_(journal.add_object(ObjectKind::splitter)),
      x_(bank.allocate("splitter.X", 1, 0)), door_(bank, journal),
      skip_door_(faults.splitter_skips_doorway) {}

Task<Outcome> Splitter::split(Proc& p) {
  const Value me = Value{p.pid()} + 1;
  const auto rec = p.open(*journal_, id_);
  co_await p.write(x_, me);
  p.flags().in_split = true;
  Outcome out = Outcome::left;
  bool passed = true;
  if (!skip_door_) passed = co_await door_.enter(p);
  if (passed) {
    const Value x = co_await p.read(x_);
    out = x == me ? Outcome::stop : Outcome::right;
  }
  journal_->end(rec, p.last_step(), out);
  p.flags().in_split = false;
  if (out == Outcome::stop) p.flags().stopped = true;
  co_return out;
}

RSplitter::RSplitter(RegisterBank& bank, Journal& journal)
    : journal_(&journal), id_(journal.add_object(ObjectKind::rsplitter)),
      x_(bank.allocate("rsplitter.X", 1, 0)), door_(bank, journal) {}

Task<Outcome> RSplitter::split(Proc& p) {
  const Value me = Value{p.pid()} + 1;
  const auto rec = p.open(*journal_, id_);
  co_await p.write(x_, me);
  p.flags().in_split = true;
  bool stop = false;
  const bool passed = co_await door_.enter(p);
  if (passed) {
    const Value x = co_await p.read(x_);
    stop = x == me;
  }
  Outcome out = Outcome::stop;
  if (!stop) {
    const CoinWord w = co_await p.coin();
    out = (w >> 63) ? Outcome::right : Outcome::left;
  }
  journal_->end(rec, p.last_step(), out);
  p.flags().in_split = false;
  if (out == Outcome::stop) p.flags().stopped = true;
  co_return out;
}

Tas2::Tas2(RegisterBank& bank, Journal& journal)
    : journal_(&journal), id_(journal.add_object(ObjectKind::tas2)),
      r_(bank.allocate("tas2", kRegisters, 0)) {}

Task<int> Tas2::tas(Proc& p, int sim_id) {
  if (sim_id != 1 && sim_id != 2)
    throw std::invalid_argument("tas2 sim id must be 1 or 2, got " + std::to_string(sim_id));
  if (used_[sim_id - 1])
    throw std::logic_error("tas2 sim id " + std::to_string(sim_id) + " used twice");
  used_[sim_id - 1] = true;

  const RegisterId mine = r_ + (sim_id - 1);
  const RegisterId peer = r_ + (2 - sim_id);
  const auto encode = [](Value round, Value pref) { return 2 * round + (pref - 1); };

  Value round = 1;
  Value pref = sim_id;
  const auto rec = p.open(*journal_, id_);
  co_await p.write(mine, encode(round, pref));
  for (;;) {
    const Value v = co_await p.read(peer);
    const Value peer_round = v / 2;
    const Value peer_pref = v % 2 + 1;
    if (peer_round > round) {
      round = peer_round;
      pref = peer_pref;
    } else if (peer_round + 2 <= round) {
      break;
    } else if (peer_round + 1 == round) {
      ++round;
    } else if (peer_pref == pref) {
      break;
    } else {
      const CoinWord w = co_await p.coin();
      pref = (w >> 63) ? 2 : 1;
      ++round;
    }
    co_await p.write(mine, encode(round, pref));
  }
  const int result = pref == sim_id ? 0 : 1;
  journal_->end(rec, p.last_step(), result == 0 ? Outcome::zero : Outcome::one);
  co_return result;
}

Tas3::Tas3(RegisterBank& bank, Journal& journal)
    : journal_(&journal), id_(journal.add_object(ObjectKind::tas3)), a_(bank, journal),
      b_(bank, journal) {}

Task<int> Tas3::tas(Proc& p, int sim_id) {
  if (sim_id < 1 || sim_id > 3)
    throw std::invalid_argument("tas3 sim id must be 1, 2 or 3, got " + std::to_string(sim_id));
  if (used_[sim_id - 1])
    throw std::logic_error("tas3 sim id " + std::to_string(sim_id) + " used twice");
  used_[sim_id - 1] = true;

  const auto rec = p.open(*journal_, id_);
  int result;
  if (sim_id == 3) {
    result = co_await b_.tas(p, 2);
  } else {
    result = co_await a_.tas(p, sim_id);
    if (result == 0) result = co_await b_.tas(p, 1);
  }
  journal_->end(rec, p.last_step(), result == 0 ? Outcome::zero : Outcome::one);
  co_return result;
}

}  // namespace tasim::prim
