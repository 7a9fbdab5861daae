#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tasim/sim/state.hpp"

namespace tasim::adv {

enum class AdversaryClass : std::uint8_t {
  oblivious,
  location_oblivious,
  rw_oblivious,
  strong_adaptive,
};

std::string_view to_string(AdversaryClass c);

struct MaskedAction {
  enum class Kind : std::uint8_t { coin, read, write, shared };
  Kind kind = Kind::coin;
  std::optional<RegisterId> reg;
  std::optional<Value> value;

  friend bool operator==(const MaskedAction&, const MaskedAction&) = default;
};

// Location-oblivious hides the register, r/w-oblivious hides kind and
// value, strong sees all. Coin actions carry nothing to hide.
MaskedAction mask_action(const PendingAction& a, AdversaryClass c);

// What an adversary of a given class may look at. Queries outside the
// class throw std::logic_error.
class AdversaryView {
 public:
  AdversaryView(const sim::SimState& s, AdversaryClass c) : s_(&s), cls_(c) {}

  AdversaryClass adversary_class() const { return cls_; }
  std::uint64_t slot_count() const { return s_->slots.size(); }
  std::size_t process_count() const { return s_->exec.processes.size(); }

  const std::vector<Pid>& past_schedule() const;
  const std::vector<Pid>& running() const;
  bool finished(Pid p) const;
  std::uint32_t shared_steps(Pid p) const;
  std::optional<MaskedAction> pending(Pid p) const;
  // Coins of p that precede its latest shared step (all coins if strong).
  std::vector<CoinWord> visible_coins(Pid p) const;

  // Strong adaptive only.
  const std::vector<sim::Event>& events() const;
  std::optional<PendingAction> full_pending(Pid p) const;

 private:
  void require_adaptive(const char* what) const;
  void require_strong(const char* what) const;

  const sim::SimState* s_;
  AdversaryClass cls_;
};

// Materialized form of a view, for inspection and tests.
struct ViewSnapshot {
  std::uint64_t slot_count = 0;
  std::vector<Pid> past_schedule;
  std::vector<std::vector<CoinWord>> visible_coins;
  std::vector<std::optional<MaskedAction>> pending;
};

ViewSnapshot mask_view(const sim::Execution& e,
                       std::span<const std::optional<PendingAction>> pending, AdversaryClass c);

class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual AdversaryClass adversary_class() const = 0;
  // nullopt ends the run (finite schedules only).
  virtual std::optional<Pid> next(const AdversaryView& view) = 0;
};

}  // namespace tasim::adv
