#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tasim/adv/view.hpp"

namespace tasim::adv {

// Infinite pid sequence over {0..k-1}, a function of the slot index only.
class Schedule {
 public:
  explicit Schedule(std::uint32_t k);
  virtual ~Schedule() = default;
  virtual Pid at(std::uint64_t i) const = 0;
  std::uint32_t k() const { return k_; }

 private:
  std::uint32_t k_;
};

std::shared_ptr<const Schedule> round_robin(std::uint32_t k);
// Blocks of `block` consecutive slots per process, cycling.
std::shared_ptr<const Schedule> sequential(std::uint32_t k, std::uint64_t block = 512);
std::shared_ptr<const Schedule> random_schedule(std::uint32_t k, std::uint64_t seed);
// Cycles through a fixed nonempty list.
std::shared_ptr<const Schedule> cyclic(std::vector<Pid> pids);

std::vector<Pid> prefix(const Schedule& s, std::size_t len);

class ObliviousAdversary final : public Adversary {
 public:
  explicit ObliviousAdversary(std::shared_ptr<const Schedule> s) : s_(std::move(s)) {}
  AdversaryClass adversary_class() const override { return AdversaryClass::oblivious; }
  std::optional<Pid> next(const AdversaryView& view) override { return s_->at(view.slot_count()); }

 private:
  std::shared_ptr<const Schedule> s_;
};

std::unique_ptr<Adversary> oblivious_from_schedule(std::vector<Pid> schedule);

// Register layout of a location-oblivious group election: R[1..ell+1]
// starting at `base`.
struct LocOblLayout {
  RegisterId base = 0;
  std::uint32_t ell = 1;
};

// Flips every participant's coin first, then lets processes finish in
// ascending order of their chosen level, so no level-i read ever sees a
// level-(i+1) write.
std::unique_ptr<Adversary> ascending_index_attack(LocOblLayout layout);

// Adaptive strategy names accepted for a class ("random", "laggard", ...).
std::vector<std::string> strategies_for(AdversaryClass c);
std::unique_ptr<Adversary> adaptive(AdversaryClass c, const std::string& strategy,
                                    std::uint64_t seed);

struct AdversaryContext {
  std::uint32_t k = 1;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  const LocOblLayout* locobl = nullptr;  // required by strong:ascending
};

// Parses ids such as "oblivious:random", "locobl:laggard",
// "strong:full:random", "strong:ascending". Throws std::invalid_argument
// listing the valid ids on failure.
std::unique_ptr<Adversary> make_adversary(const std::string& id, const AdversaryContext& ctx);
void validate_adversary_id(const std::string& id);
std::vector<std::string> valid_adversary_ids();

// "locobl battery" and friends expand to several ids; a plain id expands
// to itself.
std::vector<std::string> expand_battery(const std::string& name);

}  // namespace tasim::adv
