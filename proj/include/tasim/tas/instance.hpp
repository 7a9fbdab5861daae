#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tasim/adv/adversaries.hpp"
#include "tasim/prim/primitives.hpp"
#include "tasim/sim/execution.hpp"
#include "tasim/sim/state.hpp"
#include "tasim/sim/violation.hpp"

namespace tasim::tas {

// What the top-level outcomes of an instance mean.
enum class Semantics { test_and_set, group_election, other };

// One freshly constructed algorithm object together with its register
// bank and journal. Each trial builds its own instance.
class Instance {
 public:
  Instance(std::string id, std::uint32_t n) : id_(std::move(id)), n_(n) {}
  virtual ~Instance() = default;
  Instance(const Instance&) = delete;
  Instance& operator=(const Instance&) = delete;

  const std::string& id() const { return id_; }
  std::uint32_t n() const { return n_; }
  sim::RegisterBank& bank() { return bank_; }
  const sim::RegisterBank& bank() const { return bank_; }
  const sim::Journal& journal() const { return journal_; }
  std::uint32_t register_count() const { return static_cast<std::uint32_t>(bank_.size()); }

  virtual Semantics semantics() const = 0;
  // Doorway-fronted TAS instances are subject to the linearization proxy.
  virtual bool doorway_fronted() const { return false; }
  virtual std::unique_ptr<sim::StepMachine> machine(Pid pid) = 0;
  sim::Machines machines(std::uint32_t k);

  // Algorithm-specific checks beyond the generic journal audit.
  virtual void audit(const sim::Execution&, sim::Violations&) const {}
  // Highest group-election round reached (GeTas instances).
  virtual std::optional<std::uint32_t> jstar() const { return std::nullopt; }
  // Largest number of processes that reached one leaf (RatRace).
  virtual std::optional<std::uint32_t> max_leaf_load() const { return std::nullopt; }
  virtual const adv::LocOblLayout* locobl_layout() const { return nullptr; }

 protected:
  sim::Journal& mutable_journal() { return journal_; }

 private:
  std::string id_;
  std::uint32_t n_;
  sim::RegisterBank bank_;
  sim::Journal journal_;
};

std::vector<std::string> valid_algorithm_ids();
void validate_algorithm_id(const std::string& id);

// Ids: tas:ge-locobl, tas:ge-rwobl, tas:ratrace, tas:comb, ge:locobl,
// ge:rwobl, ge:trivial, and the primitives prim:doorway, prim:splitter,
// prim:rsplitter, prim:tas2, prim:tas3, prim:elimpath (length n).
std::unique_ptr<Instance> make_instance(const std::string& id, std::uint32_t n,
                                        const prim::Faults& faults = {});

// The four composite TAS algorithms.
const std::vector<std::string>& tas_algorithms();

// Passes iff there is no winner, or the winner's invocation precedes every
// completed top-level response of the other processes.
bool linearization_proxy(const sim::Execution& e);

}  // namespace tasim::tas
