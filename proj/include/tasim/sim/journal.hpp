#pragma once

#include <string_view>
#include <vector>

#include "tasim/sim/types.hpp"

namespace tasim::sim {

using ObjectId = std::uint32_t;

enum class ObjectKind : std::uint8_t {
  doorway,
  splitter,
  rsplitter,
  tas2,
  tas3,
  ge_locobl,
  ge_rwobl,
  elim_path,
  ge_tas,
  ratrace,
};

std::string_view to_string(ObjectKind k);

struct ObjectInfo {
  ObjectKind kind;
  std::uint32_t param = 0;  // path length, ell, ...
};

// One invocation of a one-shot object. `inv` and `resp` are the step
// indices of the first and last shared-memory step of the call.
struct OpRecord {
  ObjectId object;
  Pid pid;
  StepIndex inv = kNoStep;
  StepIndex resp = kNoStep;
  Outcome result = Outcome::none;
  std::uint32_t aux = 0;

  bool complete() const { return result != Outcome::none; }
  // Calls that never took a shared step are not participants.
  bool started() const { return inv != kNoStep; }
};

// Instance-wide log of object invocations, filled in by the objects
// themselves and audited after the run.
class Journal {
 public:
  using RecordId = std::uint32_t;

  ObjectId add_object(ObjectKind kind, std::uint32_t param = 0) {
    objects_.push_back({kind, param});
    return static_cast<ObjectId>(objects_.size() - 1);
  }

  RecordId begin(ObjectId obj, Pid pid, StepIndex inv) {
    records_.push_back({obj, pid, inv, kNoStep, Outcome::none, 0});
    return static_cast<RecordId>(records_.size() - 1);
  }

  void end(RecordId id, StepIndex resp, Outcome result) {
    records_[id].resp = resp;
    records_[id].result = result;
  }

  void set_inv(RecordId id, StepIndex inv) { records_[id].inv = inv; }
  void set_aux(RecordId id, std::uint32_t aux) { records_[id].aux = aux; }

  const std::vector<ObjectInfo>& objects() const { return objects_; }
  const std::vector<OpRecord>& records() const { return records_; }
  const OpRecord& record(RecordId id) const { return records_[id]; }

 private:
  std::vector<ObjectInfo> objects_;
  std::vector<OpRecord> records_;
};

}  // namespace tasim::sim
