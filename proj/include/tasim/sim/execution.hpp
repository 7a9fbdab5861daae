#pragma once

#include <string>
#include <vector>

#include "tasim/sim/types.hpp"

namespace tasim::sim {

enum class EventKind : std::uint8_t { coin, read, write, noop };

struct Event {
  StepIndex index = 0;
  Pid pid = 0;
  EventKind kind = EventKind::coin;
  RegisterId reg = 0;  // read/write only
  Value value = 0;     // read/write only
  CoinWord coin = 0;   // coin only

  friend bool operator==(const Event&, const Event&) = default;
};

// A slot given to an already finished process. `after` is the number of
// steps that preceded it.
struct NoopMarker {
  StepIndex after = 0;
  Pid pid = 0;

  friend bool operator==(const NoopMarker&, const NoopMarker&) = default;
};

enum class ProcessStatus : std::uint8_t { not_started, running, finished };

struct ProcessRecord {
  ProcessStatus status = ProcessStatus::not_started;
  Outcome outcome = Outcome::none;
  StepIndex invocation = kNoStep;  // first step of the process
  StepIndex response = kNoStep;    // step on which it finished
  std::uint32_t shared_steps = 0;
  std::uint32_t coin_steps = 0;

  friend bool operator==(const ProcessRecord&, const ProcessRecord&) = default;
};

// protocol_error: a machine rejected a step (for example a tas2 called
// twice with the same id); the run stops there and `error` says why.
enum class RunStatus : std::uint8_t { completed, step_limit_exceeded, schedule_exhausted, protocol_error };

std::string_view to_string(RunStatus s);

struct Execution {
  std::vector<Event> events;  // steps only, index == position + 1
  std::vector<NoopMarker> noops;
  std::vector<ProcessRecord> processes;
  RunStatus status = RunStatus::completed;
  std::string error;

  std::size_t process_count() const { return processes.size(); }
  bool all_finished() const;

  // Pid projection over steps.
  std::vector<Pid> sigma() const;
  // Every scheduled slot, including those that produced a noop.
  std::vector<Pid> slots() const;
  // Per-process coin words in order.
  std::vector<std::vector<CoinWord>> omega() const;

  std::uint32_t max_step() const;

  // One JSON object per line; noop markers are emitted with a null index.
  std::string to_jsonl(bool with_noops = true) const;
};

}  // namespace tasim::sim
