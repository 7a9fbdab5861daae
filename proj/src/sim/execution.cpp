#include "tasim/sim/execution.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>

namespace tasim::sim {

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::step_limit_exceeded: return "step-limit-exceeded";
    case RunStatus::schedule_exhausted: return "schedule-exhausted";
    case RunStatus::protocol_error: return "protocol-error";
  }
  return "?";
}

bool Execution::all_finished() const {
  return std::all_of(processes.begin(), processes.end(),
                     [](const ProcessRecord& r) { return r.status == ProcessStatus::finished; });
}

std::vector<Pid> Execution::sigma() const {
  std::vector<Pid> out;
  out.reserve(events.size());
  for (const auto& e : events) out.push_back(e.pid);
  return out;
}

std::vector<Pid> Execution::slots() const {
  std::vector<Pid> out;
  out.reserve(events.size() + noops.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i <= events.size(); ++i) {
    while (n < noops.size() && noops[n].after == i) out.push_back(noops[n++].pid);
    if (i < events.size()) out.push_back(events[i].pid);
  }
  return out;
}

std::vector<std::vector<CoinWord>> Execution::omega() const {
  std::vector<std::vector<CoinWord>> out(processes.size());
  for (const auto& e : events)
    if (e.kind == EventKind::coin) out[e.pid].push_back(e.coin);
  return out;
}

std::uint32_t Execution::max_step() const {
  std::uint32_t m = 0;
  for (const auto& p : processes) m = std::max(m, p.shared_steps);
  return m;
}

namespace {

void append_event(std::string& out, const Event& e) {
  char buf[160];
  switch (e.kind) {
    case EventKind::coin:
      std::snprintf(buf, sizeof buf,
                    "{\"i\":%" PRIu64 ",\"p\":%u,\"op\":\"c\",\"reg\":null,\"val\":null,"
                    "\"coin\":\"0x%016" PRIx64 "\"}\n",
                    e.index, e.pid, e.coin);
      break;
    case EventKind::read:
    case EventKind::write:
      std::snprintf(buf, sizeof buf,
                    "{\"i\":%" PRIu64 ",\"p\":%u,\"op\":\"%c\",\"reg\":%u,\"val\":%" PRId64
                    ",\"coin\":null}\n",
                    e.index, e.pid, e.kind == EventKind::read ? 'r' : 'w', e.reg, e.value);
      break;
    case EventKind::noop:
      std::snprintf(buf, sizeof buf,
                    "{\"i\":null,\"p\":%u,\"op\":\"n\",\"reg\":null,\"val\":null,\"coin\":null}\n",
                    e.pid);
      break;
  }
  out += buf;
}

}  // namespace

std::string Execution::to_jsonl(bool with_noops) const {
  std::string out;
  out.reserve(events.size() * 72);
  std::size_t n = 0;
  for (std::size_t i = 0; i <= events.size(); ++i) {
    while (n < noops.size() && noops[n].after == i) {
      if (with_noops) {
        Event marker;
        marker.pid = noops[n].pid;
        marker.kind = EventKind::noop;
        append_event(out, marker);
      }
      ++n;
    }
    if (i < events.size()) append_event(out, events[i]);
  }
  return out;
}

}  // namespace tasim::sim
