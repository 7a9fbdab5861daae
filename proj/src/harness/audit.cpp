#include "tasim/harness/audit.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace tasim::harness {

using sim::EventKind;
using sim::ObjectKind;
using sim::OpRecord;

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string where(const sim::ObjectInfo& o, sim::ObjectId id) {
  return std::string(sim::to_string(o.kind)) + "#" + str(id);
}

// Earliest response among completed records other than `self`.
StepIndex min_other_response(const std::vector<const OpRecord*>& recs, const OpRecord* self) {
  StepIndex m = std::numeric_limits<StepIndex>::max();
  for (const auto* r : recs)
    if (r != self && r->complete()) m = std::min(m, r->resp);
  return m;
}

void check_object(sim::ObjectId id, const sim::ObjectInfo& info,
                  const std::vector<const OpRecord*>& recs, Violations& out) {
  const auto l = recs.size();
  bool all_complete = true;
  std::size_t count[16] = {};
  for (const auto* r : recs) {
    all_complete &= r->complete();
    ++count[static_cast<int>(r->result)];
  }
  const auto n_of = [&](Outcome o) { return count[static_cast<int>(o)]; };
  const auto fail = [&](const char* what, const std::string& detail) {
    out.push_back({what, where(info, id) + ": " + detail});
  };
  // Callers whose result is in `early` must have been invoked before any
  // other call on the object responded.
  const auto early_invocation = [&](const char* what, std::initializer_list<Outcome> early) {
    for (const auto* r : recs) {
      if (std::find(early.begin(), early.end(), r->result) == early.end()) continue;
      const auto m = min_other_response(recs, r);
      if (r->inv >= m)
        fail(what, "process " + str(r->pid) + " invoked at " + str(r->inv) +
                       " after a response at " + str(m));
    }
  };

  switch (info.kind) {
    case ObjectKind::doorway:
      if (all_complete && n_of(Outcome::pass) == 0) fail("D1", "all entrants deflected");
      early_invocation("D2", {Outcome::pass});
      break;
    case ObjectKind::splitter:
      if (n_of(Outcome::stop) > 1) fail("splitter-counts", str(n_of(Outcome::stop)) + " stops");
      if (n_of(Outcome::left) > l - 1) fail("splitter-counts", str(n_of(Outcome::left)) + " lefts of " + str(l));
      if (n_of(Outcome::right) > l - 1) fail("splitter-counts", str(n_of(Outcome::right)) + " rights of " + str(l));
      early_invocation("S", {Outcome::stop, Outcome::right});
      break;
    case ObjectKind::rsplitter:
      if (n_of(Outcome::stop) > 1) fail("splitter-counts", str(n_of(Outcome::stop)) + " stops");
      if (l == 1 && all_complete && n_of(Outcome::stop) != 1) fail("splitter-counts", "solo entrant did not stop");
      break;
    case ObjectKind::tas2:
    case ObjectKind::tas3:
    case ObjectKind::ge_tas:
    case ObjectKind::ratrace:
      if (n_of(Outcome::zero) > 1) fail("tas-uniqueness", str(n_of(Outcome::zero)) + " winners");
      if (all_complete && n_of(Outcome::zero) != 1) fail("tas-existence", "no winner");
      if (info.kind == ObjectKind::tas2 && l > 2) fail("tas-callers", str(l) + " callers");
      if (info.kind == ObjectKind::tas3 && l > 3) fail("tas-callers", str(l) + " callers");
      break;
    case ObjectKind::ge_locobl:
    case ObjectKind::ge_rwobl:
      if (all_complete && n_of(Outcome::win) == 0) fail("GR", "nobody elected");
      break;
    case ObjectKind::elim_path: {
      if (n_of(Outcome::win) > 1) fail("elim-path", str(n_of(Outcome::win)) + " winners");
      if (all_complete && n_of(Outcome::lose) == l) fail("elim-path", "every caller lost");
      if (l <= info.param) {
        std::uint32_t deepest = 0;
        for (const auto* r : recs) deepest = std::max(deepest, r->aux);
        if (deepest > l) fail("elim-path", "node " + str(deepest) + " visited with " + str(l) + " callers");
        if (n_of(Outcome::fall_off) > 0) fail("elim-path", "fall-off with " + str(l) + " callers");
      }
      break;
    }
  }
}

}  // namespace

void audit_execution(const sim::Execution& e, const sim::RegisterBank& bank, Violations& out) {
  if (e.status == sim::RunStatus::step_limit_exceeded)
    out.push_back({"wait-freedom", "step limit exceeded after " + str(e.events.size()) + " steps"});
  if (e.status == sim::RunStatus::protocol_error) out.push_back({"protocol-error", e.error});

  std::vector<Value> cells(bank.size());
  for (RegisterId r = 0; r < cells.size(); ++r) cells[r] = bank.initial(r);
  const auto k = e.processes.size();
  std::vector<std::uint8_t> expect_coin(k, 1);
  for (std::size_t i = 0; i < e.events.size(); ++i) {
    const auto& ev = e.events[i];
    if (ev.index != i + 1) {
      out.push_back({"event-index", "event " + str(i) + " has index " + str(ev.index)});
      return;
    }
    const bool coin = ev.kind == EventKind::coin;
    if (coin != (expect_coin[ev.pid] != 0))
      out.push_back({"alternation", "process " + str(ev.pid) + " at step " + str(ev.index)});
    expect_coin[ev.pid] = !coin;
    const auto& rec = e.processes[ev.pid];
    if (rec.status == sim::ProcessStatus::finished && ev.index > rec.response)
      out.push_back({"finished-is-silent", "process " + str(ev.pid) + " stepped at " + str(ev.index)});
    if (ev.kind == EventKind::write) cells[ev.reg] = ev.value;
    if (ev.kind == EventKind::read && cells[ev.reg] != ev.value)
      out.push_back({"atomicity", "read of register " + str(ev.reg) + " at " + str(ev.index)});
  }
}

void audit_journal(const sim::Journal& j, Violations& out) {
  const auto& objs = j.objects();
  const auto& recs = j.records();
  std::vector<std::uint32_t> start(objs.size() + 1, 0);
  for (const auto& r : recs)
    if (r.started()) ++start[r.object + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  std::vector<const OpRecord*> sorted(start.back());
  auto fill = start;
  for (const auto& r : recs)
    if (r.started()) sorted[fill[r.object]++] = &r;

  std::vector<const OpRecord*> group;
  for (sim::ObjectId id = 0; id < objs.size(); ++id) {
    if (start[id] == start[id + 1]) continue;
    group.assign(sorted.begin() + start[id], sorted.begin() + start[id + 1]);
    check_object(id, objs[id], group, out);
  }
}

void audit_outcomes(const sim::Execution& e, tas::Semantics s, bool linearizable,
                    Violations& out) {
  std::size_t zeros = 0, wins = 0;
  for (const auto& p : e.processes) {
    if (p.status != sim::ProcessStatus::finished) continue;
    zeros += p.outcome == Outcome::zero;
    wins += p.outcome == Outcome::win;
  }
  const bool all = e.all_finished();
  if (s == tas::Semantics::test_and_set) {
    if (zeros > 1) out.push_back({"uniqueness", str(zeros) + " processes returned 0"});
    if (all && zeros == 0) out.push_back({"existence", "all finished and nobody returned 0"});
    if (linearizable && !tas::linearization_proxy(e))
      out.push_back({"linearization", "a call responded before the winner was invoked"});
  } else if (s == tas::Semantics::group_election) {
    if (all && wins == 0) out.push_back({"GR", "all finished and nobody elected"});
  }
}

Violations audit(const sim::Execution& e, const tas::Instance& inst) {
  Violations out;
  audit_execution(e, inst.bank(), out);
  audit_journal(inst.journal(), out);
  audit_outcomes(e, inst.semantics(), inst.doorway_fronted(), out);
  inst.audit(e, out);
  return out;
}

}  // namespace tasim::harness
