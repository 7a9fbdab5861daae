#pragma once

#include "tasim/sim/execution.hpp"
#include "tasim/sim/journal.hpp"
#include "tasim/sim/register_bank.hpp"
#include "tasim/sim/violation.hpp"
#include "tasim/tas/instance.hpp"

namespace tasim::harness {

using sim::Violations;

// Atomicity, alternation, finished-is-silent, wait-freedom watchdog.
void audit_execution(const sim::Execution& e, const sim::RegisterBank& bank, Violations& out);

// Per-object checks over the invocation journal: D1/D2, splitter counts
// and (S), tas2/tas3 safety and existence, (GR), elimination paths.
void audit_journal(const sim::Journal& j, Violations& out);

// Top-level uniqueness/existence, (GR), and the linearization proxy when
// `linearizable` is set.
void audit_outcomes(const sim::Execution& e, tas::Semantics s, bool linearizable, Violations& out);

// All of the above plus the instance's own checks.
Violations audit(const sim::Execution& e, const tas::Instance& inst);

}  // namespace tasim::harness
