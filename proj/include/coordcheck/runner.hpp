#pragma once

#include <string>
#include <variant>
#include <vector>

#include "coordcheck/criterion.hpp"
#include "coordcheck/parser.hpp"

namespace coordcheck {

struct RunFlags {
    int default_lnd_bound = 64;
    int default_slice_degree = 8;
};

// One executed directive, in script order.
struct RunResult {
    CheckStmt directive;
    std::variant<CriterionReport, Verdict> report;
    double elapsed_ms = 0.0;
};

std::vector<RunResult> run_script(const Script& script, const RunFlags& flags = {});
std::vector<RunResult> run_script_file(const std::string& path,
                                       const RunFlags& flags = {});

enum class EmitFormat { Text, Json };

// Text output is stable and diff-testable (timings are not included); JSON
// is one object per line with fields
// {directive, status, conclusion, witness, hypotheses, elapsed}.
std::string emit(const std::vector<RunResult>& results, EmitFormat format);

// Rendering helpers shared with the command-line front end.
std::string witness_text(const Witness& witness);
std::string basis_text(const std::vector<Polynomial>& basis);
std::string certificate_text(const UnitCertificate& certificate);

// Process exit code for a batch of results: the criterion mapping for
// residual-style directives (0 proven, 1 refuted, 2 inconclusive), 0 for
// purely informational directives.
int exit_code_for(const std::vector<RunResult>& results);

} // namespace coordcheck
