#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coordcheck/derivation.hpp"

namespace coordcheck {

// Condition tags of the equivalence report.
inline constexpr const char* kCondPartialsUnit = "I-partials-unit";
inline constexpr const char* kCondLndWithSlice = "IV-lnd-with-slice";
inline constexpr const char* kCondFpfLnd = "V-fpf-lnd";
inline constexpr const char* kCondMinorsUnit = "VI-minors-unit";

enum class Conclusion { ResidualCoordinate, NotResidualCoordinate, Inconclusive };

std::string to_string(Conclusion c);

struct CheckOptions {
    bool generic_asserted = false;
    bool stably_polynomial = false;
    int lnd_bound = 64;
    int slice_degree_bound = 8;
};

// Outcome of a residual-coordinate check. The conclusion is three-valued:
//   ResidualCoordinate     only with I-partials-unit Proven and the
//                          generic-coordinate hypothesis asserted;
//   NotResidualCoordinate  only with I-partials-unit Refuted under the
//                          stably-polynomial hypothesis;
//   Inconclusive           otherwise, with the missing hypothesis or failed
//                          direction spelled out in `explanation`.
struct CriterionReport {
    Polynomial subject;
    std::map<std::string, Verdict> conditions;
    Conclusion conclusion;
    std::vector<std::string> hypotheses; // asserted-but-unchecked assumptions
    std::string explanation;
    // Sub-verdicts of condition (V).
    std::optional<Verdict> fpf_part;
    std::optional<Verdict> lnd_part;
};

// Ideal generated by the partial derivatives of F with respect to the fibre
// variables of its ambient presentation (relations ride along).
Ideal partials_ideal(const Polynomial& F);

// Sufficient criterion: unit partials ideal makes F a residual coordinate,
// provided the generic-coordinate hypothesis holds. One-directional unless
// the stably-polynomial flag upgrades a refuted unit test to a negative
// conclusion.
CriterionReport theorem_a_check(const Polynomial& F, const CheckOptions& options);

// Six-way equivalence report over the stably polynomial setting
// A[T] = R[X]: computes (I) partials, (V) fixed-point-freeness plus bounded
// local nilpotency of the Jacobian derivation of (F, T), (VI) the maximal
// minors, and (IV) slice existence. The t_vars must be fibre variables and
// |fibre| = |t_vars| + 2.
CriterionReport corollary_b_report(const Polynomial& F,
                                   const std::vector<std::string>& t_vars,
                                   const CheckOptions& options);

// Decides whether F is a coordinate of Q[X,Y] through its Jacobian
// derivation: Proven if the derivation is fixed point free and locally
// nilpotent within the bound, Refuted if fixed-point-freeness fails,
// Exhausted if the nilpotency check runs out of budget.
Verdict field_coordinate_2var(const Polynomial& F, int lnd_bound);

} // namespace coordcheck
