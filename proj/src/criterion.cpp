#include "coordcheck/criterion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coordcheck {

namespace {

const char* kHypCoefficients = "coefficient field: exact rationals (Q)";
const char* kHypGeneric = "generic-coordinate over Qt(R/P) asserted by user";
const char* kHypStably = "stably-polynomial structure asserted";
const char* kHypSubjectInA = "membership of the subject in the retract subalgebra asserted";

Verdict unit_ideal_verdict(const Ideal& ideal) {
    if (is_unit_ideal(ideal)) {
        auto cert = unit_certificate(ideal);
        return Verdict::proven(*cert, "reduced basis is {1}");
    }
    return Verdict::refuted(BasisWitness{ideal.reduced_basis()},
                            "reduced basis is a proper ideal");
}

std::string indices_note(const Verdict& lnd) {
    const auto* w = std::get_if<IndexWitness>(&lnd.witness);
    if (!w) return "";
    std::ostringstream os;
    os << "nilpotency indices:";
    for (const auto& [name, k] : w->indices) os << " " << name << ":" << k;
    return os.str();
}

} // namespace

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::ResidualCoordinate: return "ResidualCoordinate";
        case Conclusion::NotResidualCoordinate: return "NotResidualCoordinate";
        case Conclusion::Inconclusive: return "Inconclusive";
    }
    return "";
}

Ideal partials_ideal(const Polynomial& F) {
    const Ring& ring = F.ring();
    std::vector<Polynomial> gens;
    for (const auto& v : ring->fibre_variables()) gens.push_back(partial(F, v));
    return Ideal(ring, std::move(gens));
}

CriterionReport theorem_a_check(const Polynomial& F, const CheckOptions& options) {
    CriterionReport report{F, {}, Conclusion::Inconclusive, {}, "", {}, {}};
    report.hypotheses.push_back(kHypCoefficients);
    if (options.generic_asserted) report.hypotheses.push_back(kHypGeneric);
    if (options.stably_polynomial) report.hypotheses.push_back(kHypStably);

    Verdict unit = unit_ideal_verdict(partials_ideal(F));
    const bool proven = unit.proven_p();
    report.conditions.emplace(kCondPartialsUnit, std::move(unit));

    if (proven) {
        if (options.generic_asserted) {
            report.conclusion = Conclusion::ResidualCoordinate;
        } else {
            report.conclusion = Conclusion::Inconclusive;
            report.explanation =
                "partials generate the unit ideal, but the generic-coordinate "
                "hypothesis was not asserted (pass generic-asserted)";
        }
    } else {
        if (options.stably_polynomial) {
            report.conclusion = Conclusion::NotResidualCoordinate;
        } else {
            report.conclusion = Conclusion::Inconclusive;
            report.explanation =
                "partials generate a proper ideal; the criterion is sufficient "
                "only, so this refutes nothing without the stably-polynomial "
                "hypothesis";
        }
    }
    return report;
}

CriterionReport corollary_b_report(const Polynomial& F,
                                   const std::vector<std::string>& t_vars,
                                   const CheckOptions& options) {
    const Ring& ring = F.ring();
    const std::vector<std::string> x_vars = ring->fibre_variables();
    std::set<std::string> fibre_set(x_vars.begin(), x_vars.end());
    std::set<std::string> t_set;
    for (const auto& t : t_vars) {
        if (!fibre_set.count(t))
            throw UnknownVariableError(t + " (must be a declared fibre variable)");
        if (!t_set.insert(t).second) throw Error("repeated stable variable " + t);
    }
    if (x_vars.size() != t_vars.size() + 2)
        throw ArityError("corollary-b setting needs exactly " +
                         std::to_string(t_vars.size() + 2) +
                         " fibre variables for " + std::to_string(t_vars.size()) +
                         " stable variables, found " + std::to_string(x_vars.size()));

    CriterionReport report{F, {}, Conclusion::Inconclusive, {}, "", {}, {}};
    report.hypotheses.push_back(kHypCoefficients);
    report.hypotheses.push_back(kHypStably);
    report.hypotheses.push_back(kHypSubjectInA);
    if (options.generic_asserted) report.hypotheses.push_back(kHypGeneric);

    // (I) partial derivatives with respect to every fibre variable.
    Verdict cond_i = unit_ideal_verdict(partials_ideal(F));

    // The Jacobian derivation of (F, T) with respect to the fibre variables.
    std::vector<Polynomial> polys{F};
    for (const auto& t : t_vars) polys.push_back(Polynomial::variable(ring, t));
    Derivation delta = jacobian_derivation(polys, x_vars);

    Verdict fpf = is_fixed_point_free(delta);
    Verdict lnd = is_locally_nilpotent(delta, options.lnd_bound);

    Verdict cond_v = [&]() {
        if (fpf.refuted_p()) return Verdict::refuted(fpf.witness, fpf.note);
        if (lnd.exhausted_p())
            return Verdict::exhausted(options.lnd_bound,
                                      "fixed point free, but local nilpotency "
                                      "unresolved within the bound");
        return Verdict::proven(fpf.witness, indices_note(lnd));
    }();

    // (VI) maximal minors of Jac(F, T)/(X).
    Matrix jac = jacobian_matrix(polys, x_vars);
    std::vector<Polynomial> minor_gens = minors(jac, polys.size());
    Ideal minors_ideal(ring, minor_gens);
    Verdict cond_vi = unit_ideal_verdict(minors_ideal);

    // (IV) locally nilpotent with a slice.
    Verdict cond_iv = [&]() {
        if (fpf.refuted_p())
            return Verdict::refuted(fpf.witness,
                                    "no slice can exist: the image ideal is proper");
        if (lnd.exhausted_p())
            return Verdict::exhausted(options.lnd_bound,
                                      "local nilpotency unresolved within the bound");
        if (auto g = find_slice(delta, options.slice_degree_bound))
            return Verdict::proven(*g, "slice found; apply(D, g) = 1 re-verified");
        return Verdict::exhausted(options.slice_degree_bound,
                                  "no slice of total degree within the bound");
    }();

    // Proof identity: the minor ideal coincides with the ideal of images.
    Ideal image_ideal(ring, delta.images());
    if (!ideal_equals(minors_ideal, image_ideal))
        throw Error("internal: minor ideal differs from the derivation image ideal");
    if (cond_vi.proven_p() != fpf.proven_p())
        throw Error("internal: minors-unit and fixed-point-free statuses disagree");
    if (cond_vi.proven_p() && !cond_i.proven_p())
        throw Error("internal: (VI) proven but (I) refuted");

    const bool i_proven = cond_i.proven_p();
    report.conditions.emplace(kCondPartialsUnit, std::move(cond_i));
    report.conditions.emplace(kCondLndWithSlice, std::move(cond_iv));
    report.conditions.emplace(kCondFpfLnd, std::move(cond_v));
    report.conditions.emplace(kCondMinorsUnit, std::move(cond_vi));
    report.fpf_part = std::move(fpf);
    report.lnd_part = std::move(lnd);

    if (i_proven) {
        if (options.generic_asserted) {
            report.conclusion = Conclusion::ResidualCoordinate;
        } else {
            report.conclusion = Conclusion::Inconclusive;
            report.explanation =
                "partials generate the unit ideal, but the generic-coordinate "
                "hypothesis was not asserted (pass generic-asserted)";
        }
    } else {
        report.conclusion = Conclusion::NotResidualCoordinate;
    }
    return report;
}

Verdict field_coordinate_2var(const Polynomial& F, int lnd_bound) {
    const Ring& ring = F.ring();
    if (ring->variable_count() != 2 || ring->relation_count() != 0 ||
        ring->base_count() != 0)
        throw ArityError(
            "field-coordinate-2var needs a two-variable presentation over Q "
            "with no relations");

    Derivation delta = jacobian_derivation({F}, ring->variables());
    Verdict fpf = is_fixed_point_free(delta);
    if (fpf.refuted_p())
        return Verdict::refuted(fpf.witness,
                                "Jacobian derivation is not fixed point free");
    Verdict lnd = is_locally_nilpotent(delta, lnd_bound);
    if (lnd.exhausted_p())
        return Verdict::exhausted(lnd_bound,
                                  "fixed point free, but local nilpotency "
                                  "unresolved within the bound");
    return Verdict::proven(fpf.witness,
                           "fixed point free locally nilpotent Jacobian "
                           "derivation; " + indices_note(lnd));
}

} // namespace coordcheck
