#include "coordcheck/runner.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace coordcheck {

namespace {

CheckOptions options_for(const CheckStmt& stmt, const RunFlags& flags) {
    CheckOptions o;
    o.generic_asserted = stmt.resolved.generic_asserted;
    o.stably_polynomial = stmt.resolved.stably_polynomial;
    o.lnd_bound = stmt.resolved.lnd_bound.value_or(flags.default_lnd_bound);
    o.slice_degree_bound =
        stmt.resolved.slice_degree.value_or(flags.default_slice_degree);
    return o;
}

Derivation derivation_from(const CheckStmt& stmt) {
    std::map<std::string, Polynomial> images = stmt.resolved.var_map;
    for (const auto& name : stmt.ring->variables())
        images.emplace(name, Polynomial::zero(stmt.ring));
    return Derivation(stmt.ring, std::move(images));
}

Verdict run_retraction(const CheckStmt& stmt) {
    std::map<std::string, Polynomial> images = stmt.resolved.var_map;
    for (const auto& name : stmt.ring->variables())
        images.emplace(name, Polynomial::variable(stmt.ring, name));

    Verdict v = is_retraction(images, stmt.ring);
    if (!v.proven_p() || stmt.subjects.empty()) return v;

    std::vector<Polynomial> rel_basis = buchberger(stmt.ring->relations());
    std::string verified;
    for (std::size_t i = 0; i < stmt.subjects.size(); ++i) {
        Polynomial image =
            normal_form(substitute(stmt.subject_polys[i], images), rel_basis);
        if (!image.is_zero())
            return Verdict::refuted(image, "kernel generator " + stmt.subjects[i] +
                                               " does not map to 0");
        verified += (verified.empty() ? "" : ", ") + stmt.subjects[i];
    }
    v.note += "; kernel generators map to 0: " + verified;
    return v;
}

std::variant<CriterionReport, Verdict> dispatch(const CheckStmt& stmt,
                                                const RunFlags& flags) {
    const CheckOptions options = options_for(stmt, flags);
    if (stmt.kind == "residual") {
        if (!stmt.resolved.t_vars.empty())
            return corollary_b_report(stmt.subject_polys[0], stmt.resolved.t_vars,
                                      options);
        return theorem_a_check(stmt.subject_polys[0], options);
    }
    if (stmt.kind == "corollary-b")
        return corollary_b_report(stmt.subject_polys[0], stmt.resolved.t_vars,
                                  options);
    if (stmt.kind == "field-coordinate-2var")
        return field_coordinate_2var(stmt.subject_polys[0], options.lnd_bound);
    if (stmt.kind == "lnd")
        return is_locally_nilpotent(derivation_from(stmt), options.lnd_bound);
    if (stmt.kind == "fpf") return is_fixed_point_free(derivation_from(stmt));
    if (stmt.kind == "groebner") {
        Ideal ideal(stmt.ring, stmt.subject_polys);
        return Verdict::proven(BasisWitness{ideal.reduced_basis()},
                               "reduced Groebner basis");
    }
    if (stmt.kind == "unit-ideal") {
        Ideal ideal(stmt.ring, stmt.subject_polys);
        if (is_unit_ideal(ideal))
            return Verdict::proven(*unit_certificate(ideal), "UNIT");
        return Verdict::refuted(BasisWitness{ideal.reduced_basis()}, "NOT-UNIT");
    }
    if (stmt.kind == "retraction") return run_retraction(stmt);
    throw Error("unknown check kind " + stmt.kind);
}

} // namespace

std::vector<RunResult> run_script(const Script& script, const RunFlags& flags) {
    std::vector<RunResult> results;
    for (const auto& stmt : script.statements) {
        const auto* check = std::get_if<CheckStmt>(&stmt);
        if (!check) continue;
        auto start = std::chrono::steady_clock::now();
        try {
            RunResult r{*check, dispatch(*check, flags), 0.0};
            r.elapsed_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            results.push_back(std::move(r));
        } catch (const BudgetExhaustedError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(check->pos, std::string("directive failed: ") + e.what());
        }
    }
    return results;
}

std::vector<RunResult> run_script_file(const std::string& path,
                                       const RunFlags& flags) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open script file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Script script = parse_script(buffer.str());
    return run_script(script, flags);
}

std::string basis_text(const std::vector<Polynomial>& basis) {
    std::string s = "{";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) s += ", ";
        s += basis[i].to_string();
    }
    return s + "}";
}

std::string certificate_text(const UnitCertificate& certificate) {
    std::string s = "1 =";
    bool first = true;
    for (std::size_t i = 0; i < certificate.generators.size(); ++i) {
        if (certificate.cofactors[i].is_zero()) continue;
        s += first ? " " : " + ";
        first = false;
        s += "(" + certificate.cofactors[i].to_string() + ")*(" +
             certificate.generators[i].to_string() + ")";
    }
    if (first) s += " 0"; // unreachable for a verified certificate
    return s;
}

std::string witness_text(const Witness& witness) {
    if (const auto* p = std::get_if<Polynomial>(&witness)) return p->to_string();
    if (const auto* c = std::get_if<UnitCertificate>(&witness))
        return certificate_text(*c);
    if (const auto* b = std::get_if<BasisWitness>(&witness))
        return basis_text(b->basis);
    if (const auto* ix = std::get_if<IndexWitness>(&witness)) {
        std::string s;
        for (const auto& [name, k] : ix->indices) {
            if (!s.empty()) s += " ";
            s += name + ":" + std::to_string(k);
        }
        return s;
    }
    return "";
}

namespace {

void emit_verdict_text(std::ostream& os, const Verdict& v) {
    os << "    status: " << to_string(v.status);
    if (v.bound) os << " (bound " << *v.bound << ")";
    os << "\n";
    if (const auto* c = std::get_if<UnitCertificate>(&v.witness))
        os << "    certificate: " << certificate_text(*c) << "\n";
    else if (const auto* b = std::get_if<BasisWitness>(&v.witness))
        os << "    " << b->label << ": " << basis_text(b->basis) << "\n";
    else if (const auto* p = std::get_if<Polynomial>(&v.witness))
        os << "    witness: " << p->to_string() << "\n";
    else if (std::holds_alternative<IndexWitness>(v.witness))
        os << "    nilpotency indices: " << witness_text(v.witness) << "\n";
    if (!v.note.empty()) os << "    note: " << v.note << "\n";
}

void emit_report_text(std::ostream& os, const CriterionReport& report) {
    for (const auto& [tag, verdict] : report.conditions) {
        os << "    " << tag << ": " << to_string(verdict.status);
        if (verdict.bound) os << " (bound " << *verdict.bound << ")";
        os << "\n";
        if (const auto* c = std::get_if<UnitCertificate>(&verdict.witness))
            os << "      certificate: " << certificate_text(*c) << "\n";
        else if (const auto* b = std::get_if<BasisWitness>(&verdict.witness))
            os << "      " << b->label << ": " << basis_text(b->basis) << "\n";
        else if (const auto* p = std::get_if<Polynomial>(&verdict.witness))
            os << "      witness: " << p->to_string() << "\n";
        if (!verdict.note.empty()) os << "      note: " << verdict.note << "\n";
    }
    os << "    conclusion: " << to_string(report.conclusion) << "\n";
    if (!report.explanation.empty())
        os << "    explanation: " << report.explanation << "\n";
    if (!report.hypotheses.empty()) {
        os << "    hypotheses: ";
        for (std::size_t i = 0; i < report.hypotheses.size(); ++i) {
            if (i) os << "; ";
            os << report.hypotheses[i];
        }
        os << "\n";
    }
}

const Verdict& primary_verdict(const CriterionReport& report) {
    return report.conditions.at(kCondPartialsUnit);
}

} // namespace

std::string emit(const std::vector<RunResult>& results, EmitFormat format) {
    std::ostringstream os;
    if (format == EmitFormat::Text) {
        for (std::size_t i = 0; i < results.size(); ++i) {
            const RunResult& r = results[i];
            os << "[" << (i + 1) << "] " << print_directive(r.directive) << "\n";
            if (const auto* report = std::get_if<CriterionReport>(&r.report))
                emit_report_text(os, *report);
            else
                emit_verdict_text(os, std::get<Verdict>(r.report));
        }
        return os.str();
    }

    for (const auto& r : results) {
        nlohmann::json j;
        j["directive"] = print_directive(r.directive);
        if (const auto* report = std::get_if<CriterionReport>(&r.report)) {
            const Verdict& v = primary_verdict(*report);
            j["status"] = to_string(v.status);
            j["conclusion"] = to_string(report->conclusion);
            std::string w = witness_text(v.witness);
            if (w.empty())
                j["witness"] = nullptr;
            else
                j["witness"] = w;
            j["hypotheses"] = report->hypotheses;
        } else {
            const Verdict& v = std::get<Verdict>(r.report);
            j["status"] = to_string(v.status);
            j["conclusion"] = nullptr;
            std::string w = witness_text(v.witness);
            if (w.empty())
                j["witness"] = nullptr;
            else
                j["witness"] = w;
            j["hypotheses"] = nlohmann::json::array();
        }
        j["elapsed"] = r.elapsed_ms;
        os << j.dump() << "\n";
    }
    return os.str();
}

int exit_code_for(const std::vector<RunResult>& results) {
    int code = 0;
    for (const auto& r : results) {
        const auto* report = std::get_if<CriterionReport>(&r.report);
        if (!report) continue;
        int c = 0;
        switch (report->conclusion) {
            case Conclusion::ResidualCoordinate: c = 0; break;
            case Conclusion::NotResidualCoordinate: c = 1; break;
            case Conclusion::Inconclusive: c = 2; break;
        }
        code = std::max(code, c);
    }
    return code;
}

} // namespace coordcheck
