// coordcheck: batch front end for the coordinate-recognition library.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "coordcheck/runner.hpp"

namespace {

using namespace coordcheck;

constexpr int kExitUsage = 3;
constexpr int kExitDirective = 4;
constexpr int kExitBudget = 5;

struct RingContext {
    Ring ring;
    std::map<std::string, Polynomial> bindings;
};

RingContext make_context(const std::string& ring_text,
                         const std::vector<std::string>& lets) {
    RingContext ctx;
    ctx.ring = parse_ring_literal(ring_text);
    for (const auto& l : lets) {
        auto eq = l.find('=');
        if (eq == std::string::npos)
            throw Error("--let expects name=expression, got " + l);
        std::string name = l.substr(0, eq);
        ctx.bindings.emplace(
            name, parse_polynomial(l.substr(eq + 1), ctx.ring, ctx.bindings));
    }
    return ctx;
}

std::vector<Polynomial> parse_polys(const RingContext& ctx,
                                    const std::vector<std::string>& exprs) {
    std::vector<Polynomial> out;
    for (const auto& e : exprs)
        out.push_back(parse_polynomial(e, ctx.ring, ctx.bindings));
    return out;
}

std::map<std::string, Polynomial> parse_map(const RingContext& ctx,
                                            const std::vector<std::string>& entries) {
    std::map<std::string, Polynomial> images;
    for (const auto& m : entries) {
        auto eq = m.find('=');
        if (eq == std::string::npos)
            throw Error("--map expects VAR=expression, got " + m);
        std::string name = m.substr(0, eq);
        ctx.ring->require_index(name);
        images.insert_or_assign(
            name, parse_polynomial(m.substr(eq + 1), ctx.ring, ctx.bindings));
    }
    return images;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) out.push_back(s.substr(start));
            break;
        }
        if (comma > start) out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

void print_verdict(const Verdict& v, bool json) {
    if (json) {
        nlohmann::json j;
        j["status"] = to_string(v.status);
        std::string w = witness_text(v.witness);
        j["witness"] = w.empty() ? nlohmann::json(nullptr) : nlohmann::json(w);
        j["note"] = v.note;
        if (v.bound) j["bound"] = *v.bound;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "status: " << to_string(v.status);
    if (v.bound) std::cout << " (bound " << *v.bound << ")";
    std::cout << "\n";
    if (const auto* c = std::get_if<UnitCertificate>(&v.witness))
        std::cout << "certificate: " << certificate_text(*c) << "\n";
    else if (const auto* b = std::get_if<BasisWitness>(&v.witness))
        std::cout << b->label << ": " << basis_text(b->basis) << "\n";
    else if (const auto* p = std::get_if<Polynomial>(&v.witness))
        std::cout << "witness: " << p->to_string() << "\n";
    else if (std::holds_alternative<IndexWitness>(v.witness))
        std::cout << "nilpotency indices: " << witness_text(v.witness) << "\n";
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
}

void print_report(const CriterionReport& report, bool json) {
    if (json) {
        nlohmann::json j;
        j["subject"] = report.subject.to_string();
        nlohmann::json conds = nlohmann::json::object();
        for (const auto& [tag, v] : report.conditions) {
            nlohmann::json cv;
            cv["status"] = to_string(v.status);
            std::string w = witness_text(v.witness);
            cv["witness"] = w.empty() ? nlohmann::json(nullptr) : nlohmann::json(w);
            if (!v.note.empty()) cv["note"] = v.note;
            conds[tag] = cv;
        }
        j["conditions"] = conds;
        j["conclusion"] = to_string(report.conclusion);
        j["hypotheses"] = report.hypotheses;
        if (!report.explanation.empty()) j["explanation"] = report.explanation;
        std::cout << j.dump() << "\n";
        return;
    }
    for (const auto& [tag, v] : report.conditions) {
        std::cout << tag << ": " << to_string(v.status);
        if (v.bound) std::cout << " (bound " << *v.bound << ")";
        std::cout << "\n";
        if (const auto* c = std::get_if<UnitCertificate>(&v.witness))
            std::cout << "  certificate: " << certificate_text(*c) << "\n";
        else if (const auto* b = std::get_if<BasisWitness>(&v.witness))
            std::cout << "  " << b->label << ": " << basis_text(b->basis) << "\n";
        else if (const auto* p = std::get_if<Polynomial>(&v.witness))
            std::cout << "  witness: " << p->to_string() << "\n";
    }
    std::cout << "conclusion: " << to_string(report.conclusion) << "\n";
    if (!report.explanation.empty())
        std::cout << "explanation: " << report.explanation << "\n";
    std::cout << "hypotheses:";
    for (const auto& h : report.hypotheses) std::cout << " [" << h << "]";
    std::cout << "\n";
}

int conclusion_exit(Conclusion c) {
    switch (c) {
        case Conclusion::ResidualCoordinate: return 0;
        case Conclusion::NotResidualCoordinate: return 1;
        case Conclusion::Inconclusive: return 2;
    }
    return kExitDirective;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coordcheck: residual-coordinate criteria for polynomial rings"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    bool json = false;
    std::uint64_t budget = 0;
    app.add_flag("--json", json, "machine-readable output, one JSON object per line");
    app.add_option("--step-budget", budget,
                   "abort Groebner computations after this many reduction steps");

    std::string ring_text, vars_text, tvars_text, file_path;
    std::vector<std::string> lets, exprs, map_entries, kernel_exprs;
    int bound = 64, slice_degree = 8;
    std::size_t minor_size = 0;
    bool generic_asserted = false, stably_polynomial = false;

    auto add_ring_options = [&](CLI::App* cmd, bool need_exprs) {
        cmd->add_option("--ring", ring_text, "ring literal, e.g. Q[x,y]/(x^2-1)[U,V]")
            ->required();
        cmd->add_option("--let", lets, "binding name=expr, usable in later expressions");
        if (need_exprs)
            cmd->add_option("exprs", exprs, "polynomial expressions")->required();
    };

    CLI::App* run = app.add_subcommand("run", "execute a .ccs script");
    run->add_option("file", file_path, "script file")->required();
    run->add_option("--lnd-bound", bound, "default local-nilpotency bound");
    run->add_option("--slice-degree", slice_degree, "default slice search degree");

    CLI::App* groebner_cmd =
        app.add_subcommand("groebner", "reduced Groebner basis of an ideal");
    add_ring_options(groebner_cmd, true);

    CLI::App* unit_cmd =
        app.add_subcommand("unit-ideal", "decide whether generators span the unit ideal");
    add_ring_options(unit_cmd, true);

    CLI::App* jac_cmd = app.add_subcommand("jacobian", "Jacobian matrix");
    add_ring_options(jac_cmd, true);
    jac_cmd->add_option("--vars", vars_text, "comma-separated variables")->required();

    CLI::App* minors_cmd = app.add_subcommand("minors", "minors of the Jacobian matrix");
    add_ring_options(minors_cmd, true);
    minors_cmd->add_option("--vars", vars_text, "comma-separated variables")->required();
    minors_cmd->add_option("--size", minor_size, "minor size (default: row count)");

    CLI::App* lnd_cmd =
        app.add_subcommand("lnd-check", "bounded local-nilpotency certification");
    add_ring_options(lnd_cmd, false);
    lnd_cmd->add_option("--map", map_entries, "derivation images VAR=expr (missing: 0)");
    lnd_cmd->add_option("--bound", bound, "iteration bound");

    CLI::App* fpf_cmd = app.add_subcommand("fpf-check", "fixed-point-freeness");
    add_ring_options(fpf_cmd, false);
    fpf_cmd->add_option("--map", map_entries, "derivation images VAR=expr (missing: 0)");

    CLI::App* slice_cmd = app.add_subcommand("slice", "search for g with D(g) = 1");
    add_ring_options(slice_cmd, false);
    slice_cmd->add_option("--map", map_entries, "derivation images VAR=expr (missing: 0)");
    slice_cmd->add_option("--degree", slice_degree, "total degree bound");

    CLI::App* retr_cmd =
        app.add_subcommand("retraction-check", "idempotence of a variable map");
    add_ring_options(retr_cmd, false);
    retr_cmd->add_option("--map", map_entries, "images VAR=expr (missing: identity)");
    retr_cmd->add_option("--kernel", kernel_exprs, "expressions expected to map to 0");

    CLI::App* check = app.add_subcommand("check", "residual-coordinate criteria");
    check->require_subcommand(1);
    CLI::App* residual = check->add_subcommand("residual", "residual-coordinate check");
    residual->add_option("subject", exprs, "subject polynomial")->required();
    residual->add_option("--ring", ring_text, "ring literal")->required();
    residual->add_option("--let", lets, "binding name=expr");
    residual->add_flag("--generic-asserted", generic_asserted,
                       "assert the generic-coordinate hypothesis");
    residual->add_flag("--stably-polynomial", stably_polynomial,
                       "assert the stably-polynomial hypothesis");
    residual->add_option("--t-vars", tvars_text, "comma-separated stable variables");
    residual->add_option("--lnd-bound", bound, "local-nilpotency bound");
    residual->add_option("--slice-degree", slice_degree, "slice search degree bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget > 0) set_step_budget(budget);

        if (run->parsed()) {
            RunFlags flags;
            flags.default_lnd_bound = bound;
            flags.default_slice_degree = slice_degree;
            auto results = run_script_file(file_path, flags);
            std::cout << emit(results, json ? EmitFormat::Json : EmitFormat::Text);
            if (!json)
                for (std::size_t i = 0; i < results.size(); ++i)
                    std::cerr << "[" << (i + 1) << "] " << results[i].elapsed_ms
                              << " ms\n";
            return exit_code_for(results);
        }

        if (groebner_cmd->parsed() || unit_cmd->parsed()) {
            RingContext ctx = make_context(ring_text, lets);
            Ideal ideal(ctx.ring, parse_polys(ctx, exprs));
            if (groebner_cmd->parsed()) {
                if (json) {
                    nlohmann::json j = nlohmann::json::array();
                    for (const auto& b : ideal.reduced_basis()) j.push_back(b.to_string());
                    std::cout << j.dump() << "\n";
                } else {
                    for (const auto& b : ideal.reduced_basis())
                        std::cout << b.to_string() << "\n";
                }
                return 0;
            }
            bool unit = is_unit_ideal(ideal);
            if (json) {
                nlohmann::json j;
                j["result"] = unit ? "UNIT" : "NOT-UNIT";
                if (unit)
                    j["certificate"] = certificate_text(*unit_certificate(ideal));
                else
                    j["basis"] = basis_text(ideal.reduced_basis());
                std::cout << j.dump() << "\n";
            } else if (unit) {
                std::cout << "UNIT\n"
                          << certificate_text(*unit_certificate(ideal)) << "\n";
            } else {
                std::cout << "NOT-UNIT\n"
                          << "basis: " << basis_text(ideal.reduced_basis()) << "\n";
            }
            return 0;
        }

        if (jac_cmd->parsed() || minors_cmd->parsed()) {
            RingContext ctx = make_context(ring_text, lets);
            std::vector<Polynomial> polys = parse_polys(ctx, exprs);
            std::vector<std::string> vars = split_commas(vars_text);
            Matrix m = jacobian_matrix(polys, vars);
            if (jac_cmd->parsed()) {
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (json) {
                        nlohmann::json row = nlohmann::json::array();
                        for (std::size_t j2 = 0; j2 < m.cols(); ++j2)
                            row.push_back(m.at(i, j2).to_string());
                        rows.push_back(row);
                    } else {
                        std::cout << "[";
                        for (std::size_t j2 = 0; j2 < m.cols(); ++j2)
                            std::cout << (j2 ? ", " : "") << m.at(i, j2).to_string();
                        std::cout << "]\n";
                    }
                }
                if (json) std::cout << rows.dump() << "\n";
                return 0;
            }
            std::size_t k = minor_size == 0 ? m.rows() : minor_size;
            std::vector<Polynomial> ms = minors(m, k);
            if (json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& p : ms) j.push_back(p.to_string());
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& p : ms) std::cout << p.to_string() << "\n";
            }
            return 0;
        }

        if (lnd_cmd->parsed() || fpf_cmd->parsed() || slice_cmd->parsed()) {
            RingContext ctx = make_context(ring_text, lets);
            std::map<std::string, Polynomial> images = parse_map(ctx, map_entries);
            for (const auto& name : ctx.ring->variables())
                images.emplace(name, Polynomial::zero(ctx.ring));
            Derivation d(ctx.ring, std::move(images));
            if (lnd_cmd->parsed()) {
                print_verdict(is_locally_nilpotent(d, bound), json);
            } else if (fpf_cmd->parsed()) {
                print_verdict(is_fixed_point_free(d), json);
            } else {
                auto g = find_slice(d, slice_degree);
                Verdict v = g ? Verdict::proven(*g, "apply(D, g) = 1 re-verified")
                              : Verdict::exhausted(slice_degree,
                                                   "no slice with total degree "
                                                   "within the bound");
                print_verdict(v, json);
            }
            return 0;
        }

        if (retr_cmd->parsed()) {
            RingContext ctx = make_context(ring_text, lets);
            std::map<std::string, Polynomial> images = parse_map(ctx, map_entries);
            for (const auto& name : ctx.ring->variables())
                images.emplace(name, Polynomial::variable(ctx.ring, name));
            Verdict v = is_retraction(images, ctx.ring);
            if (v.proven_p() && !kernel_exprs.empty()) {
                std::vector<Polynomial> rel_basis = buchberger(ctx.ring->relations());
                for (const auto& ke : kernel_exprs) {
                    Polynomial p = parse_polynomial(ke, ctx.ring, ctx.bindings);
                    Polynomial image = normal_form(substitute(p, images), rel_basis);
                    if (!image.is_zero()) {
                        v = Verdict::refuted(image, "kernel expression " + ke +
                                                        " does not map to 0");
                        break;
                    }
                }
                if (v.proven_p()) v.note += "; kernel expressions map to 0";
            }
            print_verdict(v, json);
            return v.proven_p() ? 0 : 1;
        }

        if (residual->parsed()) {
            RingContext ctx = make_context(ring_text, lets);
            Polynomial F = parse_polynomial(exprs.front(), ctx.ring, ctx.bindings);
            CheckOptions options;
            options.generic_asserted = generic_asserted;
            options.stably_polynomial = stably_polynomial;
            options.lnd_bound = bound;
            options.slice_degree_bound = slice_degree;
            std::vector<std::string> t_vars = split_commas(tvars_text);
            CriterionReport report = t_vars.empty()
                                         ? theorem_a_check(F, options)
                                         : corollary_b_report(F, t_vars, options);
            print_report(report, json);
            return conclusion_exit(report.conclusion);
        }
    } catch (const BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDirective;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDirective;
    }
    return kExitUsage;
}
