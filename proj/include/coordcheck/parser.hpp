#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coordcheck/polynomial.hpp"

namespace coordcheck {

// Surface value of a `key=value` directive option.
struct OptionValue {
    enum class Kind { Bool, Int, Name, NameList, Poly };
    Kind kind = Kind::Bool;
    bool bool_value = false;
    long int_value = 0;
    std::string name;
    std::vector<std::string> names;
    std::optional<Polynomial> poly;

    static OptionValue of_bool(bool b);
    static OptionValue of_int(long v);
    static OptionValue of_name(std::string n);
    static OptionValue of_names(std::vector<std::string> ns);
    static OptionValue of_poly(Polynomial p);

    bool operator==(const OptionValue& other) const;
};

// `ring NAME = BASE[vars] / (relations) order SPEC;`
struct RingDeclStmt {
    std::string name;
    std::string base; // "Q" or an earlier ring name
    std::vector<std::string> new_vars;
    std::vector<Polynomial> relations; // the ones written here, over `resolved`
    std::optional<MonomialOrder> order_spec;
    Ring resolved;
};

// `let NAME [in RING] = expr;`
struct LetStmt {
    std::string name;
    std::optional<std::string> ring_name;
    Polynomial value;
};

// Directive options after kind-specific resolution.
struct DirectiveOptions {
    bool stably_polynomial = false;
    bool generic_asserted = false;
    std::optional<int> lnd_bound;
    std::optional<int> slice_degree;
    std::vector<std::string> t_vars;
    std::map<std::string, Polynomial> var_map; // images for lnd/fpf/retraction
};

// `check KIND subject, ... key=value ...;`
struct CheckStmt {
    std::string kind;
    std::vector<std::string> subjects;
    std::vector<std::pair<std::string, OptionValue>> options; // surface order
    Ring ring;
    std::vector<Polynomial> subject_polys;
    DirectiveOptions resolved;
    SourcePos pos;
};

using Statement = std::variant<RingDeclStmt, LetStmt, CheckStmt>;

struct Script {
    std::vector<Statement> statements;
    std::map<std::string, Ring> rings;
    std::map<std::string, Polynomial> bindings;

    bool operator==(const Script& other) const;
};

// Parses a whole script; every identifier is resolved and every polynomial
// attached to its presentation. Throws ParseError with a source position.
Script parse_script(std::string_view text);

// Canonical text; parse_script(print_script(s)) is structurally equal to s.
std::string print_script(const Script& script);

// One check directive rendered canonically, without the trailing ';'.
std::string print_directive(const CheckStmt& stmt);

// "Q[x,y,z]/(x^2+y^2+z^2-1)[U,V,W]" and similar nested literals.
Ring parse_ring_literal(std::string_view text);

// One polynomial expression over a given ring; names may refer to bindings.
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            const std::map<std::string, Polynomial>& bindings = {});

const std::vector<std::string>& check_kinds();

} // namespace coordcheck
