#include "coordcheck/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>

namespace coordcheck {

namespace {

enum class TokKind { Ident, Int, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    char punct = 0;
    SourcePos pos;
    std::size_t begin = 0, end = 0; // byte offsets, for adjacency checks
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { scan_all(); }
    const std::vector<Token>& tokens() const { return tokens_; }

private:
    void scan_all() {
        std::size_t i = 0, line = 1, col = 1;
        auto advance = [&](std::size_t n) {
            for (std::size_t k = 0; k < n; ++k) {
                if (text_[i + k] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
            i += n;
        };
        while (i < text_.size()) {
            char c = text_[i];
            if (c == '#') {
                std::size_t j = i;
                while (j < text_.size() && text_[j] != '\n') ++j;
                advance(j - i);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            Token t;
            t.pos = SourcePos{line, col};
            t.begin = i;
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[j])) ||
                        text_[j] == '_'))
                    ++j;
                t.kind = TokKind::Ident;
                t.text = std::string(text_.substr(i, j - i));
                t.end = j;
                advance(j - i);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[j])))
                    ++j;
                t.kind = TokKind::Int;
                t.text = std::string(text_.substr(i, j - i));
                t.end = j;
                advance(j - i);
            } else if (std::string_view("+-*^/()[]=,;").find(c) != std::string_view::npos) {
                t.kind = TokKind::Punct;
                t.punct = c;
                t.text = std::string(1, c);
                t.end = i + 1;
                advance(1);
            } else {
                throw ParseError(SourcePos{line, col},
                                 std::string("unexpected character '") + c + "'");
            }
            tokens_.push_back(std::move(t));
        }
        Token end;
        end.kind = TokKind::End;
        end.pos = SourcePos{line, col};
        end.begin = end.end = i;
        tokens_.push_back(std::move(end));
    }

    std::string_view text_;
    std::vector<Token> tokens_;
};

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

const std::vector<std::string> kCheckKinds = {
    "residual", "corollary-b", "field-coordinate-2var", "lnd",
    "fpf",      "groebner",    "unit-ideal",            "retraction"};

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    Script parse() {
        Script script;
        while (!at_end()) {
            const Token& t = peek();
            if (t.kind != TokKind::Ident)
                throw ParseError(t.pos, "expected a statement");
            if (t.text == "ring") {
                script.statements.push_back(parse_ring_decl());
            } else if (t.text == "let") {
                script.statements.push_back(parse_let());
            } else if (t.text == "check") {
                script.statements.push_back(parse_check());
            } else {
                throw ParseError(t.pos, "expected 'ring', 'let' or 'check', got '" +
                                            t.text + "'");
            }
        }
        script.rings = rings_;
        script.bindings = bindings_;
        return script;
    }

    Ring parse_ring_literal_only() {
        Ring ring = parse_ring_chain(std::nullopt);
        expect_end();
        return ring;
    }

    Polynomial parse_polynomial_only(const Ring& ring,
                                     const std::map<std::string, Polynomial>& bindings) {
        bindings_ = bindings;
        Polynomial p = parse_expr(ring);
        expect_end();
        return p;
    }

private:
    // -- token plumbing ------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, lexer_.tokens().size() - 1);
        return lexer_.tokens()[i];
    }
    const Token& next() { return lexer_.tokens()[std::min(pos_++, lexer_.tokens().size() - 1)]; }
    bool at_end() const { return peek().kind == TokKind::End; }

    bool peek_punct(char c, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == TokKind::Punct && t.punct == c;
    }
    bool accept_punct(char c) {
        if (!peek_punct(c)) return false;
        next();
        return true;
    }
    void expect_punct(char c) {
        const Token& t = peek();
        if (!peek_punct(c))
            throw ParseError(t.pos, std::string("expected '") + c + "', got '" +
                                        (t.kind == TokKind::End ? "end of input" : t.text) +
                                        "'");
        next();
    }
    std::string expect_ident(const char* what) {
        const Token& t = peek();
        if (t.kind != TokKind::Ident)
            throw ParseError(t.pos, std::string("expected ") + what);
        return next().text;
    }
    void expect_end() {
        if (!at_end()) throw ParseError(peek().pos, "trailing input after expression");
    }

    long checked_int(const Token& t, long limit) {
        long v = 0;
        for (char c : t.text) {
            v = v * 10 + (c - '0');
            if (v > limit)
                throw ParseError(t.pos, "integer literal too large: " + t.text);
        }
        return v;
    }

    // Joined word for directive kinds and option keys: identifier pieces
    // glued by '-' with no intervening whitespace, digits allowed after the
    // first piece (e.g. field-coordinate-2var).
    std::string parse_joined_word() {
        const Token& first = peek();
        if (first.kind != TokKind::Ident)
            throw ParseError(first.pos, "expected a word");
        std::string word = next().text;
        std::size_t end = first.end;
        while (peek_punct('-') && peek().begin == end) {
            const Token& piece = peek(1);
            if ((piece.kind != TokKind::Ident && piece.kind != TokKind::Int) ||
                piece.begin != peek().end)
                break;
            end = next().end; // consume '-'
            word += '-';
            // Absorb adjacent ident/int pieces (handles e.g. "2var").
            while ((peek().kind == TokKind::Ident || peek().kind == TokKind::Int) &&
                   peek().begin == end) {
                const Token& p2 = next();
                word += p2.text;
                end = p2.end;
            }
        }
        return word;
    }

    // -- names and scoping ---------------------------------------------

    void declare_name(const std::string& name, const SourcePos& pos,
                      const char* what) {
        if (name == "Q" || name == "ring" || name == "let" || name == "check" ||
            name == "in" || name == "order" || name == "true" || name == "false")
            throw ParseError(pos, "'" + name + "' is reserved");
        if (!declared_.insert(name).second)
            throw ParseError(pos, std::string(what) + " '" + name +
                                      "' shadows an earlier declaration");
    }

    // -- ring declarations ----------------------------------------------

    std::optional<MonomialOrder> maybe_parse_order_spec() {
        if (peek().kind != TokKind::Ident || peek().text != "order") return std::nullopt;
        next();
        return parse_order_spec();
    }

    MonomialOrder parse_order_spec() {
        const Token& t = peek();
        std::string word = expect_ident("a monomial order");
        if (word == "lex") return MonomialOrder::lex();
        if (word == "degrevlex") return MonomialOrder::degrevlex();
        if (word == "block") {
            expect_punct('(');
            MonomialOrder first = parse_order_spec();
            expect_punct(',');
            const Token& n = peek();
            if (n.kind != TokKind::Int)
                throw ParseError(n.pos, "expected a split index");
            std::size_t split = static_cast<std::size_t>(checked_int(next(), 1 << 20));
            expect_punct(',');
            MonomialOrder second = parse_order_spec();
            expect_punct(')');
            return MonomialOrder::block(std::move(first), split, std::move(second));
        }
        throw ParseError(t.pos, "unknown monomial order '" + word + "'");
    }

    std::vector<std::string> parse_var_list() {
        std::vector<std::string> vars;
        expect_punct('[');
        while (true) {
            const Token& t = peek();
            std::string v = expect_ident("a variable name");
            if (!valid_name(v)) throw ParseError(t.pos, "invalid variable name " + v);
            vars.push_back(v);
            if (accept_punct(',')) continue;
            expect_punct(']');
            break;
        }
        return vars;
    }

    // BASE[vars]/(rels) possibly chained: Q[x]/(...)[U,V].
    Ring parse_ring_chain(std::optional<std::string> first_base_name) {
        std::string base_name =
            first_base_name ? *first_base_name : expect_ident("a base ring name");
        Ring current;
        if (base_name != "Q") {
            auto it = rings_.find(base_name);
            if (it == rings_.end())
                throw ParseError(peek().pos, "undeclared ring '" + base_name + "'");
            current = it->second;
        }
        do {
            const Token& open = peek();
            std::vector<std::string> new_vars = parse_var_list();
            current = build_level(current, new_vars, open.pos, nullptr, std::nullopt);
        } while (peek_punct('['));
        return current;
    }

    // Creates the flattened presentation for one nesting level and attaches
    // relations: inherited ones first, then the ones written at this level.
    Ring build_level(const Ring& base, const std::vector<std::string>& new_vars,
                     const SourcePos& pos, std::vector<Polynomial>* own_rels_out,
                     std::optional<MonomialOrder> order_spec) {
        std::vector<std::string> vars;
        std::size_t base_count = 0;
        if (base) {
            vars = base->variables();
            base_count = base->variable_count();
        }
        for (const auto& v : new_vars) {
            if (std::find(vars.begin(), vars.end(), v) != vars.end())
                throw ParseError(pos, "variable '" + v + "' already declared in the base");
            vars.push_back(v);
        }
        auto fresh = RingPresentation::make(
            vars, order_spec.value_or(MonomialOrder::degrevlex()), base_count);
        Ring fresh_const = fresh;

        std::vector<Polynomial> rels;
        if (base)
            for (const auto& r : base->relations()) rels.push_back(lift(r, fresh_const));
        if (accept_punct('/')) {
            expect_punct('(');
            while (true) {
                Polynomial r = parse_expr(fresh_const);
                if (own_rels_out) own_rels_out->push_back(r);
                rels.push_back(std::move(r));
                if (accept_punct(',')) continue;
                expect_punct(')');
                break;
            }
        }
        fresh->set_relations(rels);
        return fresh_const;
    }

    RingDeclStmt parse_ring_decl() {
        next(); // 'ring'
        const Token& name_tok = peek();
        std::string name = expect_ident("a ring name");
        declare_name(name, name_tok.pos, "ring");
        expect_punct('=');
        std::string base_name = expect_ident("a base ring name");
        Ring base;
        if (base_name != "Q") {
            auto it = rings_.find(base_name);
            if (it == rings_.end())
                throw ParseError(name_tok.pos, "undeclared ring '" + base_name + "'");
            base = it->second;
        }
        const Token& open = peek();
        std::vector<std::string> new_vars = parse_var_list();
        for (const auto& v : new_vars) {
            declare_name(v, open.pos, "variable");
        }

        // The order spec is written after the relations but is needed to
        // build the presentation, so scan ahead is avoided by parsing
        // relations over a presentation built with the final order: peek for
        // "order" requires the relations first. Parse relations over a
        // provisional default-order presentation, then rebuild if a custom
        // order is given.
        RingDeclStmt stmt;
        stmt.name = name;
        stmt.base = base_name;
        stmt.new_vars = new_vars;

        std::size_t rels_start = pos_;
        std::vector<Polynomial> own;
        Ring built = build_level(base, new_vars, open.pos, &own, std::nullopt);
        std::optional<MonomialOrder> spec = maybe_parse_order_spec();
        if (spec) {
            pos_ = rels_start;
            own.clear();
            built = build_level(base, new_vars, open.pos, &own, spec);
            maybe_parse_order_spec();
        }
        expect_punct(';');

        stmt.order_spec = spec;
        stmt.relations = std::move(own);
        stmt.resolved = built;
        rings_.emplace(name, built);
        current_ring_ = built;
        return stmt;
    }

    // -- let ---------------------------------------------------------------

    LetStmt parse_let() {
        next(); // 'let'
        const Token& name_tok = peek();
        std::string name = expect_ident("a binding name");
        declare_name(name, name_tok.pos, "binding");
        std::optional<std::string> ring_name;
        if (peek().kind == TokKind::Ident && peek().text == "in") {
            next();
            ring_name = expect_ident("a ring name");
        }
        expect_punct('=');
        Ring ring;
        if (ring_name) {
            auto it = rings_.find(*ring_name);
            if (it == rings_.end())
                throw ParseError(name_tok.pos, "undeclared ring '" + *ring_name + "'");
            ring = it->second;
        } else {
            if (!current_ring_)
                throw ParseError(name_tok.pos, "no ring declared before 'let'");
            ring = current_ring_;
        }
        Polynomial value = parse_expr(ring);
        expect_punct(';');
        bindings_.emplace(name, value);
        return LetStmt{name, ring_name, std::move(value)};
    }

    // -- check -------------------------------------------------------------

    CheckStmt parse_check() {
        const Token& kw = peek();
        next(); // 'check'
        if (!current_ring_)
            throw ParseError(kw.pos, "no ring declared before 'check'");
        CheckStmt stmt;
        stmt.pos = kw.pos;
        stmt.ring = current_ring_;
        stmt.kind = parse_joined_word();
        if (std::find(kCheckKinds.begin(), kCheckKinds.end(), stmt.kind) ==
            kCheckKinds.end())
            throw ParseError(kw.pos, "unknown check kind '" + stmt.kind + "'");

        // Subjects, then key=value options.
        bool in_options = false;
        while (!peek_punct(';')) {
            if (peek().kind == TokKind::End)
                throw ParseError(peek().pos, "unterminated check directive");
            const Token& here = peek();
            std::string word = parse_joined_word();
            if (peek_punct('=')) {
                next();
                stmt.options.emplace_back(word, parse_option_value());
                in_options = true;
            } else {
                if (in_options)
                    throw ParseError(here.pos, "subject '" + word +
                                                   "' appears after options");
                if (!valid_name(word))
                    throw ParseError(here.pos, "invalid subject name '" + word + "'");
                stmt.subjects.push_back(word);
                accept_punct(',');
            }
        }
        expect_punct(';');
        resolve_check(stmt);
        return stmt;
    }

    OptionValue parse_option_value() {
        const Token& t = peek();
        if (t.kind == TokKind::Ident && (t.text == "true" || t.text == "false")) {
            next();
            return OptionValue::of_bool(t.text == "true");
        }
        if (t.kind == TokKind::Int) {
            next();
            return OptionValue::of_int(checked_int(t, 1L << 40));
        }
        if (peek_punct('-') && peek(1).kind == TokKind::Int) {
            next();
            return OptionValue::of_int(-checked_int(next(), 1L << 40));
        }
        if (t.kind == TokKind::Ident) {
            next();
            return OptionValue::of_name(t.text);
        }
        if (peek_punct('[')) {
            next();
            std::vector<std::string> names;
            if (!accept_punct(']')) {
                while (true) {
                    names.push_back(expect_ident("a name"));
                    if (accept_punct(',')) continue;
                    expect_punct(']');
                    break;
                }
            }
            return OptionValue::of_names(std::move(names));
        }
        if (peek_punct('(')) {
            next();
            Polynomial p = parse_expr(current_ring_);
            expect_punct(')');
            return OptionValue::of_poly(std::move(p));
        }
        throw ParseError(t.pos, "expected an option value");
    }

    Polynomial resolve_poly_name(const std::string& name, const Ring& ring,
                                 const SourcePos& pos) {
        auto it = bindings_.find(name);
        if (it != bindings_.end()) {
            const Polynomial& b = it->second;
            if (b.ring() == ring || b.ring()->same_as(*ring)) return b;
            return lift(b, ring); // throws if incompatible
        }
        if (ring->index_of(name)) return Polynomial::variable(ring, name);
        throw ParseError(pos, "undeclared identifier '" + name + "'");
    }

    void resolve_check(CheckStmt& stmt) {
        const Ring& ring = stmt.ring;
        for (const auto& s : stmt.subjects)
            stmt.subject_polys.push_back(resolve_poly_name(s, ring, stmt.pos));

        const bool map_kind = stmt.kind == "lnd" || stmt.kind == "fpf" ||
                              stmt.kind == "retraction";
        for (const auto& [key, value] : stmt.options) {
            if (key == "stably-polynomial" || key == "generic-asserted") {
                if (value.kind != OptionValue::Kind::Bool)
                    throw ParseError(stmt.pos, key + " expects true or false");
                (key == "stably-polynomial" ? stmt.resolved.stably_polynomial
                                            : stmt.resolved.generic_asserted) =
                    value.bool_value;
            } else if (key == "lnd-bound" || key == "bound") {
                if (value.kind != OptionValue::Kind::Int || value.int_value < 1)
                    throw ParseError(stmt.pos, key + " expects a positive integer");
                stmt.resolved.lnd_bound = static_cast<int>(value.int_value);
            } else if (key == "slice-degree") {
                if (value.kind != OptionValue::Kind::Int || value.int_value < 0)
                    throw ParseError(stmt.pos, key + " expects a non-negative integer");
                stmt.resolved.slice_degree = static_cast<int>(value.int_value);
            } else if (key == "t-vars") {
                if (value.kind != OptionValue::Kind::NameList)
                    throw ParseError(stmt.pos, "t-vars expects a [T1,...] list");
                for (const auto& n : value.names)
                    if (!ring->index_of(n))
                        throw ParseError(stmt.pos, "t-vars entry '" + n +
                                                       "' is not a declared variable");
                stmt.resolved.t_vars = value.names;
            } else if (map_kind && ring->index_of(key)) {
                Polynomial img = [&]() {
                    if (value.kind == OptionValue::Kind::Poly) return *value.poly;
                    if (value.kind == OptionValue::Kind::Name)
                        return resolve_poly_name(value.name, ring, stmt.pos);
                    if (value.kind == OptionValue::Kind::Int)
                        return Polynomial::constant(ring, Rational(value.int_value));
                    throw ParseError(stmt.pos, "image of '" + key +
                                                   "' must be a polynomial");
                }();
                if (!stmt.resolved.var_map.emplace(key, std::move(img)).second)
                    throw ParseError(stmt.pos, "duplicate image for '" + key + "'");
            } else {
                throw ParseError(stmt.pos, "unknown option '" + key + "' for check " +
                                               stmt.kind);
            }
        }

        // Kind-specific shape checks.
        auto need_subjects = [&](std::size_t lo, std::size_t hi, const char* msg) {
            if (stmt.subjects.size() < lo || stmt.subjects.size() > hi)
                throw ParseError(stmt.pos, "check " + stmt.kind + " " + msg);
        };
        if (stmt.kind == "residual" || stmt.kind == "corollary-b" ||
            stmt.kind == "field-coordinate-2var")
            need_subjects(1, 1, "expects exactly one subject polynomial");
        else if (stmt.kind == "groebner" || stmt.kind == "unit-ideal")
            need_subjects(1, SIZE_MAX, "expects at least one generator");
        else if (stmt.kind == "lnd" || stmt.kind == "fpf")
            need_subjects(0, 0, "takes a variable-image map, not subjects");
    }

    // -- polynomial expressions ---------------------------------------------

    bool starts_factor() const {
        return peek().kind == TokKind::Ident || peek().kind == TokKind::Int ||
               peek_punct('(');
    }

    Polynomial parse_expr(const Ring& ring) {
        bool negate = false;
        if (accept_punct('-'))
            negate = true;
        else
            accept_punct('+');
        Polynomial acc = parse_term(ring);
        if (negate) acc = -acc;
        while (peek_punct('+') || peek_punct('-')) {
            bool minus = next().punct == '-';
            Polynomial t = parse_term(ring);
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial parse_term(const Ring& ring) {
        Polynomial acc = parse_factor(ring);
        while (true) {
            if (accept_punct('*')) {
                acc = acc * parse_factor(ring);
            } else if (starts_factor()) {
                acc = acc * parse_factor(ring); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor(const Ring& ring) {
        Polynomial base = parse_atom(ring);
        if (accept_punct('^')) {
            const Token& e = peek();
            if (e.kind != TokKind::Int)
                throw ParseError(e.pos, "expected an integer exponent");
            long exp = checked_int(next(), 10000);
            base = base.pow(static_cast<unsigned>(exp));
        }
        return base;
    }

    Polynomial parse_atom(const Ring& ring) {
        const Token& t = peek();
        if (t.kind == TokKind::Int) {
            next();
            Rational value = rational_from_string(t.text);
            if (accept_punct('/')) {
                const Token& d = peek();
                if (d.kind != TokKind::Int)
                    throw ParseError(d.pos, "expected an integer denominator");
                Rational den = rational_from_string(next().text);
                if (den == 0) throw ParseError(d.pos, "zero denominator");
                value /= den;
            }
            return Polynomial::constant(ring, value);
        }
        if (t.kind == TokKind::Ident) {
            next();
            return resolve_poly_name(t.text, ring, t.pos);
        }
        if (peek_punct('(')) {
            next();
            Polynomial inner = parse_expr(ring);
            expect_punct(')');
            return inner;
        }
        throw ParseError(t.pos, "expected a polynomial atom");
    }

    Lexer lexer_;
    std::size_t pos_ = 0;
    std::map<std::string, Ring> rings_;
    std::map<std::string, Polynomial> bindings_;
    std::set<std::string> declared_;
    Ring current_ring_;
};

} // namespace

OptionValue OptionValue::of_bool(bool b) {
    OptionValue v;
    v.kind = Kind::Bool;
    v.bool_value = b;
    return v;
}
OptionValue OptionValue::of_int(long i) {
    OptionValue v;
    v.kind = Kind::Int;
    v.int_value = i;
    return v;
}
OptionValue OptionValue::of_name(std::string n) {
    OptionValue v;
    v.kind = Kind::Name;
    v.name = std::move(n);
    return v;
}
OptionValue OptionValue::of_names(std::vector<std::string> ns) {
    OptionValue v;
    v.kind = Kind::NameList;
    v.names = std::move(ns);
    return v;
}
OptionValue OptionValue::of_poly(Polynomial p) {
    OptionValue v;
    v.kind = Kind::Poly;
    v.poly = std::move(p);
    return v;
}

bool OptionValue::operator==(const OptionValue& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Bool: return bool_value == other.bool_value;
        case Kind::Int: return int_value == other.int_value;
        case Kind::Name: return name == other.name;
        case Kind::NameList: return names == other.names;
        case Kind::Poly: return *poly == *other.poly;
    }
    return false;
}

namespace {

bool statement_equal(const Statement& a, const Statement& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ra = std::get_if<RingDeclStmt>(&a)) {
        const auto& rb = std::get<RingDeclStmt>(b);
        return ra->name == rb.name && ra->base == rb.base &&
               ra->new_vars == rb.new_vars && ra->relations == rb.relations &&
               ra->order_spec == rb.order_spec && ra->resolved->same_as(*rb.resolved);
    }
    if (const auto* la = std::get_if<LetStmt>(&a)) {
        const auto& lb = std::get<LetStmt>(b);
        return la->name == lb.name && la->ring_name == lb.ring_name &&
               la->value == lb.value;
    }
    const auto& ca = std::get<CheckStmt>(a);
    const auto& cb = std::get<CheckStmt>(b);
    return ca.kind == cb.kind && ca.subjects == cb.subjects &&
           ca.options == cb.options && ca.ring->same_as(*cb.ring);
}

} // namespace

bool Script::operator==(const Script& other) const {
    if (statements.size() != other.statements.size()) return false;
    for (std::size_t i = 0; i < statements.size(); ++i)
        if (!statement_equal(statements[i], other.statements[i])) return false;
    return true;
}

Script parse_script(std::string_view text) { return Parser(text).parse(); }

Ring parse_ring_literal(std::string_view text) {
    return Parser(text).parse_ring_literal_only();
}

Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            const std::map<std::string, Polynomial>& bindings) {
    return Parser(text).parse_polynomial_only(ring, bindings);
}

const std::vector<std::string>& check_kinds() { return kCheckKinds; }

namespace {

std::string option_value_text(const OptionValue& v) {
    switch (v.kind) {
        case OptionValue::Kind::Bool: return v.bool_value ? "true" : "false";
        case OptionValue::Kind::Int: return std::to_string(v.int_value);
        case OptionValue::Kind::Name: return v.name;
        case OptionValue::Kind::NameList: {
            std::string s = "[";
            for (std::size_t i = 0; i < v.names.size(); ++i) {
                if (i) s += ",";
                s += v.names[i];
            }
            return s + "]";
        }
        case OptionValue::Kind::Poly: return "(" + v.poly->to_string() + ")";
    }
    return "";
}

} // namespace

std::string print_directive(const CheckStmt& stmt) {
    std::ostringstream os;
    os << "check " << stmt.kind;
    for (std::size_t i = 0; i < stmt.subjects.size(); ++i)
        os << (i ? ", " : " ") << stmt.subjects[i];
    for (const auto& [key, value] : stmt.options)
        os << " " << key << "=" << option_value_text(value);
    return os.str();
}

std::string print_script(const Script& script) {
    std::ostringstream os;
    for (const auto& stmt : script.statements) {
        if (const auto* r = std::get_if<RingDeclStmt>(&stmt)) {
            os << "ring " << r->name << " = " << r->base << "[";
            for (std::size_t i = 0; i < r->new_vars.size(); ++i) {
                if (i) os << ", ";
                os << r->new_vars[i];
            }
            os << "]";
            if (!r->relations.empty()) {
                os << " / (";
                for (std::size_t i = 0; i < r->relations.size(); ++i) {
                    if (i) os << ", ";
                    os << r->relations[i].to_string();
                }
                os << ")";
            }
            if (r->order_spec) os << " order " << r->order_spec->to_string();
            os << ";\n";
        } else if (const auto* l = std::get_if<LetStmt>(&stmt)) {
            os << "let " << l->name;
            if (l->ring_name) os << " in " << *l->ring_name;
            os << " = " << l->value.to_string() << ";\n";
        } else {
            os << print_directive(std::get<CheckStmt>(stmt)) << ";\n";
        }
    }
    return os.str();
}

} // namespace coordcheck
