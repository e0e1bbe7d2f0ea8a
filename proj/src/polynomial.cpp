#include "coordcheck/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace coordcheck {

namespace {

void canonicalize(const MonomialOrder& order, TermList& terms) {
    std::sort(terms.begin(), terms.end(),
              [&order](const Term& a, const Term& b) {
                  return order.greater(a.first, b.first);
              });
    TermList out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second == 0) out.pop_back();
        } else if (t.second != 0) {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

} // namespace

void require_same_ring(const Polynomial& a, const Polynomial& b,
                       const char* operation) {
    if (a.ring() == b.ring()) return;
    if (a.ring() && b.ring() && a.ring()->same_as(*b.ring())) return;
    throw PresentationMismatchError(
        std::string(operation) + ": operands belong to different presentations");
}

Polynomial Polynomial::zero(Ring ring) { return Polynomial(std::move(ring), {}); }

Polynomial Polynomial::constant(Ring ring, Rational value) {
    TermList terms;
    if (value != 0) terms.emplace_back(Monomial(ring->variable_count()), std::move(value));
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
    std::size_t i = ring->require_index(name);
    Monomial m(ring->variable_count());
    m[i] = 1;
    TermList terms;
    terms.emplace_back(std::move(m), Rational(1));
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, Rational coeff) {
    if (m.size() != ring->variable_count())
        throw PresentationMismatchError("monomial length does not match presentation");
    TermList terms;
    if (coeff != 0) terms.emplace_back(std::move(m), std::move(coeff));
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(Ring ring, TermList terms) {
    for (const auto& [m, c] : terms) {
        (void)c;
        if (m.size() != ring->variable_count())
            throw PresentationMismatchError("term length does not match presentation");
    }
    canonicalize(ring->order(), terms);
    return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second == 1;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on a non-constant polynomial");
    return terms_[0].second;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        d = std::max(d, m.total_degree());
    }
    return d;
}

Polynomial Polynomial::operator-() const {
    TermList terms = terms_;
    for (auto& t : terms) t.second = -t.second;
    return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(*this, other, "add");
    // Merge two term lists already sorted descending.
    const MonomialOrder& order = ring_->order();
    TermList out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = order.compare(terms_[i].first, other.terms_[j].first);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(other.terms_[j++]);
        } else {
            Rational sum = terms_[i].second + other.terms_[j].second;
            if (sum != 0) out.emplace_back(terms_[i].first, std::move(sum));
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(*this, other, "mul");
    TermList products;
    products.reserve(terms_.size() * other.terms_.size());
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            products.emplace_back(ma * mb, ca * cb);
    canonicalize(ring_->order(), products);
    return Polynomial(ring_, std::move(products));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return zero(ring_);
    TermList terms = terms_;
    for (auto& t : terms) t.second *= scalar;
    return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::operator/(const Rational& scalar) const {
    if (scalar == 0) throw Error("division by zero scalar");
    TermList terms = terms_;
    for (auto& t : terms) t.second /= scalar;
    return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial acc = one(ring_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) acc = acc * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (ring_ != other.ring_ && !(ring_ && other.ring_ && ring_->same_as(*other.ring_)))
        return false;
    return terms_ == other.terms_;
}

Polynomial partial(const Polynomial& p, std::string_view var) {
    std::size_t idx = p.ring()->require_index(var);
    TermList out;
    out.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m[idx];
        if (e == 0) continue;
        Monomial dm = m;
        dm[idx] = e - 1;
        out.emplace_back(std::move(dm), c * static_cast<long>(e));
    }
    return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images) {
    const Ring& ring = p.ring();
    // Resolve names once; every image must live in the same presentation.
    std::vector<std::pair<std::size_t, const Polynomial*>> resolved;
    resolved.reserve(images.size());
    for (const auto& [name, img] : images) {
        std::size_t idx = ring->require_index(name);
        require_same_ring(p, img, "substitute");
        resolved.emplace_back(idx, &img);
    }

    Polynomial acc = Polynomial::zero(ring);
    for (const auto& [m, c] : p.terms()) {
        Monomial fixed(ring->variable_count());
        for (std::size_t i = 0; i < m.size(); ++i) fixed[i] = m[i];
        Polynomial term_value = Polynomial::one(ring);
        for (const auto& [idx, img] : resolved) {
            unsigned e = m[idx];
            if (e == 0) continue;
            fixed[idx] = 0;
            term_value = term_value * img->pow(e);
        }
        term_value = term_value * Polynomial::monomial(ring, std::move(fixed), c);
        acc = acc + term_value;
    }
    return acc;
}

Term leading_term(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError();
    return p.terms().front();
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw ZeroPolynomialError();
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (order.greater(t.first, best->first)) best = &t;
    return *best;
}

Polynomial lift(const Polynomial& p, const Ring& target) {
    const auto& small = p.ring()->variables();
    const auto& big = target->variables();
    if (small.size() > big.size() ||
        !std::equal(small.begin(), small.end(), big.begin()))
        throw PresentationMismatchError(
            "lift: target presentation does not extend the source variable list");
    TermList out;
    out.reserve(p.terms().size());
    for (const auto& [m, c] : p.terms()) {
        Monomial bigm(big.size());
        for (std::size_t i = 0; i < small.size(); ++i) bigm[i] = m[i];
        out.emplace_back(std::move(bigm), c);
    }
    return Polynomial::from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed_coeff = false;
        if (m.is_unit() || abs != 1) {
            os << coordcheck::to_string(abs);
            printed_coeff = true;
        }
        bool first_factor = !printed_coeff;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_factor) os << "*";
            first_factor = false;
            os << ring_->variable_name(i);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace coordcheck
