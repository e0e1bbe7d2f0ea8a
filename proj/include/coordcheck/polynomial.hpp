#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coordcheck/ring.hpp"

namespace coordcheck {

// Sparse multivariate polynomial with exact rational coefficients over a
// ring presentation. Terms are stored descending in the ambient monomial
// order with no zero coefficients; the zero polynomial has no terms.
// Values are immutable; every operation returns a new polynomial.
class Polynomial {
public:
    static Polynomial zero(Ring ring);
    static Polynomial constant(Ring ring, Rational value);
    static Polynomial one(Ring ring) { return constant(std::move(ring), 1); }
    static Polynomial variable(Ring ring, std::string_view name);
    static Polynomial monomial(Ring ring, Monomial m, Rational coeff);
    // Canonicalizes: sorts, combines duplicate monomials, drops zeros.
    static Polynomial from_terms(Ring ring, TermList terms);

    const Ring& ring() const { return ring_; }
    const TermList& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // Pre: is_constant(); zero yields 0.
    Rational constant_value() const;
    // -1 for the zero polynomial.
    long total_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;
    Polynomial operator/(const Rational& scalar) const;
    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    Polynomial(Ring ring, TermList terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    Ring ring_;
    TermList terms_; // descending in ring_->order(), no zero coefficients
};

// Formal partial derivative with respect to a declared variable.
Polynomial partial(const Polynomial& p, std::string_view var);

// Homomorphic image: mapped variables are replaced by their image
// polynomials, unmapped variables stay fixed. Every key must be declared.
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images);

// Maximal term under the ambient order (or an explicit one). Throws
// ZeroPolynomialError on the zero polynomial.
Term leading_term(const Polynomial& p);
Term leading_term(const Polynomial& p, const MonomialOrder& order);

// Embed a polynomial into a presentation whose variable list extends the
// polynomial's ambient list as a prefix.
Polynomial lift(const Polynomial& p, const Ring& target);

void require_same_ring(const Polynomial& a, const Polynomial& b,
                       const char* operation);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

} // namespace coordcheck
