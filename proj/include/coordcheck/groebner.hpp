#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coordcheck/polynomial.hpp"

namespace coordcheck {

// Optional global cap on Buchberger reduction steps. When exceeded the
// computation throws BudgetExhaustedError instead of returning anything.
void set_step_budget(std::optional<std::uint64_t> budget);
std::optional<std::uint64_t> step_budget();

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients; // f == sum quotients[i]*basis[i] + remainder
};

// Multivariate division in the ambient order. No term of the remainder is
// divisible by any basis leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// The unique reduced (monic) Groebner basis in the ambient order,
// deterministic for a fixed generator sequence. Elements are sorted
// descending by leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens);

struct TrackedBasis {
    std::vector<Polynomial> basis;
    // basis[i] == sum representations[i][j]*gens[j]
    std::vector<std::vector<Polynomial>> representations;
};
TrackedBasis buchberger_tracked(const std::vector<Polynomial>& gens);

// Witness that 1 lies in the ideal: 1 == sum cofactors[i]*generators[i].
struct UnitCertificate {
    std::vector<Polynomial> generators;
    std::vector<Polynomial> cofactors;
};

// Ideal of a ring presentation. All basis-level computations run over the
// generators together with the ambient relations, so quotient presentations
// B = Q[X]/J need no separate engine.
class Ideal {
public:
    Ideal(Ring ambient, std::vector<Polynomial> generators);

    const Ring& ambient() const { return ambient_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    // Generators followed by the ambient relations.
    std::vector<Polynomial> extended_generators() const;
    // Cached after the first call.
    const std::vector<Polynomial>& reduced_basis() const;

private:
    Ring ambient_;
    std::vector<Polynomial> generators_;
    mutable std::optional<std::vector<Polynomial>> basis_;
};

bool contains(const Ideal& ideal, const Polynomial& f);
bool is_unit_ideal(const Ideal& ideal);
bool ideal_equals(const Ideal& a, const Ideal& b);

// For a unit ideal, cofactors over extended_generators(); nullopt otherwise.
// The returned identity is re-verified exactly before returning.
std::optional<UnitCertificate> unit_certificate(const Ideal& ideal);

} // namespace coordcheck
