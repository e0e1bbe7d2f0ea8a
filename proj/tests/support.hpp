// Shared helpers for the test binaries: ring/polynomial shorthands,
// deterministic random generators, and independent oracles kept separate
// from the library code paths they check.
#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coordcheck/criterion.hpp"
#include "coordcheck/parser.hpp"

namespace testsupport {

using namespace coordcheck;

inline Ring qring(std::vector<std::string> vars,
                  MonomialOrder ord = MonomialOrder::degrevlex(),
                  std::vector<std::string> relation_texts = {},
                  std::size_t base_count = 0) {
    auto fresh = RingPresentation::make(std::move(vars), std::move(ord), base_count);
    Ring ring = fresh;
    std::vector<Polynomial> rels;
    for (const auto& t : relation_texts) rels.push_back(parse_polynomial(t, ring));
    fresh->set_relations(rels);
    return ring;
}

inline Polynomial pp(const Ring& ring, const std::string& text) {
    return parse_polynomial(text, ring);
}

inline Polynomial random_poly(std::mt19937& rng, const Ring& ring, int max_degree,
                              int max_terms, int coeff_range) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    std::uniform_int_distribution<std::size_t> var(0, ring->variable_count() - 1);
    TermList terms;
    int t = term_count(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(ring->variable_count());
        int d = degree(rng);
        for (int j = 0; j < d; ++j) ++m[var(rng)];
        terms.emplace_back(std::move(m), Rational(coeff(rng)));
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial random_nonzero_poly(std::mt19937& rng, const Ring& ring,
                                      int max_degree, int max_terms,
                                      int coeff_range) {
    while (true) {
        Polynomial p = random_poly(rng, ring, max_degree, max_terms, coeff_range);
        if (!p.is_zero()) return p;
    }
}

// Independent product oracle on raw exponent maps; used to cross-check the
// library's multiplication without sharing its term plumbing.
using NaiveTerms = std::map<std::vector<unsigned>, Rational>;

inline NaiveTerms naive_terms(const Polynomial& p) {
    NaiveTerms out;
    for (const auto& [m, c] : p.terms()) out[m.exponents()] = c;
    return out;
}

inline NaiveTerms naive_mul(const NaiveTerms& a, const NaiveTerms& b,
                            std::size_t nvars) {
    NaiveTerms out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            std::vector<unsigned> m(nvars);
            for (std::size_t i = 0; i < nvars; ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// Image pair of (X1, X2) under a random composition of at most `max_steps`
// elementary automorphisms of Q[X1,X2]: variable swaps and triangular maps
// X1 -> u*X1 + p(X2) with u in {-2,-1,1,2} and deg p <= 3, coefficients in
// {-2..2}. Re-draws while the pair degree exceeds 24 so that the Jacobian
// derivation's nilpotency indices stay far below the standard bound of 64.
inline std::pair<Polynomial, Polynomial> random_tame_pair(std::mt19937& rng,
                                                          const Ring& ring) {
    std::uniform_int_distribution<int> steps_dist(1, 5);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> pdeg(0, 3);
    const Polynomial x1 = Polynomial::variable(ring, ring->variables()[0]);
    const Polynomial x2 = Polynomial::variable(ring, ring->variables()[1]);

    while (true) {
        Polynomial f = x1, g = x2;
        int steps = steps_dist(rng);
        for (int s = 0; s < steps; ++s) {
            int k = kind(rng);
            if (k == 0) {
                std::swap(f, g);
                continue;
            }
            int u = coeff(rng);
            if (u == 0) u = 1;
            Polynomial p = Polynomial::zero(ring);
            int d = pdeg(rng);
            for (int e = 0; e <= d; ++e) {
                int c = coeff(rng);
                if (c != 0) p = p + g.pow(static_cast<unsigned>(e)) * Rational(c);
            }
            f = f * Rational(u) + p;
            if (k == 2) std::swap(f, g);
        }
        long deg = std::max(f.total_degree(), g.total_degree());
        if (deg <= 24) return {f, g};
    }
}

} // namespace testsupport
