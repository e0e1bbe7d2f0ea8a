#include "coordcheck/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace coordcheck {

namespace {

std::optional<std::uint64_t> g_step_budget;

struct Entry {
    Polynomial poly;                 // nonzero, monic
    std::vector<Polynomial> rep;     // poly == sum rep[j]*input[j]; empty if untracked
};

Polynomial term_times(const Ring& ring, const Term& t, const Polynomial& p) {
    return Polynomial::monomial(ring, t.first, t.second) * p;
}

// Core division loop shared by the public divide() and the engine.
// quotients/rep tracking is skipped when the caller passes nullptr.
Polynomial divide_impl(const Polynomial& f, const std::vector<Entry>& basis,
                       std::vector<Polynomial>* quotients,
                       std::vector<Polynomial>* rep_out,
                       std::size_t rep_size) {
    const Ring& ring = f.ring();
    Polynomial p = f;
    Polynomial r = Polynomial::zero(ring);
    if (quotients)
        quotients->assign(basis.size(), Polynomial::zero(ring));
    std::vector<Polynomial> rep;
    if (rep_out) rep = std::move(*rep_out);

    while (!p.is_zero()) {
        const Term lt = p.terms().front();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Term& blt = basis[i].poly.terms().front();
            if (!blt.first.divides(lt.first)) continue;
            Term q{blt.first.divide_into(lt.first), lt.second / blt.second};
            p = p - term_times(ring, q, basis[i].poly);
            if (quotients)
                (*quotients)[i] = (*quotients)[i] + Polynomial::monomial(ring, q.first, q.second);
            if (rep_out) {
                for (std::size_t j = 0; j < rep_size; ++j)
                    rep[j] = rep[j] - term_times(ring, q, basis[i].rep[j]);
            }
            reduced = true;
            break;
        }
        if (!reduced) {
            r = r + Polynomial::monomial(ring, lt.first, lt.second);
            p = p - Polynomial::monomial(ring, lt.first, lt.second);
        }
    }
    if (rep_out) *rep_out = std::move(rep);
    return r;
}

std::vector<Entry> wrap_entries(const std::vector<Polynomial>& basis) {
    std::vector<Entry> out;
    out.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        out.push_back(Entry{b, {}});
    }
    return out;
}

struct PairKey {
    long lcm_degree;
    std::size_t i, j;
    bool operator<(const PairKey& other) const {
        return std::tie(lcm_degree, i, j) <
               std::tie(other.lcm_degree, other.i, other.j);
    }
};

// Buchberger with the normal selection strategy and the coprimality and
// chain criteria. Tracks representations over the input generators when
// `tracked` is set.
TrackedBasis engine(const std::vector<Polynomial>& gens, bool tracked) {
    TrackedBasis result;
    if (gens.empty()) return result;
    const Ring& ring = gens.front().ring();
    for (const auto& g : gens) require_same_ring(gens.front(), g, "buchberger");

    const std::size_t n = gens.size();
    std::uint64_t steps = 0;
    auto charge_step = [&steps]() {
        ++steps;
        if (g_step_budget && steps > *g_step_budget)
            throw BudgetExhaustedError(*g_step_budget);
    };

    std::vector<Entry> entries;
    std::set<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> considered;

    auto add_pairs_for = [&](std::size_t k) {
        const Monomial& lmk = entries[k].poly.terms().front().first;
        for (std::size_t i = 0; i < k; ++i) {
            Monomial l = Monomial::lcm(entries[i].poly.terms().front().first, lmk);
            pending.insert(PairKey{l.total_degree(), i, k});
        }
    };

    auto append_entry = [&](Polynomial p, std::vector<Polynomial> rep) {
        const Rational lc = p.terms().front().second;
        p = p / lc;
        if (tracked)
            for (auto& r : rep) r = r / lc;
        entries.push_back(Entry{std::move(p), std::move(rep)});
        add_pairs_for(entries.size() - 1);
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (gens[k].is_zero()) continue;
        std::vector<Polynomial> rep;
        if (tracked) {
            rep.assign(n, Polynomial::zero(ring));
            rep[k] = Polynomial::one(ring);
        }
        std::vector<Polynomial>* rep_ptr = tracked ? &rep : nullptr;
        Polynomial r = divide_impl(gens[k], entries, nullptr, rep_ptr, n);
        if (!r.is_zero()) append_entry(std::move(r), std::move(rep));
    }

    while (!pending.empty()) {
        PairKey key = *pending.begin();
        pending.erase(pending.begin());
        const std::size_t i = key.i, j = key.j;
        considered.insert({i, j});

        const Monomial& lmi = entries[i].poly.terms().front().first;
        const Monomial& lmj = entries[j].poly.terms().front().first;
        if (Monomial::coprime(lmi, lmj)) continue;

        Monomial l = Monomial::lcm(lmi, lmj);
        bool chained = false;
        for (std::size_t k = 0; k < entries.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!entries[k].poly.terms().front().first.divides(l)) continue;
            auto lo = std::minmax(i, k);
            auto hi = std::minmax(j, k);
            if (considered.count({lo.first, lo.second}) &&
                considered.count({hi.first, hi.second}))
                chained = true;
        }
        if (chained) continue;

        charge_step();
        Term ui{entries[i].poly.terms().front().first.divide_into(l),
                Rational(1) / entries[i].poly.terms().front().second};
        Term uj{entries[j].poly.terms().front().first.divide_into(l),
                Rational(1) / entries[j].poly.terms().front().second};
        Polynomial s = term_times(ring, ui, entries[i].poly) -
                       term_times(ring, uj, entries[j].poly);
        std::vector<Polynomial> rep;
        if (tracked) {
            rep.assign(n, Polynomial::zero(ring));
            for (std::size_t t = 0; t < n; ++t)
                rep[t] = term_times(ring, ui, entries[i].rep[t]) -
                         term_times(ring, uj, entries[j].rep[t]);
        }
        std::vector<Polynomial>* rep_ptr = tracked ? &rep : nullptr;
        Polynomial r = divide_impl(s, entries, nullptr, rep_ptr, n);
        if (!r.is_zero()) append_entry(std::move(r), std::move(rep));
    }

    // Minimalize: drop entries whose leading monomial is divisible by
    // another entry's leading monomial.
    std::vector<bool> redundant(entries.size(), false);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Monomial& lmi = entries[i].poly.terms().front().first;
        for (std::size_t j = 0; j < entries.size() && !redundant[i]; ++j) {
            if (i == j) continue;
            const Monomial& lmj = entries[j].poly.terms().front().first;
            if (lmj == lmi) {
                redundant[i] = j < i; // keep the first of equal leading monomials
            } else if (lmj.divides(lmi)) {
                redundant[i] = true;
            }
        }
    }
    std::vector<Entry> kept;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!redundant[i]) kept.push_back(std::move(entries[i]));

    // Inter-reduce tails. Leading monomials are pairwise non-divisible, so
    // one pass over each element fully reduces it.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Entry> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        std::vector<Polynomial>* rep_ptr = tracked ? &kept[i].rep : nullptr;
        Polynomial r = divide_impl(kept[i].poly, others, nullptr, rep_ptr, n);
        const Rational lc = r.terms().front().second;
        kept[i].poly = r / lc;
        if (tracked)
            for (auto& rp : kept[i].rep) rp = rp / lc;
    }

    std::sort(kept.begin(), kept.end(), [&](const Entry& a, const Entry& b) {
        return ring->order().greater(a.poly.terms().front().first,
                                     b.poly.terms().front().first);
    });

    for (auto& e : kept) {
        result.basis.push_back(std::move(e.poly));
        if (tracked) result.representations.push_back(std::move(e.rep));
    }
    return result;
}

} // namespace

void set_step_budget(std::optional<std::uint64_t> budget) { g_step_budget = budget; }
std::optional<std::uint64_t> step_budget() { return g_step_budget; }

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& basis) {
    for (const auto& b : basis) {
        require_same_ring(f, b, "divide");
        if (b.is_zero()) throw Error("divide: zero basis element");
    }
    std::vector<Entry> entries = wrap_entries(basis);
    DivisionResult out{Polynomial::zero(f.ring()), {}};
    out.remainder = divide_impl(f, entries, &out.quotients, nullptr, 0);
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    for (const auto& b : basis) {
        require_same_ring(f, b, "normal_form");
        if (b.is_zero()) throw Error("normal_form: zero basis element");
    }
    std::vector<Entry> entries = wrap_entries(basis);
    return divide_impl(f, entries, nullptr, nullptr, 0);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g, "s_polynomial");
    const Ring& ring = f.ring();
    const Term& lf = leading_term(f);
    const Term& lg = leading_term(g);
    Monomial l = Monomial::lcm(lf.first, lg.first);
    Term uf{lf.first.divide_into(l), Rational(1) / lf.second};
    Term ug{lg.first.divide_into(l), Rational(1) / lg.second};
    return term_times(ring, uf, f) - term_times(ring, ug, g);
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
    return engine(gens, false).basis;
}

TrackedBasis buchberger_tracked(const std::vector<Polynomial>& gens) {
    return engine(gens, true);
}

Ideal::Ideal(Ring ambient, std::vector<Polynomial> generators)
    : ambient_(std::move(ambient)) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!g.ring()->same_as(*ambient_))
            throw PresentationMismatchError(
                "ideal generator belongs to a different presentation");
        generators_.push_back(std::move(g));
    }
}

std::vector<Polynomial> Ideal::extended_generators() const {
    std::vector<Polynomial> all = generators_;
    for (auto& r : ambient_->relations()) all.push_back(std::move(r));
    return all;
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
    if (!basis_) basis_ = buchberger(extended_generators());
    return *basis_;
}

bool contains(const Ideal& ideal, const Polynomial& f) {
    if (!f.ring()->same_as(*ideal.ambient()))
        throw PresentationMismatchError("contains: polynomial outside the ambient");
    return normal_form(f, ideal.reduced_basis()).is_zero();
}

bool is_unit_ideal(const Ideal& ideal) {
    const auto& basis = ideal.reduced_basis();
    return basis.size() == 1 && basis.front().is_one();
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
    if (!a.ambient()->same_as(*b.ambient()))
        throw PresentationMismatchError("ideal_equals: different ambients");
    return a.reduced_basis() == b.reduced_basis();
}

std::optional<UnitCertificate> unit_certificate(const Ideal& ideal) {
    if (!is_unit_ideal(ideal)) return std::nullopt;
    std::vector<Polynomial> all = ideal.extended_generators();
    TrackedBasis tracked = buchberger_tracked(all);
    if (tracked.basis.size() != 1 || !tracked.basis.front().is_one())
        throw Error("unit certificate: tracked basis disagrees with cached basis");
    UnitCertificate cert{std::move(all), std::move(tracked.representations.front())};
    Polynomial check = Polynomial::zero(ideal.ambient());
    for (std::size_t i = 0; i < cert.generators.size(); ++i)
        check = check + cert.cofactors[i] * cert.generators[i];
    if (!check.is_one())
        throw Error("unit certificate: cofactor identity failed to verify");
    return cert;
}

} // namespace coordcheck
