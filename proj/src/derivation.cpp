#include "coordcheck/derivation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace coordcheck {

namespace {

// Greedy leading-term division; nullopt when d does not divide p exactly.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) return std::nullopt;
    const Ring& ring = p.ring();
    Polynomial rem = p;
    Polynomial quot = Polynomial::zero(ring);
    const Term& dl = d.terms().front();
    while (!rem.is_zero()) {
        const Term& rl = rem.terms().front();
        if (!dl.first.divides(rl.first)) return std::nullopt;
        Polynomial t = Polynomial::monomial(ring, dl.first.divide_into(rl.first),
                                            rl.second / dl.second);
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

Polynomial apply_images(const Ring& ring, const std::vector<Polynomial>& images,
                        const Polynomial& f) {
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].is_zero()) continue;
        acc = acc + images[i] * partial(f, ring->variable_name(i));
    }
    return acc;
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)) {
    entries_.assign(rows_ * cols_, Polynomial::zero(ring_));
}

const Polynomial& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
    return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Polynomial value) {
    if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
    require_same_ring(entries_[r * cols_ + c], value, "matrix entry");
    entries_[r * cols_ + c] = std::move(value);
}

Matrix jacobian_matrix(const std::vector<Polynomial>& polys,
                       const std::vector<std::string>& vars) {
    if (polys.empty()) throw ArityError("jacobian_matrix: no polynomials");
    const Ring& ring = polys.front().ring();
    std::set<std::string> seen;
    for (const auto& v : vars) {
        ring->require_index(v);
        if (!seen.insert(v).second)
            throw Error("jacobian_matrix: repeated variable " + v);
    }
    Matrix m(polys.size(), vars.size(), ring);
    for (std::size_t i = 0; i < polys.size(); ++i) {
        require_same_ring(polys.front(), polys[i], "jacobian_matrix");
        for (std::size_t j = 0; j < vars.size(); ++j)
            m.set(i, j, partial(polys[i], vars[j]));
    }
    return m;
}

Polynomial determinant_cofactor(const Matrix& m) {
    if (m.rows() != m.cols()) throw ArityError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial::one(m.ring());
    if (n == 1) return m.at(0, 0);
    Polynomial det = Polynomial::zero(m.ring());
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c).is_zero()) continue;
        Matrix sub(n - 1, n - 1, m.ring());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub.set(i - 1, cc++, m.at(i, j));
            }
        }
        Polynomial term = m.at(0, c) * determinant_cofactor(sub);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

Polynomial determinant_bareiss(const Matrix& m) {
    if (m.rows() != m.cols()) throw ArityError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const Ring& ring = m.ring();
    if (n == 0) return Polynomial::one(ring);

    std::vector<std::vector<Polynomial>> a;
    a.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
        a.push_back(std::move(row));
    }

    bool negate = false;
    Polynomial prev = Polynomial::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (!a[i][k].is_zero()) { swap_row = i; break; }
            }
            if (swap_row == k) return Polynomial::zero(ring);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw Error("Bareiss pivot division failed");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial::zero(ring);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Polynomial determinant(const Matrix& m) {
    try {
        return determinant_bareiss(m);
    } catch (const Error&) {
        return determinant_cofactor(m);
    }
}

std::vector<Polynomial> minors(const Matrix& m, std::size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols()))
        throw ArityError("minors: size " + std::to_string(k) +
                         " out of range for a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    std::vector<Polynomial> out;
    for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
            Matrix sub(k, k, m.ring());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub.set(i, j, m.at(rows[i], cols[j]));
            out.push_back(determinant(sub));
        });
    });
    return out;
}

Derivation::Derivation(Ring ring, std::map<std::string, Polynomial> images)
    : ring_(std::move(ring)) {
    images_.assign(ring_->variable_count(), Polynomial::zero(ring_));
    for (const auto& [name, img] : images) {
        std::size_t idx = ring_->require_index(name);
        if (!img.ring()->same_as(*ring_))
            throw PresentationMismatchError(
                "derivation image belongs to a different presentation");
        images_[idx] = img;
    }
    for (const auto& name : ring_->variables()) {
        if (!images.count(name))
            throw Error("derivation is missing an image for variable " + name);
    }
    if (ring_->relation_count() > 0) {
        Ideal rel_ideal(ring_, {});
        for (const auto& r : ring_->relations()) {
            Polynomial dr = apply_images(ring_, images_, r);
            if (!contains(rel_ideal, dr))
                throw Error(
                    "derivation does not map the relation " + r.to_string() +
                    " into the relation ideal; it is not well defined on the quotient");
        }
    }
}

const Polynomial& Derivation::image(std::string_view var) const {
    return images_[ring_->require_index(var)];
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
    if (!f.ring()->same_as(*d.ring()))
        throw PresentationMismatchError("apply: polynomial outside the derivation's ring");
    return apply_images(d.ring(), d.images(), f);
}

Derivation jacobian_derivation(const std::vector<Polynomial>& polys,
                               const std::vector<std::string>& vars) {
    const std::size_t n = vars.size();
    if (polys.size() + 1 != n)
        throw ArityError("jacobian_derivation: expected " + std::to_string(n - 1) +
                         " polynomials over " + std::to_string(n) + " variables, got " +
                         std::to_string(polys.size()));
    const Ring& ring = polys.front().ring();
    Matrix jac = jacobian_matrix(polys, vars);

    std::map<std::string, Polynomial> images;
    for (const auto& name : ring->variables())
        images.emplace(name, Polynomial::zero(ring));

    for (std::size_t i = 0; i < n; ++i) {
        // det of Jac rows with the i-th unit row appended.
        Matrix full(n, n, ring);
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0; c < n; ++c) full.set(r, c, jac.at(r, c));
        full.set(n - 1, i, Polynomial::one(ring));
        Polynomial via_det = determinant(full);

        // Signed maximal minor omitting column i.
        Matrix sub(n - 1, n - 1, ring);
        for (std::size_t r = 0; r + 1 < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == i) continue;
                sub.set(r, cc++, jac.at(r, c));
            }
        }
        Polynomial via_minor = determinant(sub);
        if ((n - 1 + i) % 2 == 1) via_minor = -via_minor;
        if (via_det != via_minor)
            throw Error("jacobian_derivation: determinant and minor routes disagree");

        images.insert_or_assign(vars[i], via_det);
    }
    return Derivation(ring, std::move(images));
}

Verdict is_fixed_point_free(const Derivation& d) {
    std::vector<Polynomial> gens = d.images();
    Ideal image_ideal(d.ring(), std::move(gens));
    if (is_unit_ideal(image_ideal)) {
        auto cert = unit_certificate(image_ideal);
        return Verdict::proven(*cert,
                               "images generate the unit ideal");
    }
    return Verdict::refuted(BasisWitness{image_ideal.reduced_basis()},
                            "images generate a proper ideal");
}

Verdict is_locally_nilpotent(const Derivation& d, int bound) {
    if (bound < 1) throw Error("is_locally_nilpotent: bound must be positive");
    const Ring& ring = d.ring();
    std::vector<Polynomial> rel_basis = buchberger(ring->relations());

    IndexWitness witness;
    for (const auto& name : ring->variables()) {
        Polynomial g = normal_form(d.image(name), rel_basis);
        int k = 1;
        while (!g.is_zero() && k < bound) {
            g = normal_form(apply(d, g), rel_basis);
            ++k;
        }
        if (!g.is_zero())
            return Verdict::exhausted(
                bound, "iterates of " + name + " did not vanish within the bound");
        witness.indices.emplace_back(name, k);
    }
    return Verdict::proven(witness,
                           "all variable iterates vanish; local nilpotency "
                           "extends to the whole ring");
}

std::optional<Polynomial> find_slice(const Derivation& d, int degree_bound) {
    if (degree_bound < 0) throw Error("find_slice: negative degree bound");
    const Ring& ring = d.ring();
    const std::size_t nvars = ring->variable_count();
    std::vector<Polynomial> rel_basis = buchberger(ring->relations());

    // Monomial ansatz of total degree <= degree_bound, enumerated
    // deterministically.
    std::vector<Monomial> ansatz;
    Monomial current(nvars);
    std::function<void(std::size_t, int)> enumerate = [&](std::size_t var, int left) {
        if (var == nvars) {
            ansatz.push_back(current);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            current[var] = static_cast<unsigned>(e);
            enumerate(var + 1, left - e);
        }
        current[var] = 0;
    };
    enumerate(0, degree_bound);

    // Column c: normal form of D(x^ansatz[c]).
    std::vector<Polynomial> columns;
    columns.reserve(ansatz.size());
    for (const auto& m : ansatz) {
        Polynomial xm = Polynomial::monomial(ring, m, 1);
        columns.push_back(normal_form(apply(d, xm), rel_basis));
    }

    // Row index per monomial occurring in any column or in the target 1.
    std::map<std::vector<unsigned>, std::size_t> row_of;
    auto row_for = [&](const Monomial& m) {
        auto [it, inserted] = row_of.emplace(m.exponents(), row_of.size());
        (void)inserted;
        return it->second;
    };
    row_for(Monomial(nvars));
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms()) {
            (void)c;
            row_for(m);
        }

    const std::size_t nrows = row_of.size();
    const std::size_t ncols = columns.size();
    std::vector<std::vector<Rational>> mat(nrows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& [m, coeff] : columns[c].terms())
            mat[row_for(m)][c] = coeff;
    mat[row_for(Monomial(nvars))][ncols] = 1;

    // Exact Gaussian elimination; free unknowns stay zero.
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank_row = 0;
    for (std::size_t c = 0; c < ncols && rank_row < nrows; ++c) {
        std::size_t p = rank_row;
        while (p < nrows && mat[p][c] == 0) ++p;
        if (p == nrows) continue;
        std::swap(mat[rank_row], mat[p]);
        const Rational piv = mat[rank_row][c];
        for (auto& x : mat[rank_row]) x /= piv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank_row || mat[r][c] == 0) continue;
            const Rational factor = mat[r][c];
            for (std::size_t cc = c; cc <= ncols; ++cc)
                mat[r][cc] -= factor * mat[rank_row][cc];
        }
        pivot_col_of_row.push_back(c);
        ++rank_row;
    }
    for (std::size_t r = rank_row; r < nrows; ++r)
        if (mat[r][ncols] != 0) return std::nullopt;

    std::vector<Rational> solution(ncols, Rational(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        solution[pivot_col_of_row[r]] = mat[r][ncols];

    TermList terms;
    for (std::size_t c = 0; c < ncols; ++c)
        if (solution[c] != 0) terms.emplace_back(ansatz[c], solution[c]);
    Polynomial g = normal_form(Polynomial::from_terms(ring, std::move(terms)), rel_basis);
    if (!normal_form(apply(d, g), rel_basis).is_one())
        throw Error("find_slice: candidate slice failed re-verification");
    return g;
}

Verdict is_retraction(const std::map<std::string, Polynomial>& images,
                      const Ring& ring) {
    std::map<std::string, Polynomial> full = images;
    for (const auto& [name, img] : images) {
        ring->require_index(name);
        if (!img.ring()->same_as(*ring))
            throw PresentationMismatchError(
                "retraction image belongs to a different presentation");
    }
    for (const auto& name : ring->variables())
        full.emplace(name, Polynomial::variable(ring, name));

    std::vector<Polynomial> rel_basis = buchberger(ring->relations());
    BasisWitness images_witness{{}, "images"};
    for (const auto& name : ring->variables()) {
        const Polynomial& phi_v = full.at(name);
        Polynomial diff = normal_form(substitute(phi_v, full) - phi_v, rel_basis);
        if (!diff.is_zero())
            return Verdict::refuted(
                diff, "map is not idempotent on " + name +
                          "; phi(phi(" + name + ")) - phi(" + name + ") shown");
        images_witness.basis.push_back(phi_v);
    }
    return Verdict::proven(images_witness,
                           "idempotent modulo relations on every variable");
}

} // namespace coordcheck
