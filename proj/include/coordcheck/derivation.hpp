#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coordcheck/verdict.hpp"

namespace coordcheck {

// Rectangular matrix of polynomials over one presentation.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Ring ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    const Polynomial& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Polynomial value);

private:
    std::size_t rows_, cols_;
    Ring ring_;
    std::vector<Polynomial> entries_;
};

// Entry (i, j) = d polys[i] / d vars[j].
Matrix jacobian_matrix(const std::vector<Polynomial>& polys,
                       const std::vector<std::string>& vars);

// Exact determinant. Fraction-free Bareiss elimination with a cofactor
// fallback should a pivot step fail to divide exactly; the two routes are
// kept separately callable for cross-checking.
Polynomial determinant(const Matrix& m);
Polynomial determinant_bareiss(const Matrix& m);
Polynomial determinant_cofactor(const Matrix& m);

// All k x k minors, row selections outer, column selections inner, both in
// lexicographic order. Not deduplicated or sign-normalized.
std::vector<Polynomial> minors(const Matrix& m, std::size_t k);

// Derivation of the ambient presentation, given by one image per variable
// and extended by linearity and the Leibniz rule. Over a presentation with
// relations J, construction checks apply(D, r) in J for every relation r.
class Derivation {
public:
    Derivation(Ring ring, std::map<std::string, Polynomial> images);

    const Ring& ring() const { return ring_; }
    const Polynomial& image(std::string_view var) const;
    const std::vector<Polynomial>& images() const { return images_; }

private:
    Ring ring_;
    std::vector<Polynomial> images_; // indexed like ring_->variables()
};

Polynomial apply(const Derivation& d, const Polynomial& f);

// The derivation v -> det of the matrix whose first n-1 rows are
// Jac(polys)/(vars) and whose last row is the unit row of v. Requires
// exactly n-1 polynomials over n variables. Each image is recomputed as the
// signed maximal minor omitting v's column, and the two must agree.
Derivation jacobian_derivation(const std::vector<Polynomial>& polys,
                               const std::vector<std::string>& vars);

// Proven with a cofactor certificate when the images generate the unit
// ideal, Refuted with the reduced basis otherwise.
Verdict is_fixed_point_free(const Derivation& d);

// Proven when every variable reaches D^k(v) = 0 with k <= bound (iterates
// reduced modulo the ambient relations); Exhausted otherwise. Never Refuted.
Verdict is_locally_nilpotent(const Derivation& d, int bound);

// Smallest-support solution g of apply(D, g) = 1 with total degree at most
// degree_bound, found by linear algebra over the monomial ansatz; nullopt if
// the system is infeasible at this bound.
std::optional<Polynomial> find_slice(const Derivation& d, int degree_bound);

// Idempotence of the endomorphism induced by the variable map, checked
// modulo the ambient relations. Variables missing from the map are fixed.
Verdict is_retraction(const std::map<std::string, Polynomial>& images,
                      const Ring& ring);

} // namespace coordcheck
