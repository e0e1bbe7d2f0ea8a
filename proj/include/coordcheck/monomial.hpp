#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "coordcheck/rational.hpp"

namespace coordcheck {

// Exponent vector with one slot per ambient variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0u) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    std::size_t size() const { return exps_.size(); }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    unsigned& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    long total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0L);
    }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](unsigned e) { return e == 0; });
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
        return r;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    // Pre: this->divides(other) is false only if the caller checked already.
    Monomial divide_into(const Monomial& numerator) const {
        Monomial r(numerator);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i)
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    std::vector<unsigned> exps_;
};

using Term = std::pair<Monomial, Rational>;
using TermList = std::vector<Term>;

} // namespace coordcheck
