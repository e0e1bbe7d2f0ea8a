#pragma once

#include <memory>
#include <string>

#include "coordcheck/monomial.hpp"

namespace coordcheck {

// Total order on monomials compatible with multiplication; 1 is minimal.
// Lexicographic and degree-reverse-lexicographic are built in; block orders
// compare a leading slice of the exponent vector first, so "base | fibre"
// elimination orders are expressible.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder block(MonomialOrder first, std::size_t split_index,
                               MonomialOrder second) {
        MonomialOrder o(Kind::Block);
        o.split_ = split_index;
        o.first_ = std::make_shared<MonomialOrder>(std::move(first));
        o.second_ = std::make_shared<MonomialOrder>(std::move(second));
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t split_index() const { return split_; }

    // <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        return compare_range(a, b, 0, a.size());
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::DegRevLex: return "degrevlex";
            case Kind::Block:
                return "block(" + first_->to_string() + ", " +
                       std::to_string(split_) + ", " + second_->to_string() + ")";
        }
        return "";
    }

    bool operator==(const MonomialOrder& other) const {
        if (kind_ != other.kind_) return false;
        if (kind_ != Kind::Block) return true;
        return split_ == other.split_ && *first_ == *other.first_ &&
               *second_ == *other.second_;
    }
    bool operator!=(const MonomialOrder& other) const { return !(*this == other); }

private:
    explicit MonomialOrder(Kind kind) : kind_(kind) {}

    int compare_range(const Monomial& a, const Monomial& b, std::size_t lo,
                      std::size_t hi) const {
        switch (kind_) {
            case Kind::Lex: {
                for (std::size_t i = lo; i < hi; ++i) {
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                }
                return 0;
            }
            case Kind::DegRevLex: {
                long da = 0, db = 0;
                for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
                if (da != db) return da > db ? 1 : -1;
                // Equal degree: the last variable where they differ decides,
                // smaller exponent there wins.
                for (std::size_t i = hi; i-- > lo;) {
                    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
                }
                return 0;
            }
            case Kind::Block: {
                std::size_t mid = lo + split_;
                if (mid > hi) mid = hi;
                int c = first_->compare_range(a, b, lo, mid);
                if (c != 0) return c;
                return second_->compare_range(a, b, mid, hi);
            }
        }
        return 0;
    }

    Kind kind_;
    std::size_t split_ = 0;
    std::shared_ptr<const MonomialOrder> first_, second_;
};

} // namespace coordcheck
