#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coordcheck/errors.hpp"
#include "coordcheck/monomial.hpp"
#include "coordcheck/order.hpp"

namespace coordcheck {

class Polynomial;

// B = R[X_1..X_k] flattened over Q: an ordered variable list, a monomial
// order, and relation generators. The first `base_count` variables belong to
// the base ring R; the rest are the fibre variables of B.
//
// Presentations are created through make() and shared via shared_ptr.
// Relations are attached once, right after construction, before the
// presentation is shared; afterwards the object is immutable.
class RingPresentation : public std::enable_shared_from_this<RingPresentation> {
public:
    static std::shared_ptr<RingPresentation> make(
        std::vector<std::string> variables, MonomialOrder order,
        std::size_t base_count = 0);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t variable_count() const { return variables_.size(); }
    const std::string& variable_name(std::size_t i) const { return variables_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;

    const MonomialOrder& order() const { return order_; }
    std::size_t base_count() const { return base_count_; }
    std::vector<std::string> fibre_variables() const;

    void set_relations(const std::vector<Polynomial>& relations);
    std::size_t relation_count() const { return relation_terms_.size(); }
    std::vector<Polynomial> relations() const;
    const std::vector<TermList>& relation_terms() const { return relation_terms_; }

    // Structural equality; polynomials over structurally equal presentations
    // are interoperable.
    bool same_as(const RingPresentation& other) const;

private:
    RingPresentation(std::vector<std::string> variables, MonomialOrder order,
                     std::size_t base_count);

    std::vector<std::string> variables_;
    MonomialOrder order_;
    std::size_t base_count_;
    std::vector<TermList> relation_terms_;
    bool relations_set_ = false;
};

using Ring = std::shared_ptr<const RingPresentation>;

} // namespace coordcheck
