#include "coordcheck/ring.hpp"

#include <set>

#include "coordcheck/polynomial.hpp"

namespace coordcheck {

RingPresentation::RingPresentation(std::vector<std::string> variables,
                                   MonomialOrder order, std::size_t base_count)
    : variables_(std::move(variables)),
      order_(std::move(order)),
      base_count_(base_count) {}

std::shared_ptr<RingPresentation> RingPresentation::make(
    std::vector<std::string> variables, MonomialOrder order,
    std::size_t base_count) {
    if (base_count > variables.size())
        throw Error("base variable count exceeds variable count");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!seen.insert(v).second)
            throw Error("duplicate variable name: " + v);
    }
    return std::shared_ptr<RingPresentation>(
        new RingPresentation(std::move(variables), std::move(order), base_count));
}

std::optional<std::size_t> RingPresentation::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

std::size_t RingPresentation::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw UnknownVariableError(std::string(name));
    return *i;
}

std::vector<std::string> RingPresentation::fibre_variables() const {
    return {variables_.begin() + static_cast<long>(base_count_), variables_.end()};
}

void RingPresentation::set_relations(const std::vector<Polynomial>& relations) {
    if (relations_set_) throw Error("relations already set on this presentation");
    for (const auto& r : relations) {
        if (!r.ring()->same_as(*this))
            throw PresentationMismatchError(
                "relation polynomial belongs to a different presentation");
        if (r.is_zero()) continue;
        relation_terms_.push_back(r.terms());
    }
    relations_set_ = true;
}

std::vector<Polynomial> RingPresentation::relations() const {
    std::vector<Polynomial> out;
    out.reserve(relation_terms_.size());
    Ring self = shared_from_this();
    for (const auto& terms : relation_terms_)
        out.push_back(Polynomial::from_terms(self, terms));
    return out;
}

bool RingPresentation::same_as(const RingPresentation& other) const {
    if (this == &other) return true;
    if (variables_ != other.variables_) return false;
    if (order_ != other.order_) return false;
    if (base_count_ != other.base_count_) return false;
    if (relation_terms_.size() != other.relation_terms_.size()) return false;
    for (std::size_t i = 0; i < relation_terms_.size(); ++i) {
        if (relation_terms_[i] != other.relation_terms_[i]) return false;
    }
    return true;
}

} // namespace coordcheck
