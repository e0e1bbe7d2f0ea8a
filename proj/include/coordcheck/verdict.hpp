#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coordcheck/groebner.hpp"

namespace coordcheck {

// A list of polynomials presented as evidence: a reduced basis for
// refutations, the verified images for idempotence proofs.
struct BasisWitness {
    std::vector<Polynomial> basis;
    std::string label = "basis";
};

// Per-variable nilpotency indices: the smallest k with D^k(v) = 0.
struct IndexWitness {
    std::vector<std::pair<std::string, int>> indices;
};

using Witness =
    std::variant<std::monostate, Polynomial, UnitCertificate, BasisWitness, IndexWitness>;

// Three-valued decision record. Proven and Refuted carry evidence; Exhausted
// records the bound that ran out. The note lists asserted hypotheses and any
// explanation of how the status was reached.
struct Verdict {
    enum class Status { Proven, Refuted, Exhausted };

    Status status;
    Witness witness;
    std::string note;
    std::optional<int> bound;

    static Verdict proven(Witness w, std::string note = "") {
        return Verdict{Status::Proven, std::move(w), std::move(note), std::nullopt};
    }
    static Verdict refuted(Witness w, std::string note = "") {
        return Verdict{Status::Refuted, std::move(w), std::move(note), std::nullopt};
    }
    static Verdict exhausted(int bound, std::string note = "") {
        return Verdict{Status::Exhausted, std::monostate{}, std::move(note), bound};
    }

    bool proven_p() const { return status == Status::Proven; }
    bool refuted_p() const { return status == Status::Refuted; }
    bool exhausted_p() const { return status == Status::Exhausted; }
};

inline std::string to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Proven: return "Proven";
        case Verdict::Status::Refuted: return "Refuted";
        case Verdict::Status::Exhausted: return "Exhausted";
    }
    return "";
}

} // namespace coordcheck
