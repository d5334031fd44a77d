#pragma once

// The interdefinability laws for Fix, fix, tie, intersection and difference,
// checked as exact set equalities on seeded random models.

#include "pdl/semantics.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pdl {

struct PropPair {
    Prop lhs;
    Prop rhs;
};

struct ProgPair {
    Prog lhs;
    Prog rhs;
};

struct IdentityLaw {
    std::string name;
    /// Only claimed when the atomic programs are partial functions.
    bool deterministic_only = false;
    std::variant<PropPair, ProgPair> sides;
};

/// Laws over programs p, q and atoms a, b.
std::vector<IdentityLaw> standard_laws();

IdentityResult check_law(const Frame& m, const IdentityLaw& law);

struct LawFailure {
    std::string law;
    std::size_t model_index;
    KripkeModel model;
    Counterexample witness;
};

struct IdentitySuiteReport {
    std::size_t models = 0;
    std::size_t deterministic_models = 0;
    std::size_t checks = 0;
    std::vector<LawFailure> failures;

    bool passed() const { return failures.empty(); }
};

enum class DeterminismMode { Mixed, DeterministicOnly };

/// Models have 1..max_states states over p, q, a, b. In Mixed mode every
/// second model is deterministic.
IdentitySuiteReport run_identity_suite(std::uint64_t seed, std::size_t models, DeterminismMode mode,
                                       std::size_t max_states = 5);

} // namespace pdl
