#pragma once

// Relational semantics over finite Kripke models.

#include "pdl/syntax.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pdl {

/// A set of states of one model, indexed by declaration order.
using StateSet = boost::dynamic_bitset<>;

std::vector<std::size_t> members(const StateSet& s);

/// A binary relation on the states 0..n-1, stored as successor rows.
class Relation {
public:
    explicit Relation(std::size_t n = 0);

    static Relation identity(std::size_t n);
    /// {(a,a) | a in s}
    static Relation diagonal(const StateSet& s);

    std::size_t size() const { return rows_.size(); }
    bool contains(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
    void insert(std::size_t a, std::size_t b) { rows_[a].set(b); }
    const StateSet& successors(std::size_t a) const { return rows_[a]; }
    /// States with at least one successor.
    StateSet domain() const;
    bool empty() const;
    std::size_t count() const;

    /// This relation followed by `next`.
    Relation then(const Relation& next) const;
    /// Reflexive-transitive closure by worklist saturation.
    Relation closure() const;
    Relation inverse() const;

    bool is_partial_function() const;
    bool is_injective() const;

    Relation& operator|=(const Relation& o);
    Relation& operator&=(const Relation& o);
    Relation& operator-=(const Relation& o);
    friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
    friend Relation operator&(Relation a, const Relation& b) { return a &= b; }
    friend Relation operator-(Relation a, const Relation& b) { return a -= b; }
    friend bool operator==(const Relation&, const Relation&) = default;

    /// Pairs in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

private:
    std::vector<StateSet> rows_;
};

/// A model as written down: named states, named relations and a valuation.
/// It may be invalid (dangling names, nondeterminism under the flag);
/// validate_model reports such problems and Frame refuses them.
struct KripkeModel {
    std::vector<std::string> states;
    bool deterministic = false;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> programs;
    std::map<std::string, std::vector<std::string>> valuation;

    friend bool operator==(const KripkeModel&, const KripkeModel&) = default;
};

/// Index-based form of a valid model, used for evaluation.
/// Missing program names denote the empty relation and missing atoms the
/// empty set.
class Frame {
public:
    /// Throws UnknownState for references outside `m.states`.
    explicit Frame(const KripkeModel& m);
    Frame(std::size_t n, std::map<std::string, Relation> programs, std::map<std::string, StateSet> valuation);

    std::size_t size() const { return n_; }
    Relation program(const std::string& name) const;
    StateSet atom(const std::string& name) const;

    Relation denote(const Prog& p) const;
    StateSet truth_set(const Prop& f) const;

    KripkeModel to_model(const std::vector<std::string>& state_names, bool deterministic) const;

private:
    std::size_t n_;
    std::map<std::string, Relation> programs_;
    std::map<std::string, StateSet> valuation_;
};

Relation denote(const KripkeModel& m, const Prog& p);
StateSet truth_set(const KripkeModel& m, const Prop& f);
std::vector<std::string> state_names(const KripkeModel& m, const StateSet& s);

struct Diagnostic {
    enum class Severity { Error, Info };
    Severity severity;
    std::string message;
};

std::vector<Diagnostic> validate_model(const KripkeModel& m);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct Equal {};

/// Least element of the symmetric difference: a state for propositions, a
/// pair (state, target) for programs.
struct Counterexample {
    std::size_t state;
    std::optional<std::size_t> target;
};

using IdentityResult = std::variant<Equal, Counterexample>;

IdentityResult check_identity(const Frame& m, const Prop& lhs, const Prop& rhs);
IdentityResult check_identity(const Frame& m, const Prog& lhs, const Prog& rhs);
IdentityResult check_identity(const KripkeModel& m, const Prop& lhs, const Prop& rhs);
IdentityResult check_identity(const KripkeModel& m, const Prog& lhs, const Prog& rhs);

struct RandomModelParams {
    std::uint64_t seed = 0;
    std::size_t states = 1;
    std::vector<std::string> programs;
    std::vector<std::string> props;
    bool deterministic = false;
    double density = 0.5;
};

/// States are named s0..s{n-1}. Every listed program and prop gets an entry,
/// possibly empty.
KripkeModel random_model(const RandomModelParams& params);

} // namespace pdl
