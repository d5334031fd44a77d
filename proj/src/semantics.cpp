#include "pdl/semantics.hpp"

#include "pdl/error.hpp"

#include <random>
#include <set>
#include <unordered_map>

namespace pdl {

std::vector<std::size_t> members(const StateSet& s)
{
    std::vector<std::size_t> out;
    for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i))
        out.push_back(i);
    return out;
}

Relation::Relation(std::size_t n) : rows_(n, StateSet(n)) {}

Relation Relation::identity(std::size_t n)
{
    Relation r(n);
    for (std::size_t a = 0; a < n; ++a)
        r.insert(a, a);
    return r;
}

Relation Relation::diagonal(const StateSet& s)
{
    Relation r(s.size());
    for (auto a : members(s))
        r.insert(a, a);
    return r;
}

StateSet Relation::domain() const
{
    StateSet d(size());
    for (std::size_t a = 0; a < size(); ++a)
        d[a] = rows_[a].any();
    return d;
}

bool Relation::empty() const
{
    for (const auto& row : rows_)
        if (row.any())
            return false;
    return true;
}

std::size_t Relation::count() const
{
    std::size_t c = 0;
    for (const auto& row : rows_)
        c += row.count();
    return c;
}

Relation Relation::then(const Relation& next) const
{
    Relation out(size());
    for (std::size_t a = 0; a < size(); ++a)
        for (auto b = rows_[a].find_first(); b != StateSet::npos; b = rows_[a].find_next(b))
            out.rows_[a] |= next.rows_[b];
    return out;
}

Relation Relation::closure() const
{
    Relation out(size());
    std::vector<std::size_t> work;
    for (std::size_t a = 0; a < size(); ++a) {
        StateSet& reached = out.rows_[a];
        reached.set(a);
        work.assign(1, a);
        while (!work.empty()) {
            const std::size_t b = work.back();
            work.pop_back();
            const StateSet fresh = rows_[b] - reached;
            reached |= fresh;
            for (auto c : members(fresh))
                work.push_back(c);
        }
    }
    return out;
}

Relation Relation::inverse() const
{
    Relation out(size());
    for (auto [a, b] : pairs())
        out.insert(b, a);
    return out;
}

bool Relation::is_partial_function() const
{
    for (const auto& row : rows_)
        if (row.count() > 1)
            return false;
    return true;
}

bool Relation::is_injective() const { return inverse().is_partial_function(); }

Relation& Relation::operator|=(const Relation& o)
{
    for (std::size_t a = 0; a < size(); ++a)
        rows_[a] |= o.rows_[a];
    return *this;
}

Relation& Relation::operator&=(const Relation& o)
{
    for (std::size_t a = 0; a < size(); ++a)
        rows_[a] &= o.rows_[a];
    return *this;
}

Relation& Relation::operator-=(const Relation& o)
{
    for (std::size_t a = 0; a < size(); ++a)
        rows_[a] -= o.rows_[a];
    return *this;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (auto b : members(rows_[a]))
            out.emplace_back(a, b);
    return out;
}

namespace {

std::unordered_map<std::string, std::size_t> index_states(const KripkeModel& m)
{
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m.states.size(); ++i)
        index.emplace(m.states[i], i);
    return index;
}

} // namespace

Frame::Frame(const KripkeModel& m) : n_(m.states.size())
{
    const auto index = index_states(m);
    auto lookup = [&](const std::string& s, const std::string& where) {
        auto it = index.find(s);
        if (it == index.end())
            throw UnknownState("state '" + s + "' referenced by " + where + " is not declared");
        return it->second;
    };
    for (const auto& [name, pairs] : m.programs) {
        Relation r(n_);
        for (const auto& [from, to] : pairs)
            r.insert(lookup(from, "program " + name), lookup(to, "program " + name));
        programs_.emplace(name, std::move(r));
    }
    for (const auto& [name, states] : m.valuation) {
        StateSet s(n_);
        for (const auto& st : states)
            s.set(lookup(st, "atom " + name));
        valuation_.emplace(name, std::move(s));
    }
}

Frame::Frame(std::size_t n, std::map<std::string, Relation> programs, std::map<std::string, StateSet> valuation)
    : n_(n), programs_(std::move(programs)), valuation_(std::move(valuation))
{
}

Relation Frame::program(const std::string& name) const
{
    auto it = programs_.find(name);
    return it == programs_.end() ? Relation(n_) : it->second;
}

StateSet Frame::atom(const std::string& name) const
{
    auto it = valuation_.find(name);
    return it == valuation_.end() ? StateSet(n_) : it->second;
}

Relation Frame::denote(const Prog& p) const
{
    switch (p.kind()) {
    case ProgKind::Atomic: return program(p.name());
    case ProgKind::Skip: return Relation::identity(n_);
    case ProgKind::Test: return Relation::diagonal(truth_set(p.prop(0)));
    case ProgKind::Seq: return denote(p.prog(0)).then(denote(p.prog(1)));
    case ProgKind::Union: return denote(p.prog(0)) | denote(p.prog(1));
    case ProgKind::Inter: return denote(p.prog(0)) & denote(p.prog(1));
    case ProgKind::Diff: return denote(p.prog(0)) - denote(p.prog(1));
    case ProgKind::Star: return denote(p.prog(0)).closure();
    case ProgKind::IfThenElse: {
        const StateSet cond = truth_set(p.prop(0));
        return Relation::diagonal(cond).then(denote(p.prog(0))) |
               Relation::diagonal(~cond).then(denote(p.prog(1)));
    }
    case ProgKind::WhileDo: {
        const StateSet cond = truth_set(p.prop(0));
        return Relation::diagonal(cond).then(denote(p.prog(0))).closure().then(Relation::diagonal(~cond));
    }
    }
    return Relation(n_);
}

StateSet Frame::truth_set(const Prop& f) const
{
    switch (f.kind()) {
    case PropKind::True: return StateSet(n_).set();
    case PropKind::False: return StateSet(n_);
    case PropKind::Atom: return atom(f.name());
    case PropKind::Not: return ~truth_set(f.prop(0));
    case PropKind::And: return truth_set(f.prop(0)) & truth_set(f.prop(1));
    case PropKind::Or: return truth_set(f.prop(0)) | truth_set(f.prop(1));
    case PropKind::Implies: return ~truth_set(f.prop(0)) | truth_set(f.prop(1));
    case PropKind::Diamond: {
        const Relation r = denote(f.prog(0));
        const StateSet body = truth_set(f.prop(0));
        StateSet out(n_);
        for (std::size_t a = 0; a < n_; ++a)
            out[a] = r.successors(a).intersects(body);
        return out;
    }
    case PropKind::Box: {
        const Relation r = denote(f.prog(0));
        const StateSet body = truth_set(f.prop(0));
        StateSet out(n_);
        for (std::size_t a = 0; a < n_; ++a)
            out[a] = r.successors(a).is_subset_of(body);
        return out;
    }
    case PropKind::BigFix:
    case PropKind::FixP: {
        const Relation r = denote(f.prog(0));
        StateSet out(n_);
        for (std::size_t a = 0; a < n_; ++a) {
            const auto& succ = r.successors(a);
            const std::size_t c = succ.count();
            const bool only_self = c == 0 || (c == 1 && succ.test(a));
            out[a] = f.kind() == PropKind::BigFix ? only_self : only_self && c == 1;
        }
        return out;
    }
    case PropKind::Tie: {
        const Relation p = denote(f.prog(0));
        const Relation q = denote(f.prog(1));
        StateSet out(n_);
        for (std::size_t a = 0; a < n_; ++a)
            out[a] = p.successors(a) == q.successors(a);
        return out;
    }
    }
    return StateSet(n_);
}

KripkeModel Frame::to_model(const std::vector<std::string>& names, bool deterministic) const
{
    KripkeModel m;
    m.states = names;
    m.deterministic = deterministic;
    for (const auto& [name, r] : programs_) {
        auto& out = m.programs[name];
        for (auto [a, b] : r.pairs())
            out.emplace_back(names[a], names[b]);
    }
    for (const auto& [name, s] : valuation_) {
        auto& out = m.valuation[name];
        for (auto a : members(s))
            out.push_back(names[a]);
    }
    return m;
}

Relation denote(const KripkeModel& m, const Prog& p) { return Frame(m).denote(p); }
StateSet truth_set(const KripkeModel& m, const Prop& f) { return Frame(m).truth_set(f); }

std::vector<std::string> state_names(const KripkeModel& m, const StateSet& s)
{
    std::vector<std::string> out;
    for (auto a : members(s))
        out.push_back(m.states.at(a));
    return out;
}

std::vector<Diagnostic> validate_model(const KripkeModel& m)
{
    std::vector<Diagnostic> out;
    auto error = [&](std::string msg) { out.push_back({Diagnostic::Severity::Error, std::move(msg)}); };
    auto info = [&](std::string msg) { out.push_back({Diagnostic::Severity::Info, std::move(msg)}); };

    std::set<std::string> declared;
    for (const auto& s : m.states)
        if (!declared.insert(s).second)
            error("state '" + s + "' declared twice");

    for (const auto& [name, pairs] : m.programs) {
        std::map<std::string, std::set<std::string>> succ;
        std::map<std::string, std::set<std::string>> pred;
        for (const auto& [from, to] : pairs) {
            for (const auto* s : {&from, &to})
                if (!declared.count(*s))
                    error("dangling state '" + *s + "' in program " + name);
            succ[from].insert(to);
            pred[to].insert(from);
        }
        bool function = true;
        for (const auto& [from, targets] : succ) {
            if (targets.size() < 2)
                continue;
            function = false;
            if (m.deterministic) {
                std::string list;
                for (const auto& t : targets)
                    list += (list.empty() ? "" : ", ") + t;
                error(name + " not deterministic at " + from + " (successors " + list + ")");
            }
        }
        bool injective = function;
        for (const auto& [to, sources] : pred)
            injective = injective && sources.size() < 2;
        info(name + (injective ? " is" : " is not") + " an injective partial function");
    }
    for (const auto& [name, states] : m.valuation)
        for (const auto& s : states)
            if (!declared.count(s))
                error("dangling state '" + s + "' in valuation of " + name);
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics)
{
    for (const auto& d : diagnostics)
        if (d.severity == Diagnostic::Severity::Error)
            return true;
    return false;
}

IdentityResult check_identity(const Frame& m, const Prop& lhs, const Prop& rhs)
{
    const StateSet delta = m.truth_set(lhs) ^ m.truth_set(rhs);
    const auto first = delta.find_first();
    if (first == StateSet::npos)
        return Equal{};
    return Counterexample{first, std::nullopt};
}

IdentityResult check_identity(const Frame& m, const Prog& lhs, const Prog& rhs)
{
    const Relation a = m.denote(lhs);
    const Relation b = m.denote(rhs);
    for (std::size_t s = 0; s < m.size(); ++s) {
        const StateSet delta = a.successors(s) ^ b.successors(s);
        if (auto t = delta.find_first(); t != StateSet::npos)
            return Counterexample{s, t};
    }
    return Equal{};
}

IdentityResult check_identity(const KripkeModel& m, const Prop& lhs, const Prop& rhs)
{
    return check_identity(Frame(m), lhs, rhs);
}

IdentityResult check_identity(const KripkeModel& m, const Prog& lhs, const Prog& rhs)
{
    return check_identity(Frame(m), lhs, rhs);
}

KripkeModel random_model(const RandomModelParams& params)
{
    std::mt19937_64 rng(params.seed);
    std::bernoulli_distribution coin(params.density);
    const std::size_t n = params.states;

    KripkeModel m;
    m.deterministic = params.deterministic;
    for (std::size_t i = 0; i < n; ++i)
        m.states.push_back("s" + std::to_string(i));

    for (const auto& name : params.programs) {
        auto& pairs = m.programs[name];
        for (std::size_t a = 0; a < n; ++a) {
            if (params.deterministic) {
                if (coin(rng)) {
                    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
                    pairs.emplace_back(m.states[a], m.states[pick(rng)]);
                }
                continue;
            }
            for (std::size_t b = 0; b < n; ++b)
                if (coin(rng))
                    pairs.emplace_back(m.states[a], m.states[b]);
        }
    }
    for (const auto& name : params.props) {
        auto& states = m.valuation[name];
        for (std::size_t a = 0; a < n; ++a)
            if (coin(rng))
                states.push_back(m.states[a]);
    }
    return m;
}

} // namespace pdl
