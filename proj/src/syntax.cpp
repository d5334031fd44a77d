#include "pdl/syntax.hpp"

#include "pdl/error.hpp"
#include "pdl/surface.hpp"

#include <algorithm>
#include <array>

namespace pdl {

namespace {

struct Arity {
    std::size_t props;
    std::size_t progs;
    bool named;
};

Arity arity(PropKind k)
{
    switch (k) {
    case PropKind::True:
    case PropKind::False: return {0, 0, false};
    case PropKind::Atom: return {0, 0, true};
    case PropKind::Not: return {1, 0, false};
    case PropKind::And:
    case PropKind::Or:
    case PropKind::Implies: return {2, 0, false};
    case PropKind::Diamond:
    case PropKind::Box: return {1, 1, false};
    case PropKind::FixP:
    case PropKind::BigFix: return {0, 1, false};
    case PropKind::Tie: return {0, 2, false};
    }
    return {0, 0, false};
}

Arity arity(ProgKind k)
{
    switch (k) {
    case ProgKind::Atomic: return {0, 0, true};
    case ProgKind::Skip: return {0, 0, false};
    case ProgKind::Test: return {1, 0, false};
    case ProgKind::Seq:
    case ProgKind::Union:
    case ProgKind::Inter:
    case ProgKind::Diff: return {0, 2, false};
    case ProgKind::Star: return {0, 1, false};
    case ProgKind::IfThenElse: return {1, 2, false};
    case ProgKind::WhileDo: return {1, 1, false};
    }
    return {0, 0, false};
}

template <class Kind>
void check_shape(Kind kind, const std::string& name, std::size_t nprops, std::size_t nprogs)
{
    const Arity a = arity(kind);
    if (a.props != nprops || a.progs != nprogs)
        throw InvariantError("syntax node built with wrong number of children");
    if (a.named && !is_identifier(name))
        throw InvariantError("'" + name + "' is not a valid identifier");
    if (!a.named && !name.empty())
        throw InvariantError("only atoms and atomic programs carry a name");
}

const std::shared_ptr<const PropNode>& true_node()
{
    static const auto node = std::make_shared<const PropNode>(PropNode{PropKind::True, {}, {}, {}});
    return node;
}

const std::shared_ptr<const ProgNode>& skip_node()
{
    static const auto node = std::make_shared<const ProgNode>(ProgNode{ProgKind::Skip, {}, {}, {}});
    return node;
}

} // namespace

Prop::Prop() : node_(true_node()) {}
PropKind Prop::kind() const { return node_->kind; }
const std::string& Prop::name() const { return node_->name; }
const Prop& Prop::prop(std::size_t i) const { return node_->props.at(i); }
const Prog& Prop::prog(std::size_t i) const { return node_->progs.at(i); }
std::size_t Prop::num_props() const { return node_->props.size(); }
std::size_t Prop::num_progs() const { return node_->progs.size(); }

Prog::Prog() : node_(skip_node()) {}
ProgKind Prog::kind() const { return node_->kind; }
const std::string& Prog::name() const { return node_->name; }
const Prop& Prog::prop(std::size_t i) const { return node_->props.at(i); }
const Prog& Prog::prog(std::size_t i) const { return node_->progs.at(i); }
std::size_t Prog::num_props() const { return node_->props.size(); }
std::size_t Prog::num_progs() const { return node_->progs.size(); }

bool operator==(const Prop& a, const Prop& b)
{
    if (a.node_ == b.node_)
        return true;
    return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
           a.node_->props == b.node_->props && a.node_->progs == b.node_->progs;
}

bool operator==(const Prog& a, const Prog& b)
{
    if (a.node_ == b.node_)
        return true;
    return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
           a.node_->props == b.node_->props && a.node_->progs == b.node_->progs;
}

Prop make_prop(PropKind kind, std::string name, std::vector<Prop> props, std::vector<Prog> progs)
{
    check_shape(kind, name, props.size(), progs.size());
    return Prop(std::make_shared<const PropNode>(
        PropNode{kind, std::move(name), std::move(props), std::move(progs)}));
}

Prog make_prog(ProgKind kind, std::string name, std::vector<Prop> props, std::vector<Prog> progs)
{
    check_shape(kind, name, props.size(), progs.size());
    return Prog(std::make_shared<const ProgNode>(
        ProgNode{kind, std::move(name), std::move(props), std::move(progs)}));
}

bool is_keyword(std::string_view word)
{
    static constexpr std::array<std::string_view, 12> keywords = {
        "true", "false", "skip", "if", "then", "else", "fi", "while", "do", "od", "fix", "Fix"};
    return std::find(keywords.begin(), keywords.end(), word) != keywords.end();
}

bool is_identifier(std::string_view word)
{
    if (word.empty() || is_keyword(word))
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(word.front()))
        return false;
    return std::all_of(word.begin(), word.end(), [&](char c) { return alpha(c) || digit(c); });
}

Prop top() { return Prop(); }
Prop bottom() { return make_prop(PropKind::False, {}, {}, {}); }
Prop atom(std::string name) { return make_prop(PropKind::Atom, std::move(name), {}, {}); }
Prop neg(Prop a) { return make_prop(PropKind::Not, {}, {std::move(a)}, {}); }
Prop conj(Prop a, Prop b) { return make_prop(PropKind::And, {}, {std::move(a), std::move(b)}, {}); }
Prop disj(Prop a, Prop b) { return make_prop(PropKind::Or, {}, {std::move(a), std::move(b)}, {}); }
Prop implies(Prop a, Prop b) { return make_prop(PropKind::Implies, {}, {std::move(a), std::move(b)}, {}); }
Prop diamond(Prog p, Prop a) { return make_prop(PropKind::Diamond, {}, {std::move(a)}, {std::move(p)}); }
Prop box(Prog p, Prop a) { return make_prop(PropKind::Box, {}, {std::move(a)}, {std::move(p)}); }
Prop fix(Prog p) { return make_prop(PropKind::FixP, {}, {}, {std::move(p)}); }
Prop big_fix(Prog p) { return make_prop(PropKind::BigFix, {}, {}, {std::move(p)}); }
Prop tie(Prog p, Prog q) { return make_prop(PropKind::Tie, {}, {}, {std::move(p), std::move(q)}); }

Prop conj_all(const std::vector<Prop>& parts)
{
    if (parts.empty())
        return top();
    Prop acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = conj(acc, parts[i]);
    return acc;
}

Prop disj_all(const std::vector<Prop>& parts)
{
    if (parts.empty())
        return bottom();
    Prop acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = disj(acc, parts[i]);
    return acc;
}

std::vector<Prop> conjuncts(const Prop& f)
{
    if (f.kind() != PropKind::And)
        return {f};
    auto out = conjuncts(f.prop(0));
    auto rest = conjuncts(f.prop(1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

Prog prog(std::string name) { return make_prog(ProgKind::Atomic, std::move(name), {}, {}); }
Prog skip() { return Prog(); }
Prog test(Prop a) { return make_prog(ProgKind::Test, {}, {std::move(a)}, {}); }
Prog seq(Prog p, Prog q) { return make_prog(ProgKind::Seq, {}, {}, {std::move(p), std::move(q)}); }
Prog choice(Prog p, Prog q) { return make_prog(ProgKind::Union, {}, {}, {std::move(p), std::move(q)}); }
Prog inter(Prog p, Prog q) { return make_prog(ProgKind::Inter, {}, {}, {std::move(p), std::move(q)}); }
Prog diff(Prog p, Prog q) { return make_prog(ProgKind::Diff, {}, {}, {std::move(p), std::move(q)}); }
Prog star(Prog p) { return make_prog(ProgKind::Star, {}, {}, {std::move(p)}); }

Prog if_then_else(Prop a, Prog p, Prog q)
{
    return make_prog(ProgKind::IfThenElse, {}, {std::move(a)}, {std::move(p), std::move(q)});
}

Prog while_do(Prop a, Prog p) { return make_prog(ProgKind::WhileDo, {}, {std::move(a)}, {std::move(p)}); }

Prog seq_all(const std::vector<Prog>& parts)
{
    if (parts.empty())
        return skip();
    Prog acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = seq(acc, parts[i]);
    return acc;
}

namespace {

template <class Node>
void collect(const Node& n, AtomicNames& out);

template <class Node>
void collect_children(const Node& n, AtomicNames& out)
{
    for (std::size_t i = 0; i < n.num_props(); ++i)
        collect(n.prop(i), out);
    for (std::size_t i = 0; i < n.num_progs(); ++i)
        collect(n.prog(i), out);
}

template <>
void collect(const Prop& f, AtomicNames& out)
{
    if (f.kind() == PropKind::Atom)
        out.props.insert(f.name());
    collect_children(f, out);
}

template <>
void collect(const Prog& p, AtomicNames& out)
{
    if (p.kind() == ProgKind::Atomic)
        out.progs.insert(p.name());
    collect_children(p, out);
}

Prog destar_prog(const Prog& p);

Prop destar_prop(const Prop& f)
{
    switch (f.kind()) {
    case PropKind::True:
    case PropKind::False:
    case PropKind::Atom: return f;
    case PropKind::Not: return neg(destar_prop(f.prop(0)));
    case PropKind::And: return conj(destar_prop(f.prop(0)), destar_prop(f.prop(1)));
    case PropKind::Or: return disj(destar_prop(f.prop(0)), destar_prop(f.prop(1)));
    case PropKind::Implies: return implies(destar_prop(f.prop(0)), destar_prop(f.prop(1)));
    case PropKind::Box: {
        Prop body = destar_prop(f.prop(0));
        if (f.prog(0).kind() == ProgKind::Star)
            return box(while_do(body, destar_prog(f.prog(0).prog(0))), bottom());
        return box(destar_prog(f.prog(0)), body);
    }
    case PropKind::Diamond: {
        Prop body = destar_prop(f.prop(0));
        if (f.prog(0).kind() == ProgKind::Star)
            return diamond(while_do(neg(body), destar_prog(f.prog(0).prog(0))), top());
        return diamond(destar_prog(f.prog(0)), body);
    }
    case PropKind::FixP: return fix(destar_prog(f.prog(0)));
    case PropKind::BigFix: return big_fix(destar_prog(f.prog(0)));
    case PropKind::Tie: return tie(destar_prog(f.prog(0)), destar_prog(f.prog(1)));
    }
    return f;
}

Prog destar_prog(const Prog& p)
{
    switch (p.kind()) {
    case ProgKind::Atomic:
    case ProgKind::Skip: return p;
    case ProgKind::Test: return test(destar_prop(p.prop(0)));
    case ProgKind::Seq: return seq(destar_prog(p.prog(0)), destar_prog(p.prog(1)));
    case ProgKind::Union: return choice(destar_prog(p.prog(0)), destar_prog(p.prog(1)));
    case ProgKind::Inter: return inter(destar_prog(p.prog(0)), destar_prog(p.prog(1)));
    case ProgKind::Diff: return diff(destar_prog(p.prog(0)), destar_prog(p.prog(1)));
    case ProgKind::Star: throw NonEliminableStar(print_prog(p));
    case ProgKind::IfThenElse:
        return if_then_else(destar_prop(p.prop(0)), destar_prog(p.prog(0)), destar_prog(p.prog(1)));
    case ProgKind::WhileDo: return while_do(destar_prop(p.prop(0)), destar_prog(p.prog(0)));
    }
    return p;
}

template <class Node>
bool strict_children(const Node& n)
{
    for (std::size_t i = 0; i < n.num_props(); ++i)
        if (!is_strict(n.prop(i)))
            return false;
    for (std::size_t i = 0; i < n.num_progs(); ++i)
        if (!is_strict(n.prog(i)))
            return false;
    return true;
}

template <class Node>
std::size_t child_depth(const Node& n)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i < n.num_props(); ++i)
        d = std::max(d, depth(n.prop(i)));
    for (std::size_t i = 0; i < n.num_progs(); ++i)
        d = std::max(d, depth(n.prog(i)));
    return d;
}

} // namespace

AtomicNames atomic_names(const Prop& f)
{
    AtomicNames out;
    collect(f, out);
    return out;
}

AtomicNames atomic_names(const Prog& p)
{
    AtomicNames out;
    collect(p, out);
    return out;
}

Prop destar(const Prop& f) { return destar_prop(f); }

bool is_strict(const Prop& f) { return strict_children(f); }

bool is_strict(const Prog& p)
{
    switch (p.kind()) {
    case ProgKind::Union:
    case ProgKind::Inter:
    case ProgKind::Diff:
    case ProgKind::Star: return false;
    default: return strict_children(p);
    }
}

std::size_t depth(const Prop& f) { return 1 + child_depth(f); }
std::size_t depth(const Prog& p) { return 1 + child_depth(p); }

} // namespace pdl
