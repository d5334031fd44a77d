#pragma once

// Abstract syntax for propositions and programs of the PDL variant.
//
// Both trees are immutable and share structure: a Prop or Prog is a cheap
// handle onto a node that is never modified after construction. Children are
// stored uniformly (props first, then programs) so traversals can be written
// once for all node kinds.
//
//   Prop kind   props        progs
//   ---------   ----------   ------
//   True/False  -            -
//   Atom        -            -         (name)
//   Not         a            -
//   And/Or/Imp  a, b         -
//   Diamond/Box a            p
//   FixP/BigFix -            p
//   Tie         -            p, q
//
//   Prog kind   props        progs
//   ---------   ----------   ------
//   Atomic      -            -         (name)
//   Skip        -            -
//   Test        a            -
//   Seq/Union/
//   Inter/Diff  -            p, q
//   Star        -            p
//   IfThenElse  a            p, q
//   WhileDo     a            p

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pdl {

enum class PropKind : std::uint8_t {
    True,
    False,
    Atom,
    Not,
    And,
    Or,
    Implies,
    Diamond,
    Box,
    FixP,
    BigFix,
    Tie,
};

enum class ProgKind : std::uint8_t {
    Atomic,
    Skip,
    Test,
    Seq,
    Union,
    Inter,
    Diff,
    Star,
    IfThenElse,
    WhileDo,
};

struct PropNode;
struct ProgNode;
class Prog;

class Prop {
public:
    /// The constant true.
    Prop();

    PropKind kind() const;
    const std::string& name() const;
    const Prop& prop(std::size_t i) const;
    const Prog& prog(std::size_t i) const;
    std::size_t num_props() const;
    std::size_t num_progs() const;

    friend bool operator==(const Prop& a, const Prop& b);
    friend bool operator!=(const Prop& a, const Prop& b) { return !(a == b); }

private:
    friend Prop make_prop(PropKind, std::string, std::vector<Prop>, std::vector<Prog>);
    explicit Prop(std::shared_ptr<const PropNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const PropNode> node_;
};

class Prog {
public:
    /// skip
    Prog();

    ProgKind kind() const;
    const std::string& name() const;
    const Prop& prop(std::size_t i) const;
    const Prog& prog(std::size_t i) const;
    std::size_t num_props() const;
    std::size_t num_progs() const;

    friend bool operator==(const Prog& a, const Prog& b);
    friend bool operator!=(const Prog& a, const Prog& b) { return !(a == b); }

private:
    friend Prog make_prog(ProgKind, std::string, std::vector<Prop>, std::vector<Prog>);
    explicit Prog(std::shared_ptr<const ProgNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ProgNode> node_;
};

struct PropNode {
    PropKind kind;
    std::string name;
    std::vector<Prop> props;
    std::vector<Prog> progs;
};

struct ProgNode {
    ProgKind kind;
    std::string name;
    std::vector<Prop> props;
    std::vector<Prog> progs;
};

/// Low-level constructors; they check arity and identifier syntax.
Prop make_prop(PropKind kind, std::string name, std::vector<Prop> props, std::vector<Prog> progs);
Prog make_prog(ProgKind kind, std::string name, std::vector<Prop> props, std::vector<Prog> progs);

/// Words reserved by the concrete syntax; they cannot name atoms or programs.
bool is_keyword(std::string_view word);
/// [A-Za-z_][A-Za-z0-9_]* and not a keyword.
bool is_identifier(std::string_view word);

// Propositions.
Prop top();
Prop bottom();
Prop atom(std::string name);
Prop neg(Prop a);
Prop conj(Prop a, Prop b);
Prop disj(Prop a, Prop b);
Prop implies(Prop a, Prop b);
Prop diamond(Prog p, Prop a);
Prop box(Prog p, Prop a);
Prop fix(Prog p);
Prop big_fix(Prog p);
Prop tie(Prog p, Prog q);

/// Left-nested conjunction; the empty conjunction is true.
Prop conj_all(const std::vector<Prop>& parts);
/// Left-nested disjunction; the empty disjunction is false.
Prop disj_all(const std::vector<Prop>& parts);
/// Top-level conjuncts of a left- or right-nested conjunction.
std::vector<Prop> conjuncts(const Prop& f);

// Programs.
Prog prog(std::string name);
Prog skip();
Prog test(Prop a);
Prog seq(Prog p, Prog q);
Prog choice(Prog p, Prog q);
Prog inter(Prog p, Prog q);
Prog diff(Prog p, Prog q);
Prog star(Prog p);
Prog if_then_else(Prop a, Prog p, Prog q);
Prog while_do(Prop a, Prog p);

/// Left-nested composition; the empty composition is skip.
Prog seq_all(const std::vector<Prog>& parts);

struct AtomicNames {
    std::set<std::string> props;
    std::set<std::string> progs;

    friend bool operator==(const AtomicNames&, const AtomicNames&) = default;
};

AtomicNames atomic_names(const Prop& f);
AtomicNames atomic_names(const Prog& p);

/// Rewrites [x*]a to [while a do x]false and <x*>a to <while !a do x>true,
/// bottom-up. Throws NonEliminableStar for a star anywhere else.
Prop destar(const Prop& f);

/// True iff no union, intersection, difference or star occurs anywhere.
bool is_strict(const Prop& f);
bool is_strict(const Prog& p);

/// Height of the tree (a leaf has depth 1).
std::size_t depth(const Prop& f);
std::size_t depth(const Prog& p);

} // namespace pdl
