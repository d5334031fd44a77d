#include "oracle.hpp"
#include "support.hpp"

#include "pdl/error.hpp"
#include "pdl/reduction.hpp"
#include "pdl/syntax.hpp"

#include <doctest.h>

using namespace pdl;

namespace {

bool has_star(const Prop& f);

bool has_star(const Prog& p)
{
    if (p.kind() == ProgKind::Star)
        return true;
    for (std::size_t i = 0; i < p.num_props(); ++i)
        if (has_star(p.prop(i)))
            return true;
    for (std::size_t i = 0; i < p.num_progs(); ++i)
        if (has_star(p.prog(i)))
            return true;
    return false;
}

bool has_star(const Prop& f)
{
    for (std::size_t i = 0; i < f.num_props(); ++i)
        if (has_star(f.prop(i)))
            return true;
    for (std::size_t i = 0; i < f.num_progs(); ++i)
        if (has_star(f.prog(i)))
            return true;
    return false;
}

} // namespace

TEST_CASE("atomic names are read off the leaves")
{
    CHECK(atomic_names(atom("a")) == AtomicNames{{"a"}, {}});
    const Prop f = box(prog("N"), fix(seq(prog("E"), prog("W"))));
    CHECK(atomic_names(f) == AtomicNames{{}, {"E", "N", "W"}});
    const TileSet ts = testing::load_tileset("checkerboard.json");
    CHECK(atomic_names(rho1(Encoding::Fix, Form::Star)) == AtomicNames{{}, {"E", "N", "S", "W"}});
    CHECK(atomic_names(rho2(ts, Form::Star)).props == std::set<std::string>{"A", "B"});
}

TEST_CASE("constructors reject malformed names")
{
    CHECK_THROWS_AS(atom(""), InvariantError);
    CHECK_THROWS_AS(atom("1x"), InvariantError);
    CHECK_THROWS_AS(atom("while"), InvariantError);
    CHECK_THROWS_AS(prog("a-b"), InvariantError);
    CHECK_NOTHROW(atom("T_0"));
}

TEST_CASE("structural equality")
{
    CHECK(conj(atom("a"), atom("b")) == conj(atom("a"), atom("b")));
    CHECK(conj(atom("a"), atom("b")) != conj(atom("b"), atom("a")));
    CHECK(Prop() == top());
    CHECK(Prog() == skip());
    CHECK(box(prog("p"), top()) != diamond(prog("p"), top()));
    CHECK(atom("a") != atom("b"));
}

TEST_CASE("conjunction helpers")
{
    CHECK(conj_all({}) == top());
    CHECK(disj_all({}) == bottom());
    const Prop abc = conj_all({atom("a"), atom("b"), atom("c")});
    CHECK(abc == conj(conj(atom("a"), atom("b")), atom("c")));
    CHECK(conjuncts(abc).size() == 3);
    CHECK(conjuncts(atom("a")).size() == 1);
    CHECK(seq_all({}) == skip());
}

TEST_CASE("destar rewrites box and diamond stars")
{
    const Prop sq = atom("square");
    CHECK(destar(box(star(prog("E")), sq)) == box(while_do(sq, prog("E")), bottom()));
    CHECK(destar(atom("a")) == atom("a"));
    const Prog ne = seq(prog("N"), prog("E"));
    CHECK(destar(diamond(star(ne), atom("neon"))) == diamond(while_do(neg(atom("neon")), ne), top()));
}

TEST_CASE("destar rewrites inner bodies first")
{
    const Prop f = box(star(prog("N")), box(star(prog("E")), atom("s")));
    const Prop inner = box(while_do(atom("s"), prog("E")), bottom());
    CHECK(destar(f) == box(while_do(inner, prog("N")), bottom()));
}

TEST_CASE("destar refuses stars it cannot eliminate")
{
    CHECK_THROWS_AS(destar(fix(star(prog("p")))), NonEliminableStar);
    CHECK_THROWS_AS(destar(box(seq(star(prog("p")), prog("q")), atom("a"))), NonEliminableStar);
    CHECK_THROWS_AS(destar(box(star(star(prog("p"))), atom("a"))), NonEliminableStar);
    try {
        destar(tie(star(prog("p")), skip()));
        FAIL("no exception");
    } catch (const NonEliminableStar& e) {
        CHECK(e.term() == "p*");
    }
}

TEST_CASE("strictness")
{
    CHECK(is_strict(while_do(atom("a"), seq(prog("N"), prog("E")))));
    CHECK_FALSE(is_strict(star(prog("N"))));
    CHECK_FALSE(is_strict(choice(prog("N"), skip())));
    CHECK_FALSE(is_strict(fix(inter(prog("p"), prog("q")))));
    CHECK_FALSE(is_strict(box(diff(prog("p"), prog("q")), top())));
    CHECK(is_strict(if_then_else(atom("a"), prog("p"), test(atom("b")))));
    CHECK(is_strict(destar(rho1(Encoding::Fix, Form::Star))));
}

TEST_CASE("destar properties on random formulas")
{
    testing::Gen g(11);
    testing::Gen::Vocabulary v;
    v.eliminable_stars = true;
    v.full = false;
    int checked = 0;
    for (int k = 0; k < 300; ++k) {
        const Prop f = g.prop(g.uniform(1, 5), v);
        const Prop d = destar(f);
        CHECK_FALSE(has_star(d));
        CHECK(destar(d) == d);
        CHECK(atomic_names(d) == atomic_names(f));
        // Same truth sets, via the reference evaluator.
        for (int s = 0; s < 3; ++s) {
            const KripkeModel m = testing::small_model(g, g.uniform(1, 4), {"p", "q"}, {"a", "b"}, g.coin());
            const auto om = oracle::from_kripke(m);
            CHECK(oracle::truth(om, f) == oracle::truth(om, d));
            ++checked;
        }
    }
    CHECK(checked == 900);
}

TEST_CASE("depth")
{
    CHECK(depth(top()) == 1);
    CHECK(depth(neg(atom("a"))) == 2);
    CHECK(depth(box(prog("p"), atom("a"))) == 2);
    CHECK(depth(fix(seq(prog("p"), prog("q")))) == 3);
}
