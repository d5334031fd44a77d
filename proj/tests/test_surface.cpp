#include "support.hpp"

#include "pdl/error.hpp"
#include "pdl/reduction.hpp"
#include "pdl/surface.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace pdl;

namespace {

Prop P(const std::string& text) { return parse_prop({text}); }

ParseError parse_error(const std::string& text)
{
    try {
        parse_prop({text, "f.pdl"});
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for " << text);
    throw;
}

bool contains(const std::vector<std::string>& xs, const std::string& x)
{
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

} // namespace

TEST_CASE("parsing examples")
{
    CHECK(P("fix(N;S)") == fix(seq(prog("N"), prog("S"))));
    CHECK(P("[N][E]true") == box(prog("N"), box(prog("E"), top())));
    CHECK(P("(N;E) ~ (E;N)") == tie(seq(prog("N"), prog("E")), seq(prog("E"), prog("N"))));
    CHECK(P("Fix(p)") == big_fix(prog("p")));
    CHECK(P("<?(a);p*>b") == diamond(seq(test(atom("a")), star(prog("p"))), atom("b")));
    CHECK(P("[if a then p else skip fi]false") == box(if_then_else(atom("a"), prog("p"), skip()), bottom()));
    CHECK(P("[while a do p;q od]false") == box(while_do(atom("a"), seq(prog("p"), prog("q"))), bottom()));
    CHECK(P("p ~ skip") == tie(prog("p"), skip()));
}

TEST_CASE("precedence and associativity")
{
    const Prop a = atom("a"), b = atom("b"), c = atom("c");
    CHECK(P("a -> b -> c") == implies(a, implies(b, c)));
    CHECK(P("a | b & c") == disj(a, conj(b, c)));
    CHECK(P("a & b & c") == conj(conj(a, b), c));
    CHECK(P("!a & b") == conj(neg(a), b));
    CHECK(P("[p]a & b") == conj(box(prog("p"), a), b));
    const Prog p = prog("p"), q = prog("q"), r = prog("r");
    CHECK(P("fix(p + q ^ r)") == fix(choice(p, inter(q, r))));
    CHECK(P("fix(p - q - r)") == fix(diff(diff(p, q), r)));
    CHECK(P("fix(p ^ q - r)") == fix(diff(inter(p, q), r)));
    CHECK(P("fix(p;q + r)") == fix(choice(seq(p, q), r)));
    CHECK(P("fix(p;q*)") == fix(seq(p, star(q))));
    CHECK(P("fix((p;q)*)") == fix(star(seq(p, q))));
    CHECK(P("fix(p**)") == fix(star(star(p))));
}

TEST_CASE("comments and whitespace")
{
    CHECK(P("# a comment\n  a   &\n\tb # trailing\n") == conj(atom("a"), atom("b")));
}

TEST_CASE("parse errors carry positions and expectations")
{
    const ParseError e1 = parse_error("a &\n  & b");
    CHECK(e1.origin() == "f.pdl");
    CHECK(e1.line() == 2);
    CHECK(e1.column() == 3);
    CHECK(contains(e1.expected(), "'('"));

    const ParseError e2 = parse_error("fix(N;");
    CHECK(e2.line() == 1);
    CHECK(e2.column() == 7);
    CHECK(e2.found() == "end of input");

    const ParseError e3 = parse_error("a b");
    CHECK(e3.column() == 3);
    CHECK(contains(e3.expected(), "end of input"));

    const ParseError e4 = parse_error("a $ b");
    CHECK(e4.column() == 3);

    const ParseError e5 = parse_error("p ~ q ~ r");
    CHECK(e5.column() == 7);

    const ParseError e6 = parse_error("[p]");
    CHECK(std::string(e6.what()).rfind("f.pdl:1:4:", 0) == 0);
}

TEST_CASE("printing examples")
{
    CHECK(print_prop(fix(skip())) == "fix(skip)");
    CHECK(print_prop(tie(seq(prog("N"), prog("E")), seq(prog("E"), prog("N")))) == "(N;E) ~ (E;N)");
    const Prop sq = square_prop(Encoding::Fix);
    const Prop f = box(while_do(sq, prog("E")), bottom());
    CHECK(print_prop(f) == "[while " + print_prop(sq) + " do E od]false");
    CHECK(print_prop(implies(implies(atom("a"), atom("b")), atom("c"))) == "(a -> b) -> c");
    CHECK(print_prop(conj(atom("a"), conj(atom("b"), atom("c")))) == "a & (b & c)");
    CHECK(print_prog(seq(star(prog("p")), test(atom("a")))) == "p*;?(a)");
    CHECK(print_prog(diff(prog("p"), diff(prog("p"), prog("q")))) == "p - (p - q)");
}

TEST_CASE("round trip on random formulas")
{
    testing::Gen g(2024);
    testing::Gen::Vocabulary v;
    for (int k = 0; k < 500; ++k) {
        const Prop f = g.prop(g.uniform(1, 6), v);
        const std::string text = print_prop(f);
        INFO(text);
        const Prop back = P(text);
        CHECK(back == f);
        CHECK(print_prop(back) == text);
    }
}

TEST_CASE("round trip on the reduction formulas")
{
    for (const auto& name : {"one_tile.json", "checkerboard.json"})
        for (Encoding e : {Encoding::Fix, Encoding::Tie})
            for (Form form : {Form::Star, Form::While}) {
                const ReductionOutput r = reduce(testing::load_tileset(name), e, form);
                for (const Prop& f : {r.square, r.rho1, r.rho2, r.rho3, r.gamma, r.gamma_T})
                    CHECK(P(print_prop(f)) == f);
            }
}

TEST_CASE("model documents")
{
    const KripkeModel m = testing::load_model("tie_counterexample.json");
    CHECK(m.states == std::vector<std::string>{"a", "b", "c"});
    CHECK(m.programs.at("p").size() == 2);
    CHECK_FALSE(m.deterministic);

    const std::string bad_det =
        R"({"states":["a","b","c"],"deterministic":true,"programs":{"N":[["a","b"],["a","c"]]},"valuation":{}})";
    CHECK_THROWS_AS(parse_model({bad_det}), InvariantError);
    const std::string dangling = R"({"states":["a"],"deterministic":false,"programs":{"N":[["a","z"]]},"valuation":{}})";
    CHECK_THROWS_AS(parse_model({dangling}), InvariantError);
    CHECK_THROWS_AS(parse_model({R"({"states":["a"],"programs":{},"valuation":{}})"}), SchemaError);
    CHECK_THROWS_AS(parse_model({R"({"states":"a","deterministic":false,"programs":{},"valuation":{}})"}),
                    SchemaError);
    CHECK_THROWS_AS(parse_model({R"({"states":[)"}), ParseError);
}

TEST_CASE("tile set documents")
{
    const TileSet one = parse_tileset({R"({"tiles":["T0"],"h":[["T0","T0"]],"v":[["T0","T0"]],"neon":[],"start":"T0"})"});
    CHECK(one.tiles.size() == 1);
    CHECK(one.h == std::vector<std::pair<std::string, std::string>>{{"T0", "T0"}});
    CHECK(one.v == one.h);
    CHECK_THROWS_AS(parse_tileset({R"({"tiles":["A"],"h":[["A","B"]],"v":[],"neon":[],"start":"A"})"}),
                    InvariantError);
    CHECK_THROWS_AS(parse_tileset({R"({"tiles":["A"],"h":[],"v":[],"neon":[],"start":"Z"})"}), InvariantError);
    CHECK_THROWS_AS(parse_tileset({R"({"tiles":["A"],"h":[["A"]],"v":[],"neon":[],"start":"A"})"}), SchemaError);
}

TEST_CASE("machine documents")
{
    const TuringMachine tm = testing::load_tm("looping.json");
    CHECK(tm.states == std::vector<std::string>{"q0"});
    CHECK(tm.initial == "q0");
    CHECK(tm.blank == "_");
    REQUIRE(tm.transitions.size() == 1);
    CHECK(tm.transitions[0] == Transition{"q0", "_", "_", Move::Right, "q0"});
    const std::string bad_move =
        R"({"states":["q"],"initial":"q","alphabet":["_"],"blank":"_","transitions":[{"from":"q","read":"_","write":"_","move":"U","to":"q"}]})";
    CHECK_THROWS_AS(parse_tm({bad_move}), SchemaError);
    const std::string bad_state =
        R"({"states":["q"],"initial":"r","alphabet":["_"],"blank":"_","transitions":[]})";
    CHECK_THROWS_AS(parse_tm({bad_state}), InvariantError);
}

TEST_CASE("tiling and meta documents")
{
    Tiling t(Shape::torus(2, 1));
    t.at(0, 0) = "A";
    t.at(1, 0) = "B";
    CHECK(parse_tiling({to_json(t).dump()}) == t);
    CHECK(to_json(t) == nlohmann::json::parse(R"({"shape":{"kind":"torus","n":2,"m":1},"assign":[[0,0,"A"],[1,0,"B"]]})"));
    CHECK_THROWS_AS(parse_tiling({R"({"shape":{"kind":"rect","w":2,"h":1},"assign":[[0,0,"A"]]})"}), InvariantError);

    const CompiledTM c = compile_tm(testing::load_tm("counter.json"));
    CHECK(parse_tm_meta({to_json(c.meta).dump()}) == c.meta);
}

TEST_CASE("every data file decodes and re-encodes to the same document")
{
    namespace fs = std::filesystem;
    std::size_t files = 0;
    for (const auto& entry : fs::recursive_directory_iterator(testing::data_path(""))) {
        if (entry.path().extension() == ".pdl") {
            const SourceText src = read_source(entry.path().string());
            const Prop f = parse_prop(src);
            CHECK(P(print_prop(f)) == f);
            ++files;
            continue;
        }
        if (entry.path().extension() != ".json")
            continue;
        const SourceText src = read_source(entry.path().string());
        const nlohmann::json original = parse_json(src);
        const std::string dir = entry.path().parent_path().filename().string();
        INFO(entry.path().string());
        if (dir == "models")
            CHECK(to_json(parse_model(src)) == original);
        else if (dir == "tilesets")
            CHECK(to_json(parse_tileset(src)) == original);
        else if (dir == "tms")
            CHECK(to_json(parse_tm(src)) == original);
        else
            FAIL("unexpected data directory " << dir);
        ++files;
    }
    CHECK(files >= 15);
}
