#include "pdl/surface.hpp"

#include "pdl/error.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace pdl {

SourceText read_source(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return {os.str(), path};
}

namespace {

struct Token {
    enum class Kind { Ident, Keyword, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t line;
    std::size_t column;

    std::string describe() const
    {
        switch (kind) {
        case Kind::End: return "end of input";
        case Kind::Ident: return "identifier '" + text + "'";
        default: return "'" + text + "'";
        }
    }
};

std::vector<Token> tokenize(const SourceText& src)
{
    std::vector<Token> out;
    const std::string& s = src.text;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto ident_char = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    };
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n')
                advance(1);
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t end = i;
            while (end < s.size() && ident_char(s[end]))
                ++end;
            std::string word = s.substr(i, end - i);
            const auto kind = is_keyword(word) ? Token::Kind::Keyword : Token::Kind::Ident;
            out.push_back({kind, std::move(word), line, col});
            advance(end - i);
            continue;
        }
        if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
            out.push_back({Token::Kind::Symbol, "->", line, col});
            advance(2);
            continue;
        }
        static const std::string symbols = "()[]<>!&|~;+^-*?";
        if (symbols.find(c) != std::string::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), line, col});
            advance(1);
            continue;
        }
        throw ParseError(src.origin, line, col, {}, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const SourceText& src) : origin_(src.origin), tokens_(tokenize(src)) {}

    Prop whole_prop()
    {
        Prop f = prop();
        expect_end();
        return f;
    }

    Prog whole_prog()
    {
        Prog p = program();
        expect_end();
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    bool at(const char* text) const
    {
        const Token& t = peek();
        return (t.kind == Token::Kind::Symbol || t.kind == Token::Kind::Keyword) && t.text == text;
    }

    bool accept(const char* text)
    {
        if (!at(text))
            return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const Token& t = peek();
        throw ParseError(origin_, t.line, t.column, std::move(expected), t.describe());
    }

    void expect(const char* text)
    {
        if (!accept(text))
            fail({std::string("'") + text + "'"});
    }

    void expect_end()
    {
        if (peek().kind != Token::Kind::End)
            fail({"end of input"});
    }

    bool starts_program() const
    {
        return peek().kind == Token::Kind::Ident || at("skip") || at("?") || at("(") || at("if") || at("while");
    }

    Prop prop()
    {
        Prop lhs = disjunction();
        if (accept("->"))
            return implies(lhs, prop());
        return lhs;
    }

    Prop disjunction()
    {
        Prop lhs = conjunction();
        while (accept("|"))
            lhs = disj(lhs, conjunction());
        return lhs;
    }

    Prop conjunction()
    {
        Prop lhs = unary();
        while (accept("&"))
            lhs = conj(lhs, unary());
        return lhs;
    }

    Prop unary()
    {
        if (accept("!"))
            return neg(unary());
        if (accept("[")) {
            Prog p = program();
            expect("]");
            return box(p, unary());
        }
        if (accept("<")) {
            Prog p = program();
            expect(">");
            return diamond(p, unary());
        }
        return primary();
    }

    Prop primary()
    {
        if (accept("true"))
            return top();
        if (accept("false"))
            return bottom();
        if (at("fix") || at("Fix")) {
            const bool big = at("Fix");
            ++pos_;
            expect("(");
            Prog p = program();
            expect(")");
            return big ? big_fix(p) : fix(p);
        }
        if (starts_program()) {
            // A tie starts with a program; anything else here is a
            // proposition, so back off if no '~' follows.
            const std::size_t save = pos_;
            std::optional<Prog> lhs;
            try {
                lhs = program();
            } catch (const ParseError&) {
            }
            if (lhs && accept("~"))
                return tie(*lhs, program());
            pos_ = save;
        }
        if (accept("(")) {
            Prop f = prop();
            expect(")");
            return f;
        }
        if (peek().kind == Token::Kind::Ident)
            return atom(tokens_[pos_++].text);
        fail({"'true'", "'false'", "'!'", "'['", "'<'", "'('", "'fix'", "'Fix'", "identifier", "program and '~'"});
    }

    Prog program()
    {
        Prog lhs = inter_diff();
        while (accept("+"))
            lhs = choice(lhs, inter_diff());
        return lhs;
    }

    Prog inter_diff()
    {
        Prog lhs = sequence();
        for (;;) {
            if (accept("^"))
                lhs = inter(lhs, sequence());
            else if (accept("-"))
                lhs = diff(lhs, sequence());
            else
                return lhs;
        }
    }

    Prog sequence()
    {
        Prog lhs = postfix();
        while (accept(";"))
            lhs = seq(lhs, postfix());
        return lhs;
    }

    Prog postfix()
    {
        Prog p = prog_primary();
        while (accept("*"))
            p = star(p);
        return p;
    }

    Prog prog_primary()
    {
        if (peek().kind == Token::Kind::Ident)
            return prog(tokens_[pos_++].text);
        if (accept("skip"))
            return skip();
        if (accept("?")) {
            expect("(");
            Prop a = prop();
            expect(")");
            return test(a);
        }
        if (accept("(")) {
            Prog p = program();
            expect(")");
            return p;
        }
        if (accept("if")) {
            Prop a = prop();
            expect("then");
            Prog p = program();
            expect("else");
            Prog q = program();
            expect("fi");
            return if_then_else(a, p, q);
        }
        if (accept("while")) {
            Prop a = prop();
            expect("do");
            Prog p = program();
            expect("od");
            return while_do(a, p);
        }
        fail({"identifier", "'skip'", "'?'", "'('", "'if'", "'while'"});
    }

    std::string origin_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Binding strength; a child printed in a looser context gets parentheses.
enum PropLevel { kImplies = 1, kOr, kAnd, kUnary };
enum ProgLevel { kUnion = 1, kInterDiff, kSeq, kStar };

std::string print_prog_at(const Prog& p, int ctx);

std::string wrap(std::string s, bool parens) { return parens ? "(" + s + ")" : s; }

std::string print_prop_at(const Prop& f, int ctx)
{
    switch (f.kind()) {
    case PropKind::True: return "true";
    case PropKind::False: return "false";
    case PropKind::Atom: return f.name();
    case PropKind::Not: return "!" + print_prop_at(f.prop(0), kUnary);
    case PropKind::Implies:
        return wrap(print_prop_at(f.prop(0), kOr) + " -> " + print_prop_at(f.prop(1), kImplies), ctx > kImplies);
    case PropKind::Or:
        return wrap(print_prop_at(f.prop(0), kOr) + " | " + print_prop_at(f.prop(1), kAnd), ctx > kOr);
    case PropKind::And:
        return wrap(print_prop_at(f.prop(0), kAnd) + " & " + print_prop_at(f.prop(1), kUnary), ctx > kAnd);
    case PropKind::Box: return "[" + print_prog_at(f.prog(0), kUnion) + "]" + print_prop_at(f.prop(0), kUnary);
    case PropKind::Diamond:
        return "<" + print_prog_at(f.prog(0), kUnion) + ">" + print_prop_at(f.prop(0), kUnary);
    case PropKind::FixP: return "fix(" + print_prog_at(f.prog(0), kUnion) + ")";
    case PropKind::BigFix: return "Fix(" + print_prog_at(f.prog(0), kUnion) + ")";
    case PropKind::Tie: return print_prog_at(f.prog(0), kStar) + " ~ " + print_prog_at(f.prog(1), kStar);
    }
    return {};
}

std::string print_prog_at(const Prog& p, int ctx)
{
    switch (p.kind()) {
    case ProgKind::Atomic: return p.name();
    case ProgKind::Skip: return "skip";
    case ProgKind::Test: return "?(" + print_prop_at(p.prop(0), kImplies) + ")";
    case ProgKind::Union:
        return wrap(print_prog_at(p.prog(0), kUnion) + " + " + print_prog_at(p.prog(1), kInterDiff), ctx > kUnion);
    case ProgKind::Inter:
    case ProgKind::Diff: {
        const char* op = p.kind() == ProgKind::Inter ? " ^ " : " - ";
        return wrap(print_prog_at(p.prog(0), kInterDiff) + op + print_prog_at(p.prog(1), kSeq), ctx > kInterDiff);
    }
    case ProgKind::Seq:
        return wrap(print_prog_at(p.prog(0), kSeq) + ";" + print_prog_at(p.prog(1), kStar), ctx > kSeq);
    case ProgKind::Star: return print_prog_at(p.prog(0), kStar) + "*";
    case ProgKind::IfThenElse:
        return "if " + print_prop_at(p.prop(0), kImplies) + " then " + print_prog_at(p.prog(0), kUnion) + " else " +
               print_prog_at(p.prog(1), kUnion) + " fi";
    case ProgKind::WhileDo:
        return "while " + print_prop_at(p.prop(0), kImplies) + " do " + print_prog_at(p.prog(0), kUnion) + " od";
    }
    return {};
}

// JSON field access with schema errors.

const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw SchemaError(where + " must be an object");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(where + " is missing field \"" + key + "\"");
    return *it;
}

std::string as_string(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_string())
        throw SchemaError(where + " must be a string");
    return j.get<std::string>();
}

std::vector<std::string> as_strings(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array())
        throw SchemaError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_string(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::pair<std::string, std::string>> as_pairs(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_array())
        throw SchemaError(where + " must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].size() != 2)
            throw SchemaError(at + " must be a pair");
        out.emplace_back(as_string(j[i][0], at), as_string(j[i][1], at));
    }
    return out;
}

bool as_bool(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_boolean())
        throw SchemaError(where + " must be a boolean");
    return j.get<bool>();
}

long long as_int(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw SchemaError(where + " must be an integer");
    return j.get<long long>();
}

nlohmann::json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, b] : pairs)
        out.push_back({a, b});
    return out;
}

std::string first_error(const std::vector<Diagnostic>& diagnostics)
{
    for (const auto& d : diagnostics)
        if (d.severity == Diagnostic::Severity::Error)
            return d.message;
    return {};
}

} // namespace

Prop parse_prop(const SourceText& src) { return Parser(src).whole_prop(); }
Prog parse_prog(const SourceText& src) { return Parser(src).whole_prog(); }

std::string print_prop(const Prop& f) { return print_prop_at(f, kImplies); }
std::string print_prog(const Prog& p) { return print_prog_at(p, kUnion); }

nlohmann::json parse_json(const SourceText& src)
{
    try {
        return nlohmann::json::parse(src.text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, src.text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (src.text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(src.origin, line, col, {}, "malformed JSON");
    }
}

KripkeModel model_from_json(const nlohmann::json& j)
{
    KripkeModel m;
    m.states = as_strings(field(j, "states", "model"), "states");
    m.deterministic = as_bool(field(j, "deterministic", "model"), "deterministic");
    const auto& programs = field(j, "programs", "model");
    if (!programs.is_object())
        throw SchemaError("programs must be an object");
    for (const auto& [name, pairs] : programs.items())
        m.programs[name] = as_pairs(pairs, "programs." + name);
    const auto& valuation = field(j, "valuation", "model");
    if (!valuation.is_object())
        throw SchemaError("valuation must be an object");
    for (const auto& [name, states] : valuation.items())
        m.valuation[name] = as_strings(states, "valuation." + name);
    return m;
}

nlohmann::json to_json(const KripkeModel& m)
{
    nlohmann::json programs = nlohmann::json::object();
    for (const auto& [name, pairs] : m.programs)
        programs[name] = pairs_json(pairs);
    nlohmann::json valuation = nlohmann::json::object();
    for (const auto& [name, states] : m.valuation)
        valuation[name] = states;
    return {{"states", m.states}, {"deterministic", m.deterministic}, {"programs", programs},
            {"valuation", valuation}};
}

KripkeModel parse_model(const SourceText& src)
{
    KripkeModel m = model_from_json(parse_json(src));
    const auto diagnostics = validate_model(m);
    if (has_errors(diagnostics))
        throw InvariantError(src.origin + ": " + first_error(diagnostics));
    return m;
}

TileSet tileset_from_json(const nlohmann::json& j)
{
    TileSet ts;
    ts.tiles = as_strings(field(j, "tiles", "tile set"), "tiles");
    ts.h = as_pairs(field(j, "h", "tile set"), "h");
    ts.v = as_pairs(field(j, "v", "tile set"), "v");
    ts.neon = as_strings(field(j, "neon", "tile set"), "neon");
    ts.start = as_string(field(j, "start", "tile set"), "start");
    return ts;
}

nlohmann::json to_json(const TileSet& ts)
{
    return {{"tiles", ts.tiles}, {"h", pairs_json(ts.h)}, {"v", pairs_json(ts.v)}, {"neon", ts.neon},
            {"start", ts.start}};
}

TileSet parse_tileset(const SourceText& src)
{
    TileSet ts = tileset_from_json(parse_json(src));
    validate_tileset(ts);
    return ts;
}

TuringMachine tm_from_json(const nlohmann::json& j)
{
    TuringMachine tm;
    tm.states = as_strings(field(j, "states", "machine"), "states");
    tm.initial = as_string(field(j, "initial", "machine"), "initial");
    tm.alphabet = as_strings(field(j, "alphabet", "machine"), "alphabet");
    tm.blank = as_string(field(j, "blank", "machine"), "blank");
    const auto& transitions = field(j, "transitions", "machine");
    if (!transitions.is_array())
        throw SchemaError("transitions must be an array");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const std::string where = "transitions[" + std::to_string(i) + "]";
        const auto& t = transitions[i];
        Transition tr;
        tr.from = as_string(field(t, "from", where), where + ".from");
        tr.read = as_string(field(t, "read", where), where + ".read");
        tr.write = as_string(field(t, "write", where), where + ".write");
        const std::string move = as_string(field(t, "move", where), where + ".move");
        if (move != "L" && move != "R")
            throw SchemaError(where + ".move must be \"L\" or \"R\"");
        tr.move = move == "L" ? Move::Left : Move::Right;
        tr.to = as_string(field(t, "to", where), where + ".to");
        tm.transitions.push_back(std::move(tr));
    }
    return tm;
}

nlohmann::json to_json(const TuringMachine& tm)
{
    nlohmann::json transitions = nlohmann::json::array();
    for (const auto& t : tm.transitions)
        transitions.push_back({{"from", t.from},
                               {"read", t.read},
                               {"write", t.write},
                               {"move", t.move == Move::Left ? "L" : "R"},
                               {"to", t.to}});
    return {{"states", tm.states}, {"initial", tm.initial}, {"alphabet", tm.alphabet}, {"blank", tm.blank},
            {"transitions", transitions}};
}

TuringMachine parse_tm(const SourceText& src)
{
    TuringMachine tm = tm_from_json(parse_json(src));
    validate_tm(tm);
    return tm;
}

Tiling tiling_from_json(const nlohmann::json& j)
{
    const auto& shape = field(j, "shape", "tiling");
    const std::string kind = as_string(field(shape, "kind", "shape"), "shape.kind");
    Shape s;
    if (kind == "rect") {
        s = Shape::rect(static_cast<int>(as_int(field(shape, "w", "shape"), "shape.w")),
                        static_cast<int>(as_int(field(shape, "h", "shape"), "shape.h")));
    } else if (kind == "torus") {
        s = Shape::torus(static_cast<int>(as_int(field(shape, "n", "shape"), "shape.n")),
                         static_cast<int>(as_int(field(shape, "m", "shape"), "shape.m")));
    } else {
        throw SchemaError("shape.kind must be \"rect\" or \"torus\"");
    }
    if (s.cols < 1 || s.rows < 1)
        throw InvariantError("shape dimensions must be at least 1");
    Tiling t(s);
    std::vector<bool> seen(s.cells(), false);
    const auto& assign = field(j, "assign", "tiling");
    if (!assign.is_array())
        throw SchemaError("assign must be an array");
    for (std::size_t k = 0; k < assign.size(); ++k) {
        const std::string where = "assign[" + std::to_string(k) + "]";
        const auto& e = assign[k];
        if (!e.is_array() || e.size() != 3)
            throw SchemaError(where + " must be [i, j, tile]");
        const auto i = as_int(e[0], where);
        const auto jj = as_int(e[1], where);
        if (i < 0 || jj < 0 || i >= s.cols || jj >= s.rows)
            throw InvariantError(where + " lies outside the shape");
        const auto cell = static_cast<std::size_t>(jj * s.cols + i);
        if (seen[cell])
            throw InvariantError(where + " assigns a position twice");
        seen[cell] = true;
        t.cells[cell] = as_string(e[2], where);
    }
    for (bool b : seen)
        if (!b)
            throw InvariantError("tiling does not assign every position");
    return t;
}

nlohmann::json to_json(const Tiling& t)
{
    nlohmann::json shape;
    if (t.shape.kind == Shape::Kind::Rect)
        shape = {{"kind", "rect"}, {"w", t.shape.cols}, {"h", t.shape.rows}};
    else
        shape = {{"kind", "torus"}, {"n", t.shape.cols}, {"m", t.shape.rows}};
    nlohmann::json assign = nlohmann::json::array();
    for (int j = 0; j < t.shape.rows; ++j)
        for (int i = 0; i < t.shape.cols; ++i)
            assign.push_back({i, j, t.at(i, j)});
    return {{"shape", shape}, {"assign", assign}};
}

Tiling parse_tiling(const SourceText& src) { return tiling_from_json(parse_json(src)); }

TmTileMeta tm_meta_from_json(const nlohmann::json& j)
{
    TmTileMeta meta;
    meta.blank = as_string(field(j, "blank", "meta"), "blank");
    const auto& kinds = field(j, "tile_kinds", "meta");
    if (!kinds.is_object())
        throw SchemaError("tile_kinds must be an object");
    for (const auto& [name, kind] : kinds.items()) {
        const std::string k = as_string(kind, "tile_kinds." + name);
        if (k == "initial")
            meta.kinds[name] = TileKind::Initial;
        else if (k == "merge")
            meta.kinds[name] = TileKind::Merge;
        else if (k == "action")
            meta.kinds[name] = TileKind::Action;
        else if (k == "alphabet")
            meta.kinds[name] = TileKind::Alphabet;
        else
            throw SchemaError("tile_kinds." + name + " has unknown kind '" + k + "'");
    }
    const auto& decode = field(j, "decode", "meta");
    if (!decode.is_object())
        throw SchemaError("decode must be an object");
    for (const auto& [name, entry] : decode.items()) {
        const std::string where = "decode." + name;
        CellCode code;
        code.symbol = as_string(field(entry, "symbol", where), where + ".symbol");
        if (entry.contains("state"))
            code.state = as_string(entry["state"], where + ".state");
        meta.decode[name] = code;
    }
    const auto& transitions = field(j, "transitions", "meta");
    if (!transitions.is_object())
        throw SchemaError("transitions must be an object");
    for (const auto& [name, index] : transitions.items()) {
        const auto i = as_int(index, "transitions." + name);
        if (i < 0)
            throw InvariantError("transitions." + name + " must be non-negative");
        meta.transitions[name] = static_cast<std::size_t>(i);
    }
    return meta;
}

nlohmann::json to_json(const TmTileMeta& meta)
{
    nlohmann::json kinds = nlohmann::json::object();
    for (const auto& [name, kind] : meta.kinds)
        kinds[name] = to_string(kind);
    nlohmann::json decode = nlohmann::json::object();
    for (const auto& [name, code] : meta.decode) {
        nlohmann::json entry = {{"symbol", code.symbol}};
        if (code.state)
            entry["state"] = *code.state;
        decode[name] = entry;
    }
    nlohmann::json transitions = nlohmann::json::object();
    for (const auto& [name, index] : meta.transitions)
        transitions[name] = index;
    return {{"blank", meta.blank}, {"tile_kinds", kinds}, {"decode", decode}, {"transitions", transitions}};
}

TmTileMeta parse_tm_meta(const SourceText& src) { return tm_meta_from_json(parse_json(src)); }

} // namespace pdl
