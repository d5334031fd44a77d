#include "pdl/reduction.hpp"

namespace pdl {

const char* to_string(Encoding e) { return e == Encoding::Fix ? "fix" : "tie"; }
const char* to_string(Form f) { return f == Form::Star ? "star" : "while"; }

Prog north() { return prog("N"); }
Prog east() { return prog("E"); }
Prog south() { return prog("S"); }
Prog west() { return prog("W"); }

namespace {

// After each proper prefix of `path`, the next leg followed by its converse
// is a fix; the whole path is a fix at the start.
std::vector<Prop> square_conjuncts(const std::vector<Prog>& path, const std::vector<Prog>& back)
{
    std::vector<Prop> out;
    std::vector<Prog> prefix;
    for (std::size_t leg = 0; leg < path.size(); ++leg) {
        Prop here = fix(seq(path[leg], back[leg]));
        if (!prefix.empty())
            here = box(seq_all(prefix), here);
        out.push_back(here);
        prefix.push_back(path[leg]);
    }
    out.push_back(fix(seq_all(path)));
    return out;
}

Prop grid_box(Prop body, Form form)
{
    Prop f = box(star(north()), box(star(east()), std::move(body)));
    return form == Form::Star ? f : destar(f);
}

} // namespace

Prop square_prop(Encoding encoding)
{
    if (encoding == Encoding::Tie)
        return tie(seq(north(), east()), seq(east(), north()));
    // Clockwise N,E,S,W: fix(N;S) & [N]fix(E;W) & [N;E]fix(S;N) &
    // [N;E;S]fix(W;E) & fix(N;E;S;W); anticlockwise swaps the first two legs.
    auto parts = square_conjuncts({north(), east(), south(), west()}, {south(), west(), north(), east()});
    auto anti = square_conjuncts({east(), north(), west(), south()}, {west(), south(), east(), north()});
    parts.insert(parts.end(), anti.begin(), anti.end());
    return conj_all(parts);
}

Prop rho1(Encoding encoding, Form form) { return grid_box(square_prop(encoding), form); }

Prop tile_atom(const std::string& tile) { return atom(tile); }

Prop exactly_one_tile(const TileSet& ts)
{
    std::vector<Prop> any;
    for (const auto& t : ts.tiles)
        any.push_back(tile_atom(t));
    std::vector<Prop> parts{disj_all(any)};
    for (std::size_t i = 0; i < ts.tiles.size(); ++i)
        for (std::size_t j = i + 1; j < ts.tiles.size(); ++j)
            parts.push_back(neg(conj(tile_atom(ts.tiles[i]), tile_atom(ts.tiles[j]))));
    return conj_all(parts);
}

namespace {

Prop successors(const std::vector<std::pair<std::string, std::string>>& rel, const TileSet& ts,
                const std::string& tile)
{
    std::vector<Prop> out;
    for (const auto& t : ts.tiles)
        for (const auto& [a, b] : rel)
            if (a == tile && b == t) {
                out.push_back(tile_atom(t));
                break;
            }
    return disj_all(out);
}

} // namespace

Prop horizontal_successors(const TileSet& ts, const std::string& tile) { return successors(ts.h, ts, tile); }
Prop vertical_successors(const TileSet& ts, const std::string& tile) { return successors(ts.v, ts, tile); }

Prop neon_prop(const TileSet& ts)
{
    std::vector<Prop> out;
    for (const auto& t : ts.tiles)
        for (const auto& n : ts.neon)
            if (n == t) {
                out.push_back(tile_atom(t));
                break;
            }
    return disj_all(out);
}

Prop rho2(const TileSet& ts, Form form)
{
    validate_tileset(ts);
    std::vector<Prop> body{exactly_one_tile(ts)};
    for (const auto& t : ts.tiles) {
        const Prop next = conj(box(east(), horizontal_successors(ts, t)), box(north(), vertical_successors(ts, t)));
        body.push_back(implies(tile_atom(t), next));
    }
    return grid_box(conj_all(body), form);
}

Prop rho3(const TileSet& ts, Form form)
{
    validate_tileset(ts);
    const Prog diagonal = seq(north(), east());
    Prop f = box(star(diagonal), diamond(star(diagonal), neon_prop(ts)));
    return form == Form::Star ? f : destar(f);
}

ReductionOutput reduce(const TileSet& ts, Encoding encoding, Form form)
{
    ReductionOutput out;
    out.encoding = encoding;
    out.form = form;
    out.square = square_prop(encoding);
    out.rho1 = rho1(encoding, form);
    out.rho2 = rho2(ts, form);
    out.rho3 = rho3(ts, form);
    out.gamma = conj(conj(conj(tile_atom(ts.start), out.rho1), out.rho2), out.rho3);
    out.gamma_T = conj(out.rho1, out.rho2);
    return out;
}

} // namespace pdl
