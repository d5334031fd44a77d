#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testing {

using namespace pdl;

std::string data_path(const std::string& relative) { return std::string(PDL_DATA_DIR) + "/" + relative; }

TileSet load_tileset(const std::string& name) { return parse_tileset(read_source(data_path("tilesets/" + name))); }
TuringMachine load_tm(const std::string& name) { return parse_tm(read_source(data_path("tms/" + name))); }
KripkeModel load_model(const std::string& name) { return parse_model(read_source(data_path("models/" + name))); }

std::vector<std::string> periodic_tilesets()
{
    return {"one_tile.json", "checkerboard.json", "stripes.json", "cycle3.json", "blocks.json"};
}

std::vector<std::string> non_tiling_tilesets() { return {"no_h.json", "no_v.json", "dying_chain.json"}; }

std::vector<std::string> tm_corpus()
{
    return {"looping.json", "halting.json", "three_steps.json", "counter.json", "coin.json"};
}

Prop Gen::prop(int depth, const Vocabulary& v)
{
    if (depth <= 1) {
        switch (uniform(0, 3)) {
        case 0:
            return top();
        case 1:
            return bottom();
        default:
            return atom(pick(v.props));
        }
    }
    const int d = depth - 1;
    switch (uniform(0, 10)) {
    case 0:
        return atom(pick(v.props));
    case 1:
        return neg(prop(d, v));
    case 2:
        return conj(prop(d, v), prop(d, v));
    case 3:
        return disj(prop(d, v), prop(d, v));
    case 4:
        return implies(prop(d, v), prop(d, v));
    case 5:
    case 6: {
        Prog p = (v.eliminable_stars && coin()) ? star(prog(d, v)) : prog(d, v);
        return uniform(0, 1) ? diamond(p, prop(d, v)) : box(p, prop(d, v));
    }
    case 7:
        return fix(prog(d, v));
    case 8:
        return big_fix(prog(d, v));
    case 9:
        return tie(prog(d, v), prog(d, v));
    default:
        return neg(prop(d, v));
    }
}

Prog Gen::prog(int depth, const Vocabulary& v)
{
    if (depth <= 1)
        return uniform(0, 4) ? pdl::prog(pick(v.progs)) : skip();
    const int d = depth - 1;
    const int top_case = v.full ? 10 : 5;
    switch (uniform(0, top_case)) {
    case 0:
        return pdl::prog(pick(v.progs));
    case 1:
        return test(prop(d, v));
    case 2:
        return seq(prog(d, v), prog(d, v));
    case 3:
        return if_then_else(prop(d, v), prog(d, v), prog(d, v));
    case 4:
        return while_do(prop(d, v), prog(d, v));
    case 5:
        return skip();
    case 6:
        return choice(prog(d, v), prog(d, v));
    case 7:
        return inter(prog(d, v), prog(d, v));
    case 8:
        return diff(prog(d, v), prog(d, v));
    default:
        return v.eliminable_stars ? seq(prog(d, v), prog(d, v)) : star(prog(d, v));
    }
}

KripkeModel small_model(Gen& g, int states, const std::vector<std::string>& progs,
                        const std::vector<std::string>& props, bool deterministic)
{
    KripkeModel m;
    m.deterministic = deterministic;
    for (int s = 0; s < states; ++s)
        m.states.push_back("w" + std::to_string(s));
    for (const auto& p : progs) {
        auto& pairs = m.programs[p];
        for (int a = 0; a < states; ++a) {
            if (deterministic) {
                if (g.coin(0.7))
                    pairs.emplace_back(m.states[a], m.states[g.uniform(0, states - 1)]);
                continue;
            }
            for (int b = 0; b < states; ++b)
                if (g.coin(0.4))
                    pairs.emplace_back(m.states[a], m.states[b]);
        }
    }
    for (const auto& a : props) {
        auto& holds = m.valuation[a];
        for (int s = 0; s < states; ++s)
            if (g.coin())
                holds.push_back(m.states[s]);
    }
    return m;
}

} // namespace testing
