#include "pdl/tm.hpp"

#include "pdl/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace pdl {

void validate_tm(const TuringMachine& tm)
{
    auto unique = [](const std::vector<std::string>& xs, const char* what) {
        std::set<std::string> seen;
        for (const auto& x : xs)
            if (!seen.insert(x).second)
                throw InvalidTM(std::string(what) + " '" + x + "' declared twice");
        if (xs.empty())
            throw InvalidTM(std::string("no ") + what + " declared");
        return seen;
    };
    const auto states = unique(tm.states, "state");
    const auto symbols = unique(tm.alphabet, "symbol");
    if (!states.count(tm.initial))
        throw InvalidTM("initial state '" + tm.initial + "' is not declared");
    if (!symbols.count(tm.blank))
        throw InvalidTM("blank symbol '" + tm.blank + "' is not in the alphabet");
    for (std::size_t i = 0; i < tm.transitions.size(); ++i) {
        const auto& t = tm.transitions[i];
        const std::string where = " in transition " + std::to_string(i);
        if (!states.count(t.from) || !states.count(t.to))
            throw InvalidTM("undeclared state" + where);
        if (!symbols.count(t.read) || !symbols.count(t.write))
            throw InvalidTM("undeclared symbol" + where);
    }
}

Configuration Configuration::normalized(const std::string& blank) const
{
    Configuration c = *this;
    while (c.tape.size() > c.head + 1 && c.tape.back() == blank)
        c.tape.pop_back();
    return c;
}

Configuration initial_configuration(const TuringMachine& tm) { return {{tm.blank}, 0, tm.initial}; }

std::vector<Transition> applicable(const TuringMachine& tm, const Configuration& c)
{
    const std::string& read = c.head < c.tape.size() ? c.tape[c.head] : tm.blank;
    std::vector<Transition> out;
    for (const auto& t : tm.transitions)
        if (t.from == c.state && t.read == read)
            out.push_back(t);
    std::stable_sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) {
        return std::tie(a.write, a.move, a.to) < std::tie(b.write, b.move, b.to);
    });
    return out;
}

Configuration step(const TuringMachine& tm, const Configuration& c, const Transition& t)
{
    Configuration next = c;
    if (next.tape.size() <= next.head)
        next.tape.resize(next.head + 1, tm.blank);
    next.tape[next.head] = t.write;
    if (t.move == Move::Right) {
        ++next.head;
        if (next.tape.size() <= next.head)
            next.tape.push_back(tm.blank);
    } else if (next.head > 0) {
        --next.head;
    }
    next.state = t.to;
    return next.normalized(tm.blank);
}

namespace {

void explore(const TuringMachine& tm, Run& run, std::size_t steps, std::vector<Run>& out)
{
    const auto options = run.size() > steps ? std::vector<Transition>{} : applicable(tm, run.back());
    if (run.size() == steps + 1 || options.empty()) {
        out.push_back(run);
        return;
    }
    for (const auto& t : options) {
        run.push_back(step(tm, run.back(), t));
        explore(tm, run, steps, out);
        run.pop_back();
    }
}

bool reaches(const TuringMachine& tm, const Configuration& c, std::size_t steps)
{
    if (steps == 0)
        return true;
    for (const auto& t : applicable(tm, c))
        if (reaches(tm, step(tm, c, t), steps - 1))
            return true;
    return false;
}

} // namespace

std::vector<Run> simulate(const TuringMachine& tm, std::size_t steps, Policy policy)
{
    validate_tm(tm);
    if (policy == Policy::FirstTransition) {
        Run run{initial_configuration(tm)};
        for (std::size_t s = 0; s < steps; ++s) {
            const auto options = applicable(tm, run.back());
            if (options.empty())
                break;
            run.push_back(step(tm, run.back(), options.front()));
        }
        return {run};
    }
    std::vector<Run> out;
    Run run{initial_configuration(tm)};
    explore(tm, run, steps, out);
    return out;
}

bool has_run_of_length(const TuringMachine& tm, std::size_t steps)
{
    validate_tm(tm);
    return reaches(tm, initial_configuration(tm), steps);
}

const char* to_string(TileKind k)
{
    switch (k) {
    case TileKind::Initial: return "initial";
    case TileKind::Merge: return "merge";
    case TileKind::Action: return "action";
    case TileKind::Alphabet: return "alphabet";
    }
    return "?";
}

namespace {

// Edge colours.
//   vertical:   s:k       symbol k
//               e:k       symbol k in column 0
//               h:q:k     head in state q over symbol k
//               eh:q:k    the same in column 0
//               init      bottom of the initial row
//   horizontal: -         nothing crosses
//               R:q / L:q head entering state q, moving right / left
//               row0      the initial row
//               edge      west side of the start tile
// Horizontal colours of non-initial tiles carry a neon tag, |n or |p, so a
// neon tile only ever meets neon tiles across a vertical edge.
class TileBuilder {
public:
    explicit TileBuilder(const TuringMachine& tm) : tm_(tm)
    {
        for (std::size_t i = 0; i < tm.states.size(); ++i)
            state_index_[tm.states[i]] = i;
        for (std::size_t i = 0; i < tm.alphabet.size(); ++i)
            symbol_index_[tm.alphabet[i]] = i;
    }

    CompiledTM build()
    {
        const std::string q0 = q(tm_.initial);
        const std::string blank = k(tm_.blank);

        add({"I0", "edge", "row0", "init", "eh:" + q0 + ":" + blank, TileKind::Initial, false, {}});
        add({"I1", "row0", "row0", "init", "s:" + blank, TileKind::Initial, false, {}});

        for (bool neon : {false, true}) {
            const std::string tag = neon_tag(neon);
            const std::string suffix = neon ? "n" : "";
            for (std::size_t s = 0; s < tm_.alphabet.size(); ++s) {
                const std::string ks = std::to_string(s);
                add({"A" + ks + suffix, "-" + tag, "-" + tag, "s:" + ks, "s:" + ks, TileKind::Alphabet, neon, {}});
                add({"A" + ks + "e" + suffix, "-" + tag, "-" + tag, "e:" + ks, "e:" + ks, TileKind::Alphabet,
                     neon, {}});
            }
        }

        for (std::size_t i = 0; i < tm_.transitions.size(); ++i) {
            const Transition& t = tm_.transitions[i];
            const bool neon = t.to == tm_.initial;
            const std::string tag = neon_tag(neon);
            const std::string head = q(t.from) + ":" + k(t.read);
            const std::string name = "T" + std::to_string(i);
            if (t.move == Move::Right) {
                const std::string signal = "R:" + q(t.to) + tag;
                add({name, "-" + tag, signal, "h:" + head, "s:" + k(t.write), TileKind::Action, neon, i});
                add({name + "e", "-" + tag, signal, "eh:" + head, "e:" + k(t.write), TileKind::Action, neon, i});
            } else {
                const std::string signal = "L:" + q(t.to) + tag;
                add({name, signal, "-" + tag, "h:" + head, "s:" + k(t.write), TileKind::Action, neon, i});
                // Column 0: the head stays put.
                add({name + "e", "-" + tag, "-" + tag, "eh:" + head, "eh:" + q(t.to) + ":" + k(t.write),
                     TileKind::Action, neon, i});
            }
        }

        std::set<std::string> targets;
        for (const auto& t : tm_.transitions)
            targets.insert(t.to);
        for (bool neon : {false, true}) {
            const std::string tag = neon_tag(neon);
            const std::string suffix = neon ? "n" : "";
            for (const auto& state : tm_.states) {
                if (!targets.count(state))
                    continue;
                const std::string qs = q(state);
                for (std::size_t s = 0; s < tm_.alphabet.size(); ++s) {
                    const std::string ks = std::to_string(s);
                    const std::string stem = "_q" + qs + "_s" + ks;
                    const std::string top = qs + ":" + ks;
                    add({"MR" + stem + suffix, "R:" + qs + tag, "-" + tag, "s:" + ks, "h:" + top, TileKind::Merge,
                         neon, {}});
                    add({"ML" + stem + suffix, "-" + tag, "L:" + qs + tag, "s:" + ks, "h:" + top, TileKind::Merge,
                         neon, {}});
                    add({"ML" + stem + "e" + suffix, "-" + tag, "L:" + qs + tag, "e:" + ks, "eh:" + top,
                         TileKind::Merge, neon, {}});
                }
            }
        }
        return finish();
    }

private:
    static std::string neon_tag(bool neon) { return neon ? "|n" : "|p"; }
    std::string q(const std::string& state) const { return std::to_string(state_index_.at(state)); }
    std::string k(const std::string& symbol) const { return std::to_string(symbol_index_.at(symbol)); }

    void add(WangTile t) { wang_.push_back(std::move(t)); }

    CellCode decode_top(const std::string& top) const
    {
        // s:k, e:k, h:q:k, eh:q:k
        const auto first = top.find(':');
        const auto last = top.rfind(':');
        const std::string tag = top.substr(0, first);
        CellCode code;
        code.symbol = tm_.alphabet.at(std::stoul(top.substr(last + 1)));
        if (tag == "h" || tag == "eh")
            code.state = tm_.states.at(std::stoul(top.substr(first + 1, last - first - 1)));
        return code;
    }

    CompiledTM finish()
    {
        CompiledTM out;
        out.wang = wang_;
        out.meta.blank = tm_.blank;
        out.tiles.start = "I0";
        for (const auto& t : wang_) {
            out.tiles.tiles.push_back(t.name);
            if (t.neon)
                out.tiles.neon.push_back(t.name);
            out.meta.kinds[t.name] = t.kind;
            out.meta.decode[t.name] = decode_top(t.top);
            if (t.transition)
                out.meta.transitions[t.name] = *t.transition;
        }
        for (const auto& a : wang_) {
            for (const auto& b : wang_) {
                if (a.right == b.left)
                    out.tiles.h.emplace_back(a.name, b.name);
                if (a.top == b.bottom)
                    out.tiles.v.emplace_back(a.name, b.name);
            }
        }
        return out;
    }

    const TuringMachine& tm_;
    std::map<std::string, std::size_t> state_index_;
    std::map<std::string, std::size_t> symbol_index_;
    std::vector<WangTile> wang_;
};

} // namespace

CompiledTM compile_tm(const TuringMachine& tm)
{
    validate_tm(tm);
    return TileBuilder(tm).build();
}

std::vector<Configuration> decode_rows(const TmTileMeta& meta, const Tiling& t)
{
    std::vector<Configuration> out;
    for (int j = 0; j < t.shape.rows; ++j) {
        Configuration c;
        std::size_t heads = 0;
        for (int i = 0; i < t.shape.cols; ++i) {
            auto it = meta.decode.find(t.at(i, j));
            if (it == meta.decode.end())
                throw UnknownTile("tile '" + t.at(i, j) + "' has no decoding entry");
            c.tape.push_back(it->second.symbol);
            if (it->second.state) {
                ++heads;
                c.head = static_cast<std::size_t>(i);
                c.state = *it->second.state;
            }
        }
        if (heads != 1)
            throw DecodeError("row " + std::to_string(j) + " carries " + std::to_string(heads) + " head cells");
        out.push_back(c.normalized(meta.blank));
    }
    return out;
}

} // namespace pdl
