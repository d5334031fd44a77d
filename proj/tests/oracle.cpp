#include "oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>

namespace oracle {

using namespace pdl;

Model from_kripke(const KripkeModel& km)
{
    Model m;
    m.n = int(km.states.size());
    auto idx = [&](const std::string& s) {
        return int(std::find(km.states.begin(), km.states.end(), s) - km.states.begin());
    };
    for (const auto& [name, pairs] : km.programs)
        for (const auto& [a, b] : pairs)
            m.progs[name].insert({idx(a), idx(b)});
    for (const auto& [name, states] : km.valuation)
        for (const auto& s : states)
            m.props[name].insert(idx(s));
    return m;
}

namespace {

Pairs compose(const Pairs& r, const Pairs& s)
{
    Pairs out;
    for (const auto& [a, b] : r)
        for (const auto& [c, d] : s)
            if (b == c)
                out.insert({a, d});
    return out;
}

Pairs diag(const States& s)
{
    Pairs out;
    for (int a : s)
        out.insert({a, a});
    return out;
}

States all_states(int n)
{
    States s;
    for (int a = 0; a < n; ++a)
        s.insert(a);
    return s;
}

States successors(const Pairs& r, int a)
{
    States out;
    for (const auto& [x, y] : r)
        if (x == a)
            out.insert(y);
    return out;
}

} // namespace

Pairs matrix_closure(int n, const Pairs& r)
{
    Eigen::MatrixXi m = Eigen::MatrixXi::Identity(n, n);
    for (const auto& [a, b] : r)
        m(a, b) = 1;
    for (;;) {
        Eigen::MatrixXi sq = ((m * m).array() > 0).cast<int>();
        if (sq == m)
            break;
        m = sq;
    }
    Pairs out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (m(a, b))
                out.insert({a, b});
    return out;
}

Pairs denote(const Model& m, const Prog& p)
{
    switch (p.kind()) {
    case ProgKind::Atomic: {
        auto it = m.progs.find(p.name());
        return it == m.progs.end() ? Pairs{} : it->second;
    }
    case ProgKind::Skip:
        return diag(all_states(m.n));
    case ProgKind::Test:
        return diag(truth(m, p.prop(0)));
    case ProgKind::Seq:
        return compose(denote(m, p.prog(0)), denote(m, p.prog(1)));
    case ProgKind::Union: {
        Pairs a = denote(m, p.prog(0));
        Pairs b = denote(m, p.prog(1));
        a.insert(b.begin(), b.end());
        return a;
    }
    case ProgKind::Inter:
    case ProgKind::Diff: {
        const Pairs a = denote(m, p.prog(0));
        const Pairs b = denote(m, p.prog(1));
        Pairs out;
        for (const auto& x : a)
            if (b.count(x) == (p.kind() == ProgKind::Inter ? 1u : 0u))
                out.insert(x);
        return out;
    }
    case ProgKind::Star:
        return matrix_closure(m.n, denote(m, p.prog(0)));
    case ProgKind::IfThenElse: {
        const States yes = truth(m, p.prop(0));
        Pairs out;
        for (const auto& [a, b] : denote(m, p.prog(0)))
            if (yes.count(a))
                out.insert({a, b});
        for (const auto& [a, b] : denote(m, p.prog(1)))
            if (!yes.count(a))
                out.insert({a, b});
        return out;
    }
    case ProgKind::WhileDo: {
        // Unfold the loop: pairs reachable by k guarded iterations then exit.
        const States guard = truth(m, p.prop(0));
        Pairs body;
        for (const auto& [a, b] : denote(m, p.prog(0)))
            if (guard.count(a))
                body.insert({a, b});
        States exit;
        for (int a = 0; a < m.n; ++a)
            if (!guard.count(a))
                exit.insert(a);
        Pairs reach = diag(all_states(m.n));
        Pairs frontier = reach;
        for (int k = 0; k <= m.n * m.n; ++k) {
            frontier = compose(frontier, body);
            reach.insert(frontier.begin(), frontier.end());
        }
        return compose(reach, diag(exit));
    }
    }
    return {};
}

States truth(const Model& m, const Prop& f)
{
    const States all = all_states(m.n);
    auto filter = [&](auto pred) {
        States out;
        for (int a : all)
            if (pred(a))
                out.insert(a);
        return out;
    };
    switch (f.kind()) {
    case PropKind::True:
        return all;
    case PropKind::False:
        return {};
    case PropKind::Atom: {
        auto it = m.props.find(f.name());
        return it == m.props.end() ? States{} : it->second;
    }
    case PropKind::Not: {
        const States a = truth(m, f.prop(0));
        return filter([&](int s) { return !a.count(s); });
    }
    case PropKind::And:
    case PropKind::Or:
    case PropKind::Implies: {
        const States a = truth(m, f.prop(0));
        const States b = truth(m, f.prop(1));
        return filter([&](int s) {
            const bool x = a.count(s), y = b.count(s);
            return f.kind() == PropKind::And ? x && y : f.kind() == PropKind::Or ? x || y : !x || y;
        });
    }
    case PropKind::Diamond:
    case PropKind::Box: {
        const Pairs r = denote(m, f.prog(0));
        const States body = truth(m, f.prop(0));
        const bool is_box = f.kind() == PropKind::Box;
        return filter([&](int s) {
            const States succ = successors(r, s);
            if (is_box)
                return std::all_of(succ.begin(), succ.end(), [&](int t) { return body.count(t) > 0; });
            return std::any_of(succ.begin(), succ.end(), [&](int t) { return body.count(t) > 0; });
        });
    }
    case PropKind::FixP:
    case PropKind::BigFix: {
        const Pairs r = denote(m, f.prog(0));
        return filter([&](int s) {
            const States succ = successors(r, s);
            const bool only_self = succ.empty() || succ == States{s};
            return f.kind() == PropKind::BigFix ? only_self : only_self && !succ.empty();
        });
    }
    case PropKind::Tie: {
        const Pairs r = denote(m, f.prog(0));
        const Pairs q = denote(m, f.prog(1));
        return filter([&](int s) { return successors(r, s) == successors(q, s); });
    }
    }
    return {};
}

Pairs to_pairs(const Relation& r)
{
    Pairs out;
    for (const auto& [a, b] : r.pairs())
        out.insert({int(a), int(b)});
    return out;
}

States to_states(const StateSet& s)
{
    States out;
    for (std::size_t a = 0; a < s.size(); ++a)
        if (s.test(a))
            out.insert(int(a));
    return out;
}

namespace {

bool pair_in(const std::vector<std::pair<std::string, std::string>>& rel, const std::string& a,
             const std::string& b)
{
    return std::find(rel.begin(), rel.end(), std::make_pair(a, b)) != rel.end();
}

} // namespace

bool tiling_valid(const TileSet& ts, const Tiling& t)
{
    const int w = t.shape.cols, h = t.shape.rows;
    const bool torus = t.shape.kind == Shape::Kind::Torus;
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            if (i + 1 < w || torus)
                if (!pair_in(ts.h, t.at(i, j), t.at((i + 1) % w, j)))
                    return false;
            if (j + 1 < h || torus)
                if (!pair_in(ts.v, t.at(i, j), t.at(i, (j + 1) % h)))
                    return false;
        }
    return true;
}

std::optional<Tiling> brute_force_tiling(const TileSet& ts, Shape shape, const std::optional<std::string>& origin)
{
    const std::size_t cells = shape.cells();
    const std::size_t k = ts.tiles.size();
    std::vector<std::size_t> digits(cells, 0);
    Tiling t(shape);
    for (;;) {
        for (std::size_t c = 0; c < cells; ++c)
            t.cells[c] = ts.tiles[digits[c]];
        if ((!origin || t.cells[0] == *origin) && tiling_valid(ts, t))
            return t;
        std::size_t c = 0;
        while (c < cells && ++digits[c] == k)
            digits[c++] = 0;
        if (c == cells)
            return std::nullopt;
    }
}

std::vector<std::pair<int, int>> orbit(int n, int m)
{
    std::vector<std::pair<int, int>> out;
    int i = 0, j = 0;
    do {
        out.emplace_back(i, j);
        j = (j + 1) % m;
        i = (i + 1) % n;
    } while (i != 0 || j != 0);
    return out;
}

} // namespace oracle
