#include "pdl/witness.hpp"

#include "pdl/error.hpp"
#include "pdl/surface.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace pdl {

std::string torus_state(int i, int j) { return "t" + std::to_string(i) + "_" + std::to_string(j); }

KripkeModel torus_model(const TileSet& ts, const Tiling& t)
{
    if (t.shape.kind != Shape::Kind::Torus)
        throw InvalidTiling("torus model needs a torus tiling");
    if (!is_valid(ts, t))
        throw InvalidTiling("tiling violates the adjacency relations");
    const int n = t.shape.cols;
    const int m = t.shape.rows;

    KripkeModel model;
    model.deterministic = true;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            model.states.push_back(torus_state(i, j));
    auto& east = model.programs["E"];
    auto& west = model.programs["W"];
    auto& north = model.programs["N"];
    auto& south = model.programs["S"];
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
            const std::string here = torus_state(i, j);
            east.emplace_back(here, torus_state((i + 1) % n, j));
            west.emplace_back(here, torus_state((i + n - 1) % n, j));
            north.emplace_back(here, torus_state(i, (j + 1) % m));
            south.emplace_back(here, torus_state(i, (j + m - 1) % m));
        }
    }
    for (const auto& tile : ts.tiles)
        model.valuation[tile];
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            model.valuation[t.at(i, j)].push_back(torus_state(i, j));
    return model;
}

namespace {

// One digit per program relation and per atom; relations are encoded either
// as a bitmask over all pairs or, for partial functions, as one successor
// choice per state (s meaning none).
class ModelOdometer {
public:
    ModelOdometer(std::size_t states, const AtomicNames& names, bool deterministic)
        : n_(states), deterministic_(deterministic), progs_(names.progs.begin(), names.progs.end()),
          props_(names.props.begin(), names.props.end())
    {
        const std::size_t prog_digits = deterministic ? n_ : 1;
        digits_.assign(progs_.size() * prog_digits + props_.size(), 0);
    }

    Frame frame() const
    {
        std::map<std::string, Relation> programs;
        std::size_t d = 0;
        for (const auto& name : progs_) {
            Relation r(n_);
            if (deterministic_) {
                for (std::size_t a = 0; a < n_; ++a, ++d)
                    if (digits_[d] < n_)
                        r.insert(a, digits_[d]);
            } else {
                const std::uint64_t mask = digits_[d++];
                for (std::size_t bit = 0; bit < n_ * n_; ++bit)
                    if (mask >> bit & 1u)
                        r.insert(bit / n_, bit % n_);
            }
            programs.emplace(name, std::move(r));
        }
        std::map<std::string, StateSet> valuation;
        for (const auto& name : props_) {
            StateSet s(n_, digits_[d++]);
            valuation.emplace(name, std::move(s));
        }
        return Frame(n_, std::move(programs), std::move(valuation));
    }

    bool next()
    {
        for (std::size_t d = 0; d < digits_.size(); ++d) {
            if (++digits_[d] < radix(d))
                return true;
            digits_[d] = 0;
        }
        return false;
    }

private:
    std::uint64_t radix(std::size_t d) const
    {
        const std::size_t prog_digits = deterministic_ ? n_ * progs_.size() : progs_.size();
        if (d < prog_digits)
            return deterministic_ ? n_ + 1 : std::uint64_t{1} << (n_ * n_);
        return std::uint64_t{1} << n_;
    }

    std::size_t n_;
    bool deterministic_;
    std::vector<std::string> progs_;
    std::vector<std::string> props_;
    std::vector<std::uint64_t> digits_;
};

} // namespace

BoundedSatResult bounded_sat(const Prop& f, const BoundedSatOptions& options)
{
    if (options.max_states < 1)
        throw InvariantError("bounded search needs at least one state");
    if (!options.deterministic && options.max_states > 7)
        throw InvariantError("nondeterministic bounded search is limited to 7 states");
    const AtomicNames names = atomic_names(f);
    BoundedSatResult result;
    for (std::size_t n = 1; n <= options.max_states; ++n) {
        ModelOdometer odometer(n, names, options.deterministic);
        do {
            if (options.budget != 0 && result.nodes >= options.budget) {
                std::ostringstream progress;
                progress << "searched all models up to " << result.searched_up_to << " states, partway through "
                         << n;
                throw BudgetExceeded(result.nodes, progress.str());
            }
            ++result.nodes;
            const Frame frame = odometer.frame();
            if (frame.truth_set(f).test(0)) {
                std::vector<std::string> states;
                for (std::size_t i = 0; i < n; ++i)
                    states.push_back("s" + std::to_string(i));
                result.model = frame.to_model(states, options.deterministic);
                return result;
            }
        } while (odometer.next());
        result.searched_up_to = n;
    }
    return result;
}

TorusSatResult torus_sat(const TileSet& ts, const TorusSatOptions& options)
{
    if (options.max_n < 1 || options.max_m < 1)
        throw InvariantError("torus bounds must be at least 1");
    validate_tileset(ts);
    const ReductionOutput reduction = reduce(ts, options.encoding, Form::Star);
    const bool full = options.target == TorusTarget::Gamma;
    const Prop& formula = full ? reduction.gamma : reduction.gamma_T;

    std::vector<std::tuple<int, int, int>> sizes;
    for (int n = 1; n <= options.max_n; ++n)
        for (int m = 1; m <= options.max_m; ++m)
            sizes.emplace_back(n * m, n, m);
    std::sort(sizes.begin(), sizes.end());

    TorusSatResult result;
    result.max_n = options.max_n;
    result.max_m = options.max_m;
    for (const auto& [area, n, m] : sizes) {
        SearchLimits limits;
        if (options.budget != 0) {
            if (result.nodes >= options.budget)
                throw BudgetExceeded(result.nodes, "torus search stopped before " + std::to_string(n) + "x" +
                                                       std::to_string(m));
            limits.max_nodes = options.budget - result.nodes;
        }
        std::optional<std::string> origin;
        if (full)
            origin = ts.start;
        const SearchStats stats = for_each_tiling(
            ts, Shape::torus(n, m), origin,
            [&](const Tiling& t) {
                if (full && diagonal_neon_states(ts, t).empty())
                    return true;
                KripkeModel model = torus_model(ts, t);
                const StateSet sat = truth_set(model, formula);
                const bool ok = full ? sat.test(0) : sat.all();
                if (ok)
                    result.witness = TorusWitness{t, std::move(model), formula, sat};
                // gamma_T holds on every valid torus tiling, so one is enough.
                return !ok && full;
            },
            limits);
        result.nodes += stats.nodes;
        if (result.witness)
            return result;
    }
    return result;
}

nlohmann::json witness_bundle(const TileSet& ts, const TorusWitness& w)
{
    return {{"tileset", to_json(ts)},
            {"tiling", to_json(w.tiling)},
            {"model", to_json(w.model)},
            {"formula", print_prop(w.formula)},
            {"satisfying_states", state_names(w.model, w.satisfying)}};
}

} // namespace pdl
