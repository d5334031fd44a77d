#include "pdl/tiling.hpp"

#include "pdl/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pdl {

void validate_tileset(const TileSet& ts)
{
    if (ts.tiles.empty())
        throw InvariantError("tile set has no tiles");
    std::set<std::string> declared;
    for (const auto& t : ts.tiles)
        if (!declared.insert(t).second)
            throw InvariantError("tile '" + t + "' declared twice");
    auto check = [&](const std::string& t, const std::string& where) {
        if (!declared.count(t))
            throw InvariantError("undeclared tile '" + t + "' in " + where);
    };
    for (const auto& [a, b] : ts.h) {
        check(a, "h");
        check(b, "h");
    }
    for (const auto& [a, b] : ts.v) {
        check(a, "v");
        check(b, "v");
    }
    for (const auto& t : ts.neon)
        check(t, "neon");
    check(ts.start, "start");
}

TileIndex::TileIndex(const TileSet& ts) : names_(ts.tiles)
{
    validate_tileset(ts);
    const std::size_t k = size();
    h_.assign(k * k, false);
    v_.assign(k * k, false);
    neon_.assign(k, false);
    for (const auto& [a, b] : ts.h)
        h_[index(a) * k + index(b)] = true;
    for (const auto& [a, b] : ts.v)
        v_[index(a) * k + index(b)] = true;
    for (const auto& t : ts.neon)
        neon_[index(t)] = true;
    start_ = index(ts.start);
}

std::optional<std::size_t> TileIndex::find(const std::string& name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t TileIndex::index(const std::string& name) const
{
    if (auto i = find(name))
        return *i;
    throw UnknownTile("unknown tile '" + name + "'");
}

namespace {

void check_shape(Shape s)
{
    if (s.cols < 1 || s.rows < 1)
        throw InvariantError("shape dimensions must be at least 1");
}

} // namespace

TilingCheck verify_tiling(const TileSet& ts, const Tiling& t)
{
    check_shape(t.shape);
    if (t.cells.size() != t.shape.cells())
        throw InvariantError("tiling does not cover its shape");
    const TileIndex index(ts);
    std::vector<std::size_t> cell(t.cells.size());
    for (std::size_t c = 0; c < cell.size(); ++c)
        cell[c] = index.index(t.cells[c]);

    const int w = t.shape.cols;
    const int hgt = t.shape.rows;
    const bool torus = t.shape.kind == Shape::Kind::Torus;
    auto at = [&](int i, int j) { return cell[static_cast<std::size_t>(j * w + i)]; };
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < hgt; ++j) {
            if (i + 1 < w || torus) {
                if (!index.h(at(i, j), at((i + 1) % w, j)))
                    return Violation{i, j, Violation::Direction::Horizontal};
            }
            if (j + 1 < hgt || torus) {
                if (!index.v(at(i, j), at(i, (j + 1) % hgt)))
                    return Violation{i, j, Violation::Direction::Vertical};
            }
        }
    }
    return Valid{};
}

bool is_valid(const TileSet& ts, const Tiling& t) { return std::holds_alternative<Valid>(verify_tiling(ts, t)); }

namespace {

struct StopSearch {};

class Tiler {
public:
    Tiler(const TileSet& ts, Shape shape, std::optional<std::size_t> origin,
          const std::function<bool(const Tiling&)>& visit, SearchLimits limits)
        : index_(ts),
          shape_(shape),
          torus_(shape.kind == Shape::Kind::Torus),
          origin_(origin),
          visit_(visit),
          limits_(limits),
          cells_(shape.cells())
    {
    }

    SearchStats run()
    {
        try {
            place(0);
        } catch (const StopSearch&) {
        }
        return stats_;
    }

private:
    bool fits(std::size_t t, int i, int j) const
    {
        const int w = shape_.cols;
        const int hgt = shape_.rows;
        auto at = [&](int x, int y) { return cells_[static_cast<std::size_t>(y * w + x)]; };
        if (i > 0 && !index_.h(at(i - 1, j), t))
            return false;
        if (j > 0 && !index_.v(at(i, j - 1), t))
            return false;
        if (torus_) {
            // Seams: the east neighbour of the last column is column 0 of the
            // same row, the north neighbour of the top row is row 0.
            if (i == w - 1 && !index_.h(t, i == 0 ? t : at(0, j)))
                return false;
            if (j == hgt - 1 && !index_.v(t, j == 0 ? t : at(i, 0)))
                return false;
        }
        return true;
    }

    void place(std::size_t pos)
    {
        if (pos == cells_.size()) {
            ++stats_.solutions;
            Tiling t(shape_);
            for (std::size_t c = 0; c < cells_.size(); ++c)
                t.cells[c] = index_.name(cells_[c]);
            if (!visit_(t))
                throw StopSearch{};
            return;
        }
        const int i = static_cast<int>(pos % static_cast<std::size_t>(shape_.cols));
        const int j = static_cast<int>(pos / static_cast<std::size_t>(shape_.cols));
        for (std::size_t t = 0; t < index_.size(); ++t) {
            if (pos == 0 && origin_ && t != *origin_)
                continue;
            if (!fits(t, i, j))
                continue;
            if (limits_.max_nodes != 0 && stats_.nodes >= limits_.max_nodes) {
                std::ostringstream progress;
                progress << "tiling " << shape_.cols << 'x' << shape_.rows << ", deepest position " << pos;
                throw BudgetExceeded(stats_.nodes, progress.str());
            }
            ++stats_.nodes;
            cells_[pos] = t;
            place(pos + 1);
        }
    }

    TileIndex index_;
    Shape shape_;
    bool torus_;
    std::optional<std::size_t> origin_;
    const std::function<bool(const Tiling&)>& visit_;
    SearchLimits limits_;
    std::vector<std::size_t> cells_;
    SearchStats stats_;
};

} // namespace

SearchStats for_each_tiling(const TileSet& ts, Shape shape, const std::optional<std::string>& origin,
                            const std::function<bool(const Tiling&)>& visit, SearchLimits limits)
{
    check_shape(shape);
    std::optional<std::size_t> origin_index;
    if (origin)
        origin_index = TileIndex(ts).index(*origin);
    return Tiler(ts, shape, origin_index, visit, limits).run();
}

std::optional<Tiling> search_tiling(const TileSet& ts, Shape shape, const std::optional<std::string>& origin,
                                    SearchStats* stats, SearchLimits limits)
{
    std::optional<Tiling> found;
    const SearchStats s = for_each_tiling(
        ts, shape, origin,
        [&](const Tiling& t) {
            found = t;
            return false;
        },
        limits);
    if (stats)
        *stats = s;
    return found;
}

std::vector<std::pair<int, int>> diagonal_neon_states(const TileSet& ts, const Tiling& t)
{
    if (t.shape.kind != Shape::Kind::Torus)
        throw InvariantError("diagonal orbit is defined on torus tilings only");
    const TileIndex index(ts);
    const int n = t.shape.cols;
    const int m = t.shape.rows;
    const int period = std::lcm(n, m);
    std::vector<std::pair<int, int>> out;
    for (int k = 0; k < period; ++k) {
        const int i = k % n;
        const int j = k % m;
        if (index.neon(index.index(t.at(i, j))))
            out.emplace_back(i, j);
    }
    return out;
}

Tiling unroll(const Tiling& torus, int w, int h)
{
    Tiling out(Shape::rect(w, h));
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i)
            out.at(i, j) = torus.at(i % torus.shape.cols, j % torus.shape.rows);
    return out;
}

std::string render_grid(const Tiling& t)
{
    std::ostringstream os;
    for (int j = t.shape.rows - 1; j >= 0; --j) {
        for (int i = 0; i < t.shape.cols; ++i)
            os << (i ? " " : "") << t.at(i, j);
        os << '\n';
    }
    return os.str();
}

} // namespace pdl
