#pragma once

// Tile sets with horizontal and vertical adjacency, finite rectangle and
// torus tilings, and a backtracking tiler.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pdl {

struct TileSet {
    std::vector<std::string> tiles;
    /// (left, right): left may sit immediately west of right.
    std::vector<std::pair<std::string, std::string>> h;
    /// (below, above): below may sit immediately south of above.
    std::vector<std::pair<std::string, std::string>> v;
    std::vector<std::string> neon;
    std::string start;

    friend bool operator==(const TileSet&, const TileSet&) = default;
};

/// Throws InvariantError on duplicate tiles or undeclared references.
void validate_tileset(const TileSet& ts);

/// Index-based view of a validated tile set.
class TileIndex {
public:
    explicit TileIndex(const TileSet& ts);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t t) const { return names_[t]; }
    /// Throws UnknownTile.
    std::size_t index(const std::string& name) const;
    std::optional<std::size_t> find(const std::string& name) const;
    bool h(std::size_t left, std::size_t right) const { return h_[left * size() + right]; }
    bool v(std::size_t below, std::size_t above) const { return v_[below * size() + above]; }
    bool neon(std::size_t t) const { return neon_[t]; }
    std::size_t start() const { return start_; }

private:
    std::vector<std::string> names_;
    std::vector<bool> h_;
    std::vector<bool> v_;
    std::vector<bool> neon_;
    std::size_t start_ = 0;
};

struct Shape {
    enum class Kind { Rect, Torus };
    Kind kind = Kind::Rect;
    int cols = 1;
    int rows = 1;

    static Shape rect(int w, int h) { return {Kind::Rect, w, h}; }
    static Shape torus(int n, int m) { return {Kind::Torus, n, m}; }
    std::size_t cells() const { return static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows); }

    friend bool operator==(const Shape&, const Shape&) = default;
};

/// Assignment of tile names to the positions (i, j) of a shape; i is the
/// column and j the row, both 0-based. Cells are stored row by row.
struct Tiling {
    Shape shape;
    std::vector<std::string> cells;

    Tiling() = default;
    explicit Tiling(Shape s) : shape(s), cells(s.cells()) {}

    const std::string& at(int i, int j) const { return cells[static_cast<std::size_t>(j * shape.cols + i)]; }
    std::string& at(int i, int j) { return cells[static_cast<std::size_t>(j * shape.cols + i)]; }

    friend bool operator==(const Tiling&, const Tiling&) = default;
};

struct Valid {};

struct Violation {
    enum class Direction { Horizontal, Vertical };
    int i;
    int j;
    Direction direction;
};

using TilingCheck = std::variant<Valid, Violation>;

/// Valid, or the violation at the lexicographically least (i, j); at one
/// position the horizontal edge is reported before the vertical one.
/// Throws UnknownTile.
TilingCheck verify_tiling(const TileSet& ts, const Tiling& t);
bool is_valid(const TileSet& ts, const Tiling& t);

struct SearchLimits {
    /// 0 means unlimited.
    std::size_t max_nodes = 0;
};

struct SearchStats {
    std::size_t nodes = 0;
    std::size_t solutions = 0;
};

/// Enumerates valid tilings in search order (tiles in declared order,
/// positions row by row) until `visit` returns false. Throws BudgetExceeded.
SearchStats for_each_tiling(const TileSet& ts, Shape shape, const std::optional<std::string>& origin,
                            const std::function<bool(const Tiling&)>& visit, SearchLimits limits = {});

/// First valid tiling in search order, or none if there is none.
std::optional<Tiling> search_tiling(const TileSet& ts, Shape shape,
                                    const std::optional<std::string>& origin = std::nullopt,
                                    SearchStats* stats = nullptr, SearchLimits limits = {});

/// Positions (k mod n, k mod m), k < lcm(n, m), that carry a neon tile: the
/// neon part of the orbit of (0, 0) under one step north then one east.
std::vector<std::pair<int, int>> diagonal_neon_states(const TileSet& ts, const Tiling& t);

/// Repeats a torus tiling periodically over a rectangle.
Tiling unroll(const Tiling& torus, int w, int h);

/// One line per row, top row first, cells separated by spaces.
std::string render_grid(const Tiling& t);

} // namespace pdl
