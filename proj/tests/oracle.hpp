#pragma once
// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed: relations are sets of pairs, closure is
// boolean matrix squaring, tilings are enumerated exhaustively.

#include "pdl/semantics.hpp"
#include "pdl/syntax.hpp"
#include "pdl/tiling.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pairs = std::set<std::pair<int, int>>;
using States = std::set<int>;

struct Model {
    int n = 0;
    std::map<std::string, Pairs> progs;
    std::map<std::string, States> props;
};

Model from_kripke(const pdl::KripkeModel& m);

Pairs denote(const Model& m, const pdl::Prog& p);
States truth(const Model& m, const pdl::Prop& f);

/// Reflexive-transitive closure by repeated squaring of I + R.
Pairs matrix_closure(int n, const Pairs& r);

Pairs to_pairs(const pdl::Relation& r);
States to_states(const pdl::StateSet& s);

/// Checks every adjacency of the shape directly.
bool tiling_valid(const pdl::TileSet& ts, const pdl::Tiling& t);

/// Tries all assignments; only for very small shapes.
std::optional<pdl::Tiling> brute_force_tiling(const pdl::TileSet& ts, pdl::Shape shape,
                                              const std::optional<std::string>& origin);

/// The (N;E)-orbit of (0,0), walked step by step until it closes.
std::vector<std::pair<int, int>> orbit(int n, int m);

} // namespace oracle
