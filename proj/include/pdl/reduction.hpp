#pragma once

// Tile sets to grid-forcing formulas over the programs N, E, S, W.
//
// Every tile T contributes one atom named T ("T is placed here"). The grid is
// built from squares, either with fix over the four directions or with the
// tie (N;E) ~ (E;N) over N and E only.

#include "pdl/syntax.hpp"
#include "pdl/tiling.hpp"

namespace pdl {

enum class Encoding { Fix, Tie };
enum class Form { Star, While };

const char* to_string(Encoding e);
const char* to_string(Form f);

Prog north();
Prog east();
Prog south();
Prog west();

/// Fix: the clockwise square through N;E;S;W conjoined with the anticlockwise
/// one through E;N;W;S, ten fix conjuncts in all. Tie: (N;E) ~ (E;N).
Prop square_prop(Encoding encoding);

/// [N*][E*]square
Prop rho1(Encoding encoding, Form form);

/// [N*][E*](exactly one tile & each tile constrains its E and N neighbours)
Prop rho2(const TileSet& ts, Form form);

/// [(N;E)*]<(N;E)*>neon
Prop rho3(const TileSet& ts, Form form);

Prop tile_atom(const std::string& tile);
/// Exactly one tile atom holds.
Prop exactly_one_tile(const TileSet& ts);
/// Disjunction of the tiles that may follow `tile` horizontally (or
/// vertically); false if there are none.
Prop horizontal_successors(const TileSet& ts, const std::string& tile);
Prop vertical_successors(const TileSet& ts, const std::string& tile);
Prop neon_prop(const TileSet& ts);

struct ReductionOutput {
    Prop square;
    Prop rho1;
    Prop rho2;
    Prop rho3;
    /// start & rho1 & rho2 & rho3
    Prop gamma;
    /// rho1 & rho2
    Prop gamma_T;
    Encoding encoding = Encoding::Fix;
    Form form = Form::Star;
};

ReductionOutput reduce(const TileSet& ts, Encoding encoding, Form form);

} // namespace pdl
