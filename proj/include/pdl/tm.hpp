#pragma once

// Nondeterministic single-tape Turing machines, a direct simulator, and the
// compilation of a machine into a Wang tile set whose rectangle tilings
// (with the start tile at the origin) are exactly its runs, one row per step.

#include "pdl/tiling.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdl {

enum class Move { Left, Right };

struct Transition {
    std::string from;
    std::string read;
    std::string write;
    Move move = Move::Right;
    std::string to;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// One-way infinite tape, initially blank, head on cell 0. A left move on
/// cell 0 leaves the head on cell 0.
struct TuringMachine {
    std::vector<std::string> states;
    std::string initial;
    std::vector<std::string> alphabet;
    std::string blank;
    std::vector<Transition> transitions;

    friend bool operator==(const TuringMachine&, const TuringMachine&) = default;
};

/// Throws InvalidTM.
void validate_tm(const TuringMachine& tm);

struct Configuration {
    /// Finite prefix of the tape; every later cell is blank.
    std::vector<std::string> tape;
    std::size_t head = 0;
    std::string state;

    /// Drops trailing blanks beyond the head cell.
    Configuration normalized(const std::string& blank) const;
    friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration initial_configuration(const TuringMachine& tm);

/// Transitions applicable in `c`, in lexicographic order of (write, move, to).
std::vector<Transition> applicable(const TuringMachine& tm, const Configuration& c);
/// The successor configuration, normalized.
Configuration step(const TuringMachine& tm, const Configuration& c, const Transition& t);

using Run = std::vector<Configuration>;

enum class Policy { FirstTransition, AllBranches };

/// FirstTransition: one run following the first applicable transition, at
/// most `steps` steps, shorter if the machine halts. AllBranches: every
/// maximal run of at most `steps` steps, in depth-first order.
std::vector<Run> simulate(const TuringMachine& tm, std::size_t steps, Policy policy);

/// True iff some run performs `steps` steps without halting.
bool has_run_of_length(const TuringMachine& tm, std::size_t steps);

enum class TileKind { Initial, Merge, Action, Alphabet };

const char* to_string(TileKind k);

struct WangTile {
    std::string name;
    std::string left;
    std::string right;
    std::string bottom;
    std::string top;
    TileKind kind = TileKind::Alphabet;
    bool neon = false;
    /// Index into the machine's transitions, for action tiles.
    std::optional<std::size_t> transition;
};

/// What the top edge of a tile says about the tape cell in its column.
struct CellCode {
    std::string symbol;
    std::optional<std::string> state;

    friend bool operator==(const CellCode&, const CellCode&) = default;
};

/// Decoding tables: the sidecar document of a compiled tile set.
struct TmTileMeta {
    std::map<std::string, TileKind> kinds;
    std::map<std::string, CellCode> decode;
    std::map<std::string, std::size_t> transitions;
    std::string blank;

    friend bool operator==(const TmTileMeta&, const TmTileMeta&) = default;
};

struct CompiledTM {
    TileSet tiles;
    TmTileMeta meta;
    std::vector<WangTile> wang;
};

/// Throws InvalidTM.
CompiledTM compile_tm(const TuringMachine& tm);

/// Configuration encoded by the top edges of each row. Throws DecodeError if
/// a row carries zero or several head cells, UnknownTile for tiles missing
/// from the tables.
std::vector<Configuration> decode_rows(const TmTileMeta& meta, const Tiling& t);

} // namespace pdl
