#pragma once

// Finite witness models: torus models built from periodic tilings, and
// exhaustive search for small satisfying models.

#include "pdl/reduction.hpp"
#include "pdl/semantics.hpp"
#include "pdl/tiling.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace pdl {

std::string torus_state(int i, int j);

/// States (i, j) in row order; E and N step east and north modulo the torus,
/// W and S are their inverses, and each tile atom holds where it is placed.
/// Throws InvalidTiling unless `t` is a valid torus tiling of `ts`.
KripkeModel torus_model(const TileSet& ts, const Tiling& t);

struct BoundedSatOptions {
    std::size_t max_states = 1;
    bool deterministic = false;
    /// Models examined before giving up; 0 means unlimited.
    std::size_t budget = 0;
};

struct BoundedSatResult {
    /// First satisfying model, satisfied at its first state s0.
    std::optional<KripkeModel> model;
    /// Largest size searched to completion.
    std::size_t searched_up_to = 0;
    std::size_t nodes = 0;
};

/// Enumerates every model on 1..max_states states over the atomic names of
/// `f`, smallest first, and returns the first in which s0 satisfies `f`.
/// Throws BudgetExceeded.
BoundedSatResult bounded_sat(const Prop& f, const BoundedSatOptions& options);

enum class TorusTarget { GammaT, Gamma };

struct TorusWitness {
    Tiling tiling;
    KripkeModel model;
    Prop formula;
    StateSet satisfying;
};

struct TorusSatResult {
    std::optional<TorusWitness> witness;
    std::size_t nodes = 0;
    int max_n = 0;
    int max_m = 0;
};

struct TorusSatOptions {
    int max_n = 1;
    int max_m = 1;
    TorusTarget target = TorusTarget::GammaT;
    Encoding encoding = Encoding::Fix;
    /// Tiling search nodes; 0 means unlimited.
    std::size_t budget = 0;
};

/// Tries tori in order of increasing area (then width). For gamma_T the first
/// tiling is model-checked at every state; for gamma the tilings with the
/// start tile at the origin and a neon tile on the diagonal orbit are
/// model-checked at (0, 0).
TorusSatResult torus_sat(const TileSet& ts, const TorusSatOptions& options);

nlohmann::json witness_bundle(const TileSet& ts, const TorusWitness& w);

} // namespace pdl
