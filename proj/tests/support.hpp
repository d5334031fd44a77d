#pragma once

#include "pdl/semantics.hpp"
#include "pdl/surface.hpp"
#include "pdl/syntax.hpp"
#include "pdl/tiling.hpp"
#include "pdl/tm.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

std::string data_path(const std::string& relative);

pdl::TileSet load_tileset(const std::string& name);
pdl::TuringMachine load_tm(const std::string& name);
pdl::KripkeModel load_model(const std::string& name);

/// Tile sets that tile some torus of size at most 4x4.
std::vector<std::string> periodic_tilesets();
/// Tile sets without a 3x3 rectangle tiling.
std::vector<std::string> non_tiling_tilesets();
std::vector<std::string> tm_corpus();

/// Random formulas over a small fixed vocabulary.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    struct Vocabulary {
        std::vector<std::string> props = {"a", "b"};
        std::vector<std::string> progs = {"p", "q"};
        /// Allow union, intersection, difference and star anywhere.
        bool full = true;
        /// Put stars only directly under boxes and diamonds.
        bool eliminable_stars = false;
    };

    pdl::Prop prop(int depth, const Vocabulary& v);
    pdl::Prog prog(int depth, const Vocabulary& v);

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    std::mt19937_64& engine() { return rng_; }

private:
    const std::string& pick(const std::vector<std::string>& xs) { return xs[uniform(0, int(xs.size()) - 1)]; }

    std::mt19937_64 rng_;
};

/// Same shape as random_model, but written here so tests do not depend on the
/// generator under test.
pdl::KripkeModel small_model(Gen& g, int states, const std::vector<std::string>& progs,
                             const std::vector<std::string>& props, bool deterministic);

} // namespace testing
