#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gft/quadrature.hpp"
#include "gft/transform.hpp"

namespace gft {

// One lattice sweep over a single weight-string slot marked '?', e.g.
// "genbeta:1,?,4.1". Rows are ordered by lattice index; a fixed seed makes
// the randomized variant (samples > 0) reproducible byte for byte.
struct SweepConfig {
    double alpha = 0.0, gamma = 0.0, delta = 1.0, zeta = 0.0;
    std::string weight_pattern; // contains exactly one '?'
    double lo = 0.0, hi = 1.0;
    int steps = 10;        // lattice points (inclusive endpoints)
    int samples = 0;       // > 0: draw this many uniform values instead
    std::uint64_t seed = 0;
    int series_order = 256;
    GridSpec grid;
    double membership_tol = 1e-3;
    QuadratureConfig quad;
    int threads = 0; // 0: GFT_THREADS or hardware_concurrency
};

struct SweepRow {
    double value = 0.0;     // the swept slot
    std::string weight;
    double beta = 0.0;
    bool region_pass = false;
    bool decreasing_pass = false;
    double membership_min = 0.0;
    std::string error;      // nonempty when this row failed numerically
};

struct SweepOutput {
    std::vector<SweepRow> rows;
    std::string csv;     // full document incl. header and trailer comments
    bool numeric_failure = false;
};

SweepOutput run_sweep(const SweepConfig& cfg);

} // namespace gft
