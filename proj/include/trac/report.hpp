#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trac/certifier.hpp"
#include "trac/seesaw.hpp"

namespace trac {

// Sweep rows, one per grid point. Header is part of the tool's contract:
//   k,p_star,min_entropy,cell_i,cell_j,cell_a,cell_b
// cell_i/cell_j are the 1-based settings of the worst cell, cell_a/cell_b its
// outcomes.
std::string sweep_csv(const SweepReport& report);

// One-row summary of the affine fit. Header:
//   n,alpha_fit,beta_fit,alpha_paper,beta_paper,max_residual
std::string fit_csv(const SweepReport& report);

// Human-readable fit summary including the two-anchor audit lines.
std::string fit_text(const SweepReport& report);

// Per-restart optimizer outcomes. Header: restart,k,sweeps,perturbations
std::string restarts_csv(const OptimumReport& report);

struct CurveData {
    std::string x_label;
    std::string y_label;
    std::vector<std::pair<double, double>> points;
};

// Minimal standalone SVG: fixed 800x600 viewport, linear axes with five
// labeled ticks per side, one polyline. Output depends only on the curve
// contents, so identical input gives byte-identical files.
std::string render_svg(const CurveData& curve);

// Seed precedence for the CLI: explicit --seed, else TEMPORAL_RAC_SEED from
// the environment, else 0. Throws ValidationError on a malformed variable.
std::uint64_t default_seed_from_env();

} // namespace trac
