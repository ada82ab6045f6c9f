#pragma once

#include <string>

#include "trac/temporal.hpp"

namespace trac {

// Plain-text strategy description, one attribute per line, hand-editable:
//
//   n: 2
//   input_state: 0 0 0
//   alice: 0.70710678118654746 0.70710678118654746 0
//   alice: 0.70710678118654746 -0.70710678118654746 0
//   bob: 1 0 0
//   bob: 0 1 0
//
// Axis lines appear in setting order; '#' starts a comment. Numbers are
// written with 17 significant digits so write -> read reproduces the strategy
// bit for bit.
std::string strategy_to_text(const TemporalStrategy& strategy);
TemporalStrategy strategy_from_text(const std::string& text);

void write_strategy_file(const std::string& path, const TemporalStrategy& strategy);
TemporalStrategy read_strategy_file(const std::string& path);

} // namespace trac
