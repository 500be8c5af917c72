#pragma once

// Exact competitive- and discovery-ratio analysis for linear search on the
// two-branch infinite line. Header-only; every quantity is an exact rational.

#include "cowpath/discovery.hpp"   // IWYU pragma: export
#include "cowpath/errors.hpp"      // IWYU pragma: export
#include "cowpath/lp.hpp"          // IWYU pragma: export
#include "cowpath/lp_oracle.hpp"   // IWYU pragma: export
#include "cowpath/ratio.hpp"       // IWYU pragma: export
#include "cowpath/rational.hpp"    // IWYU pragma: export
#include "cowpath/render.hpp"      // IWYU pragma: export
#include "cowpath/strategy.hpp"    // IWYU pragma: export
#include "cowpath/strategy_io.hpp" // IWYU pragma: export
#include "cowpath/verify.hpp"      // IWYU pragma: export
