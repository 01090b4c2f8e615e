#pragma once

// Umbrella header for the simroots library.

#include "simroots/arith.hpp"
#include "simroots/counting.hpp"
#include "simroots/densities.hpp"
#include "simroots/expsums.hpp"
#include "simroots/parallel.hpp"
#include "simroots/polynomial.hpp"
#include "simroots/primitive_roots.hpp"
#include "simroots/rational.hpp"
#include "simroots/spectrum_io.hpp"
#include "simroots/sweep.hpp"
