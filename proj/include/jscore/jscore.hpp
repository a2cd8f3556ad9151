#pragma once

// Umbrella header for the scoring, simulation and sweep library.

#include "contingency.hpp"
#include "error.hpp"
#include "io.hpp"
#include "j_score.hpp"
#include "labeling.hpp"
#include "matching.hpp"
#include "measures.hpp"
#include "pair_oracle.hpp"
#include "random.hpp"
#include "simulation.hpp"
#include "sweep.hpp"
#include "vignettes.hpp"
