#pragma once

// Everything except the GMP-backed oracles (include oracles.hpp and link
// mrips::oracles for those).

#include "distances.hpp"
#include "errors.hpp"
#include "filtration.hpp"
#include "generators.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "lgraph.hpp"
#include "persistence.hpp"
#include "vectorize.hpp"
