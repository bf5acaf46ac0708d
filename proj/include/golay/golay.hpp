#pragma once

// Umbrella header for the complementary-pair toolkit.

#include "analysis.hpp"
#include "bits.hpp"
#include "constellation.hpp"
#include "core.hpp"
#include "generator.hpp"
#include "io.hpp"
#include "sampling.hpp"
#include "search.hpp"
