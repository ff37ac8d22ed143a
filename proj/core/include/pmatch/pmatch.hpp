#pragma once

#include "pmatch/bl_matching.hpp"
#include "pmatch/elder.hpp"
#include "pmatch/enriched.hpp"
#include "pmatch/error.hpp"
#include "pmatch/field.hpp"
#include "pmatch/filtration.hpp"
#include "pmatch/io.hpp"
#include "pmatch/ladder.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/matrix.hpp"
#include "pmatch/persistence_module.hpp"
#include "pmatch/subspace.hpp"
