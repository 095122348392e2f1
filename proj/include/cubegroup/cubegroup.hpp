#pragma once

// Umbrella header for the whole library.

#include "cubegroup/cli.hpp"
#include "cubegroup/decomposition.hpp"
#include "cubegroup/decorated_graph.hpp"
#include "cubegroup/enumerator.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/graphcore.hpp"
#include "cubegroup/group.hpp"
#include "cubegroup/hypercube.hpp"
#include "cubegroup/io.hpp"
#include "cubegroup/permutation.hpp"
#include "cubegroup/representation.hpp"
