#pragma once

// Umbrella header.

#include "pentaflow/asymptotics.hpp"
#include "pentaflow/coefficients.hpp"
#include "pentaflow/curve.hpp"
#include "pentaflow/errors.hpp"
#include "pentaflow/experiment.hpp"
#include "pentaflow/fit.hpp"
#include "pentaflow/geometry.hpp"
#include "pentaflow/invariant.hpp"
#include "pentaflow/io.hpp"
#include "pentaflow/iteration.hpp"
#include "pentaflow/manifest.hpp"
#include "pentaflow/pentagram.hpp"
#include "pentaflow/polygon.hpp"
#include "pentaflow/random_polygon.hpp"
