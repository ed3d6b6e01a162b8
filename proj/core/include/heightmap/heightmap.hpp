#pragma once

#include "heightmap/error.hpp"
#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"
#include "heightmap/npmle.hpp"
#include "heightmap/oracle.hpp"
#include "heightmap/reduce.hpp"
#include "heightmap/simbench.hpp"
#include "heightmap/sweep2d.hpp"
#include "heightmap/sweepnd.hpp"
