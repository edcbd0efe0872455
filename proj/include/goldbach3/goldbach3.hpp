#pragma once

// Umbrella include.

#include "goldbach3/arith.hpp"
#include "goldbach3/cache.hpp"
#include "goldbach3/circle.hpp"
#include "goldbach3/common.hpp"
#include "goldbach3/constraint.hpp"
#include "goldbach3/counting.hpp"
#include "goldbach3/fft.hpp"
#include "goldbach3/io.hpp"
#include "goldbach3/json_out.hpp"
#include "goldbach3/progressions.hpp"
#include "goldbach3/ramanujan.hpp"
#include "goldbach3/sievecheck.hpp"
#include "goldbach3/singular.hpp"
