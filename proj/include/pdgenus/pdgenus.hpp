#pragma once

#include "pdgenus/config.hpp"
#include "pdgenus/core.hpp"
#include "pdgenus/error.hpp"
#include "pdgenus/genuspoly.hpp"
#include "pdgenus/intersection.hpp"
#include "pdgenus/ipoly.hpp"
#include "pdgenus/mutation.hpp"
#include "pdgenus/polynomial.hpp"
#include "pdgenus/surface.hpp"
#include "pdgenus/toolkit.hpp"
