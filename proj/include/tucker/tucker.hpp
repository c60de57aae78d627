#pragma once

#include "tucker/borsuk.hpp"
#include "tucker/complex.hpp"
#include "tucker/errors.hpp"
#include "tucker/flag.hpp"
#include "tucker/generators.hpp"
#include "tucker/labeling.hpp"
#include "tucker/oracle.hpp"
#include "tucker/pathfinder.hpp"
#include "tucker/simplex.hpp"
