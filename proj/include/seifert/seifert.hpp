// Umbrella header.
#pragma once

#include "arith.hpp"
#include "permutation.hpp"
#include "intmatrix.hpp"
#include "symbol.hpp"
#include "lift.hpp"
#include "abelian.hpp"
#include "universal.hpp"
#include "json_io.hpp"
