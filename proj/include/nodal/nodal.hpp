#pragma once

#include "abel.hpp"
#include "divisor.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "levels.hpp"
#include "matrix.hpp"
