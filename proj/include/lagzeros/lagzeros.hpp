#pragma once

#include "lagzeros/errors.hpp"
#include "lagzeros/interlace.hpp"
#include "lagzeros/laguerre.hpp"
#include "lagzeros/repro.hpp"
#include "lagzeros/rootfind.hpp"
#include "lagzeros/sweep.hpp"
#include "lagzeros/tridiagonal.hpp"
