#pragma once

#include "polyprime/errors.hpp"
#include "polyprime/grid.hpp"
#include "polyprime/intervals.hpp"
#include "polyprime/monomial.hpp"
#include "polyprime/binomial.hpp"
#include "polyprime/groebner.hpp"
#include "polyprime/graph.hpp"
#include "polyprime/toric.hpp"
#include "polyprime/verify.hpp"
#include "polyprime/json.hpp"
