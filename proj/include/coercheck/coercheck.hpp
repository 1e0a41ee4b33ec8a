#pragma once

#include "coercheck/barycentric.hpp"
#include "coercheck/certify.hpp"
#include "coercheck/circuit.hpp"
#include "coercheck/exponent.hpp"
#include "coercheck/interval.hpp"
#include "coercheck/json_io.hpp"
#include "coercheck/newton.hpp"
#include "coercheck/oracle.hpp"
#include "coercheck/parse.hpp"
#include "coercheck/polynomial.hpp"
#include "coercheck/rational.hpp"
#include "coercheck/region_scan.hpp"
#include "coercheck/simplex.hpp"
#include "coercheck/verdict.hpp"
#include "coercheck/version.hpp"
