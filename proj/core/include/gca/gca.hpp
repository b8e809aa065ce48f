#pragma once

#include "gca/axioms.hpp"
#include "gca/cyclo.hpp"
#include "gca/error.hpp"
#include "gca/expr.hpp"
#include "gca/io.hpp"
#include "gca/print.hpp"
#include "gca/rep.hpp"
#include "gca/symbolic.hpp"
