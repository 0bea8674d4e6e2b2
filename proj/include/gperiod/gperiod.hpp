#pragma once

#include "gperiod/arith.hpp"
#include "gperiod/bool_matrix.hpp"
#include "gperiod/digraph.hpp"
#include "gperiod/gadgets.hpp"
#include "gperiod/index.hpp"
#include "gperiod/io.hpp"
#include "gperiod/oracle.hpp"
#include "gperiod/period.hpp"
#include "gperiod/scc.hpp"
