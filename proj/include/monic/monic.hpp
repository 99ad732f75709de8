#pragma once

// Umbrella header.

#include "ltl.hpp"
#include "parser.hpp"
#include "lasso.hpp"
#include "scc.hpp"
#include "nba.hpp"
#include "machine.hpp"
#include "automata.hpp"
#include "monitor.hpp"
#include "monitorability.hpp"
#include "runtime.hpp"
#include "io.hpp"
