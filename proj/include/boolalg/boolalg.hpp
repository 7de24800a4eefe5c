#pragma once

// Umbrella header for the whole engine.

#include "arguments.hpp"
#include "boole_v.hpp"
#include "constituents.hpp"
#include "context.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "formula.hpp"
#include "parser.hpp"
#include "printer.hpp"
#include "semantics.hpp"
#include "term.hpp"
