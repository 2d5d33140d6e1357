#pragma once

// Umbrella header: exact Freudenthal triple systems inside the split
// simple Lie algebras of types B, D, E and F, built from root-system data.

#include "ftsys/chevalley.hpp"
#include "ftsys/classify.hpp"
#include "ftsys/dynkin.hpp"
#include "ftsys/error.hpp"
#include "ftsys/fts.hpp"
#include "ftsys/json_io.hpp"
#include "ftsys/report.hpp"
#include "ftsys/rng.hpp"
#include "ftsys/root_system.hpp"
#include "ftsys/scalar.hpp"
#include "ftsys/suite.hpp"
