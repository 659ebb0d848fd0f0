#pragma once

#include "tenfold/acceptance.hpp"
#include "tenfold/bott_table.hpp"
#include "tenfold/builtin.hpp"
#include "tenfold/clifford.hpp"
#include "tenfold/errors.hpp"
#include "tenfold/invariants.hpp"
#include "tenfold/linalg.hpp"
#include "tenfold/model.hpp"
#include "tenfold/model_io.hpp"
#include "tenfold/pfaffian.hpp"
#include "tenfold/suspension.hpp"
#include "tenfold/symmetry.hpp"
