#pragma once

// Exact computational machinery for finitely generated right ideals and
// modules over free-group algebras: canonical free bases, duality-based
// closure and freeness decisions, the subgroup layer, intersections, and
// finite-field word measures.

#include "fga/duality.hpp"
#include "fga/element.hpp"
#include "fga/error.hpp"
#include "fga/groebner.hpp"
#include "fga/groups.hpp"
#include "fga/intersection.hpp"
#include "fga/io.hpp"
#include "fga/modules.hpp"
#include "fga/parse.hpp"
#include "fga/scalar.hpp"
#include "fga/word.hpp"
#include "fga/wordmeasure.hpp"
