#pragma once

// Exact symbolic calculus for the algebra of linear generalized symmetries of
// the Kolmogorov equation u_t + x u_y = u_xx: Weyl-algebra normal ordering,
// differential-operator realizations, polynomial solution spaces and
// symmetry-based solution generation, all over exact rationals.

#include "kolmosym/determining.hpp"
#include "kolmosym/diffop.hpp"
#include "kolmosym/expoly.hpp"
#include "kolmosym/gen_weyl.hpp"
#include "kolmosym/json_io.hpp"
#include "kolmosym/lie_closure.hpp"
#include "kolmosym/matrix.hpp"
#include "kolmosym/named.hpp"
#include "kolmosym/parse.hpp"
#include "kolmosym/poly.hpp"
#include "kolmosym/rational.hpp"
#include "kolmosym/solutions.hpp"
#include "kolmosym/sparse.hpp"
#include "kolmosym/weyl.hpp"
