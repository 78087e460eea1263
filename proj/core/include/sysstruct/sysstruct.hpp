#pragma once

// Umbrella header for the whole toolkit.

#include "sysstruct/dsf.hpp"
#include "sysstruct/error.hpp"
#include "sysstruct/gds.hpp"
#include "sysstruct/io.hpp"
#include "sysstruct/matrix.hpp"
#include "sysstruct/polynomial.hpp"
#include "sysstruct/rational.hpp"
#include "sysstruct/rational_function.hpp"
#include "sysstruct/realization.hpp"
#include "sysstruct/sparsity.hpp"
#include "sysstruct/structure.hpp"
