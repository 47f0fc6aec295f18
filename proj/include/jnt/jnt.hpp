#pragma once

// Umbrella header: the whole toolkit.

#include "errors.hpp"
#include "vector_view.hpp"
#include "dense_matrix.hpp"
#include "blas1.hpp"
#include "blas2.hpp"
#include "gemm.hpp"
#include "lu.hpp"
#include "qr.hpp"
#include "smart_matrix.hpp"
#include "coo_matrix.hpp"
#include "linear_operator.hpp"
#include "cg.hpp"
#include "univariate.hpp"
#include "bessel.hpp"
#include "roots.hpp"
#include "rng.hpp"
#include "matrix_market.hpp"
#include "table.hpp"
#include "bench.hpp"
