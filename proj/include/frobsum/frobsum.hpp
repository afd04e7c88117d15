#pragma once

#include "frobsum/bigint.hpp"
#include "frobsum/char_calculus.hpp"
#include "frobsum/errors.hpp"
#include "frobsum/fp_kernel.hpp"
#include "frobsum/frobenius_decomposition.hpp"
#include "frobsum/fusion_ring.hpp"
#include "frobsum/hilbert_series.hpp"
#include "frobsum/inventory.hpp"
#include "frobsum/io.hpp"
#include "frobsum/ncr_analysis.hpp"
#include "frobsum/params.hpp"
#include "frobsum/trunc_series.hpp"
#include "frobsum/verification.hpp"
#include "frobsum/weight_char.hpp"
