#pragma once

#include "partition_gf/counting.hpp"
#include "partition_gf/distance_spec.hpp"
#include "partition_gf/errors.hpp"
#include "partition_gf/genfun.hpp"
#include "partition_gf/integer.hpp"
#include "partition_gf/polynomial.hpp"
#include "partition_gf/qseries.hpp"
#include "partition_gf/quasipoly.hpp"
#include "partition_gf/series.hpp"
