#pragma once

#include <stdexcept>
#include <string>

namespace partition_gf {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PARTITION_GF_DEFINE_ERROR(name)                                        \
    class name : public error {                                                \
    public:                                                                    \
        explicit name(const std::string& what) : error(#name ": " + what) {}   \
    }

// qseries
PARTITION_GF_DEFINE_ERROR(order_too_large);
PARTITION_GF_DEFINE_ERROR(invalid_exponent);
PARTITION_GF_DEFINE_ERROR(non_unit_divisor);
/// Raised when an internal exactness assertion fails; never by bad input.
PARTITION_GF_DEFINE_ERROR(internal_error);

// genfun / counting
PARTITION_GF_DEFINE_ERROR(invalid_difference);
PARTITION_GF_DEFINE_ERROR(invalid_distance);
PARTITION_GF_DEFINE_ERROR(invalid_query);
PARTITION_GF_DEFINE_ERROR(out_of_range);
PARTITION_GF_DEFINE_ERROR(cutoff_too_small);

// quasipoly
PARTITION_GF_DEFINE_ERROR(insufficient_samples);
PARTITION_GF_DEFINE_ERROR(inconsistent_samples);
PARTITION_GF_DEFINE_ERROR(non_constant_leading);
PARTITION_GF_DEFINE_ERROR(internal_mismatch);

// oeis
PARTITION_GF_DEFINE_ERROR(not_found);
PARTITION_GF_DEFINE_ERROR(parse_error);
PARTITION_GF_DEFINE_ERROR(network_error);
PARTITION_GF_DEFINE_ERROR(empty_overlap);
PARTITION_GF_DEFINE_ERROR(io_error);

#undef PARTITION_GF_DEFINE_ERROR

} // namespace partition_gf
