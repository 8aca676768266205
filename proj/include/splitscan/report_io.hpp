#ifndef SPLITSCAN_REPORT_IO_HPP
#define SPLITSCAN_REPORT_IO_HPP

#include <string>

#include "splitscan/criterion.hpp"
#include "splitscan/splitfield.hpp"
#include "splitscan/zfactor.hpp"

namespace splitscan::io {

inline const char* csv_header() { return "p,phi_splits,p_has_root,p_splits"; }
std::string csv_line(const criterion::PrimeRecord& rec);

/// JSON summary: {phi, P, B, p_max, n_primes, n_split, split_fraction,
/// violations:[...]}.
std::string report_json(const criterion::ScanReport& report);

/// {phi, min_poly, weights, degree, trace} record.
std::string primitive_element_json(const splitfield::PrimitiveElement& pe);

std::string factorization_string(const zfactor::Factorization& f);
std::string factorization_json(const zfactor::Factorization& f);

std::string schur_json(const std::vector<criterion::SchurWitness>& witnesses);

}  // namespace splitscan::io

#endif
