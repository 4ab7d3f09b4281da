#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Shared scalar types and the error convention.
//
// All combinatorial data (diagram parts, sequences, dimension vectors,
// multiplicities) fits comfortably in 64 bits at the scales this library
// targets, so Int is the working integer type.  Lattice computations
// (Smith normal form) and all degree/stability parameters are exact:
// BigInt and Rat come from boost::multiprecision, never floating point.

namespace aw {

using Int = long long;
using Vec = std::vector<Int>;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A domain error carries a stable machine-readable name (used verbatim by
// the CLI error object) plus a human-readable detail string.
struct domain_error : std::runtime_error {
  domain_error(std::string error_name, std::string detail_text)
      : std::runtime_error(error_name + ": " + detail_text),
        name(std::move(error_name)),
        detail(std::move(detail_text)) {}
  std::string name;
  std::string detail;
};

inline Int vec_sum(const Vec& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

}  // namespace aw
