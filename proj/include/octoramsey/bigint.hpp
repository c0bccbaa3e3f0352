#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace octoramsey {

/// Exact signed integer of arbitrary precision. Everything the library
/// computes with is an integer; no floating point appears anywhere.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace octoramsey
