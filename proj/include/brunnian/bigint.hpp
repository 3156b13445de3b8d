// Arbitrary-precision naturals. p^n - 1 and |GL_n(F_p)| overflow machine
// words already at modest table sizes, so anything sized like a group
// order goes through Natural.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace brunnian {

using Natural = boost::multiprecision::cpp_int;

inline Natural natural_pow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(Natural(base), exp);
}

inline std::string to_decimal(const Natural& n) { return n.str(); }

}  // namespace brunnian
