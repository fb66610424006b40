#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace tiling {

using Int = mpz_class;
using Rat = mpq_class;

// thrown on malformed user input (files, words, polynomials)
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown when a mathematical precondition is violated
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw input_error("not an integer: '" + s + "'");
  }
}

// accepts "7", "-3/4" and plain decimals like "1.25"
Rat parse_rat(const std::string& s);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

// dyadic outward rounding: largest multiple of 2^-bits <= q
Rat round_down(const Rat& q, long bits);
// smallest multiple of 2^-bits >= q
Rat round_up(const Rat& q, long bits);
// nearest multiple of 2^-bits
Rat round_near(const Rat& q, long bits);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// 2^-bits as an exact rational
Rat pow2_inv(long bits);

}  // namespace tiling
