#include "affinetile/rational.hpp"

namespace tiling {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw input_error("empty number");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    Int num = parse_int(digits);
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in '" + s + "'");
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  return Rat(parse_int(s));
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

static Rat round_dir(const Rat& q, long bits, bool up) {
  Int scaled_num = q.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
  Int floor_q;
  if (up)
    mpz_cdiv_q(floor_q.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  else
    mpz_fdiv_q(floor_q.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rat r(floor_q, den);
  r.canonicalize();
  return r;
}

Rat round_down(const Rat& q, long bits) { return round_dir(q, bits, false); }
Rat round_up(const Rat& q, long bits) { return round_dir(q, bits, true); }

Rat round_near(const Rat& q, long bits) {
  Rat half = Rat(1, 2) * pow2_inv(bits);
  return round_down(q + half, bits);
}

Rat pow2_inv(long bits) {
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  return Rat(1, den);
}

}  // namespace tiling
