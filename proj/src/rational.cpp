#include "bargain/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bargain {

namespace {

mpz_class pow10z(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long n, long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat::Rat(mpz_class n, mpz_class d) {
  if (sgn(d) == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(std::move(n), std::move(d));
  q_.canonicalize();
}

Rat Rat::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double");
  Rat r;
  mpq_set_d(r.q_.get_mpq_t(), x);
  return r;
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rat::to_decimal(int sig) const {
  if (sig < 1) throw std::invalid_argument("need at least one significant digit");
  if (is_zero()) return "0";
  bool neg = sign() < 0;
  mpz_class n = abs(num());
  const mpz_class& d = den();

  // Decimal exponent e with 10^(e-1) <= n/d < 10^e.  The size-in-base
  // guess is off by at most one per operand; correct it exactly.
  long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10)) + 1;
  auto below_pow = [&](long k) {  // n/d < 10^k
    if (k >= 0) return n < d * pow10z(static_cast<unsigned long>(k));
    return n * pow10z(static_cast<unsigned long>(-k)) < d;
  };
  while (!below_pow(e)) ++e;
  while (below_pow(e - 1)) --e;

  // q = round_half_even(n/d * 10^(sig - e)) has exactly sig digits,
  // except when rounding carries it up to 10^sig.
  long shift = sig - e;
  mpz_class nn = n, dd = d;
  if (shift >= 0) {
    nn *= pow10z(static_cast<unsigned long>(shift));
  } else {
    dd *= pow10z(static_cast<unsigned long>(-shift));
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
  mpz_class twice = 2 * r;
  if (twice > dd || (twice == dd && mpz_odd_p(q.get_mpz_t()))) ++q;
  if (q == pow10z(static_cast<unsigned long>(sig))) {
    q = pow10z(static_cast<unsigned long>(sig - 1));
    ++e;
  }

  std::string digits = q.get_str();
  std::string out;
  if (e >= 1 && e <= sig) {
    out = digits.substr(0, static_cast<size_t>(e));
    std::string frac = digits.substr(static_cast<size_t>(e));
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e > sig && e <= 15) {
    out = digits + std::string(static_cast<size_t>(e - sig), '0');
  } else if (e <= 0 && e >= -3) {
    std::string frac = std::string(static_cast<size_t>(-e), '0') + digits;
    while (frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    std::string mant = digits.substr(1);
    while (!mant.empty() && mant.back() == '0') mant.pop_back();
    out = digits.substr(0, 1);
    if (!mant.empty()) out += "." + mant;
    out += "e" + std::to_string(e - 1);
  }
  return neg ? "-" + out : out;
}

Rat parse_value(std::string_view text) {
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("malformed value literal '" + std::string(text) + "'");
  };
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view lhs = text.substr(0, slash);
    std::string_view rhs = text.substr(slash + 1);
    if (!all_digits(lhs) || !all_digits(rhs) || rhs[0] == '0') return fail();
    return Rat(mpz_class(std::string(lhs)), mpz_class(std::string(rhs)));
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp)) return fail();
    mpz_class scale = pow10z(fp.size());
    mpz_class n = mpz_class(std::string(ip)) * scale + mpz_class(std::string(fp));
    return Rat(std::move(n), std::move(scale));
  }
  if (!all_digits(text)) return fail();
  return Rat(mpz_class(std::string(text)), mpz_class(1));
}

Ratio::Ratio(Rat num, Rat den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.sign() < 0 || den_.sign() < 0) throw std::invalid_argument("ratio parts must be nonnegative");
  if (num_.is_zero() && den_.is_zero()) throw std::invalid_argument("ratio 0/0");
}

Rat Ratio::value() const {
  if (is_infinite()) throw std::domain_error("infinite ratio has no finite value");
  return num_ / den_;
}

std::string Ratio::to_string(bool exact) const {
  if (is_infinite()) return "inf";
  Rat v = value();
  return exact ? v.to_fraction() : v.to_decimal();
}

}  // namespace bargain
