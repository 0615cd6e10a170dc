#include "twodist/rational.hpp"

#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

long long to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("rational out of int64 range: " + z.get_str());
  return z.get_si();
}

}  // namespace

Rational::Rational(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw RejectedInput("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string part) { return (!part.empty() && part[0] == '+') ? part.substr(1) : part; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw RejectedInput("malformed rational '" + s + "'");
    return Rational(mpq_class(mpz_class(strip_plus(s))));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw RejectedInput("malformed rational '" + s + "'");
  mpz_class d(strip_plus(den));
  if (d == 0) throw RejectedInput("rational with zero denominator");
  mpq_class q(mpz_class(strip_plus(num)), d);
  q.canonicalize();
  return Rational(std::move(q));
}

long long Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return to_int64(r);
}

long long Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return to_int64(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace twodist
