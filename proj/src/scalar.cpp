#include "cychom/scalar.hpp"

#include <numeric>

namespace cychom {

namespace {

constexpr long long kSmall = 1ll << 30;  // word-path bound on |num| and den

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (e) {
    if (e & 1) acc = mulmod(acc, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return acc;
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

mpq_class mpq_of(long long n, long long d) {
  mpq_class q;
  mpz_class num, den;
  mpz_set_si(num.get_mpz_t(), n);
  mpz_set_si(den.get_mpz_t(), d);
  q = mpq_class(num) / mpq_class(den);
  return q;
}

}  // namespace

Field Field::Fp(std::uint64_t p) {
  if (!is_probable_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  return Field{Kind::prime, p};
}

std::string Field::str() const {
  return is_rationals() ? "Q" : "F_" + std::to_string(p);
}

Scalar Scalar::make_small(const Field& f, long long n, long long d) {
  Scalar s(f);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  s.n_ = n;
  s.d_ = d;
  return s;
}

Scalar Scalar::make_big(const Field& f, mpq_class q) {
  q.canonicalize();
  // demote so that a word-representable value is always stored in words
  if (mpz_fits_slong_p(q.get_num().get_mpz_t()) && mpz_fits_slong_p(q.get_den().get_mpz_t())) {
    long long n = mpz_get_si(q.get_num().get_mpz_t());
    long long d = mpz_get_si(q.get_den().get_mpz_t());
    if ((n < 0 ? -n : n) < kSmall && d < kSmall) return make_small(f, n, d);
  }
  Scalar s(f);
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::of(const Field& f, long value) {
  if (f.is_rationals()) {
    if (value < kSmall && value > -kSmall) return make_small(f, value, 1);
    return make_big(f, mpq_of(value, 1));
  }
  Scalar s(f);
  long long m = value % static_cast<long long>(f.p);
  if (m < 0) m += static_cast<long long>(f.p);
  s.r_ = static_cast<std::uint64_t>(m);
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if ((num < 0 ? -num : num) < kSmall && (den < 0 ? -den : den) < kSmall)
    return make_small(Field::Q(), num, den);
  return make_big(Field::Q(), mpq_of(num, den));
}

Scalar Scalar::from_mpq(const mpq_class& q) { return make_big(Field::Q(), q); }

Scalar Scalar::parse(const Field& f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  if (f.is_rationals()) return make_big(f, std::move(q));
  return make_big(Field::Q(), std::move(q)).reduce_mod(f.p);
}

bool Scalar::is_zero() const {
  if (!field_.is_rationals()) return r_ == 0;
  return small() ? n_ == 0 : *big_ == 0;
}

bool Scalar::is_one() const {
  if (!field_.is_rationals()) return r_ == 1 % field_.p;
  return small() ? (n_ == 1 && d_ == 1) : *big_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (!field_.is_rationals()) {
    Scalar s(field_);
    s.r_ = r_ + o.r_;
    if (s.r_ >= field_.p) s.r_ -= field_.p;
    return s;
  }
  if (small() && o.small()) {
    long long n = n_ * o.d_ + o.n_ * d_;
    long long d = d_ * o.d_;
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if ((n < 0 ? -n : n) < kSmall && d < kSmall) return make_small(field_, n, d);
    return make_big(field_, mpq_of(n, d));
  }
  return make_big(field_, rational_value() + o.rational_value());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (!field_.is_rationals()) {
    Scalar s(field_);
    s.r_ = mulmod(r_, o.r_, field_.p);
    return s;
  }
  if (small() && o.small()) {
    long long n = n_ * o.n_;
    long long d = d_ * o.d_;
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if ((n < 0 ? -n : n) < kSmall && d < kSmall) return make_small(field_, n, d);
    return make_big(field_, mpq_of(n, d));
  }
  return make_big(field_, rational_value() * o.rational_value());
}

Scalar Scalar::operator-() const {
  if (!field_.is_rationals()) {
    Scalar s(field_);
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
  }
  if (small()) return make_small(field_, -n_, d_);
  return make_big(field_, -*big_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!field_.is_rationals()) {
    Scalar s(field_);
    s.r_ = powmod(r_, field_.p - 2, field_.p);
    return s;
  }
  if (small()) return make_small(field_, n_ < 0 ? -d_ : d_, n_ < 0 ? -n_ : n_);
  return make_big(field_, 1 / *big_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (!field_.is_rationals()) return r_ == o.r_;
  // canonical storage: word-representable values are always in words
  if (small() != o.small()) return false;
  if (small()) return n_ == o.n_ && d_ == o.d_;
  return *big_ == *o.big_;
}

std::size_t Scalar::complexity() const {
  if (!field_.is_rationals() || small()) return 1;
  return mpz_size(big_->get_num().get_mpz_t()) + mpz_size(big_->get_den().get_mpz_t());
}

Scalar Scalar::reduce_mod(std::uint64_t p) const {
  if (!field_.is_rationals()) throw std::logic_error("reduce_mod expects a rational scalar");
  Field fp = Field::Fp(p);
  mpq_class q = rational_value();
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class nm = q.get_num() % pz;
  if (nm < 0) nm += pz;
  mpz_class dm = q.get_den() % pz;
  if (dm == 0) throw std::domain_error("denominator vanishes mod p");
  Scalar s(fp);
  std::uint64_t n64 = mpz_get_ui(nm.get_mpz_t());
  std::uint64_t d64 = mpz_get_ui(dm.get_mpz_t());
  s.r_ = mulmod(n64, powmod(d64, p - 2, p), p);
  return s;
}

mpq_class Scalar::rational_value() const {
  if (!field_.is_rationals()) throw std::logic_error("not a rational scalar");
  if (!small()) return *big_;
  return mpq_of(n_, d_);
}

std::string Scalar::str() const {
  if (!field_.is_rationals()) return std::to_string(r_);
  if (small())
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
  return big_->get_str();
}

}  // namespace cychom
