#ifndef CYCHOM_SCALAR_HPP
#define CYCHOM_SCALAR_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cychom {

// Coefficient field: the rationals, or a prime field F_p.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static Field Q() { return Field{Kind::rationals, 0}; }
  static Field Fp(std::uint64_t p);

  bool is_rationals() const { return kind == Kind::rationals; }
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string str() const;
};

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("scalars from different fields mixed in one computation") {}
};

// Exact field element. All arithmetic is exact; there is no floating point
// anywhere in this project.
//
// Rationals keep a reduced num/den pair of machine words and only fall back
// to arbitrary precision when a value outgrows them; values that shrink back
// are demoted again, so a value representable in words is always stored in
// words (which makes equality a word comparison in the common case).
class Scalar {
 public:
  Scalar() : field_(Field::Q()) {}
  explicit Scalar(const Field& f) : field_(f) {}

  static Scalar of(const Field& f, long value);
  static Scalar rational(long long num, long long den);
  static Scalar from_mpq(const mpq_class& q);
  // Parses "p", "p/q" (rationals) or a residue (prime field).
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Size proxy used for pivot selection during elimination.
  std::size_t complexity() const;

  // Rational reduction mod p; throws if the denominator vanishes mod p.
  Scalar reduce_mod(std::uint64_t p) const;

  // The exact rational value (rationals only).
  mpq_class rational_value() const;
  std::uint64_t prime_value() const { return r_; }

  std::string str() const;

 private:
  void check_same(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }
  bool small() const { return big_ == nullptr; }
  static Scalar make_small(const Field& f, long long n, long long d);
  static Scalar make_big(const Field& f, mpq_class q);

  Field field_;
  long long n_ = 0, d_ = 1;                // reduced, d_ > 0, only when big_ is null
  std::shared_ptr<const mpq_class> big_;   // exact fallback (rationals only)
  std::uint64_t r_ = 0;                    // prime-field residue
};

}  // namespace cychom

#endif
