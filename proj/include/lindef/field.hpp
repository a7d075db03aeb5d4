#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "lindef/errors.hpp"

namespace lindef {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// The coefficient field k: characteristic 0 means the rationals, otherwise
/// the prime field of that characteristic.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
    if (characteristic != 0 && (characteristic >= (1u << 31) || !is_prime(characteristic)))
      throw InputError("field characteristic must be 0 or a prime below 2^31, got " +
                       std::to_string(characteristic));
  }

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint32_t p) { return FieldSpec{p}; }

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string name() const {
    return is_rational() ? std::string("QQ") : "ZZ/" + std::to_string(characteristic_);
  }

  auto operator<=>(const FieldSpec&) const = default;

 private:
  std::uint32_t characteristic_ = 0;
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec{p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw InternalError("inverse of zero in prime field");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  std::string to_string(value_type a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec{}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw InternalError("inverse of zero in QQ");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) throw InternalError("division by zero in QQ");
    return a / b;
  }

  std::string to_string(const value_type& a) const { return a.get_str(); }
};

/// Calls fn with the concrete field object for spec. Both instantiations
/// of fn must return the same type.
template <class Fn>
decltype(auto) visit_field(FieldSpec spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField{spec.characteristic()});
}

}  // namespace lindef
