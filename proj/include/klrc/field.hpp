#ifndef KLRC_FIELD_HPP
#define KLRC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace klrc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of Z/pZ. The modulus travels with the value so that elements
/// built by different code paths can be mixed without a global context.
class ModP {
public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t p) : p_(p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend ModP operator+(ModP a, ModP b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend ModP operator-(ModP a, ModP b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.v_} + a.p_ - b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend ModP operator*(ModP a, ModP b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_), a.p_);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator-=(ModP b) { return *this = *this - b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  ModP& operator/=(ModP b) { return *this = *this / b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(ModP a, ModP b) { return !(a == b); }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    // Fermat: p is prime.
    std::uint64_t base = v_, acc = 1;
    std::uint32_t e = p_ - 2;
    while (e) {
      if (e & 1u) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(acc), p_);
  }

private:
  static ModP raw(std::uint32_t v, std::uint32_t p) {
    ModP m;
    m.v_ = v;
    m.p_ = p;
    return m;
  }
  static void check(ModP a, ModP b) {
    if (a.p_ != b.p_) throw std::logic_error("ModP: mixed moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// The field of rational numbers with arbitrary-precision numerators and
/// denominators.
struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t k) const { return value_type(k); }
  static bool is_zero(const value_type& v) { return v == 0; }
  std::string descriptor() const { return "q"; }
  std::uint32_t characteristic() const { return 0; }

  static std::string to_string(const value_type& v) {
    auto num = boost::multiprecision::numerator(v);
    auto den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }
  value_type parse(const std::string& s) const {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return value_type(BigInt(s));
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return value_type(num, den);
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/pZ for a prime p < 2^31.
struct PrimeField {
  using value_type = ModP;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t prime) : p(prime) {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
  }

  value_type zero() const { return ModP(0, p); }
  value_type one() const { return ModP(1, p); }
  value_type from_int(std::int64_t k) const { return ModP(k, p); }
  static bool is_zero(const value_type& v) { return v.value() == 0; }
  std::string descriptor() const { return "p" + std::to_string(p); }
  std::uint32_t characteristic() const { return p; }

  static std::string to_string(const value_type& v) { return std::to_string(v.value()); }
  value_type parse(const std::string& s) const {
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty())
      throw std::invalid_argument("malformed residue '" + s + "'");
    return ModP(k, p);
  }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }

  std::uint32_t p = 2;
};

using AnyField = std::variant<RationalField, PrimeField>;

/// Parses "q" (rationals) or "p<P>" / "f<P>" (prime field of order P).
inline AnyField parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return RationalField{};
  if (s.size() >= 2 && (s[0] == 'p' || s[0] == 'f' || s[0] == 'F')) {
    std::size_t used = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == s.size() - 1) return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown field descriptor '" + s + "' (expected q or p<P>)");
}

inline std::string field_descriptor(const AnyField& f) {
  return std::visit([](const auto& fld) { return fld.descriptor(); }, f);
}

}  // namespace klrc

#endif  // KLRC_FIELD_HPP
