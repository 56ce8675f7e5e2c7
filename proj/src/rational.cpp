#include "burgers/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace burgers {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                               : static_cast<unsigned long long>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
    m /= kBase;
  }
}

BigInt BigInt::from_decimal(std::string_view s) {
  std::size_t i = 0;
  int sign = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt out;
  std::vector<std::uint32_t> mag;
  // consume digits in base-10^9 chunks from the most significant end
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("BigInt: bad digit in numeral");
  }
  std::size_t ndigits = s.size() - i;
  std::size_t first = ndigits % kBaseDigits;
  std::uint32_t chunk = 0;
  for (std::size_t j = 0; j < first; ++j) chunk = chunk * 10 + (s[i + j] - '0');
  if (first > 0) mag = {chunk};
  for (std::size_t j = first; j < ndigits; j += kBaseDigits) {
    chunk = 0;
    for (std::size_t u = 0; u < kBaseDigits; ++u)
      chunk = chunk * 10 + (s[i + j + u] - '0');
    mag = mul_small(mag, kBase);
    if (chunk != 0) {
      std::vector<std::uint32_t> c = {chunk};
      mag = add_mag(mag, c);
    }
  }
  out.limbs_ = std::move(mag);
  out.sign_ = out.limbs_.empty() ? 0 : sign;
  out.trim();
  return out;
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s % kBase));
    carry = static_cast<std::uint32_t>(s / kBase);
  }
  if (carry) r.push_back(carry);
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(r[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (v < 0) {
      v += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(v);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur =
          acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    std::size_t j = i + b.size();
    while (carry) {
      std::uint64_t cur = acc[j] + carry;
      acc[j] = cur % kBase;
      carry = cur / kBase;
      ++j;
    }
  }
  std::vector<std::uint32_t> r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    r[i] = static_cast<std::uint32_t>(acc[i]);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<std::uint32_t> BigInt::mul_small(const std::vector<std::uint32_t>& a,
                                             std::uint32_t m) {
  if (a.empty() || m == 0) return {};
  std::vector<std::uint32_t> r;
  r.reserve(a.size() + 1);
  std::uint64_t carry = 0;
  for (std::uint32_t limb : a) {
    std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
    r.push_back(static_cast<std::uint32_t>(cur % kBase));
    carry = cur / kBase;
  }
  while (carry) {
    r.push_back(static_cast<std::uint32_t>(carry % kBase));
    carry /= kBase;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Schoolbook long division; quotient digits found by binary search, which is
// slow in theory and entirely adequate at this operand size.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q,
                        std::vector<std::uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  q.assign(a.size(), 0);
  r.clear();
  for (std::size_t i = a.size(); i-- > 0;) {
    r.insert(r.begin(), a[i]);
    while (!r.empty() && r.back() == 0) r.pop_back();
    std::uint32_t lo = 0, hi = kBase - 1, digit = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if (cmp_mag(mul_small(b, mid), r) <= 0) {
        digit = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    q[i] = digit;
    if (digit != 0) r = sub_mag(r, mul_small(b, digit));
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    r.sign_ = a.sign_;
  } else {
    int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
      r.sign_ = b.sign_;
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<std::uint32_t> qm, rm;
  divmod_mag(a.limbs_, b.limbs_, qm, rm);
  q.limbs_ = std::move(qm);
  q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
  r.limbs_ = std::move(rm);
  r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (sign_ < 0) s += '-';
  char buf[16];
  std::snprintf(buf, sizeof buf, "%u", limbs_.back());
  s += buf;
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    s += buf;
  }
  return s;
}

double BigInt::to_double() const {
  double v = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    v = v * static_cast<double>(kBase) + static_cast<double>(limbs_[i]);
  return sign_ < 0 ? -v : v;
}

BigInt pow(BigInt base, unsigned long long exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1ull) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  normalize();
}

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den_.signum() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {BigInt::from_decimal(s), 1};
  if (slash == 0 || slash + 1 >= s.size())
    throw std::invalid_argument("Rational: malformed 'num/den' literal");
  return {BigInt::from_decimal(s.substr(0, slash)),
          BigInt::from_decimal(s.substr(slash + 1))};
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return {den_, num_};
}

Rational Rational::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  return {burgers::pow(num_, static_cast<unsigned long long>(e)),
          burgers::pow(den_, static_cast<unsigned long long>(e))};
}

double Rational::to_double() const {
  return num_.to_double() / den_.to_double();
}

std::string Rational::to_string() const {
  if (den_ == BigInt(1)) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace burgers
