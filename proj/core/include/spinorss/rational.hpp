#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace spinorss {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (0 is stored as 0/1). Thin value wrapper around GMP's mpq.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(long n, long d);
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "a" or "a/b" with optional leading sign.
    static BigRational from_string(const std::string& text);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ + b.v_));
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ - b.v_));
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(mpq_class(a.v_ * b.v_));
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b);

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }

    /// "-3/4", "7", "0"
    std::string str() const;

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

} // namespace spinorss
