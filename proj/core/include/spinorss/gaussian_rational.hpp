#pragma once

#include <iosfwd>
#include <string>

#include "spinorss/rational.hpp"

namespace spinorss {

/// Exact complex rational a + b*i. The scalar field of every coefficient
/// in the engine; conj(conj(z)) == z and norm_sq(z) = re^2 + im^2 >= 0.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(const BigRational& re) : re_(re) {}
    GaussianRational(const BigRational& re, const BigRational& im) : re_(re), im_(im) {}

    static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    BigRational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Total order (re, then im); used only for canonical term ordering.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Scalar syntax: "0", "3/2", "-i", "1/2-3/4*i".
    std::string str() const;

  private:
    BigRational re_;
    BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

} // namespace spinorss
