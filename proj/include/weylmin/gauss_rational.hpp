#pragma once

#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace weylmin {

/// Exact complex number re + i*im with arbitrary-precision rational parts.
/// gmpxx keeps every mpq_class result in lowest terms with a positive
/// denominator, so equality is plain member equality.
class GaussRational {
 public:
  GaussRational() = default;

  template <std::integral T>
  GaussRational(T v) : re_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    const mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Plain rendering: "3/2", "-i", "1/2 + 3*i". Not parenthesized.
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = im_.get_str() + "*i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) < 0) {
      std::string mag = (im_ == -1) ? "i" : mpq_class(-im_).get_str() + "*i";
      return re_.get_str() + " - " + mag;
    }
    return re_.get_str() + " + " + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussRational conj(const GaussRational& z) { return z.conj(); }

}  // namespace weylmin
