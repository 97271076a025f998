#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace frolicher {

/// Thrown by Scalar division/inversion when the divisor is zero.
class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("scalar division by zero") {}
};

/// An exact Gaussian rational re + im*i, re and im arbitrary-precision
/// rationals kept in lowest terms with positive denominators (mpq_class
/// canonical form). Value type; all operations are pure.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long value) : re_(value), im_(0) {}  // NOLINT: implicit by design
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(long num, long den);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isOne() const { return re_ == 1 && im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inverse() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const
    {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// True when the leading sign is negative: re < 0, or re = 0 and im < 0.
    /// Used by the serializer to decide between " + " and " - " separators.
    bool negativeLeading() const { return re_ < 0 || (re_ == 0 && im_ < 0); }

    /// Canonical text form: "0", "1", "-3/4", "i", "-i", "2i", "3/4i",
    /// "(1/2+3/4i)". Parsed back by the structure-file scalar grammar.
    std::string str() const;

private:
    mpq_class re_, im_;
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

}  // namespace frolicher
