#include "frolicher/scalar.hpp"

namespace frolicher {

Scalar Scalar::rational(long num, long den)
{
    if (den == 0)
        throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q, mpq_class(0));
}

Scalar Scalar::inverse() const
{
    if (isZero())
        throw DivisionByZero();
    // 1/(a+bi) = (a-bi)/(a^2+b^2)
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

namespace {

// "i", "-i", "3/4i", "-2i"
std::string imagStr(const mpq_class& im)
{
    if (im == 1)
        return "i";
    if (im == -1)
        return "-i";
    return im.get_str() + "i";
}

}  // namespace

std::string Scalar::str() const
{
    if (isZero())
        return "0";
    if (im_ == 0)
        return re_.get_str();
    if (re_ == 0)
        return imagStr(im_);
    std::string body = re_.get_str();
    if (im_ > 0)
        body += "+";
    body += imagStr(im_);
    return "(" + body + ")";
}

}  // namespace frolicher
