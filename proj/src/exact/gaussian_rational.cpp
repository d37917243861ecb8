#include "spinprod/exact/gaussian_rational.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinprod::exact {

GaussianRational GaussianRational::from_parts(const Integer& re_num, const Integer& re_den,
                                              const Integer& im_num, const Integer& im_den) {
    if (re_den.is_zero() || im_den.is_zero()) {
        throw std::domain_error("GaussianRational: zero denominator");
    }
    // cpp_rational(num, den) rejects a negative den.
    auto make = [](const Integer& num, const Integer& den) {
        return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
    };
    return {make(re_num, re_den), make(im_num, im_den)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    if (!o.re_.is_zero()) re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    if (!o.re_.is_zero()) re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    // Most entries met in practice are purely real or purely imaginary.
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    if (re_.is_zero() && o.re_.is_zero()) {
        re_ = -(im_ * o.im_);
        im_ = 0;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    std::ostringstream os;
    if (im_.is_zero()) {
        os << re_;
        return os.str();
    }
    if (!re_.is_zero()) {
        os << re_;
        if (im_ > 0) os << '+';
    }
    if (im_ == 1) {
        os << 'i';
    } else if (im_ == -1) {
        os << "-i";
    } else {
        os << im_ << 'i';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace spinprod::exact
