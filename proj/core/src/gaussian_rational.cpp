#include "spinorss/gaussian_rational.hpp"

#include <ostream>

#include "spinorss/errors.hpp"

namespace spinorss {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw Error("GaussianRational: division by zero");
    const BigRational n = b.norm_sq();
    const GaussianRational c = a * b.conj();
    return {c.re() / n, c.im() / n};
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out += re_.str();
    if (!im_.is_zero()) {
        std::string mag;
        const BigRational a = im_.abs();
        mag = a.is_one() ? "i" : a.str() + "*i";
        if (out.empty()) {
            out = (im_.sign() < 0 ? "-" : "") + mag;
        } else {
            out += (im_.sign() < 0 ? "-" : "+") + mag;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

} // namespace spinorss
