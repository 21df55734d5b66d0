#include "spinorss/rational.hpp"

#include <ostream>

#include "spinorss/errors.hpp"

namespace spinorss {

BigRational::BigRational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("BigRational: zero denominator");
    v_.canonicalize();
}

BigRational BigRational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return BigRational(q);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) throw Error("BigRational: division by zero");
    return BigRational(mpq_class(a.v_ / b.v_));
}

std::string BigRational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

} // namespace spinorss
