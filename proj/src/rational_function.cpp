#include "ogdegen/rational_function.hpp"

namespace ogdegen {

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial{Integer(1)};
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = Polynomial::div_exact(num_, g);
        den_ = Polynomial::div_exact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0 && den_.leading() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::string to_string(const RationalFunction& f) { return f.str(); }

}  // namespace ogdegen
