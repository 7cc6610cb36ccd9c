#include "ogdegen/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace ogdegen {

Integer Polynomial::content() const {
    Integer g = 0;
    for (const Integer& a : c_) g = gcd(g, a);
    return g < 0 ? Integer(-g) : g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return Polynomial();
    Integer g = content();
    std::vector<Integer> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

Polynomial Polynomial::operator-() const {
    std::vector<Integer> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::mul_scalar(const Integer& s) const {
    if (s == 0) return Polynomial();
    std::vector<Integer> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial::div_exact: division by zero");
    if (a.is_zero()) return Polynomial();
    if (a.degree() < b.degree())
        throw std::domain_error("Polynomial::div_exact: not divisible (degree)");
    std::vector<Integer> rem = a.c_;
    std::vector<Integer> quo(a.degree() - b.degree() + 1, Integer(0));
    for (int d = a.degree(); d >= b.degree();) {
        Integer lead = rem[d];
        if (lead == 0) {
            --d;
            continue;
        }
        if (lead % b.leading() != 0)
            throw std::domain_error("Polynomial::div_exact: not divisible (leading)");
        Integer q = lead / b.leading();
        int shift = d - b.degree();
        quo[shift] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[shift + i] -= q * b.c_[i];
        --d;
    }
    for (const Integer& r : rem)
        if (r != 0) throw std::domain_error("Polynomial::div_exact: nonzero remainder");
    return Polynomial(std::move(quo));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) return Polynomial();
    Integer ca = a.content(), cb = b.content();
    Integer cg = boost::multiprecision::gcd(ca == 0 ? cb : ca, cb == 0 ? ca : cb);
    Polynomial f = a.is_zero() ? a : a.primitive_part();
    Polynomial g = b.is_zero() ? b : b.primitive_part();
    // primitive PRS via pseudo-remainders
    while (!g.is_zero()) {
        if (f.degree() < g.degree()) std::swap(f, g);
        if (g.is_zero()) break;
        // pseudo-remainder of f by g
        int k = f.degree() - g.degree() + 1;
        Integer lg = g.leading();
        Polynomial r = f;
        for (int i = 0; i < k && !r.is_zero() && r.degree() >= g.degree(); ++i) {
            Integer lr = r.leading();
            int shift = r.degree() - g.degree();
            Polynomial shifted;
            {
                std::vector<Integer> sc(shift, Integer(0));
                for (const Integer& c : g.c_) sc.push_back(c * lr);
                shifted = Polynomial(std::move(sc));
            }
            r = r.mul_scalar(lg) - shifted;
        }
        f = g;
        g = r.is_zero() ? r : r.primitive_part();
    }
    Polynomial result = f.is_zero() ? f : f.primitive_part().mul_scalar(cg == 0 ? Integer(1) : cg);
    if (result.leading() < 0) result = -result;
    return result;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Integer a = c_[i] < 0 ? Integer(-c_[i]) : c_[i];
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace ogdegen
