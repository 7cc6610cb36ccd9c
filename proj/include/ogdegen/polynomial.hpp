#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ogdegen/rational.hpp"

namespace ogdegen {

/// Univariate polynomial in t with arbitrary-precision integer coefficients,
/// stored lowest degree first.  The zero polynomial has no coefficients; any
/// other polynomial has a nonzero leading coefficient.  Content is not
/// normalized here; the fraction field divides it out.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Integer> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit Polynomial(const Integer& constant) {
        if (constant != 0) c_.push_back(constant);
    }

    static Polynomial t() { return Polynomial{Integer(0), Integer(1)}; }

    bool is_zero() const { return c_.empty(); }
    /// Degree, with the convention deg(0) = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    /// Coefficient of t^i (zero beyond the degree).
    Integer coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Integer(0);
    }
    Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }
    Integer constant_term() const { return coeff(0); }

    /// gcd of the coefficients' absolute values (0 for the zero polynomial).
    Integer content() const;
    Polynomial primitive_part() const;

    Rational eval(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial mul_scalar(const Integer& s) const;
    /// Quotient of an exact division; throws std::domain_error if b does not
    /// divide a in Z[t].
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);
    /// gcd in Z[t] (content included), normalized to a positive leading coefficient.
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

}  // namespace ogdegen
