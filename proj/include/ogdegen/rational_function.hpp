#pragma once

#include <Eigen/Core>
#include <string>

#include "ogdegen/errors.hpp"
#include "ogdegen/polynomial.hpp"

namespace ogdegen {

/// Element of the fraction field Q(t), held as a pair of integer polynomials
/// in normal form: gcd(num, den) = 1 in Z[t] (content included) and the
/// denominator has a positive leading coefficient.  Equality is structural.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_{Integer(1)} {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    explicit RationalFunction(const Polynomial& num) : num_(num), den_{Integer(1)} { normalize(); }
    RationalFunction(const Rational& r)  // NOLINT: implicit embedding of Q
        : num_(numerator(r)), den_(denominator(r)) {}
    RationalFunction(int v) : num_(Integer(v)), den_{Integer(1)} {}  // NOLINT

    static RationalFunction t() { return RationalFunction(Polynomial::t()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    /// f(0); throws PoleAtZero when the (reduced) denominator vanishes at 0.
    Rational eval_at_zero() const {
        if (den_.constant_term() == 0)
            throw PoleAtZero("eval_at_zero: denominator vanishes at t=0");
        return Rational(num_.constant_term(), den_.constant_term());
    }

    /// f(x) for a rational point x with den(x) != 0.
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw PoleAtZero("eval: denominator vanishes");
        return num_.eval(x) / d;
    }

    RationalFunction operator-() const { return make_normalized(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    std::string str() const;

  private:
    static RationalFunction make_normalized(Polynomial n, Polynomial d) {
        RationalFunction f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;  // caller guarantees normal form
    }
    void normalize();
    Polynomial num_, den_;
};

std::string to_string(const RationalFunction& f);

}  // namespace ogdegen

namespace Eigen {

template <>
struct NumTraits<ogdegen::RationalFunction> : GenericNumTraits<ogdegen::RationalFunction> {
    using Real = ogdegen::RationalFunction;
    using NonInteger = ogdegen::RationalFunction;
    using Nested = ogdegen::RationalFunction;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = HugeCost,
        AddCost = HugeCost,
        MulCost = HugeCost,
    };
    static inline Real epsilon() { return Real(); }
    static inline Real dummy_precision() { return Real(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
