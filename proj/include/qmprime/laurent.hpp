#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qmprime {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored as a sparse exponent -> coefficient map; zero coefficients are
/// never kept. All arithmetic is exact.
class LaurentPoly {
public:
    using Terms = std::map<long, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c) { set_coeff(0, BigInt(c)); }
    LaurentPoly(const BigInt& c) { set_coeff(0, c); }

    /// c * q^e
    static LaurentPoly term(const BigInt& c, long e);
    static LaurentPoly q_power(long e) { return term(1, e); }
    static LaurentPoly q() { return q_power(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// A unit of Z[q^{+-1}], i.e. +-q^e.
    bool is_unit() const;
    bool is_single_term() const { return terms_.size() == 1; }

    /// Inverse of a unit +-q^e; throws std::domain_error otherwise.
    LaurentPoly unit_inverse() const;

    long min_exp() const;  // pre: nonzero
    long max_exp() const;  // pre: nonzero
    BigInt coeff(long e) const;
    const Terms& terms() const { return terms_; }

    /// Sum of coefficients = evaluation at q = 1.
    BigInt eval_one() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// Multiply by q^e in place.
    void shift(long e);

    /// Positive integer gcd of all coefficients; 0 for the zero polynomial.
    BigInt content() const;

    /// Coefficient of the highest power of q; 0 for the zero polynomial.
    BigInt leading_coeff() const;

    /// "3*q^2 - q^-1 + 7"; highest exponent first.
    std::string str() const;

    void set_coeff(long e, const BigInt& c);
    void add_term(long e, const BigInt& c);

private:
    Terms terms_;
};

/// Exact quotient p / d in Z[q^{+-1}], or nullopt when d does not divide p.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d);

/// Balanced q-integer [n]_q = (q^n - q^-n) / (q - q^-1). pre: n >= 0.
LaurentPoly q_int(long n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
LaurentPoly q_fact(long n);
/// Gaussian binomial [n m]_q = [n]_q! / ([m]_q! [n-m]_q!). pre: 0 <= m <= n.
LaurentPoly q_binom(long n, long m);

BigInt eval_q1(const LaurentPoly& p);
/// Exact quotient p / (q - 1); throws std::domain_error when p(1) != 0.
LaurentPoly div_qminus1(const LaurentPoly& p);

/// Element of the fraction field of Z[q^{+-1}], i.e. a rational function of q.
///
/// Kept in a canonical reduced form: the denominator is an ordinary polynomial
/// with nonzero constant term, positive leading coefficient, and no common
/// polynomial or integer-content factor with the numerator. Equality is
/// therefore plain structural comparison.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& n) : num_(n), den_(1) {}
    RatFunc(const LaurentPoly& n, const LaurentPoly& d);
    static RatFunc from_rational(const Rational& r);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc inverse() const;  // throws std::domain_error on zero
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Evaluation at q = 1; throws std::domain_error when den(1) = 0.
    Rational eval_one() const;

    std::string str() const;

private:
    void normalize();
    LaurentPoly num_, den_;
};

}  // namespace qmprime
