#include "qmprime/laurent.hpp"

#include <sstream>
#include <vector>

namespace qmprime {

namespace {

// Desk-scale degrees are tiny; anything near this bound is a bug upstream.
constexpr long kMaxExp = 1L << 40;

void check_exp(long e) {
    if (e > kMaxExp || e < -kMaxExp)
        throw std::overflow_error("LaurentPoly: exponent overflow");
}

// Dense ordinary polynomial in q, constant term first.
using Dense = std::vector<BigInt>;

Dense to_dense(const LaurentPoly& p, long* shift) {
    *shift = p.is_zero() ? 0 : p.min_exp();
    Dense d;
    if (p.is_zero()) return d;
    d.assign(static_cast<size_t>(p.max_exp() - p.min_exp()) + 1, BigInt(0));
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e - *shift)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, long shift) {
    LaurentPoly out;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) out.set_coeff(shift + static_cast<long>(i), d[i]);
    return out;
}

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rational> to_rat(const Dense& d) {
    std::vector<Rational> v(d.size());
    for (size_t i = 0; i < d.size(); ++i) v[i] = Rational(d[i]);
    trim(v);
    return v;
}

// Remainder of a by b in Q[q]; b nonzero.
std::vector<Rational> rat_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

// Scale a Q[q] polynomial to a primitive Z[q] polynomial with positive
// leading coefficient.
Dense primitive_int(const std::vector<Rational>& v) {
    if (v.empty()) return {};
    BigInt den_lcm = 1;
    for (const auto& c : v) {
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Dense z(v.size());
    BigInt g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(den_lcm);
        s.canonicalize();
        z[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (g == 0) return {};
    if ((z.back() < 0 && g > 0) || (z.back() > 0 && g < 0)) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

// gcd in Z[q], primitive with positive leading coefficient; inputs nonzero.
Dense dense_gcd(const Dense& a, const Dense& b) {
    std::vector<Rational> x = to_rat(a), y = to_rat(b);
    while (!y.empty()) {
        auto r = rat_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return primitive_int(x);
}

}  // namespace

LaurentPoly LaurentPoly::term(const BigInt& c, long e) {
    check_exp(e);
    LaurentPoly p;
    p.set_coeff(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const BigInt& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("LaurentPoly::unit_inverse: not a unit");
    return term(terms_.begin()->second, -terms_.begin()->first);
}

long LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly::min_exp of zero");
    return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("LaurentPoly::max_exp of zero");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::eval_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::set_coeff(long e, const BigInt& c) {
    check_exp(e);
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void LaurentPoly::add_term(long e, const BigInt& c) {
    check_exp(e);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            check_exp(ea + eb);
            out.add_term(ea + eb, ca * cb);
        }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

void LaurentPoly::shift(long e) {
    if (e == 0 || is_zero()) return;
    Terms moved;
    for (const auto& [ex, c] : terms_) {
        check_exp(ex + e);
        moved.emplace(ex + e, c);
    }
    terms_ = std::move(moved);
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

BigInt LaurentPoly::leading_coeff() const {
    return is_zero() ? BigInt(0) : terms_.rbegin()->second;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (p.is_zero()) return LaurentPoly();
    long sp = 0, sd = 0;
    Dense P = to_dense(p, &sp), D = to_dense(d, &sd);
    if (P.size() < D.size()) return std::nullopt;
    std::vector<Rational> rem = to_rat(P);
    std::vector<Rational> div = to_rat(D);
    std::vector<Rational> quot(P.size() - D.size() + 1, Rational(0));
    while (rem.size() >= div.size() && !rem.empty()) {
        Rational f = rem.back() / div.back();
        f.canonicalize();
        size_t off = rem.size() - div.size();
        quot[off] = f;
        for (size_t i = 0; i < div.size(); ++i) {
            rem[off + i] -= f * div[i];
            rem[off + i].canonicalize();
        }
        trim(rem);
    }
    if (!rem.empty()) return std::nullopt;
    LaurentPoly out;
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        if (quot[i].get_den() != 1) return std::nullopt;
        out.set_coeff(sp - sd + static_cast<long>(i), quot[i].get_num());
    }
    return out;
}

LaurentPoly q_int(long n) {
    if (n < 0) throw std::domain_error("q_int: negative argument");
    if (n == 0) return LaurentPoly();
    LaurentPoly num = LaurentPoly::q_power(n) - LaurentPoly::q_power(-n);
    LaurentPoly den = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    auto res = divide_exact(num, den);
    if (!res) throw std::logic_error("q_int: inexact division");
    return *res;
}

LaurentPoly q_fact(long n) {
    if (n < 0) throw std::domain_error("q_fact: negative argument");
    LaurentPoly out(1);
    for (long k = 1; k <= n; ++k) out *= q_int(k);
    return out;
}

LaurentPoly q_binom(long n, long m) {
    if (m < 0 || m > n) throw std::domain_error("q_binom: require 0 <= m <= n");
    auto res = divide_exact(q_fact(n), q_fact(m) * q_fact(n - m));
    if (!res) throw std::logic_error("q_binom: inexact division");
    return *res;
}

BigInt eval_q1(const LaurentPoly& p) { return p.eval_one(); }

LaurentPoly div_qminus1(const LaurentPoly& p) {
    if (p.eval_one() != 0) throw std::domain_error("div_qminus1: p(1) != 0");
    auto res = divide_exact(p, LaurentPoly::q() - LaurentPoly(1));
    if (!res) throw std::logic_error("div_qminus1: inexact division");
    return *res;
}

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

RatFunc RatFunc::from_rational(const Rational& r) {
    return RatFunc(LaurentPoly(BigInt(r.get_num())), LaurentPoly(BigInt(r.get_den())));
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    long sn = num_.min_exp(), sd = den_.min_exp();
    num_.shift(-sn);
    den_.shift(-sd);
    long qshift = sn - sd;

    long z = 0;
    Dense N = to_dense(num_, &z), D = to_dense(den_, &z);
    Dense g = dense_gcd(N, D);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
        LaurentPoly gp = from_dense(g, 0);
        num_ = *divide_exact(num_, gp);
        den_ = *divide_exact(den_, gp);
    }
    BigInt c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (c > 1) {
        num_ = *divide_exact(num_, LaurentPoly(c));
        den_ = *divide_exact(den_, LaurentPoly(c));
    }
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    num_.shift(qshift);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc::inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

Rational RatFunc::eval_one() const {
    BigInt d = den_.eval_one();
    if (d == 0) throw std::domain_error("RatFunc::eval_one: pole at q = 1");
    Rational r(num_.eval_one(), d);
    r.canonicalize();
    return r;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace qmprime
