#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmprime/indexset.hpp"
#include "qmprime/laurent.hpp"
#include "qmprime/perm.hpp"

namespace qmprime {

/// Exponent vector over the variables x_ij in row-major order
/// (x_11, x_12, ..., x_mn).
using Monomial = std::vector<int>;

/// Multidegree in Z^{m+n}: (a_1..a_m, b_1..b_n), with deg x_ij = e_i - f_j.
using MultiDeg = std::vector<long>;

inline int var_index(int n, int i, int j) { return (i - 1) * n + (j - 1); }
inline int var_row(int n, int v) { return v / n + 1; }
inline int var_col(int n, int v) { return v % n + 1; }

long mono_degree(const Monomial& mono);
MultiDeg mono_multidegree(int m, int n, const Monomial& mono);
std::string mono_str(int n, const Monomial& mono);

/// Element of the quantum matrix algebra in PBW normal form: a finite map
/// from normal-ordered monomials to Laurent coefficients. The defining
/// relations, for i < l and j < k:
///
///   x_ij x_lj = q x_lj x_ij         x_ij x_ik = q x_ik x_ij
///   x_ij x_lk = x_lk x_ij  (j > k)  x_ij x_lk - x_lk x_ij = (q-q^-1) x_ik x_lj
class QMPoly {
public:
    using Terms = std::map<Monomial, LaurentPoly>;

    QMPoly() = default;
    QMPoly(int m, int n) : m_(m), n_(n) {}
    static QMPoly zero(int m, int n) { return QMPoly(m, n); }
    static QMPoly one(int m, int n);
    static QMPoly generator(int m, int n, int i, int j);
    static QMPoly monomial_term(int m, int n, Monomial mono, LaurentPoly coeff);

    int m() const { return m_; }
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Monomial& mono, const LaurentPoly& coeff);

    QMPoly operator-() const;
    QMPoly& operator+=(const QMPoly& o);
    QMPoly& operator-=(const QMPoly& o);
    friend QMPoly operator+(QMPoly a, const QMPoly& b) { return a += b; }
    friend QMPoly operator-(QMPoly a, const QMPoly& b) { return a -= b; }
    /// Product rewritten to PBW normal form by straightening.
    friend QMPoly operator*(const QMPoly& a, const QMPoly& b);
    QMPoly& operator*=(const QMPoly& o);

    QMPoly scaled(const LaurentPoly& c) const;

    bool operator==(const QMPoly& o) const;
    bool operator!=(const QMPoly& o) const { return !(*this == o); }

    /// "x11*x22 - q*x12*x21", degree-lexicographically largest monomial first.
    std::string str() const;

private:
    int m_ = 0, n_ = 0;
    Terms terms_;
};

/// Straightens an arbitrary word of variable indices into normal form,
/// scaled by coeff.
QMPoly straighten_word(int m, int n, const std::vector<int>& word, const LaurentPoly& coeff);

/// Quantum minor on rows I, columns J: sum over permutations sigma of
/// (-q)^{l(sigma)} x_{i_1 j_sigma(1)} ... x_{i_k j_sigma(k)}.
QMPoly qminor(int m, int n, const IndexSet& rows, const IndexSet& cols);
QMPoly qminor(int m, int n, const MinorSpec& spec);

/// The reversed-order expansion sum of (-q)^{-l(sigma)}
/// x_{i_k j_sigma(k)} ... x_{i_1 j_sigma(1)}, straightened. Normalizes to the
/// same element as qminor; the test and acceptance suites assert this.
QMPoly qminor_second(int m, int n, const IndexSet& rows, const IndexSet& cols);

/// One admissible (k, I) entry of the minor table attached to y.
struct AqEntry {
    int k = 0;
    IndexSet I;
    MinorSpec minor;
    bool duplicate = false;  // same minor already produced by an earlier entry
};

/// All admissible (k, I) pairs for y, in (k, I) order, with the minors they
/// name. pre: y <= c^m in S_{m+n}.
std::vector<AqEntry> aq_table(const Perm& y, int m, int n);

/// The deduplicated quantum minors generating the ideal attached to y.
std::vector<QMPoly> aq_generators(const Perm& y, int m, int n);
/// Same set, by the minors' row/column names.
std::vector<MinorSpec> aq_minor_specs(const Perm& y, int m, int n);

/// Common multidegree of a homogeneous element; nullopt when inhomogeneous
/// or zero.
std::optional<MultiDeg> multidegree(const QMPoly& f);

/// Action of (a_1..a_m, b_1..b_n): each monomial picks up
/// q^{sum exp_ij (a_i - b_j)}.
QMPoly scale_action(const std::vector<long>& ab, const QMPoly& f);

/// Commutative polynomial in the x_ij with exact rational coefficients; the
/// q = 1 shadow of QMPoly.
class CPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    CPoly() = default;
    CPoly(int m, int n) : m_(m), n_(n) {}
    static CPoly one(int m, int n);
    static CPoly generator(int m, int n, int i, int j);

    int m() const { return m_; }
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Monomial& mono, const Rational& coeff);

    CPoly operator-() const;
    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);

    CPoly scaled(const Rational& c) const;
    /// Partial derivative by x_ij.
    CPoly derivative(int i, int j) const;

    bool operator==(const CPoly& o) const;
    bool operator!=(const CPoly& o) const { return !(*this == o); }

    std::string str() const;

private:
    int m_ = 0, n_ = 0;
    Terms terms_;
};

/// Evaluates all coefficients at q = 1.
CPoly specialize_q1(const QMPoly& f);

/// Classical minor with (-1)^{l(sigma)} signs.
CPoly cminor(int m, int n, const IndexSet& rows, const IndexSet& cols);
CPoly cminor(int m, int n, const MinorSpec& spec);

}  // namespace qmprime
