#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmprime/grobner.hpp"
#include "qmprime/parallel.hpp"
#include "qmprime/perm.hpp"
#include "qmprime/qmatrix.hpp"

namespace qmprime {

/// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);
    static RatMatrix permutation(const Perm& w);  // 1 at row w(j), column j

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j);              // 1-based
    const Rational& at(int i, int j) const;  // 1-based

    RatMatrix operator*(const RatMatrix& o) const;

    /// Rank of the leading i x j submatrix, by fraction-free elimination on
    /// the denominator-cleared integer matrix.
    int northwest_rank(int i, int j) const;
    int rank() const { return northwest_rank(rows_, cols_); }

    bool operator==(const RatMatrix& o) const;
    std::string str() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// The quadratic matrix affine Poisson bracket, defined on coordinates by
/// {x_ij, x_kl} = (sign(k-i) + sign(l-j)) x_il x_kj and extended by
/// bilinearity and Leibniz.
CPoly bracket(const CPoly& f, const CPoly& g);

/// Checks (uv - vu)/(q-1) at q = 1 against the bracket; u and v must be
/// single generators x_ij.
bool semiclassical_check(const QMPoly& u, const QMPoly& v);

/// Classical minors over the same (k, I) range as the quantum generator
/// sets; equals specialize_q1 of the quantum set. pre: y <= c^m.
std::vector<CPoly> a_generators(const Perm& y, int m, int n);

/// The permutation y with g in B_- y B_+, recovered from northwest ranks.
/// pre: g invertible.
Perm bruhat_cell_of(const RatMatrix& g);

/// Leaf classification of an m x n rational matrix: forms
/// g = f(x) * (matrix of c^m) with f(x) = [[I_m, w_m x], [0, I_n]] and reads
/// off its Bruhat cell.
Perm leaf_of(const RatMatrix& x, int m, int n);

mpq_class eval_cpoly(const CPoly& f, const RatMatrix& x);

struct StratReport {
    int m = 0, n = 0;
    std::uint64_t seed = 0;
    int zero_one_samples = 0;
    int random_samples = 0;
    int torus_trials = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

/// For each sample matrix x: every minor in A(y) vanishes at x iff
/// y <= leaf_of(x), over all y <= c^m; plus invariance of leaf_of under the
/// diagonal torus action. Samples are all zero-one matrices plus seeded
/// random rationals.
StratReport verify_stratification(int m, int n, int random_samples, std::uint64_t seed,
                                  int torus_trials = 50, ExecMode mode = default_exec_mode());

/// Every bracket {g, x_ij} with g in A(y) reduces to zero modulo the
/// commutative basis of A(y).
bool poisson_ideal_check(const Perm& y, int m, int n);

struct PoissonReport {
    int m = 0, n = 0;
    int bracket_triples = 0;
    int semiclassical_pairs = 0;
    int ideals_checked = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

/// Bracket antisymmetry and Jacobi on all coordinate triples, the
/// semiclassical limit on all generator pairs, a_generators equal to the
/// q = 1 specializations, and poisson_ideal_check for every y <= c^m.
PoissonReport verify_poisson(int m, int n, ExecMode mode = default_exec_mode());

}  // namespace qmprime
