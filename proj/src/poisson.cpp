#include "qmprime/poisson.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qmprime {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::permutation(const Perm& w) {
    RatMatrix m(w.size(), w.size());
    for (int j = 1; j <= w.size(); ++j) m.at(w(j), j) = 1;
    return m;
}

Rational& RatMatrix::at(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("RatMatrix::at: index out of range");
    return a_[static_cast<size_t>((i - 1) * cols_ + (j - 1))];
}

const Rational& RatMatrix::at(int i, int j) const {
    return const_cast<RatMatrix*>(this)->at(i, j);
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: dimension mismatch");
    RatMatrix out(rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int k = 1; k <= cols_; ++k) {
            const Rational& f = at(i, k);
            if (f == 0) continue;
            for (int j = 1; j <= o.cols_; ++j) out.at(i, j) += f * o.at(k, j);
        }
    return out;
}

int RatMatrix::northwest_rank(int r, int c) const {
    if (r < 0 || r > rows_ || c < 0 || c > cols_)
        throw std::out_of_range("northwest_rank: index out of range");
    if (r == 0 || c == 0) return 0;
    // Clear denominators rowwise, then run fraction-free (Bareiss)
    // elimination over the integers.
    std::vector<std::vector<BigInt>> M(static_cast<size_t>(r),
                                       std::vector<BigInt>(static_cast<size_t>(c)));
    for (int i = 1; i <= r; ++i) {
        BigInt lcm = 1;
        for (int j = 1; j <= c; ++j) {
            mpz_class d = at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        }
        for (int j = 1; j <= c; ++j) {
            Rational s = at(i, j) * Rational(lcm);
            s.canonicalize();
            M[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = s.get_num();
        }
    }
    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < c && rank < r; ++col) {
        int pivot = -1;
        for (int row = rank; row < r; ++row)
            if (M[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[static_cast<size_t>(pivot)], M[static_cast<size_t>(rank)]);
        for (int row = rank + 1; row < r; ++row) {
            for (int j = col + 1; j < c; ++j) {
                BigInt t = M[static_cast<size_t>(row)][static_cast<size_t>(j)] *
                               M[static_cast<size_t>(rank)][static_cast<size_t>(col)] -
                           M[static_cast<size_t>(row)][static_cast<size_t>(col)] *
                               M[static_cast<size_t>(rank)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                M[static_cast<size_t>(row)][static_cast<size_t>(j)] = t;
            }
            M[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
        }
        prev = M[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        ++rank;
    }
    return rank;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= rows_; ++i) {
        os << (i > 1 ? ",[" : "[");
        for (int j = 1; j <= cols_; ++j) os << (j > 1 ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

int sign_of(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// {x_ij, x_kl} = (sign(k-i) + sign(l-j)) x_il x_kj.
CPoly coordinate_bracket(int m, int n, int i, int j, int k, int l) {
    int c = sign_of(k - i) + sign_of(l - j);
    CPoly out(m, n);
    if (c == 0) return out;
    Monomial mono(static_cast<size_t>(m * n), 0);
    ++mono[static_cast<size_t>(var_index(n, i, l))];
    ++mono[static_cast<size_t>(var_index(n, k, j))];
    out.add_term(mono, c);
    return out;
}

CPoly mono_without(int m, int n, const Monomial& mono, size_t v) {
    Monomial d = mono;
    --d[v];
    CPoly out(m, n);
    out.add_term(d, 1);
    return out;
}

}  // namespace

CPoly bracket(const CPoly& f, const CPoly& g) {
    if (f.m() != g.m() || f.n() != g.n()) throw std::invalid_argument("bracket: shape mismatch");
    const int m = f.m(), n = f.n();
    CPoly out(m, n);
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            for (size_t a = 0; a < mf.size(); ++a) {
                if (mf[a] == 0) continue;
                for (size_t b = 0; b < mg.size(); ++b) {
                    if (mg[b] == 0) continue;
                    CPoly base = coordinate_bracket(m, n, var_row(n, static_cast<int>(a)),
                                                    var_col(n, static_cast<int>(a)),
                                                    var_row(n, static_cast<int>(b)),
                                                    var_col(n, static_cast<int>(b)));
                    if (base.is_zero()) continue;
                    CPoly rest = mono_without(m, n, mf, a) * mono_without(m, n, mg, b);
                    out += (base * rest).scaled(cf * cg * Rational(mf[a]) * Rational(mg[b]));
                }
            }
    return out;
}

namespace {

std::pair<int, int> generator_of(const QMPoly& u) {
    if (u.terms().size() != 1) throw std::domain_error("semiclassical_check: not a generator");
    const auto& [mono, c] = *u.terms().begin();
    if (!c.is_one()) throw std::domain_error("semiclassical_check: not a generator");
    int found = -1;
    for (size_t v = 0; v < mono.size(); ++v) {
        if (mono[v] == 0) continue;
        if (mono[v] != 1 || found >= 0)
            throw std::domain_error("semiclassical_check: not a generator");
        found = static_cast<int>(v);
    }
    if (found < 0) throw std::domain_error("semiclassical_check: not a generator");
    return {var_row(u.n(), found), var_col(u.n(), found)};
}

}  // namespace

bool semiclassical_check(const QMPoly& u, const QMPoly& v) {
    auto [i, j] = generator_of(u);
    auto [k, l] = generator_of(v);
    const int m = u.m(), n = u.n();
    QMPoly comm = u * v - v * u;
    CPoly limit(m, n);
    for (const auto& [mono, c] : comm.terms())
        limit.add_term(mono, Rational(div_qminus1(c).eval_one()));
    CPoly expected = bracket(CPoly::generator(m, n, i, j), CPoly::generator(m, n, k, l));
    return limit == expected;
}

std::vector<CPoly> a_generators(const Perm& y, int m, int n) {
    std::vector<CPoly> out;
    for (const auto& spec : aq_minor_specs(y, m, n)) out.push_back(cminor(m, n, spec));
    return out;
}

Perm bruhat_cell_of(const RatMatrix& g) {
    const int N = g.rows();
    if (N != g.cols()) throw std::invalid_argument("bruhat_cell_of: square matrix required");
    std::vector<std::vector<int>> r(static_cast<size_t>(N + 1),
                                    std::vector<int>(static_cast<size_t>(N + 1), 0));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            r[static_cast<size_t>(i)][static_cast<size_t>(j)] = g.northwest_rank(i, j);
    std::vector<int> oneline(static_cast<size_t>(N), 0);
    for (int j = 1; j <= N; ++j) {
        int row = 0;
        for (int i = 1; i <= N; ++i)
            if (r[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                r[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] + 1) {
                row = i;
                break;
            }
        if (row == 0) throw std::logic_error("bruhat_cell_of: rank table has no jump; singular?");
        oneline[static_cast<size_t>(j - 1)] = row;
    }
    Perm y((std::vector<int>(oneline)));
    // The full table must be consistent with y, not just the first jumps.
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            int cnt = 0;
            for (int b = 1; b <= j; ++b)
                if (y(b) <= i) ++cnt;
            if (cnt != r[static_cast<size_t>(i)][static_cast<size_t>(j)])
                throw std::logic_error("bruhat_cell_of: inconsistent rank table");
        }
    return y;
}

Perm leaf_of(const RatMatrix& x, int m, int n) {
    if (x.rows() != m || x.cols() != n) throw std::invalid_argument("leaf_of: shape mismatch");
    const int N = m + n;
    RatMatrix f = RatMatrix::identity(N);
    // top-right block is w_m * x, i.e. x with rows reversed
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) f.at(i, m + j) = x.at(m + 1 - i, j);
    RatMatrix g = f * RatMatrix::permutation(coxeter_power(N, m));
    return bruhat_cell_of(g);
}

mpq_class eval_cpoly(const CPoly& f, const RatMatrix& x) {
    if (x.rows() != f.m() || x.cols() != f.n())
        throw std::invalid_argument("eval_cpoly: shape mismatch");
    Rational total = 0;
    for (const auto& [mono, c] : f.terms()) {
        Rational t = c;
        for (size_t v = 0; v < mono.size(); ++v)
            for (int e = 0; e < mono[v]; ++e)
                t *= x.at(var_row(f.n(), static_cast<int>(v)), var_col(f.n(), static_cast<int>(v)));
        total += t;
    }
    return total;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
    // Explicit modular sampling keeps streams identical across platforms.
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational random_nonzero(std::mt19937_64& rng) {
    while (true) {
        Rational r = random_rational(rng);
        if (r != 0) return r;
    }
}

RatMatrix random_matrix(int m, int n, std::mt19937_64& rng) {
    RatMatrix x(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) x.at(i, j) = random_rational(rng);
    return x;
}

}  // namespace

StratReport verify_stratification(int m, int n, int random_samples, std::uint64_t seed,
                                  int torus_trials, ExecMode mode) {
    StratReport rep;
    rep.m = m;
    rep.n = n;
    rep.seed = seed;
    const int cells = m * n;
    if (cells > 16) throw std::domain_error("verify_stratification: too many cells");

    const Perm w = coxeter_power(m + n, m);
    const std::vector<Perm> ys = interval_below(w);
    std::vector<std::vector<std::pair<MinorSpec, CPoly>>> gens(ys.size());
    for (size_t t = 0; t < ys.size(); ++t) {
        auto specs = aq_minor_specs(ys[t], m, n);
        for (const auto& spec : specs) gens[t].emplace_back(spec, cminor(m, n, spec));
    }

    std::vector<RatMatrix> samples;
    for (size_t mask = 0; mask < (size_t{1} << cells); ++mask) {
        RatMatrix x(m, n);
        for (int v = 0; v < cells; ++v)
            if (mask & (size_t{1} << v)) x.at(var_row(n, v), var_col(n, v)) = 1;
        samples.push_back(std::move(x));
    }
    rep.zero_one_samples = static_cast<int>(samples.size());
    std::mt19937_64 rng(seed);
    for (int s = 0; s < random_samples; ++s) samples.push_back(random_matrix(m, n, rng));
    rep.random_samples = random_samples;

    std::vector<std::string> errors(samples.size());
    parallel_for(mode, samples.size(), [&](std::size_t s) {
        const RatMatrix& x = samples[s];
        Perm yx = leaf_of(x, m, n);
        std::ostringstream err;
        for (size_t t = 0; t < ys.size(); ++t) {
            bool vanish = true;
            const MinorSpec* offender = nullptr;
            for (const auto& [spec, poly] : gens[t])
                if (eval_cpoly(poly, x) != 0) {
                    vanish = false;
                    offender = &spec;
                    break;
                }
            bool expected = bruhat_leq(ys[t], yx);
            if (vanish != expected) {
                err << "x=" << x.str() << " leaf=" << yx.str() << " y=" << ys[t].str()
                    << ": vanishing=" << (vanish ? "yes" : "no") << " but Bruhat says "
                    << (expected ? "yes" : "no");
                if (offender) err << " (witness minor " << offender->str() << ")";
                err << "; ";
            }
        }
        errors[s] = err.str();
    });
    rep.ok = true;
    for (const auto& e : errors)
        if (!e.empty()) {
            rep.ok = false;
            rep.failures.push_back(e);
        }

    // Torus invariance: leaf_of(x) = leaf_of(A x B^-1) for invertible
    // diagonal A, B.
    rep.torus_trials = torus_trials;
    for (int t = 0; t < torus_trials; ++t) {
        RatMatrix x = random_matrix(m, n, rng);
        RatMatrix scaled(m, n);
        std::vector<Rational> A, B;
        for (int i = 0; i < m; ++i) A.push_back(random_nonzero(rng));
        for (int j = 0; j < n; ++j) B.push_back(random_nonzero(rng));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                scaled.at(i, j) =
                    x.at(i, j) * A[static_cast<size_t>(i - 1)] / B[static_cast<size_t>(j - 1)];
        if (!(leaf_of(x, m, n) == leaf_of(scaled, m, n))) {
            rep.ok = false;
            rep.failures.push_back("torus scaling moved the leaf of x=" + x.str());
        }
    }
    return rep;
}

bool poisson_ideal_check(const Perm& y, int m, int n) {
    std::vector<CPoly> gens = a_generators(y, m, n);
    if (gens.empty()) return true;
    GroebnerBasis basis = commutative_groebner(m, n, gens);
    for (const auto& g : gens)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) {
                CPoly br = bracket(g, CPoly::generator(m, n, i, j));
                if (!reduce(GBPoly::from_commutative(br), basis).is_zero()) return false;
            }
    return true;
}

PoissonReport verify_poisson(int m, int n, ExecMode mode) {
    PoissonReport rep;
    rep.m = m;
    rep.n = n;
    rep.ok = true;
    const int cells = m * n;

    std::vector<CPoly> coords;
    std::vector<QMPoly> qcoords;
    for (int v = 0; v < cells; ++v) {
        coords.push_back(CPoly::generator(m, n, var_row(n, v), var_col(n, v)));
        qcoords.push_back(QMPoly::generator(m, n, var_row(n, v), var_col(n, v)));
    }

    // Antisymmetry and Jacobi on coordinates; both extend by Leibniz.
    for (int a = 0; a < cells; ++a)
        for (int b = 0; b < cells; ++b) {
            if (!(bracket(coords[a], coords[b]) + bracket(coords[b], coords[a])).is_zero()) {
                rep.ok = false;
                rep.failures.push_back("antisymmetry fails at (" + coords[a].str() + "," +
                                       coords[b].str() + ")");
            }
        }
    for (int a = 0; a < cells; ++a)
        for (int b = 0; b < cells; ++b)
            for (int c = 0; c < cells; ++c) {
                CPoly jac = bracket(bracket(coords[a], coords[b]), coords[c]) +
                            bracket(bracket(coords[b], coords[c]), coords[a]) +
                            bracket(bracket(coords[c], coords[a]), coords[b]);
                if (!jac.is_zero()) {
                    rep.ok = false;
                    rep.failures.push_back("Jacobi fails at coordinate triple (" +
                                           std::to_string(a) + "," + std::to_string(b) + "," +
                                           std::to_string(c) + ")");
                }
                ++rep.bracket_triples;
            }

    for (int a = 0; a < cells; ++a)
        for (int b = 0; b < cells; ++b) {
            if (!semiclassical_check(qcoords[a], qcoords[b])) {
                rep.ok = false;
                rep.failures.push_back("semiclassical limit fails at pair (" + std::to_string(a) +
                                       "," + std::to_string(b) + ")");
            }
            ++rep.semiclassical_pairs;
        }

    const Perm w = coxeter_power(m + n, m);
    const std::vector<Perm> ys = interval_below(w);
    std::vector<std::string> errors(ys.size());
    parallel_for(mode, ys.size(), [&](std::size_t t) {
        std::ostringstream err;
        std::vector<CPoly> classical = a_generators(ys[t], m, n);
        std::vector<QMPoly> quantum = aq_generators(ys[t], m, n);
        if (classical.size() != quantum.size()) {
            err << "generator count mismatch for y=" << ys[t].str() << "; ";
        } else {
            for (size_t g = 0; g < classical.size(); ++g)
                if (!(specialize_q1(quantum[g]) == classical[g]))
                    err << "q=1 specialization mismatch for y=" << ys[t].str() << "; ";
        }
        if (!poisson_ideal_check(ys[t], m, n))
            err << "Poisson ideal check fails for y=" << ys[t].str() << "; ";
        errors[t] = err.str();
    });
    rep.ideals_checked = static_cast<int>(ys.size());
    for (const auto& e : errors)
        if (!e.empty()) {
            rep.ok = false;
            rep.failures.push_back(e);
        }
    return rep;
}

}  // namespace qmprime
