#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmprime/indexset.hpp"
#include "qmprime/laurent.hpp"
#include "qmprime/parallel.hpp"
#include "qmprime/perm.hpp"
#include "qmprime/qmatrix.hpp"

namespace qmprime {

enum class AlgebraMode { quantum, commutative };
enum class IdealSide { right, two_sided };

/// Degree-lexicographic order with earlier (row-major) variables heavier;
/// "greater" compare, so ordered maps list the leading monomial first. The
/// straightening correction x_ik x_lj sits strictly below the leading
/// monomial x_ij x_lk under this order, which is what the completion needs.
struct TermOrderGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_quotient(const Monomial& b, const Monomial& a);  // b - a, pre: a | b

/// Polynomial over the fraction field of Z[q^{+-1}], in the quantum algebra
/// or its commutative q = 1 specialization. The working representation of
/// the reduction and completion machinery.
class GBPoly {
public:
    using Terms = std::map<Monomial, RatFunc, TermOrderGreater>;

    GBPoly() = default;
    GBPoly(int m, int n, AlgebraMode mode) : m_(m), n_(n), mode_(mode) {}
    static GBPoly from_quantum(const QMPoly& f);
    static GBPoly from_commutative(const CPoly& f);

    int m() const { return m_; }
    int n() const { return n_; }
    AlgebraMode mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    const Monomial& leading_monomial() const;  // pre: nonzero
    const RatFunc& leading_coeff() const;      // pre: nonzero

    void add_term(const Monomial& mono, const RatFunc& c);

    GBPoly operator-() const;
    GBPoly& operator+=(const GBPoly& o);
    GBPoly& operator-=(const GBPoly& o);
    friend GBPoly operator+(GBPoly a, const GBPoly& b) { return a += b; }
    friend GBPoly operator-(GBPoly a, const GBPoly& b) { return a -= b; }
    GBPoly scaled(const RatFunc& c) const;
    GBPoly monic() const;

    bool operator==(const GBPoly& o) const;
    bool operator!=(const GBPoly& o) const { return !(*this == o); }

    /// All monomials share one multidegree (zero counts as homogeneous).
    bool is_homogeneous() const;

    std::string str() const;

private:
    int m_ = 0, n_ = 0;
    AlgebraMode mode_ = AlgebraMode::quantum;
    Terms terms_;
};

/// monomial(d) * f and f * monomial(d), straightened in quantum mode.
GBPoly mul_mono_left(const Monomial& d, const GBPoly& f);
GBPoly mul_mono_right(const GBPoly& f, const Monomial& d);

/// Completed basis. gens are monic, minimized and tail-reduced, listed with
/// leading monomials descending, so a basis is a canonical object for its
/// ideal and the chosen order.
struct GroebnerBasis {
    AlgebraMode mode = AlgebraMode::quantum;
    IdealSide side = IdealSide::two_sided;
    int m = 0, n = 0;
    std::vector<GBPoly> gens;
    std::optional<long> degree_bound;
    /// Set when the bound pruned S-pairs or closure products; such a basis
    /// refuses membership queries.
    bool truncated = false;
};

/// Full normal form of f: no monomial of the result is divisible by any
/// leading monomial of the basis. Uses multiples on the side the basis was
/// built for. Throws on a truncated basis.
GBPoly reduce(const GBPoly& f, const GroebnerBasis& basis);
GBPoly reduce(const QMPoly& f, const GroebnerBasis& basis);

/// Two-sided completion: left Buchberger closure plus right multiplication
/// by every variable, iterated to a fixpoint. Deterministic: S-pairs are
/// processed smallest lcm first.
GroebnerBasis two_sided_groebner(int m, int n, const std::vector<QMPoly>& gens,
                                 std::optional<long> degree_bound = {});

/// Right-ideal basis via the mirrored completion.
GroebnerBasis right_groebner(int m, int n, const std::vector<QMPoly>& gens,
                             std::optional<long> degree_bound = {});

/// Buchberger in the commutative q = 1 specialization.
GroebnerBasis commutative_groebner(int m, int n, const std::vector<CPoly>& gens,
                                   std::optional<long> degree_bound = {});

/// Containment of the ideal generated by a_gens (on b's side) in the ideal
/// of b: every generator reduces to zero.
bool ideal_contains(const std::vector<QMPoly>& a_gens, const GroebnerBasis& b);
bool ideal_contains(const std::vector<GBPoly>& a_gens, const GroebnerBasis& b);
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

/// Verifies that straightening any descending variable pair yields the
/// swapped monomial times a unit plus strictly smaller terms; the premise of
/// the whole Groebner layer. Throws when violated.
void assert_pbw_compatible(int m, int n);

struct PosetIdealInfo {
    Perm y;
    std::vector<MinorSpec> generators;
    std::size_t right_basis_size = 0;
    std::size_t two_sided_basis_size = 0;
    bool homogeneous = false;
    bool right_equals_two_sided = false;
};

struct PosetReport {
    int m = 0, n = 0;
    std::vector<PosetIdealInfo> ideals;
    std::vector<std::vector<char>> inclusion;  // inclusion[a][b]: I(y_a) <= I(y_b)
    std::vector<std::vector<char>> bruhat;     // bruhat[a][b]: y_a <= y_b
    bool ok = false;
    std::vector<std::string> failures;
};

/// Enumerates the Bruhat interval under c^m, builds every ideal basis, and
/// checks: inclusion matrix equals the Bruhat matrix, ideals pairwise
/// distinct, right ideal equals two-sided ideal, all generators homogeneous.
PosetReport verify_poset(int m, int n, ExecMode mode = default_exec_mode());

}  // namespace qmprime
