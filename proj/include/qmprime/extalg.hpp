#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qmprime/indexset.hpp"
#include "qmprime/laurent.hpp"
#include "qmprime/parallel.hpp"
#include "qmprime/perm.hpp"
#include "qmprime/qmatrix.hpp"

namespace qmprime {

/// Element of the degree-k graded piece of the quantum exterior algebra on
/// v_1..v_N, with relations v_i v_j = -q^-1 v_j v_i for i > j and v_i^2 = 0.
/// Basis monomials u_I are the increasing products indexed by k-subsets.
class ExtVec {
public:
    using Terms = std::map<IndexSet, LaurentPoly>;

    ExtVec() = default;
    ExtVec(int N, int k) : N_(N), k_(k) {}
    static ExtVec basis(int N, const IndexSet& I);

    int ambient() const { return N_; }
    int degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const IndexSet& I, const LaurentPoly& c);

    ExtVec operator-() const;
    ExtVec& operator+=(const ExtVec& o);
    ExtVec& operator-=(const ExtVec& o);
    friend ExtVec operator+(ExtVec a, const ExtVec& b) { return a += b; }
    friend ExtVec operator-(ExtVec a, const ExtVec& b) { return a -= b; }
    ExtVec scaled(const LaurentPoly& c) const;

    bool operator==(const ExtVec& o) const;
    bool operator!=(const ExtVec& o) const { return !(*this == o); }

    std::string str() const;

private:
    int N_ = 0, k_ = 0;
    Terms terms_;
};

/// Result of sorting a word of generator indices: zero on a repeated index,
/// otherwise the index set together with the accumulated unit (-q^-1) per
/// descending adjacent swap.
struct ExtMono {
    bool zero = true;
    IndexSet set;
    LaurentPoly coeff;
};

ExtMono ext_normalize(int N, const std::vector<int>& word);

/// The root-vector operator Y_ij (i < j) acting on a basis vector u_I: zero
/// when j is absent or i present; otherwise u_I is rewritten as a multiple of
/// u_{I\{j}} v_j, Y_ij replaces the trailing v_j by v_i, and the result is
/// renormalized. Extended linearly.
ExtVec raise_op(int i, int j, const ExtVec& v);

/// Support-level simple lowering F_a: adds (I\{a}) u {a+1} for every I in S
/// with a present and a+1 absent.
std::set<IndexSet> lower_support(int a, const std::set<IndexSet>& S);

/// Support of the orbit U_- T_y v_{1..k}: the closure of {y({1..k})} under
/// all simple lowerings. Checked against the characterization
/// { I : I >= y({1..k}) }; a mismatch throws.
std::set<IndexSet> uminus_span_indices(const Perm& y, int k);

/// Demazure span minus orbit span, the representation-theoretic route to the
/// index sets naming the ideal generators. Checked against
/// complement_index_sets; a mismatch throws.
std::set<IndexSet> ortho_complement_indices(const Perm& w, const Perm& y, int k);

/// One truncated R-matrix pairing: the mixed tensor built from
/// u_{w_m(c^m({1..k}))} (x) 1 by the ordered product of factors
/// (1 + Y_{i,m+j} (x) x_ij), read off at u_{w_m(I)}.
struct PairingResult {
    int k = 0;
    IndexSet I;
    MinorSpec minor;    // the minor predicted for (k, I)
    RatFunc scalar;     // paired = scalar * qminor(minor)
    QMPoly paired;      // coefficient extracted from the mixed tensor
};

/// Runs the pairing for one admissible (k, I); throws when the extracted
/// coefficient is zero or fails to be a scalar multiple of the predicted
/// quantum minor.
PairingResult rmatrix_pairing(int m, int n, int k, const IndexSet& I);

/// All admissible (k, I) for the algebra of size (m, n).
std::vector<std::pair<int, IndexSet>> admissible_pairs(int m, int n);

/// Pairings for every admissible (k, I), in (k, I) order.
std::vector<PairingResult> pairing_sweep(int m, int n, ExecMode mode = default_exec_mode());

/// Outcome of the representation-theory checks for one algebra size:
/// the double-route comparison for every y <= c^m and every k, plus the
/// operator identities on the exterior algebra of rank m+n.
struct DemazureReport {
    int m = 0, n = 0;
    int routes_checked = 0;
    int operators_checked = 0;
    bool ok = false;
    std::vector<std::string> failures;
};

DemazureReport verify_demazure(int m, int n);

/// Pairing sweep with a pass/fail summary.
struct PairingReport {
    int m = 0, n = 0;
    std::vector<PairingResult> results;
    bool ok = false;
    std::vector<std::string> failures;
};

PairingReport verify_rmatrix(int m, int n, ExecMode mode = default_exec_mode());

}  // namespace qmprime
