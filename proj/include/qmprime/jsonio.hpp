#pragma once

#include <json.hpp>

#include "qmprime/extalg.hpp"
#include "qmprime/grobner.hpp"
#include "qmprime/laurent.hpp"
#include "qmprime/poisson.hpp"
#include "qmprime/qmatrix.hpp"

namespace qmprime {

using json = nlohmann::json;

/// {"exponent": "coefficient"} with string keys and values.
json to_json(const LaurentPoly& p);
json to_json(const RatFunc& r);
json to_json(const IndexSet& I);
json to_json(const MinorSpec& spec);
/// Term list [{"monomial": [[i,j,exp],...], "coeff": {...}}, ...].
json to_json(const QMPoly& f);
json to_json(const CPoly& f);

json to_json(const PosetReport& rep);
json to_json(const PairingResult& r);
json to_json(const PairingReport& rep);
json to_json(const DemazureReport& rep);
json to_json(const StratReport& rep);
json to_json(const PoissonReport& rep);

/// Matrix from a JSON array of arrays of rational strings ("p/q" or "p").
RatMatrix rat_matrix_from_json(const json& j);
json to_json(const RatMatrix& x);

struct EnumerationListing {
    int m = 0, n = 0;
    Perm w;
    std::vector<Perm> elements;
    std::vector<std::pair<int, int>> edges;
};

EnumerationListing enumerate_interval(int m, int n, ExecMode mode = default_exec_mode());
json to_json(const EnumerationListing& e);
/// Hasse diagram in DOT, nodes labeled with one-line form and length.
std::string to_dot(const EnumerationListing& e);

}  // namespace qmprime
