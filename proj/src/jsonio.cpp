#include "qmprime/jsonio.hpp"

#include <sstream>
#include <stdexcept>

namespace qmprime {

json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

json to_json(const RatFunc& r) {
    if (r.den().is_one()) return to_json(r.num());
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

json to_json(const IndexSet& I) {
    json j = json::array();
    for (int v : I.elems()) j.push_back(v);
    return j;
}

json to_json(const MinorSpec& spec) {
    return json{{"rows", to_json(spec.rows)}, {"cols", to_json(spec.cols)}};
}

json to_json(const QMPoly& f) {
    json terms = json::array();
    for (const auto& [mono, c] : f.terms()) {
        json vars = json::array();
        for (size_t v = 0; v < mono.size(); ++v)
            if (mono[v] != 0)
                vars.push_back(json::array({var_row(f.n(), static_cast<int>(v)),
                                            var_col(f.n(), static_cast<int>(v)), mono[v]}));
        terms.push_back(json{{"monomial", vars}, {"coeff", to_json(c)}});
    }
    return json{{"m", f.m()}, {"n", f.n()}, {"terms", terms}};
}

json to_json(const CPoly& f) {
    json terms = json::array();
    for (const auto& [mono, c] : f.terms()) {
        json vars = json::array();
        for (size_t v = 0; v < mono.size(); ++v)
            if (mono[v] != 0)
                vars.push_back(json::array({var_row(f.n(), static_cast<int>(v)),
                                            var_col(f.n(), static_cast<int>(v)), mono[v]}));
        terms.push_back(json{{"monomial", vars}, {"coeff", c.get_str()}});
    }
    return json{{"m", f.m()}, {"n", f.n()}, {"terms", terms}};
}

json to_json(const PosetReport& rep) {
    json ideals = json::array();
    for (const auto& info : rep.ideals) {
        json gens = json::array();
        for (const auto& spec : info.generators) gens.push_back(to_json(spec));
        ideals.push_back(json{{"y", info.y.str()},
                              {"generators", gens},
                              {"basis_size", info.two_sided_basis_size},
                              {"right_basis_size", info.right_basis_size},
                              {"homogeneous", info.homogeneous},
                              {"right_equals_two_sided", info.right_equals_two_sided}});
    }
    auto matrix = [](const std::vector<std::vector<char>>& rows) {
        json out = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (char v : row) r.push_back(static_cast<int>(v));
            out.push_back(r);
        }
        return out;
    };
    return json{{"m", rep.m},
                {"n", rep.n},
                {"ideals", ideals},
                {"inclusion_matrix", matrix(rep.inclusion)},
                {"bruhat_matrix", matrix(rep.bruhat)},
                {"ok", rep.ok},
                {"failures", rep.failures}};
}

json to_json(const PairingResult& r) {
    return json{{"k", r.k},
                {"I", to_json(r.I)},
                {"minor", to_json(r.minor)},
                {"scalar", r.scalar.str()},
                {"ok", true}};
}

json to_json(const PairingReport& rep) {
    json results = json::array();
    for (const auto& r : rep.results) results.push_back(to_json(r));
    return json{{"m", rep.m},
                {"n", rep.n},
                {"results", results},
                {"ok", rep.ok},
                {"failures", rep.failures}};
}

json to_json(const DemazureReport& rep) {
    return json{{"m", rep.m},
                {"n", rep.n},
                {"routes_checked", rep.routes_checked},
                {"operators_checked", rep.operators_checked},
                {"ok", rep.ok},
                {"failures", rep.failures}};
}

json to_json(const StratReport& rep) {
    return json{{"m", rep.m},
                {"n", rep.n},
                {"seed", rep.seed},
                {"zero_one_samples", rep.zero_one_samples},
                {"random_samples", rep.random_samples},
                {"torus_trials", rep.torus_trials},
                {"ok", rep.ok},
                {"failures", rep.failures}};
}

json to_json(const PoissonReport& rep) {
    return json{{"m", rep.m},
                {"n", rep.n},
                {"bracket_triples", rep.bracket_triples},
                {"semiclassical_pairs", rep.semiclassical_pairs},
                {"ideals_checked", rep.ideals_checked},
                {"ok", rep.ok},
                {"failures", rep.failures}};
}

RatMatrix rat_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON: array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    RatMatrix x(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const json& cell = row.at(static_cast<size_t>(c));
            Rational v;
            if (cell.is_number_integer()) {
                v = Rational(cell.get<long>());
            } else if (cell.is_string()) {
                if (mpq_set_str(v.get_mpq_t(), cell.get<std::string>().c_str(), 10) != 0)
                    throw std::invalid_argument("matrix JSON: bad rational \"" +
                                                cell.get<std::string>() + "\"");
                v.canonicalize();
            } else {
                throw std::invalid_argument("matrix JSON: entries must be integers or \"p/q\"");
            }
            x.at(i + 1, c + 1) = v;
        }
    }
    return x;
}

json to_json(const RatMatrix& x) {
    json rows = json::array();
    for (int i = 1; i <= x.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= x.cols(); ++j) row.push_back(x.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

EnumerationListing enumerate_interval(int m, int n, ExecMode mode) {
    EnumerationListing e;
    e.m = m;
    e.n = n;
    e.w = coxeter_power(m + n, m);
    e.elements = interval_below(e.w, mode);
    e.edges = hasse_edges(e.elements);
    return e;
}

json to_json(const EnumerationListing& e) {
    json elements = json::array();
    for (const auto& y : e.elements)
        elements.push_back(json{{"y", y.str()}, {"length", y.length()}});
    json edges = json::array();
    for (const auto& [a, b] : e.edges) edges.push_back(json::array({a, b}));
    return json{{"m", e.m},
                {"n", e.n},
                {"w", e.w.str()},
                {"count", e.elements.size()},
                {"elements", elements},
                {"hasse_edges", edges}};
}

std::string to_dot(const EnumerationListing& e) {
    std::ostringstream os;
    os << "digraph bruhat_interval {\n";
    os << "  rankdir=BT;\n";
    for (size_t i = 0; i < e.elements.size(); ++i)
        os << "  n" << i << " [label=\"" << e.elements[i].str() << " ("
           << e.elements[i].length() << ")\"];\n";
    for (const auto& [a, b] : e.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qmprime
