// Batch command-line driver: enumeration of the Bruhat interval, generator
// tables, the verification suites, leaf classification, and the R-matrix
// pairing, with JSON/DOT/text output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qmprime/jsonio.hpp"

namespace {

using namespace qmprime;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    int m = 1;
    int n = 1;
    std::string y;
    std::string format = "json";
    std::string suite = "all";
    std::string input;
    std::uint64_t seed = 12345;
    int samples = 200;
    std::optional<long> degree_bound;
    int max_cells = 9;
    bool serial = false;
};

ExecMode mode_of(const Options& opt) {
    return opt.serial ? ExecMode::serial : default_exec_mode();
}

void check_limits(const Options& opt) {
    if (opt.m < 1 || opt.n < 1) throw CLI::ValidationError("--m and --n must be >= 1");
    if (opt.m * opt.n > opt.max_cells)
        throw CLI::ValidationError("m*n exceeds the safety limit (" +
                                   std::to_string(opt.max_cells) + "); raise --max-cells");
}

Perm parse_y(const Options& opt) {
    auto y = Perm::parse(opt.y);
    if (!y || y->size() != opt.m + opt.n)
        throw CLI::ValidationError("--y must be a one-line permutation of S_" +
                                   std::to_string(opt.m + opt.n) + ", e.g. \"3412\"");
    return *y;
}

void emit(const json& j, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        throw CLI::ValidationError("unsupported --format for this command");
}

int cmd_enumerate(const Options& opt) {
    check_limits(opt);
    EnumerationListing e = enumerate_interval(opt.m, opt.n, mode_of(opt));
    if (opt.format == "dot") {
        std::cout << to_dot(e);
    } else if (opt.format == "text") {
        std::cout << "W^{<= c^" << opt.m << "} in S_" << (opt.m + opt.n) << ": "
                  << e.elements.size() << " elements, " << e.edges.size() << " cover edges\n";
        for (const auto& y : e.elements)
            std::cout << "  " << y.str() << "  length " << y.length() << "\n";
    } else {
        emit(to_json(e), opt.format);
    }
    return kExitPass;
}

int cmd_generators(const Options& opt) {
    check_limits(opt);
    Perm y = parse_y(opt);
    if (!bruhat_leq(y, coxeter_power(opt.m + opt.n, opt.m)))
        throw CLI::ValidationError("y is not below c^m in Bruhat order");
    auto table = aq_table(y, opt.m, opt.n);
    if (opt.format == "text") {
        std::cout << "A_q(" << y.str() << ") at (" << opt.m << "," << opt.n << "):\n";
        for (const auto& e : table)
            std::cout << "  k=" << e.k << "  I=" << e.I.str() << "  minor " << e.minor.str()
                      << "  " << qminor(opt.m, opt.n, e.minor).str()
                      << (e.duplicate ? "  [duplicate]" : "") << "\n";
    } else {
        json entries = json::array();
        for (const auto& e : table)
            entries.push_back(json{{"k", e.k},
                                   {"I", to_json(e.I)},
                                   {"minor", to_json(e.minor)},
                                   {"poly", qminor(opt.m, opt.n, e.minor).str()},
                                   {"duplicate", e.duplicate}});
        emit(json{{"m", opt.m}, {"n", opt.n}, {"y", y.str()}, {"entries", entries}}, opt.format);
    }
    return kExitPass;
}

int cmd_verify(const Options& opt) {
    check_limits(opt);
    const ExecMode mode = mode_of(opt);
    bool ok = true;
    json out = json::object();
    out["m"] = opt.m;
    out["n"] = opt.n;
    out["suite"] = opt.suite;
    if (opt.suite == "poset" || opt.suite == "all") {
        PosetReport rep = verify_poset(opt.m, opt.n, mode);
        out["poset"] = to_json(rep);
        ok = ok && rep.ok;
    }
    if (opt.suite == "demazure" || opt.suite == "all") {
        DemazureReport rep = verify_demazure(opt.m, opt.n);
        out["demazure"] = to_json(rep);
        ok = ok && rep.ok;
    }
    if (opt.suite == "rmatrix" || opt.suite == "all") {
        PairingReport rep = verify_rmatrix(opt.m, opt.n, mode);
        out["rmatrix"] = to_json(rep);
        ok = ok && rep.ok;
    }
    if (opt.suite == "poisson" || opt.suite == "all") {
        PoissonReport prep = verify_poisson(opt.m, opt.n, mode);
        StratReport srep = verify_stratification(opt.m, opt.n, opt.samples, opt.seed, 50, mode);
        out["poisson"] = to_json(prep);
        out["stratification"] = to_json(srep);
        ok = ok && prep.ok && srep.ok;
    }
    out["ok"] = ok;
    if (opt.format == "text") {
        for (const auto& [key, value] : out.items())
            if (value.is_object() && value.contains("ok"))
                std::cout << (value["ok"].get<bool>() ? "[PASS] " : "[FAIL] ") << key << "\n";
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " suite " << opt.suite << "\n";
    } else {
        emit(out, opt.format);
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_classify(const Options& opt) {
    check_limits(opt);
    json j;
    if (opt.input == "-" || opt.input.empty()) {
        j = json::parse(std::cin);
    } else {
        std::ifstream in(opt.input);
        if (!in) throw CLI::ValidationError("cannot open " + opt.input);
        j = json::parse(in);
    }
    RatMatrix x = rat_matrix_from_json(j);
    if (x.rows() != opt.m || x.cols() != opt.n)
        throw CLI::ValidationError("matrix shape does not match --m/--n");
    Perm leaf = leaf_of(x, opt.m, opt.n);
    if (opt.format == "text")
        std::cout << leaf.str() << "\n";
    else
        emit(json{{"m", opt.m}, {"n", opt.n}, {"matrix", to_json(x)}, {"leaf", leaf.str()}},
             opt.format);
    return kExitPass;
}

int cmd_pairing(const Options& opt) {
    check_limits(opt);
    PairingReport rep = verify_rmatrix(opt.m, opt.n, mode_of(opt));
    if (opt.format == "text") {
        for (const auto& r : rep.results)
            std::cout << "k=" << r.k << "  I=" << r.I.str() << "  minor " << r.minor.str()
                      << "  scalar " << r.scalar.str() << "\n";
        std::cout << (rep.ok ? "[PASS]" : "[FAIL]") << " pairing sweep\n";
    } else {
        emit(to_json(rep), opt.format);
    }
    return rep.ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for the torus-invariant prime ideals of quantum matrices and "
                 "the matching Poisson stratification"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--max-cells", opt.max_cells, "safety limit on m*n")->capture_default_str();
    app.add_flag("--serial", opt.serial, "force the serial reference path");

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--m", opt.m, "row size")->required();
        sub->add_option("--n", opt.n, "column size")->required();
        if (with_format)
            sub->add_option("--format", opt.format, "json|dot|text")->capture_default_str();
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list the Bruhat interval below c^m");
    add_common(enumerate);

    CLI::App* generators = app.add_subcommand("generators", "minor generator table for one y");
    add_common(generators);
    generators->add_option("--y", opt.y, "one-line permutation, e.g. 3412")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", opt.suite, "poset|demazure|rmatrix|poisson|all")
        ->capture_default_str();
    verify->add_option("--seed", opt.seed, "seed for the random samples")->capture_default_str();
    verify->add_option("--samples", opt.samples, "number of random sample matrices")
        ->capture_default_str();
    verify->add_option("--degree-bound", [&opt](const CLI::results_t& res) {
        opt.degree_bound = std::stol(res[0]);
        return true;
    }, "optional degree bound for exploratory runs");

    CLI::App* classify = app.add_subcommand("classify", "leaf classification of one matrix");
    add_common(classify);
    classify->add_option("--input", opt.input, "JSON matrix file, or - for stdin");

    CLI::App* pairing = app.add_subcommand("pairing", "R-matrix pairing sweep");
    add_common(pairing);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(opt);
        if (app.got_subcommand(generators)) return cmd_generators(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(classify)) return cmd_classify(opt);
        if (app.got_subcommand(pairing)) return cmd_pairing(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
