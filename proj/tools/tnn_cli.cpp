#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tnn/builtins.hpp"
#include "tnn/chains.hpp"
#include "tnn/lindstrom.hpp"
#include "tnn/logconcavity.hpp"
#include "tnn/matrix.hpp"
#include "tnn/network.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsageError = 2;

// Reads a network from a path or "builtin:<name>".
std::optional<tnn::PlanarNetwork> load_network(const std::string& spec, std::string& error) {
    std::string text;
    const std::string prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) {
        auto builtin = tnn::builtin_network_text(spec.substr(prefix.size()));
        if (!builtin) {
            error = "unknown builtin network '" + spec.substr(prefix.size()) + "'";
            return std::nullopt;
        }
        text = *builtin;
    } else {
        std::ifstream in(spec);
        if (!in) {
            error = "cannot open '" + spec + "'";
            return std::nullopt;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    auto result = tnn::parse_network(text);
    if (!result.network) {
        error = result.error;
        return std::nullopt;
    }
    return result.network;
}

std::optional<std::vector<int>> parse_int_list(const std::string& s) {
    std::vector<int> values;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) return std::nullopt;
            values.push_back(v);
        } catch (...) {
            return std::nullopt;
        }
    }
    if (values.empty()) return std::nullopt;
    return values;
}

std::optional<std::vector<tnn::Rational>> parse_rational_list(const std::string& s) {
    std::vector<tnn::Rational> values;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto r = tnn::parse_rational(item);
        if (!r) return std::nullopt;
        values.push_back(*r);
    }
    if (values.empty()) return std::nullopt;
    return values;
}

// Step chains like "L", "L,L" or "0,1:0,1;0,2:0,2".
std::optional<std::vector<std::pair<tnn::OffsetSet, tnn::OffsetSet>>> parse_steps(
    const std::string& spec) {
    std::vector<std::pair<tnn::OffsetSet, tnn::OffsetSet>> steps;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ';')) {
        if (part.find(':') != std::string::npos) {
            auto colon = part.find(':');
            auto a = parse_int_list(part.substr(0, colon));
            auto b = parse_int_list(part.substr(colon + 1));
            if (!a || !b) return std::nullopt;
            steps.emplace_back(*a, *b);
        } else {
            std::istringstream ls(part);
            std::string token;
            while (std::getline(ls, token, ',')) {
                if (token != "L") return std::nullopt;
                steps.emplace_back(tnn::OffsetSet{0, 1}, tnn::OffsetSet{0, 1});
            }
        }
    }
    if (steps.empty()) return std::nullopt;
    return steps;
}

std::string sequence_str(const tnn::Sequence& s) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out << ',';
        out << s[i].str();
    }
    out << ')';
    return out.str();
}

std::string index_set_str(const tnn::IndexSet& I) {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) out << ',';
        out << I[i];
    }
    out << '}';
    return out.str();
}

int cmd_validate(const std::string& file) {
    std::string error;
    auto net = load_network(file, error);
    if (!net) {
        std::cerr << error << '\n';
        return kUsageError;
    }
    auto report = net->validate();
    std::cout << report.str();
    return report.ok() ? kOk : kPropertyFailed;
}

int cmd_weight_matrix(const std::string& file) {
    std::string error;
    auto net = load_network(file, error);
    if (!net) {
        std::cerr << error << '\n';
        return kUsageError;
    }
    if (!net->validate().ok()) {
        std::cerr << "invalid network\n" << net->validate().str();
        return kUsageError;
    }
    std::cout << net->weight_matrix().str();
    return kOk;
}

int cmd_minor_matrix(const std::string& file, const std::string& a_spec,
                     const std::string& b_spec, bool with_det, bool check_2x2, int check_all) {
    std::string error;
    auto net = load_network(file, error);
    if (!net) {
        std::cerr << error << '\n';
        return kUsageError;
    }
    auto A = parse_int_list(a_spec);
    auto B = parse_int_list(b_spec);
    if (!A || !B) {
        std::cerr << "offset lists must be comma-separated integers\n";
        return kUsageError;
    }
    try {
        tnn::PolyMatrix W = net->weight_matrix();
        tnn::PolyMatrix T = tnn::minor_matrix(W, *A, *B);
        std::cout << T.str();
        if (with_det) {
            if (T.rows() != T.cols()) {
                std::cerr << "minor matrix is not square\n";
                return kUsageError;
            }
            std::cout << "det = " << tnn::determinant(T).str() << '\n';
        }
        int status = kOk;
        if (check_2x2) {
            for (int c1 = 1; c1 <= T.rows() && status == kOk; ++c1)
                for (int c2 = c1 + 1; c2 <= T.rows() && status == kOk; ++c2)
                    for (int d1 = 1; d1 <= T.cols() && status == kOk; ++d1)
                        for (int d2 = d1 + 1; d2 <= T.cols() && status == kOk; ++d2) {
                            tnn::Polynomial det = T.at(c1, d1) * T.at(c2, d2) -
                                                  T.at(c1, d2) * T.at(c2, d1);
                            if (!det.is_subtraction_free()) {
                                std::cout << "2x2 check failed at rows {" << c1 << ',' << c2
                                          << "} cols {" << d1 << ',' << d2 << "}\n";
                                status = kPropertyFailed;
                            }
                        }
            if (status == kOk) std::cout << "2x2 check passed\n";
        }
        if (check_all > 0) {
            auto report = tnn::all_minors_subtraction_free(T, check_all);
            if (!report.ok) {
                std::cout << "minor check failed at I=" << index_set_str(report.failing_rows)
                          << " J=" << index_set_str(report.failing_cols) << '\n';
                status = kPropertyFailed;
            } else {
                std::cout << "all minors up to order " << check_all << " subtraction-free\n";
            }
        }
        return status;
    } catch (const tnn::DimensionError& e) {
        std::cerr << e.what() << '\n';
        return kUsageError;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << '\n';
        return kUsageError;
    }
}

int cmd_verify_lindstrom(const std::string& file, const std::string& rows_spec,
                         const std::string& cols_spec, int all_k) {
    std::string error;
    auto net = load_network(file, error);
    if (!net) {
        std::cerr << error << '\n';
        return kUsageError;
    }
    try {
        if (all_k > 0) {
            auto sets = tnn::index_sets_upto(net->order(), all_k);
            for (const auto& I : sets)
                for (const auto& J : sets) {
                    if (I.size() != J.size()) continue;
                    if (!tnn::verify_lindstrom(*net, I, J)) {
                        std::cout << "mismatch at I=" << index_set_str(I)
                                  << " J=" << index_set_str(J) << '\n';
                        return kPropertyFailed;
                    }
                }
            std::cout << "lindstrom identity holds for all |I| <= " << all_k << '\n';
            return kOk;
        }
        auto I = parse_int_list(rows_spec);
        auto J = parse_int_list(cols_spec);
        if (!I || !J) {
            std::cerr << "--rows/--cols must be comma-separated integers (or use --all)\n";
            return kUsageError;
        }
        if (tnn::verify_lindstrom(*net, *I, *J)) {
            std::cout << "lindstrom identity holds\n";
            return kOk;
        }
        std::cout << "mismatch at I=" << index_set_str(*I) << " J=" << index_set_str(*J) << '\n';
        return kPropertyFailed;
    } catch (const tnn::DimensionError& e) {
        std::cerr << e.what() << '\n';
        return kUsageError;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << '\n';
        return kUsageError;
    }
}

int cmd_counterexample(const std::string& name, bool symbolic) {
    if (name != "order6") {
        std::cerr << "unknown counterexample '" << name << "'\n";
        return kUsageError;
    }
    std::string error;
    auto unit = load_network("builtin:order6-unit", error);
    tnn::PolyMatrix W = unit->weight_matrix();
    std::cout << "order-6 network, unit weights\n";
    std::cout << "weight matrix:\n" << W.str();
    tnn::PolyMatrix T = tnn::minor_matrix(W, {0, 3}, {0, 3});
    std::cout << "(A,B)-minor matrix for A=B={0,3}:\n" << T.str();
    std::cout << "det = " << tnn::determinant(T).str() << '\n';

    if (!symbolic) return kOk;

    auto net = load_network("builtin:order6-symbolic", error);
    tnn::PolyMatrix Ws = net->weight_matrix();
    auto offset_sets = [&](int n, int max_size) {
        std::vector<tnn::OffsetSet> sets;
        for (const auto& I : tnn::index_sets_upto(n, max_size)) {
            tnn::OffsetSet o;
            for (int v : I) o.push_back(v - 1);
            sets.push_back(o);
        }
        return sets;
    };
    std::vector<std::string> exceptions;
    for (const auto& A : offset_sets(6, 3)) {
        for (const auto& B : offset_sets(6, 3)) {
            if (A.size() != B.size()) continue;
            tnn::PolyMatrix Ts = tnn::minor_matrix(Ws, A, B);
            auto report = tnn::all_minors_subtraction_free(Ts, 3);
            if (!report.ok) {
                std::ostringstream line;
                line << "negative minor: A=" << index_set_str(A) << " B=" << index_set_str(B)
                     << " I=" << index_set_str(report.failing_rows)
                     << " J=" << index_set_str(report.failing_cols);
                exceptions.push_back(line.str());
            }
        }
    }
    for (const auto& e : exceptions) std::cout << e << '\n';
    std::cout << "exceptions found: " << exceptions.size() << '\n';
    const std::string expected =
        "negative minor: A={0,3} B={0,3} I={1,2,3} J={1,2,3}";
    if (exceptions.size() == 1 && exceptions[0] == expected) return kOk;
    return kPropertyFailed;
}

int cmd_logconcavity(const std::string& roots_spec, const std::string& seq_spec, int iterations) {
    tnn::Sequence seq;
    if (!roots_spec.empty()) {
        auto roots = parse_rational_list(roots_spec);
        if (!roots) {
            std::cerr << "--roots must be a comma-separated list of rationals\n";
            return kUsageError;
        }
        for (const auto& r : *roots)
            if (r <= 0) {
                std::cerr << "roots must be positive\n";
                return kUsageError;
            }
        seq = tnn::coeffs_from_roots(*roots);
    } else if (!seq_spec.empty()) {
        auto values = parse_rational_list(seq_spec);
        if (!values) {
            std::cerr << "--seq must be a comma-separated list of rationals\n";
            return kUsageError;
        }
        seq = *values;
    } else {
        std::cerr << "one of --roots or --seq is required\n";
        return kUsageError;
    }
    if (iterations < 0) {
        std::cerr << "--iterations must be >= 0\n";
        return kUsageError;
    }
    auto report = tnn::is_infinitely_logconcave_upto(seq, iterations);
    for (size_t i = 0; i < report.iterates.size(); ++i)
        std::cout << "iteration " << i << ": " << sequence_str(report.iterates[i]) << '\n';
    if (report.holds) {
        std::cout << "nonnegative through " << iterations << " iterations\n";
        return kOk;
    }
    std::cout << "negative entry at iteration " << report.failing_iteration << ", index "
              << report.failing_index << '\n';
    return kPropertyFailed;
}

int cmd_conjecture(const std::string& roots_spec, int columns, int order,
                   const std::string& steps_spec, int max_order) {
    if (order < 1) {
        std::cerr << "--order must be >= 1\n";
        return kUsageError;
    }
    tnn::PlanarNetwork net;
    if (!roots_spec.empty()) {
        auto roots = parse_rational_list(roots_spec);
        if (!roots) {
            std::cerr << "--roots must be a comma-separated list of rationals\n";
            return kUsageError;
        }
        net = tnn::sequence_network(*roots, order);
    } else if (columns >= 0) {
        net = tnn::sequence_network_symbolic(columns, order);
    } else {
        std::cerr << "one of --roots or --columns is required\n";
        return kUsageError;
    }
    auto steps = parse_steps(steps_spec);
    if (!steps) {
        std::cerr << "bad --steps specification\n";
        return kUsageError;
    }
    if (max_order < 1) {
        std::cerr << "--max-order must be >= 1\n";
        return kUsageError;
    }
    auto report = tnn::conjecture_check(net, *steps, max_order);
    if (!report.error.empty()) {
        std::cerr << "step " << report.failing_step << ": " << report.error << '\n';
        return kUsageError;
    }
    if (report.ok) {
        std::cout << "all minors up to order " << max_order << " subtraction-free\n";
        return kOk;
    }
    std::cout << "violation at I=" << index_set_str(report.sweep.failing_rows)
              << " J=" << index_set_str(report.sweep.failing_cols) << '\n';
    return kPropertyFailed;
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* threads = std::getenv("TNN_THREADS")) {
        int t = std::atoi(threads);
        if (t > 0) omp_set_num_threads(t);
    }
#endif

    CLI::App app{"exact planar-network weight matrices, minor matrices and verifications"};
    app.require_subcommand(1);

    std::string file, a_spec, b_spec, rows_spec, cols_spec, name, roots_spec, seq_spec, steps_spec;
    bool with_det = false, check_2x2 = false, symbolic = false;
    int check_all = 0, all_k = 0, iterations = 0, columns = -1, order = 0, max_order = 0;

    auto* validate = app.add_subcommand("validate", "validate a network file");
    validate->add_option("file", file)->required();

    auto* wm = app.add_subcommand("weight-matrix", "print the weight matrix");
    wm->add_option("file", file)->required();
    std::string format = "text";
    wm->add_option("--format", format)->check(CLI::IsMember({"text"}));

    auto* mm = app.add_subcommand("minor-matrix", "print an (A,B)-minor matrix");
    mm->add_option("file", file)->required();
    mm->add_option("--A", a_spec)->required();
    mm->add_option("--B", b_spec)->required();
    mm->add_flag("--det", with_det);
    mm->add_flag("--check-2x2", check_2x2);
    mm->add_option("--check-all", check_all);

    auto* vl = app.add_subcommand("verify-lindstrom", "check minor = disjoint-family sum");
    vl->add_option("file", file)->required();
    vl->add_option("--rows", rows_spec);
    vl->add_option("--cols", cols_spec);
    vl->add_option("--all", all_k);

    auto* ce = app.add_subcommand("counterexample", "reproduce a built-in counterexample");
    ce->add_option("name", name)->required();
    ce->add_flag("--symbolic", symbolic);

    auto* lc = app.add_subcommand("logconcavity", "iterate the log-concavity step");
    lc->add_option("--roots", roots_spec);
    lc->add_option("--seq", seq_spec);
    lc->add_option("--iterations", iterations)->required();

    auto* cj = app.add_subcommand("conjecture", "sweep minors of iterated minor matrices");
    cj->add_option("--roots", roots_spec);
    cj->add_option("--columns", columns);
    cj->add_option("--order", order)->required();
    cj->add_option("--steps", steps_spec)->required();
    cj->add_option("--max-order", max_order)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (wm->parsed()) return cmd_weight_matrix(file);
        if (mm->parsed()) return cmd_minor_matrix(file, a_spec, b_spec, with_det, check_2x2, check_all);
        if (vl->parsed()) return cmd_verify_lindstrom(file, rows_spec, cols_spec, all_k);
        if (ce->parsed()) return cmd_counterexample(name, symbolic);
        if (lc->parsed()) return cmd_logconcavity(roots_spec, seq_spec, iterations);
        if (cj->parsed()) return cmd_conjecture(roots_spec, columns, order, steps_spec, max_order);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}
