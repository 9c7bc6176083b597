// Command-line front end: compute box polynomials and excedance matrices,
// solve for roots, run the invariant verification suites and the conjecture
// experiments. Exit codes: 0 success, 2 usage, 3 resource limit,
// 4 numerical failure.

#include "boxpoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace boxpoly;
using nlohmann::json;

constexpr const char* kVersion = "boxpoly 1.0.0";

int resource_error(const std::string& what) {
    std::cerr << "resource limit: " << what << "\n";
    return 3;
}

json polynomial_to_json(const Polynomial& p) { return json(p.to_coefficient_strings()); }

json matrix_to_json(const ExcedanceMatrix& M) {
    json rows = json::array();
    for (const auto& row : M.entries) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string experiment_header(const std::string& name, const std::string& precision) {
    return "# " + std::string(kVersion) + " | experiment: " + name + " | precision: " + precision + "\n";
}

int cmd_box(int m, int n, const std::optional<std::string>& eval_at, const std::string& format) {
    Polynomial b = box_poly(m, n);
    if (eval_at) {
        BigRat v = b.eval(rat_from_string(*eval_at));
        if (format == "json")
            std::cout << json{{"m", m}, {"n", n}, {"eval_at", *eval_at}, {"value", rat_to_string(v)}}.dump()
                      << "\n";
        else
            std::cout << rat_to_string(v) << "\n";
        return 0;
    }
    if (format == "json")
        std::cout << json{{"m", m}, {"n", n}, {"coefficients", polynomial_to_json(b)}}.dump() << "\n";
    else
        std::cout << b.to_text() << "\n";
    return 0;
}

int cmd_excedance(int m, int n, bool tnn, const std::string& format) {
    if (m > 24 || n > 24) return resource_error("excedance matrix capped at 24x24 from the CLI");
    ExcedanceMatrix M = excedance_matrix(m, n);
    if (tnn) {
        TnnReport report = total_nonnegativity_scan(m, n);
        if (format == "json") {
            json j{{"m", m}, {"n", n}, {"is_tnn", report.is_tnn}};
            if (!report.is_tnn) {
                j["violating_minor"] = {{"rows", report.rows}, {"cols", report.cols},
                                        {"determinant", report.determinant.str()}};
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "TNN: " << (report.is_tnn ? "true" : "false") << "\n";
            if (!report.is_tnn) {
                std::cout << "violating minor rows:";
                for (int r : report.rows) std::cout << " " << r;
                std::cout << " cols:";
                for (int c : report.cols) std::cout << " " << c;
                std::cout << " det=" << report.determinant.str() << "\n";
            }
        }
        return 0;
    }
    std::cout << matrix_to_json(M).dump() << "\n";
    return 0;
}

Polynomial column_polynomial(const ExcedanceMatrix& M, int k) {
    std::vector<BigRat> c;
    for (int i = 0; i <= M.m; ++i)
        c.push_back(BigRat(M.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]));
    return Polynomial(std::move(c));
}

template <unsigned Bits>
int run_roots(int m, int n, bool matrix_columns, const std::string& csv_path) {
    const int digits = static_cast<int>(Bits) / 3;
    std::ostringstream csv;
    csv << "m,n,root_index,re,im\n";
    auto emit = [&](int mm, int nn, const Polynomial& p, const std::string& label) {
        auto roots = find_roots<Bits>(p);
        BigFloatOf<Bits> worst = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& r = roots[i];
            csv << mm << "," << nn << "," << i << "," << r.value.real().str(digits) << ","
                << r.value.imag().str(digits) << "\n";
            worst = std::max(worst, r.residual);
        }
        std::cout << label << ": " << roots.size() << " roots, max residual " << worst.str(6) << "\n";
        return roots;
    };

    if (matrix_columns) {
        // Figure-1 data: columns 1..n of M(m,n) read as coefficient vectors.
        ExcedanceMatrix M = excedance_matrix(m, n);
        std::vector<BigFloatOf<Bits>> mean_moduli;
        for (int k = 1; k <= n; ++k) {
            Polynomial p = column_polynomial(M, k);
            auto roots = emit(m, k, p, "column " + std::to_string(k));
            BigFloatOf<Bits> mean = 0;
            for (const auto& r : roots) mean += abs(r.value);
            mean_moduli.push_back(mean / BigFloatOf<Bits>(static_cast<int>(roots.size())));
        }
        bool monotone = true;
        for (std::size_t i = 1; i < mean_moduli.size(); ++i) monotone &= mean_moduli[i - 1] <= mean_moduli[i];
        std::cout << "mean root modulus per column:";
        for (const auto& v : mean_moduli) std::cout << " " << v.str(6);
        std::cout << "\nsmaller-column-smaller-roots trend (mean modulus nondecreasing in k): "
                  << (monotone ? "observed" : "not observed") << " (descriptive, not asserted)\n";
    } else {
        Polynomial b = box_poly(m, n);
        auto roots = emit(m, n, b, "B_{" + std::to_string(m) + "," + std::to_string(n) + "}");
        for (const auto& r : roots)
            std::cout << "  " << r.value.real().str(digits / 4) << " + " << r.value.imag().str(digits / 4)
                      << "i\n";
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open CSV output: " + csv_path);
        out << csv.str();
        std::cout << "csv written: " << csv_path << "\n";
    }
    return 0;
}

int cmd_roots(int m, int n, int bits, bool matrix_columns, const std::string& csv_path) {
    if (m < 1) {
        std::cerr << "roots: need m >= 1\n";
        return 2;
    }
    if (m > 40 || n > 40) return resource_error("roots capped at m,n <= 40");
    try {
        if (bits <= 128) return run_roots<128>(m, n, matrix_columns, csv_path);
        if (bits <= 256) return run_roots<256>(m, n, matrix_columns, csv_path);
        if (bits <= 512) return run_roots<512>(m, n, matrix_columns, csv_path);
        return run_roots<1024>(m, n, matrix_columns, csv_path);
    } catch (const RootFindingError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    }
}

int cmd_verify(const std::string& suite, int max_size, bool as_json) {
    std::vector<std::string> names;
    if (suite == "all") names = verify_suite_names();
    else {
        auto known = verify_suite_names();
        if (std::find(known.begin(), known.end(), suite) == known.end()) {
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }
        names.push_back(suite);
    }
    bool all_ok = true;
    json summary = json::array();
    for (const auto& name : names) {
        SuiteReport rep = run_verify_suite(name, max_size);
        all_ok &= rep.all_pass();
        if (as_json) {
            json checks = json::array();
            for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
            summary.push_back({{"suite", rep.suite}, {"passed", rep.all_pass()}, {"checks", checks}});
        } else {
            for (const auto& c : rep.checks)
                std::cout << (c.pass ? "[pass] " : "[FAIL] ") << rep.suite << "." << c.name << "\n";
        }
    }
    if (as_json) std::cout << summary.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int experiment_tnn_sweep(int max_mn, std::ostream& out) {
    out << experiment_header("tnn-sweep", "exact integer");
    bool all = true;
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= max_mn; ++n) {
            TnnReport rep = total_nonnegativity_scan(m, n);
            out << "N(" << m << "," << n << "): " << (rep.is_tnn ? "TNN" : "NOT TNN") << "\n";
            all &= rep.is_tnn;
        }
    out << (all ? "all TNN up to (" : "violations found up to (") << max_mn << "," << max_mn << ")\n";
    return 0;
}

int experiment_phi_counterexample(std::ostream& out) {
    out << experiment_header("phi-counterexample", "exact integer");
    // the length-22 word b^5 a b a b a^5 b a b a b a^2 a
    ABWord u = ABWord::parse("bbbbb" "abab" "aaaaa" "babab" "aaa");
    ABWord phi_u = phi_candidate(u);
    BigInt bu = bracket(u), bphi = bracket(phi_u);
    out << "u        = " << u.letters << "\n";
    out << "phi(u)   = " << phi_u.letters << "\n";
    out << "[u]      = " << bu.str() << "\n";
    out << "[phi(u)] = " << bphi.str() << "\n";
    out << "monotone [u] <= [phi(u)]: " << (bu <= bphi ? "holds" : "NOT monotone") << "\n";
    return 0;
}

int experiment_im_scaling(int m_max, int n_max, std::ostream& out) {
    out << experiment_header("im-scaling", "256-bit float");
    out << "m,n,max_im,ratio_m_sqrt_n\n";
    for (const auto& row : imaginary_scaling_experiment<256>(m_max, n_max))
        out << row.m << "," << row.n << "," << row.max_im << "," << row.ratio << "\n";
    return 0;
}

int experiment_ladder_partitions(int n, std::ostream& out) {
    out << experiment_header("ladder-partitions", "exact integer");
    Polynomial chi = chromatic_named(GraphFamily::CyclicLadder, n);
    out << "chromatic polynomial of the cyclic ladder on 2*" << n << " vertices: " << chi.to_text() << "\n";
    out << "k,S(L_n,k)\n";
    for (int k = 0; k <= 2 * n; ++k) out << k << "," << graph_partition_count_from_chromatic(chi, k).str() << "\n";
    return 0;
}

int cmd_experiment(const std::string& name, int max_param, int n_param, const std::string& out_path) {
    std::ostringstream buffer;
    int rc = 0;
    if (name == "tnn-sweep") rc = experiment_tnn_sweep(max_param > 0 ? max_param : 4, buffer);
    else if (name == "phi-counterexample") rc = experiment_phi_counterexample(buffer);
    else if (name == "im-scaling") rc = experiment_im_scaling(max_param > 0 ? max_param : 6, 6, buffer);
    else if (name == "ladder-partitions") rc = experiment_ladder_partitions(n_param > 0 ? n_param : 5, buffer);
    else {
        std::cerr << "unknown experiment: " << name << "\n";
        return 2;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open report file: " << out_path << "\n";
            return 3;
        }
        out << buffer.str();
    }
    std::cout << buffer.str();
    return rc;
}

int cmd_partitions(const std::string& graph_file, int blocks, int cyclic_n, int no_singletons_n,
                   int odd_ground, int distance_n, int distance_s, const std::string& rg) {
    if (!graph_file.empty()) {
        std::ifstream in(graph_file);
        if (!in) {
            std::cerr << "cannot open graph file: " << graph_file << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        Graph g = graph_from_edge_list(ss.str());
        if (g.vertex_count() > kChromaticVertexLimit)
            return resource_error("graph too large for deletion-contraction");
        if (blocks >= 0) {
            std::cout << graph_partition_count(g, blocks).str() << "\n";
        } else {
            Polynomial chi = chromatic_polynomial(g);
            std::cout << chi.to_text() << "\n";
            for (int k = 0; k <= g.vertex_count(); ++k)
                std::cout << "S(G," << k << ") = " << graph_partition_count_from_chromatic(chi, k).str() << "\n";
        }
        return 0;
    }
    if (!rg.empty()) {
        std::vector<int> letters;
        for (char c : rg) {
            if (c < '1' || c > '9') {
                std::cerr << "rg word must use digits 1-9\n";
                return 2;
            }
            letters.push_back(c - '0');
        }
        SetPartition pi = partition_from_rg(RGWord(std::move(letters)));
        std::cout << pi.to_string() << "\n";
        return 0;
    }
    if (cyclic_n > 0) {
        if (blocks >= 0) std::cout << cyclic_adjacency_count(cyclic_n, blocks).str() << "\n";
        else {
            for (int k = 2; k <= cyclic_n; ++k)
                std::cout << "k=" << k << ": " << cyclic_adjacency_count(cyclic_n, k).str() << "\n";
        }
        return 0;
    }
    if (no_singletons_n > 0) {
        std::cout << no_singleton_count(no_singletons_n).str() << "\n";
        return 0;
    }
    if (odd_ground > 0) {
        if (blocks < 0) {
            std::cerr << "--odd requires --blocks\n";
            return 2;
        }
        std::cout << rat_to_string(box_at_minus_half_n_scaled(odd_ground - blocks, blocks)) << "\n";
        return 0;
    }
    if (distance_n > 0) {
        if (blocks < 0 || distance_s < 1) {
            std::cerr << "--distance-n requires --blocks and --distance-s\n";
            return 2;
        }
        std::cout << distance_s_count(distance_n, blocks, distance_s).str() << "\n";
        return 0;
    }
    std::cerr << "partitions: nothing to do (see --help)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Box polynomials, set-partition enumeration and the excedance matrix"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // box
    int m = 0, n = 0;
    std::string format = "text";
    std::optional<std::string> eval_at;
    auto* box = app.add_subcommand("box", "print B_{m,n} or evaluate it");
    box->add_option("m", m)->required();
    box->add_option("n", n)->required();
    box->add_option("--eval", eval_at, "evaluate at a rational point, e.g. -1 or 3/2");
    box->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // excedance
    int em = 0, en = 0;
    bool tnn = false;
    std::string eformat = "text";
    auto* exc = app.add_subcommand("excedance", "print M(m,n) as JSON, or scan total nonnegativity");
    exc->add_option("m", em)->required();
    exc->add_option("n", en)->required();
    exc->add_flag("--tnn", tnn, "scan all square minors of the flipped matrix");
    exc->add_option("--format", eformat)->check(CLI::IsMember({"text", "json"}));

    // roots
    int rm = 0, rn = 0, bits = 256;
    bool matrix_columns = false;
    std::string csv_path;
    auto* rts = app.add_subcommand("roots", "certified roots of B_{m,n} (or of M(m,n) column polynomials)");
    rts->add_option("m", rm)->required();
    rts->add_option("n", rn)->required();
    rts->add_option("--bits", bits, "working precision in bits (128/256/512/1024)");
    rts->add_option("--csv", csv_path, "write a CSV root dump (columns m,n,root_index,re,im)");
    rts->add_flag("--matrix-columns", matrix_columns, "solve the column polynomials of M(m,n)");

    // verify
    std::string suite = "all";
    int max_size = 0;
    bool as_json = false;
    auto* ver = app.add_subcommand("verify", "run the named invariant suite");
    ver->add_option("--suite", suite, "boxpoly|setpart|ffop|excedance|roots|all");
    ver->add_option("--max-size", max_size, "size cap for the sweeps (0 = default)");
    ver->add_flag("--json", as_json, "machine-readable summary");

    // experiment
    std::string exp_name;
    int exp_max = 0, exp_n = 0;
    std::string out_path;
    auto* exp = app.add_subcommand("experiment", "run a conjecture experiment");
    exp->add_option("name", exp_name, "tnn-sweep|phi-counterexample|im-scaling|ladder-partitions")->required();
    exp->add_option("--max", exp_max, "sweep bound");
    exp->add_option("--n", exp_n, "ladder size");
    exp->add_option("--out", out_path, "also write the report to a file");

    // partitions
    std::string graph_file, rg_word;
    int blocks = -1, cyclic_n = 0, nosing_n = 0, odd_ground = 0, dist_n = 0, dist_s = 0;
    auto* part = app.add_subcommand("partitions", "set-partition counts and conversions");
    part->add_option("--graph-file", graph_file, "edge list, one 'u v' per line, 1-indexed");
    part->add_option("--blocks", blocks, "number of blocks k");
    part->add_option("--cyclic", cyclic_n, "count partitions of [n] with cyclic neighbors separated");
    part->add_option("--no-singletons", nosing_n, "count partitions of [n] without singleton blocks");
    part->add_option("--odd", odd_ground, "count partitions of [N] into --blocks odd-size blocks");
    part->add_option("--distance-n", dist_n, "ground set for the distance-s count");
    part->add_option("--distance-s", dist_s, "separation parameter s");
    part->add_option("--rg", rg_word, "decode a restricted growth word to a partition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (box->parsed()) return cmd_box(m, n, eval_at, format);
        if (exc->parsed()) return cmd_excedance(em, en, tnn, eformat);
        if (rts->parsed()) return cmd_roots(rm, rn, bits, matrix_columns, csv_path);
        if (ver->parsed()) return cmd_verify(suite, max_size, as_json);
        if (exp->parsed()) return cmd_experiment(exp_name, exp_max, exp_n, out_path);
        if (part->parsed())
            return cmd_partitions(graph_file, blocks, cyclic_n, nosing_n, odd_ground, dist_n, dist_s, rg_word);
    } catch (const RootFindingError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string msg = e.what();
        return msg.find("limit") != std::string::npos ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
