#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "fht/fht.hpp"

namespace fs = std::filesystem;
using namespace fht;

namespace {

struct Options {
    std::string alpha = "1/3";
    std::string beta = "-1/2";
    int n = 0;
    std::string n_list;
    int l = -1;
    std::string l_rule;
    double l_frac = -1.0;
    int branches = 1;
    std::string part = "imag";
    std::string out = ".";
    std::string format = "csv";
    bool allow_out_of_range = false;
    unsigned threads = 0;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FHParams make_params(const Options& o) {
    FHParams p{parse_rational(o.alpha), parse_rational(o.beta)};
    if (!p.in_study_range() && !o.allow_out_of_range)
        throw ConfigError("parameters outside 0 < alpha < |beta| < 1; "
                          "pass --allow-out-of-range to proceed");
    return p;
}

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw ConfigError("empty --n-list");
    return out;
}

nlohmann::json config_json(const Options& o, const std::string& command) {
    return {{"command", command}, {"alpha", o.alpha},     {"beta", o.beta},
            {"n", o.n},           {"n_list", o.n_list},   {"l", o.l},
            {"l_rule", o.l_rule}, {"l_frac", o.l_frac},   {"branches", o.branches},
            {"part", o.part},     {"format", o.format},
            {"allow_out_of_range", o.allow_out_of_range}, {"threads", o.threads}};
}

void emit(const Table& t, const Options& o, const std::string& command,
          const std::string& stem) {
    fs::create_directories(o.out);
    std::string path = (fs::path(o.out) / (stem + (o.format == "json" ? ".json" : ".csv"))).string();
    if (o.format == "json")
        write_json_table(t, path);
    else
        write_csv(t, path);
    write_sidecar(config_json(o, command), path);
    std::cout << path << "\n";
}

int resolve_label(const Options& o, int N) {
    int given = 0;
    if (o.l >= 0) ++given;
    if (!o.l_rule.empty()) ++given;
    if (o.l_frac >= 0.0) ++given;
    if (given != 1) throw ConfigError("specify exactly one of --l, --l-rule, --l-frac");
    if (o.l >= 0) {
        if (o.l >= N) throw ConfigError("--l out of range for this N");
        return o.l;
    }
    if (o.l_frac >= 0.0) {
        int l = static_cast<int>(std::floor(o.l_frac * N)) - 1;
        if (l < 0 || l >= N) throw ConfigError("--l-frac out of range for this N");
        return l;
    }
    if (o.l_rule == "half") return label_for_rule(LRule::half, N);
    if (o.l_rule == "golden") return label_for_rule(LRule::golden, N);
    if (o.l_rule == "quarter") return label_for_rule(LRule::quarter, N);
    throw ConfigError("unknown --l-rule '" + o.l_rule + "'");
}

LRule parse_rule(const std::string& s) {
    if (s == "half" || s.empty()) return LRule::half;
    if (s == "golden") return LRule::golden;
    if (s == "quarter") return LRule::quarter;
    throw ConfigError("unknown --l-rule '" + s + "'");
}

void cmd_spectrum(const Options& o) {
    FHParams p = make_params(o);
    if (o.n < 2) throw ConfigError("--n >= 2 required");
    auto raw = eig_dense(build_matrix(p, o.n));
    auto d = label_spectrum(raw);

    Table curve;
    curve.columns = {"theta", "re_a", "im_a"};
    int m = 512;
    auto img = symbol_image(p, m);
    for (int k = 0; k < m; ++k)
        curve.add_row({2.0 * pi * k / m, img[k].real(), img[k].imag()});
    emit(curve, o, "spectrum", "symbol_curve");

    Table ev;
    ev.columns = {"l", "re_eps", "im_eps", "grid_distance"};
    for (const auto& e : d.entries)
        ev.add_row({long(e.l), e.eigenvalue.real(), e.eigenvalue.imag(), e.grid_distance});
    emit(ev, o, "spectrum", "eigenvalues");
}

void cmd_eigvec(const Options& o) {
    FHParams p = make_params(o);
    if (o.n < 2) throw ConfigError("--n >= 2 required");
    int l = resolve_label(o, o.n);
    auto d = full_decomposition(p, o.n);
    const auto& e = d.entries[l];

    Table t;
    t.columns = {"j", "re_psi", "im_psi", "abs_psi", "phase_unwrapped", "branch",
                 "log_mag_ratio"};
    double phase = std::arg(e.psi[0]);
    double expected = 2.0 * pi * l / (o.n - 1);
    for (int j = 0; j < o.n; ++j) {
        if (j > 0) {
            double step = std::arg(e.psi[j]) - std::arg(e.psi[j - 1]);
            step += 2.0 * pi * std::round((expected - step) / (2.0 * pi));
            phase += step;
        }
        double ratio = (j + 1 < o.n && std::abs(e.psi[j + 1]) > 0.0)
                           ? std::log(std::abs(e.psi[j]) / std::abs(e.psi[j + 1]))
                           : 0.0;
        t.add_row({long(j), e.psi[j].real(), e.psi[j].imag(), std::abs(e.psi[j]), phase,
                   long(o.branches > 1 ? j % o.branches : 0), ratio});
    }
    emit(t, o, "eigvec", "eigvec_n" + std::to_string(o.n) + "_l" + std::to_string(l));
}

void cmd_qp_table(const Options& o) {
    FHParams p = make_params(o);
    if (o.n_list.empty()) throw ConfigError("--n-list required");
    auto Ns = parse_n_list(o.n_list);
    TablePart part;
    if (o.part == "imag")
        part = TablePart::imag_p;
    else if (o.part == "real")
        part = TablePart::real_q;
    else
        throw ConfigError("--part must be imag or real");
    auto table = qp_table(p, Ns, parse_rule(o.l_rule), part);

    Table t;
    t.columns = {"N", "l", "value_psi", "value_eps", "diff_e6", "diff_Nk",
                 "value_psi_N", "residual"};
    for (const auto& r : table.rows)
        t.add_row({long(r.N), long(r.l), r.value_psi, r.value_eps, r.diff_e6, r.diff_Nk,
                   r.value_psi_N, r.residual});
    emit(t, o, "qp-table", "qp_table_" + o.part);

    Table f;
    f.columns = {"slope_coeff", "C", "lsq_slope", "lsq_intercept"};
    f.add_row({table.fit.slope_coeff, table.fit.C, table.fit.lsq_slope,
               table.fit.lsq_intercept});
    emit(f, o, "qp-table", "qp_fit_" + o.part);
}

void cmd_wh_compare(const Options& o) {
    FHParams p = make_params(o);
    if (o.n < 2) throw ConfigError("--n >= 2 required");
    int l = resolve_label(o, o.n);
    auto run = wh_compare_run(p, o.n, l, o.threads);

    Table t;
    t.columns = {"j", "j_frac", "abs_err", "rel_err", "abs_psi_exact", "abs_psi_wh"};
    for (int j = 0; j < o.n; ++j)
        t.add_row({long(j), static_cast<double>(j) / (o.n - 1), run.report.abs_err[j],
                   run.report.rel_err[j], std::abs(run.exact[j]),
                   std::abs(run.C * run.coeffs[j])});
    emit(t, o, "wh-compare", "wh_compare_n" + std::to_string(o.n) + "_l" + std::to_string(l));

    // expansion of exp(-S) alone: the bump-plus-algebraic-tail sequence
    WHFactorization wh(p, run.eps, run.z_c);
    auto cs = wh.psi_s_coeffs(std::max(o.n, 512), o.threads);
    Table s;
    s.columns = {"j", "re", "im", "abs"};
    for (std::size_t j = 0; j < cs.size(); ++j)
        s.add_row({long(j), cs[j].real(), cs[j].imag(), std::abs(cs[j])});
    emit(s, o, "wh-compare", "psi_s_n" + std::to_string(o.n) + "_l" + std::to_string(l));
}

void cmd_asymptotics(const Options& o) {
    FHParams p = make_params(o);
    if (!o.n_list.empty()) {
        double frac = o.l_frac >= 0.0 ? o.l_frac : 0.25;
        auto conv = shift_convergence(p, parse_n_list(o.n_list), frac);
        Table t;
        t.columns = {"N", "l", "re_measured", "im_measured", "re_predicted",
                     "im_predicted", "rel_dev", "exponent"};
        for (const auto& r : conv.rows)
            t.add_row({long(r.N), long(r.l), r.measured.real(), r.measured.imag(),
                       r.predicted.real(), r.predicted.imag(), r.rel_dev,
                       2.0 * p.alpha + 1.0});
        emit(t, o, "asymptotics", "shift_convergence");

        Table law;
        law.columns = {"N", "predicted_im_p", "fitted_im_p", "im_C"};
        for (const auto& r : conv.rows)
            law.add_row({long(r.N), predicted_im_p(p.alpha, r.N),
                         ((2.0 * p.alpha + 1.0) * std::log(r.N) + conv.im_C) / r.N,
                         conv.im_C});
        emit(law, o, "asymptotics", "im_p_law");
        return;
    }
    if (o.n < 2) throw ConfigError("--n or --n-list required");
    int l = resolve_label(o, o.n);
    auto ov = two_term_overlay(p, o.n, l);
    Table t;
    t.columns = {"j", "abs_psi_exact", "abs_two_term", "abs_exp_term", "abs_tail_term"};
    for (const auto& r : ov.rows)
        t.add_row({long(r.j), r.abs_exact, r.abs_two_term, r.abs_exp_term,
                   r.abs_tail_term});
    emit(t, o, "asymptotics", "two_term_n" + std::to_string(o.n) + "_l" + std::to_string(l));

    Table ab;
    ab.columns = {"re_A", "im_A", "re_B", "im_B", "re_zc", "im_zc", "balance_exp",
                  "balance_tail"};
    ab.add_row({ov.A.real(), ov.A.imag(), ov.B.real(), ov.B.imag(), ov.z_c.real(),
                ov.z_c.imag(), ov.balance_exp, ov.balance_tail});
    emit(ab, o, "asymptotics", "two_term_model");
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--alpha", o.alpha, "zero-strength parameter, rational like 1/3");
    cmd->add_option("--beta", o.beta, "jump parameter, rational like -1/2");
    cmd->add_option("--n", o.n, "matrix order N");
    cmd->add_option("--n-list", o.n_list, "comma-separated list of N values");
    cmd->add_option("--l", o.l, "explicit eigenvalue label");
    cmd->add_option("--l-rule", o.l_rule, "label rule: half | golden | quarter");
    cmd->add_option("--l-frac", o.l_frac, "label as a fraction of N");
    cmd->add_option("--branches", o.branches, "branch count for the branch column");
    cmd->add_option("--part", o.part, "table part: imag | real");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--format", o.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--allow-out-of-range", o.allow_out_of_range,
                  "permit parameters outside 0 < alpha < |beta| < 1");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fisher-Hartwig Toeplitz spectral toolkit"};
    app.require_subcommand(1);
    Options o;
    auto* spectrum = app.add_subcommand("spectrum", "symbol curve and labeled eigenvalues");
    auto* eigvec = app.add_subcommand("eigvec", "per-index eigenvector data");
    auto* qp = app.add_subcommand("qp-table", "momentum tables and log-law fit");
    auto* whc = app.add_subcommand("wh-compare", "quadrature eigenvector vs exact");
    auto* asym = app.add_subcommand("asymptotics", "two-term model and shift formula");
    for (auto* c : {spectrum, eigvec, qp, whc, asym}) add_common(c, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*spectrum) cmd_spectrum(o);
        if (*eigvec) cmd_eigvec(o);
        if (*qp) cmd_qp_table(o);
        if (*whc) cmd_wh_compare(o);
        if (*asym) cmd_asymptotics(o);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
