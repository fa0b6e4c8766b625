#include "slm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "slm/analysis.hpp"
#include "slm/mc_sim.hpp"
#include "slm/slm_cyclic.hpp"
#include "slm/verify.hpp"

namespace slm {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        values.push_back(std::stoi(tok));
    }
    return values;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
}

void print_level_summary(std::ostream& out, const char* name,
                         const CcdfCurve& curve) {
    for (double level : {1e-1, 1e-2}) {
        out << name << " ccdf_at(" << level << ") = ";
        try {
            out << ccdf_at(curve, level) << " dB\n";
        } catch (const std::out_of_range&) {
            out << "n/a (level outside observed range)\n";
        }
    }
}

struct CcdfFlags {
    std::size_t n = 64;
    int u = 4;
    int i = 3;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string scheme = "both";
    std::string shift_method = "random";
    std::string shift_file;
    std::string out_path;
    std::optional<std::uint64_t> phase_seed;
    int threads = 0;
    int oversampling = 1;
};

int cmd_ccdf(const CcdfFlags& f, std::ostream& out, std::ostream& err) {
    SimConfig cfg;
    cfg.n_fft = f.n;
    cfg.u_count = f.u;
    cfg.i_stages = f.i;
    cfg.trials = f.trials;
    cfg.seed = f.seed;
    cfg.run_conventional = f.scheme == "both" || f.scheme == "conventional";
    cfg.run_proposed = f.scheme == "both" || f.scheme == "proposed";
    if (f.shift_method == "random")
        cfg.shift_method = ShiftMethod::random;
    else if (f.shift_method == "mj")
        cfg.shift_method = ShiftMethod::mj;
    else
        cfg.shift_method = ShiftMethod::external;
    cfg.shift_file = f.shift_file;
    cfg.phase_seed = f.phase_seed;
    cfg.threads = f.threads;
    cfg.oversampling = f.oversampling;

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const SimReport report = run_simulation(cfg);

    std::ostringstream csv;
    write_csv(report, csv);
    write_file(f.out_path, csv.str());

    // a randomly drawn table is persisted next to the results; mj is
    // regenerated on demand and never stored
    if (cfg.run_proposed && cfg.shift_method == ShiftMethod::random) {
        const std::string path =
            f.shift_file.empty() ? f.out_path + ".shifts" : f.shift_file;
        write_file(path, format_shift_table(*report.shift_table));
        out << "shift table written to " << path << "\n";
    }

    out << "wrote " << f.out_path << " (" << report.wall_seconds << " s)\n";
    if (report.conventional)
        print_level_summary(out, "conventional", report.conventional->ccdf);
    if (report.proposed)
        print_level_summary(out, "proposed", report.proposed->ccdf);
    return 0;
}

int cmd_ccrr_table(const std::string& format, const std::string& out_path,
                   std::ostream& out) {
    const CcrrTable table = ccrr_table();
    const std::string text = format == "csv" ? format_ccrr_table_csv(table)
                                             : format_ccrr_table_text(table);
    if (out_path.empty())
        out << text;
    else
        write_file(out_path, text);
    return 0;
}

struct RhoFlags {
    std::size_t n = 64;
    int i = 2;
    std::string row_j;
    std::string row_v;
    std::string out_path;
};

int cmd_rho(const RhoFlags& f, std::ostream& out, std::ostream& err) {
    StageTap tap(f.n, f.i);
    const std::vector<int> row_j = parse_int_list(f.row_j);
    const std::vector<int> row_v = parse_int_list(f.row_v);
    if (row_j.size() != static_cast<std::size_t>(tap.num_subblocks) ||
        row_v.size() != static_cast<std::size_t>(tap.num_subblocks)) {
        err << "error: each row needs exactly " << tap.num_subblocks
            << " shift values\n";
        return 2;
    }
    const PhaseRotationVector pj = equivalent_phase_vector(tap, row_j);
    const PhaseRotationVector pv = equivalent_phase_vector(tap, row_v);
    const RhoProfile profile = rho_profile(pj, pv);
    const double len = static_cast<double>(tap.subblock_len);
    const double n_fft = static_cast<double>(tap.n_fft);
    const double bound = (len * len) / (n_fft * n_fft);

    out << "max rho = " << profile.max_value << " (bound L^2/N^2 = " << bound
        << ")\n";
    out << "condition satisfied: "
        << (shift_pair_condition_ok(tap, row_j, row_v) ? "yes" : "no") << "\n";
    if (!f.out_path.empty()) {
        std::ostringstream csv;
        csv << "tau,rho\n";
        for (std::size_t tau = 0; tau < profile.values.size(); ++tau)
            csv << tau << ',' << profile.values[tau] << '\n';
        write_file(f.out_path, csv.str());
        out << "wrote " << f.out_path << "\n";
    }
    return 0;
}

struct ShiftsFlags {
    std::size_t n = 64;
    int i = 3;
    int u = 4;
    std::string method = "random";
    std::uint64_t seed = 1;
    std::string out_path;
};

int cmd_shifts(const ShiftsFlags& f, std::ostream& out) {
    const StageTap tap(f.n, f.i);
    const ShiftTable table = f.method == "mj"
                                 ? gen_mj_shifts(f.u, tap)
                                 : gen_random_shifts(f.u, tap, f.seed);
    const std::string text = format_shift_table(table);
    if (f.out_path.empty())
        out << text;
    else
        write_file(f.out_path, text);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Selected mapping PAPR reduction toolkit"};
    app.require_subcommand(1);

    CcdfFlags ccdf_flags;
    std::uint64_t phase_seed_value = 0;
    CLI::App* ccdf = app.add_subcommand(
        "ccdf", "Monte Carlo CCDF of selected PAPR for the SLM schemes");
    ccdf->add_option("--n", ccdf_flags.n, "subcarrier count (power of two)");
    ccdf->add_option("--u", ccdf_flags.u, "alternative signal count");
    ccdf->add_option("--i", ccdf_flags.i, "remaining IFFT stages after the tap");
    ccdf->add_option("--trials", ccdf_flags.trials, "trial count");
    ccdf->add_option("--seed", ccdf_flags.seed, "master seed");
    ccdf->add_option("--scheme", ccdf_flags.scheme, "both|conventional|proposed")
        ->check(CLI::IsMember({"both", "conventional", "proposed"}));
    ccdf->add_option("--shift-method", ccdf_flags.shift_method,
                     "random|mj|file")
        ->check(CLI::IsMember({"random", "mj", "file"}));
    ccdf->add_option("--shift-file", ccdf_flags.shift_file,
                     "table file (read for method=file, written for random)");
    ccdf->add_option("--out", ccdf_flags.out_path, "output CSV path")
        ->required();
    CLI::Option* ps =
        ccdf->add_option("--phase-seed", phase_seed_value,
                         "separate seed for the phase rotation vectors");
    ccdf->add_option("--threads", ccdf_flags.threads,
                     "worker threads (0 = hardware; output independent of it)");
    ccdf->add_option("--oversample", ccdf_flags.oversampling,
                     "oversampling factor (reserved; only 1 is accepted)");

    std::string table_format = "text";
    std::string table_out;
    CLI::App* table_cmd = app.add_subcommand(
        "ccrr-table", "complexity reduction ratio table over N, U, i");
    table_cmd->add_option("--format", table_format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    table_cmd->add_option("--out", table_out, "write to file instead of stdout");

    RhoFlags rho_flags;
    CLI::App* rho = app.add_subcommand(
        "rho", "correlation profile of a cyclic-shift pair");
    rho->add_option("--n", rho_flags.n, "subcarrier count");
    rho->add_option("--i", rho_flags.i, "remaining stages");
    rho->add_option("--row-j", rho_flags.row_j, "comma-separated shifts")
        ->required();
    rho->add_option("--row-v", rho_flags.row_v, "comma-separated shifts")
        ->required();
    rho->add_option("--out", rho_flags.out_path, "CSV of tau,rho");

    VerifyOptions verify_opts;
    std::string fault = "none";
    CLI::App* verify = app.add_subcommand(
        "verify", "scheme-equivalence and op-count property suites");
    verify->add_option("--max-n", verify_opts.max_n, "largest N exercised");
    verify->add_option("--cases", verify_opts.cases, "random cases per check");
    verify->add_option("--seed", verify_opts.seed, "case generator seed");
    verify->add_option("--inject-fault", fault,
                       "none|twiddle-sign (self-test of the checker)")
        ->check(CLI::IsMember({"none", "twiddle-sign"}));

    ShiftsFlags shifts_flags;
    CLI::App* shifts = app.add_subcommand("shifts", "generate a shift table");
    shifts->add_option("--n", shifts_flags.n, "subcarrier count");
    shifts->add_option("--i", shifts_flags.i, "remaining stages");
    shifts->add_option("--u", shifts_flags.u, "alternative count");
    shifts->add_option("--method", shifts_flags.method, "random|mj")
        ->check(CLI::IsMember({"random", "mj"}));
    shifts->add_option("--seed", shifts_flags.seed, "seed for method=random");
    shifts->add_option("--out", shifts_flags.out_path,
                       "write to file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("slmsim");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ccdf->parsed()) {
            if (ps->count() > 0) ccdf_flags.phase_seed = phase_seed_value;
            return cmd_ccdf(ccdf_flags, out, err);
        }
        if (table_cmd->parsed())
            return cmd_ccrr_table(table_format, table_out, out);
        if (rho->parsed()) {
            try {
                return cmd_rho(rho_flags, out, err);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
        }
        if (verify->parsed()) {
            verify_opts.fault = fault == "twiddle-sign"
                                    ? FaultInjection::twiddle_sign
                                    : FaultInjection::none;
            const bool ok = run_verify_suite(verify_opts, out);
            out << (ok ? "verify: all checks passed\n"
                       : "verify: FAILED\n");
            return ok ? 0 : 1;
        }
        if (shifts->parsed()) {
            try {
                return cmd_shifts(shifts_flags, out);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 2;
}

}  // namespace slm
