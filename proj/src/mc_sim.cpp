#include "slm/mc_sim.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slm/qam.hpp"
#include "slm/rng.hpp"

namespace slm {

void SimConfig::validate() const {
    if (!is_pow2(n_fft) || n_fft < 4)
        throw std::invalid_argument("SimConfig: N must be a power of two >= 4");
    if (u_count < 1) throw std::invalid_argument("SimConfig: U must be >= 1");
    if (trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (!run_conventional && !run_proposed)
        throw std::invalid_argument("SimConfig: no scheme enabled");
    if (run_proposed) StageTap(n_fft, i_stages);  // validates 1 <= i <= n-1
    if (threads < 0) throw std::invalid_argument("SimConfig: threads must be >= 0");
    if (!thresholds_db.empty()) {
        for (std::size_t t = 1; t < thresholds_db.size(); ++t)
            if (!(thresholds_db[t] > thresholds_db[t - 1]))
                throw std::invalid_argument("SimConfig: thresholds must ascend");
    }
    if (shift_method == ShiftMethod::external && shift_file.empty())
        throw std::invalid_argument("SimConfig: external shift method needs a file");
    if (oversampling != 1)
        throw std::invalid_argument(
            "SimConfig: oversampling is reserved; only factor 1 is supported");
}

std::uint64_t SimConfig::effective_phase_seed() const {
    return phase_seed ? *phase_seed : derive_seed(seed, kStreamPhaseVectors);
}

std::uint64_t SimConfig::shift_seed() const {
    return derive_seed(seed, kStreamShiftTable);
}

TrialResult simulate_trial(const SimConfig& cfg,
                           const std::vector<PhaseRotationVector>& pvs,
                           const ShiftTable* table, const TwiddleTable& tw,
                           std::uint64_t trial_index) {
    std::mt19937_64 eng = make_engine(cfg.seed, trial_index);
    std::vector<std::uint8_t> labels(cfg.n_fft);
    for (auto& label : labels)
        label = static_cast<std::uint8_t>(eng() & 0xF);  // 4 fresh bits per symbol
    const SymbolSequence x = map_16qam_labels(labels);

    TrialResult tr;
    if (cfg.run_conventional) {
        SlmResult r = run_conventional_slm(x, pvs, tw);
        tr.conventional = r.papr_all[static_cast<std::size_t>(r.selected_index)];
        tr.conventional_ops = r.op_count;
    }
    if (cfg.run_proposed) {
        SlmResult r = run_cyclic_slm(x, *table, tw);
        tr.proposed = r.papr_all[static_cast<std::size_t>(r.selected_index)];
        tr.proposed_ops = r.op_count;
    }
    return tr;
}

namespace {

constexpr std::uint64_t kChunkTrials = 1024;  // fixed: merge order never depends on thread count

struct SchemeAccum {
    CcdfCurve curve;
    double papr_db_sum = 0.0;
    OpCount ops;

    explicit SchemeAccum(const std::vector<double>& grid) : curve(grid) {}

    void add(const PaprValue& p, const OpCount& o) {
        curve.add(p);
        papr_db_sum += p.db;
        ops += o;
    }
};

struct ChunkAccum {
    std::optional<SchemeAccum> conventional;
    std::optional<SchemeAccum> proposed;
};

ShiftTable load_shift_table(const SimConfig& cfg) {
    const StageTap tap(cfg.n_fft, cfg.i_stages);
    switch (cfg.shift_method) {
        case ShiftMethod::random:
            return gen_random_shifts(cfg.u_count, tap, cfg.shift_seed());
        case ShiftMethod::mj:
            return gen_mj_shifts(cfg.u_count, tap);
        case ShiftMethod::external: {
            std::ifstream in(cfg.shift_file);
            if (!in)
                throw std::runtime_error("cannot open shift file: " + cfg.shift_file);
            std::ostringstream text;
            text << in.rdbuf();
            ShiftTable table = parse_shift_table(text.str(), tap);
            if (table.u_count() != cfg.u_count)
                throw std::invalid_argument("shift file row count does not match U");
            return table;
        }
    }
    throw std::invalid_argument("SimConfig: unknown shift method");
}

}  // namespace

SimReport run_simulation(const SimConfig& cfg) {
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();

    SimReport report;
    report.config = cfg;
    if (report.config.thresholds_db.empty())
        report.config.thresholds_db = CcdfCurve::default_grid();
    const std::vector<double>& grid = report.config.thresholds_db;

    const TwiddleTable tw(cfg.n_fft);
    std::vector<PhaseRotationVector> pvs;
    if (cfg.run_conventional)
        pvs = gen_random_phase_vectors(cfg.u_count, cfg.n_fft,
                                       cfg.effective_phase_seed());
    std::optional<ShiftTable> table;
    if (cfg.run_proposed) table = load_shift_table(cfg);

    const std::uint64_t chunk_count = (cfg.trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<ChunkAccum> chunks(chunk_count);
    for (auto& c : chunks) {
        if (cfg.run_conventional) c.conventional.emplace(grid);
        if (cfg.run_proposed) c.proposed.emplace(grid);
    }

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned worker_count = std::min<std::uint64_t>(
        cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : hw, chunk_count);

    std::atomic<std::uint64_t> next_chunk{0};
    auto work = [&]() {
        const SimConfig& c = report.config;
        for (;;) {
            const std::uint64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= chunk_count) break;
            const std::uint64_t lo = chunk * kChunkTrials;
            const std::uint64_t hi = std::min(lo + kChunkTrials, cfg.trials);
            ChunkAccum& acc = chunks[chunk];
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                TrialResult tr = simulate_trial(
                    c, pvs, table ? &*table : nullptr, tw, trial);
                if (tr.conventional)
                    acc.conventional->add(*tr.conventional, tr.conventional_ops);
                if (tr.proposed) acc.proposed->add(*tr.proposed, tr.proposed_ops);
            }
        }
    };

    if (worker_count <= 1) {
        work();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) workers.emplace_back(work);
        for (auto& w : workers) w.join();
    }

    // merge in chunk order so the result is independent of scheduling
    auto reduce = [&](auto member) -> std::optional<SchemeStats> {
        if (!(chunks[0].*member)) return std::nullopt;
        SchemeStats stats{CcdfCurve(grid), 0.0, {}};
        for (const ChunkAccum& c : chunks) {
            const SchemeAccum& a = *(c.*member);
            stats.ccdf.merge(a.curve);
            stats.mean_selected_papr_db += a.papr_db_sum;
            stats.ops += a.ops;
        }
        stats.mean_selected_papr_db /= static_cast<double>(cfg.trials);
        return stats;
    };
    report.conventional = reduce(&ChunkAccum::conventional);
    report.proposed = reduce(&ChunkAccum::proposed);
    report.shift_table = std::move(table);

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    return report;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

const char* scheme_name(const SimConfig& cfg) {
    if (cfg.run_conventional && cfg.run_proposed) return "both";
    return cfg.run_conventional ? "conventional" : "proposed";
}

const char* method_name(ShiftMethod m) {
    switch (m) {
        case ShiftMethod::random: return "random";
        case ShiftMethod::mj: return "mj";
        case ShiftMethod::external: return "file";
    }
    return "?";
}

}  // namespace

void write_csv(const SimReport& report, std::ostream& out) {
    const SimConfig& cfg = report.config;
    out << "# n=" << cfg.n_fft << '\n';
    out << "# u=" << cfg.u_count << '\n';
    if (cfg.run_proposed) out << "# i=" << cfg.i_stages << '\n';
    out << "# trials=" << cfg.trials << '\n';
    out << "# seed=" << cfg.seed << '\n';
    out << "# scheme=" << scheme_name(cfg) << '\n';
    if (cfg.run_proposed) {
        out << "# shift_method=" << method_name(cfg.shift_method) << '\n';
        if (cfg.shift_method == ShiftMethod::external)
            out << "# shift_file=" << cfg.shift_file << '\n';
    }
    out << "# phase_seed=";
    if (cfg.phase_seed)
        out << *cfg.phase_seed << '\n';
    else
        out << "default" << '\n';
    out << "# thresholds_db=";
    for (std::size_t t = 0; t < cfg.thresholds_db.size(); ++t) {
        if (t > 0) out << ',';
        out << fmt_double(cfg.thresholds_db[t]);
    }
    out << '\n';

    auto stat_lines = [&](const char* name, const SchemeStats& s) {
        out << "# stat " << name
            << " mean_papr_db=" << fmt_double(s.mean_selected_papr_db)
            << " cmul=" << s.ops.cmul << " cadd=" << s.ops.cadd << '\n';
    };
    if (report.conventional) stat_lines("conventional", *report.conventional);
    if (report.proposed) stat_lines("proposed", *report.proposed);

    out << "papr_db";
    if (report.conventional) out << ",ccdf_conventional";
    if (report.proposed) out << ",ccdf_proposed";
    out << '\n';
    for (std::size_t t = 0; t < cfg.thresholds_db.size(); ++t) {
        out << fmt_double(cfg.thresholds_db[t]);
        if (report.conventional)
            out << ',' << fmt_double(report.conventional->ccdf.exceedance(t));
        if (report.proposed)
            out << ',' << fmt_double(report.proposed->ccdf.exceedance(t));
        out << '\n';
    }
}

SimConfig parse_config_echo(std::istream& in) {
    SimConfig cfg;
    cfg.thresholds_db.clear();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '#') break;
        std::string body = line.substr(1);
        if (!body.empty() && body[0] == ' ') body.erase(0, 1);
        if (body.rfind("stat ", 0) == 0) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = body.substr(0, eq);
        const std::string value = body.substr(eq + 1);
        if (key == "n")
            cfg.n_fft = std::stoull(value);
        else if (key == "u")
            cfg.u_count = std::stoi(value);
        else if (key == "i")
            cfg.i_stages = std::stoi(value);
        else if (key == "trials")
            cfg.trials = std::stoull(value);
        else if (key == "seed")
            cfg.seed = std::stoull(value);
        else if (key == "scheme") {
            cfg.run_conventional = value == "both" || value == "conventional";
            cfg.run_proposed = value == "both" || value == "proposed";
        } else if (key == "shift_method") {
            if (value == "random")
                cfg.shift_method = ShiftMethod::random;
            else if (value == "mj")
                cfg.shift_method = ShiftMethod::mj;
            else
                cfg.shift_method = ShiftMethod::external;
        } else if (key == "shift_file")
            cfg.shift_file = value;
        else if (key == "phase_seed") {
            if (value != "default") cfg.phase_seed = std::stoull(value);
        } else if (key == "thresholds_db") {
            std::istringstream list(value);
            std::string tok;
            while (std::getline(list, tok, ',')) {
                double v = 0.0;
                const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (res.ec != std::errc{})
                    throw std::invalid_argument("bad threshold in config echo");
                cfg.thresholds_db.push_back(v);
            }
        }
    }
    return cfg;
}

}  // namespace slm
