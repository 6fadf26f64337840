#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpa/acceptance.hpp"
#include "dpa/canonical.hpp"
#include "dpa/characteristic.hpp"
#include "dpa/ermakov.hpp"
#include "dpa/fock.hpp"
#include "dpa/oracle.hpp"
#include "dpa/parallel.hpp"
#include "dpa/phase_space.hpp"
#include "dpa/propagators.hpp"
#include "dpa/statistics.hpp"

namespace dpa::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::string> kCommands = {"mu",        "ermakov", "stats",          "amplitudes", "wigner",
                                            "figure1",   "propagate", "squeeze-params", "tmin",     "verify"};

const std::vector<std::string> kConfigKeys = {"model", "omega",   "lambda",  "init",    "n",     "t",
                                              "t-grid", "nmax",   "level",   "format",  "out",   "points",
                                              "x-range", "p-range", "input", "quick"};

constexpr int kWignerPoints = 201;
constexpr int kContourPoints = 256;
constexpr int kPropagatePoints = 1025;
constexpr int kTminBrackets = 10000;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

bool parse_double(const std::string& s, double& v) {
    if (s.empty()) return false;
    const char* b = s.data();
    const char* e = b + s.size();
    if (*b == '+') ++b;
    const auto r = std::from_chars(b, e, v);
    return r.ec == std::errc() && r.ptr == e;
}

double to_double(const std::string& s, const std::string& what) {
    double v;
    if (!parse_double(s, v) || !std::isfinite(v)) throw UsageError(what + ": '" + s + "' is not a finite number");
    return v;
}

int to_int(const std::string& s, const std::string& what) {
    int v;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size())
        throw UsageError(what + ": '" + s + "' is not an integer");
    return v;
}

TimeGrid parse_time_grid(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw UsageError("--t-grid expects start:stop:count, got '" + s + "'");
    TimeGrid g{to_double(parts[0], "--t-grid start"), to_double(parts[1], "--t-grid stop"),
               to_int(parts[2], "--t-grid count")};
    if (g.count < 1) throw UsageError("--t-grid count must be at least 1");
    if (g.stop < g.start) throw UsageError("--t-grid stop must not be below start");
    return g;
}

std::pair<double, double> parse_range(const std::string& s, const std::string& flag) {
    const auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError(flag + " expects lo:hi, got '" + s + "'");
    const double lo = to_double(parts[0], flag), hi = to_double(parts[1], flag);
    if (!(hi > lo)) throw UsageError(flag + ": hi must exceed lo");
    return {lo, hi};
}

InitialData parse_init(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 6) throw UsageError("--init expects six comma-separated numbers alpha,beta,gamma,delta,eps,kappa");
    InitialData d;
    d.alpha0 = to_double(parts[0], "--init alpha");
    d.beta0 = to_double(parts[1], "--init beta");
    d.gamma0 = to_double(parts[2], "--init gamma");
    d.delta0 = to_double(parts[3], "--init delta");
    d.eps0 = to_double(parts[4], "--init eps");
    d.kappa0 = to_double(parts[5], "--init kappa");
    return d;
}

bool given_on_command_line(const std::vector<std::string>& args, const std::string& key) {
    const std::string flag = "--" + key;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

std::string usage_line() {
    std::string s = "usage: dpa <command> [options]\ncommands:";
    for (const auto& c : kCommands) s += " " + c;
    return s + "\nRun 'dpa --help' for the option list.";
}

// Output helpers

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv_row(std::ostream& os, const std::vector<double>& row) {
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k) os << ',';
        os << format_number(row[k]);
    }
    os << '\n';
}

void write_csv_header(std::ostream& os, const std::vector<std::string>& cols) {
    for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
    os << '\n';
}

void emit_table(const Table& t, Format f, std::ostream& os) {
    if (f == Format::Csv) {
        write_csv_header(os, t.columns);
        for (const auto& r : t.rows) write_csv_row(os, r);
        return;
    }
    ojson arr = ojson::array();
    for (const auto& r : t.rows) {
        ojson o;
        for (std::size_t k = 0; k < t.columns.size(); ++k) o[t.columns[k]] = r[k];
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
}

Table sweep(const std::vector<std::string>& columns, const std::vector<double>& ts,
            const std::function<std::vector<double>(double)>& row) {
    Table t{columns, std::vector<std::vector<double>>(ts.size())};
    parallel_for(ts.size(), [&](std::size_t i) { t.rows[i] = row(ts[i]); });
    return t;
}

// Commands

void cmd_mu(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    emit_table(sweep({"t", "mu0", "mu1", "W"}, ts,
                     [&](double t) {
                         const MuPair m = mu_pair(t, c.model);
                         return std::vector<double>{t, m.mu0, m.mu1, wronskian(t, c.model)};
                     }),
               c.format, os);
}

void cmd_ermakov(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    emit_table(sweep({"t", "alpha", "beta", "gamma", "delta", "epsilon", "kappa", "A", "B", "C", "D"}, ts,
                     [&](double t) {
                         const ErmakovState s = evolve_closed_form(c.init, t, c.model);
                         const SlowInvariants v = slow_invariants(c.init, t, c.model);
                         return std::vector<double>{t, s.alpha, s.beta, s.gamma, s.delta, s.eps, s.kappa,
                                                    v.A, v.B, v.C, v.D};
                     }),
               c.format, os);
}

void cmd_stats(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    emit_table(sweep({"t", "mean_N", "var_N", "g2", "sigma_q", "sigma_p", "sigma_pq", "mean_q", "mean_p"}, ts,
                     [&](double t) {
                         const StatisticsReport r = statistics_report(c.init, t, c.model);
                         return std::vector<double>{t, r.mean_n, r.var_n, r.g2, r.sigma_q, r.sigma_p,
                                                    r.sigma_pq, r.mean_q, r.mean_p};
                     }),
               c.format, os);
}

void cmd_squeeze(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    std::vector<SqueezeParams> path(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) {
        path[i] = squeeze_parameters(evolve_closed_form(c.init, ts[i], c.model), c.model.omega);
    });
    unwrap_squeeze_path(path);
    Table t{{"t", "theta", "tau", "phi", "re_xi", "im_xi"}, {}};
    for (std::size_t i = 0; i < ts.size(); ++i)
        t.rows.push_back({ts[i], path[i].theta, path[i].tau, path[i].phi, path[i].xi_d.real(), path[i].xi_d.imag()});
    emit_table(t, c.format, os);
}

void cmd_amplitudes(const RunConfig& c, std::ostream& os) {
    AmplitudeOptions opts;
    if (c.nmax) {
        opts.nmax = *c.nmax;
        opts.adaptive = false;
    }
    const auto ts = c.times.points();
    std::vector<AmplitudeMatrix> blocks;
    for (double t : ts) blocks.push_back(amplitudes(c.init, t, c.model, opts));

    auto header = [&](std::size_t i) {
        ojson h;
        h["t"] = ts[i];
        h["n"] = blocks[i].n;
        h["nmax"] = blocks[i].nmax;
        h["tail_mass"] = blocks[i].tail_mass;
        h["order_discrepancy"] = blocks[i].order_discrepancy;
        return h;
    };

    if (c.format == Format::Csv) {
        for (std::size_t i = 0; i < ts.size(); ++i) os << "# " << header(i).dump() << '\n';
        write_csv_header(os, {"t", "m", "re_c", "im_c", "abs2_c"});
        for (std::size_t i = 0; i < ts.size(); ++i)
            for (std::size_t m = 0; m < blocks[i].entries.size(); ++m) {
                const cplx z = blocks[i].entries[m];
                write_csv_row(os, {ts[i], double(m), z.real(), z.imag(), std::norm(z)});
            }
        return;
    }
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        ojson b = header(i);
        b["entries"] = ojson::array();
        for (std::size_t m = 0; m < blocks[i].entries.size(); ++m) {
            const cplx z = blocks[i].entries[m];
            b["entries"].push_back({{"m", m}, {"re", z.real()}, {"im", z.imag()}, {"abs2", std::norm(z)}});
        }
        arr.push_back(std::move(b));
    }
    os << arr.dump(2) << '\n';
}

void cmd_wigner(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    const int pts = c.points > 0 ? c.points : kWignerPoints;
    if (pts < 2) throw UsageError("--points must be at least 2 for wigner");
    std::vector<WignerGrid> grids;
    for (double t : ts) {
        if (c.x_range || c.p_range) {
            WignerGrid a = wigner_grid_auto(c.init, t, c.model, 3);
            const auto xr = c.x_range.value_or(std::make_pair(a.x_min, a.x_max));
            const auto pr = c.p_range.value_or(std::make_pair(a.p_min, a.p_max));
            grids.push_back(wigner_grid(c.init, t, c.model, xr.first, xr.second, pts, pr.first, pr.second, pts));
        } else {
            grids.push_back(wigner_grid_auto(c.init, t, c.model, pts));
        }
    }
    if (c.format == Format::Csv) {
        write_csv_header(os, {"t", "x", "p", "W"});
        for (const auto& g : grids)
            for (int i = 0; i < g.nx; ++i)
                for (int j = 0; j < g.np; ++j) write_csv_row(os, {g.t, g.x(i), g.p(j), g.at(i, j)});
        return;
    }
    ojson arr = ojson::array();
    for (const auto& g : grids) {
        ojson o;
        o["t"] = g.t;
        o["x_min"] = g.x_min;
        o["x_max"] = g.x_max;
        o["p_min"] = g.p_min;
        o["p_max"] = g.p_max;
        o["nx"] = g.nx;
        o["np"] = g.np;
        ojson rows = ojson::array();
        for (int i = 0; i < g.nx; ++i) {
            ojson r = ojson::array();
            for (int j = 0; j < g.np; ++j) r.push_back(g.at(i, j));
            rows.push_back(std::move(r));
        }
        o["W"] = std::move(rows);
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
}

void cmd_figure1(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    const int pts = c.points > 0 ? c.points : kContourPoints;
    std::vector<Contour> contours(ts.size());
    parallel_for(ts.size(), [&](std::size_t i) { contours[i] = contour_q(c.level, ts[i], c.init, c.model, pts); });
    if (c.format == Format::Csv) {
        write_csv_header(os, {"t", "k", "x", "p"});
        for (const auto& ct : contours)
            for (std::size_t k = 0; k < ct.points.size(); ++k)
                write_csv_row(os, {ct.t, double(k), ct.points[k].first, ct.points[k].second});
        return;
    }
    ojson arr = ojson::array();
    for (const auto& ct : contours) {
        ojson o;
        o["t"] = ct.t;
        o["level"] = ct.level;
        o["area"] = polygon_area(ct.points);
        ojson p = ojson::array();
        for (const auto& [x, q] : ct.points) p.push_back({x, q});
        o["points"] = std::move(p);
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
}

WavefunctionGrid read_wavefunction_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::vector<double> xs;
    std::vector<cplx> vs;
    std::string line;
    int lineno = 0;
    std::optional<double> first_t;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ',');
        double x, re, im, t;
        // A leading t column, as written by propagate itself, is accepted when it is constant.
        if (f.size() == 4 && parse_double(f[0], t)) {
            if (!first_t) first_t = t;
            else if (t != *first_t) throw std::runtime_error(path + ": input holds more than one time");
            f.erase(f.begin());
        }
        const bool ok = f.size() == 3 && parse_double(f[0], x) && parse_double(f[1], re) && parse_double(f[2], im);
        if (!ok) {
            if (xs.empty() && vs.empty() && lineno == 1) continue;  // header row
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected x,re,im");
        }
        xs.push_back(x);
        vs.emplace_back(re, im);
    }
    if (xs.size() < 3) throw std::runtime_error(path + ": need at least 3 samples");
    WavefunctionGrid g;
    g.x_min = xs.front();
    g.x_max = xs.back();
    g.num_points = int(xs.size());
    g.values = std::move(vs);
    if (!(g.x_max > g.x_min)) throw std::runtime_error(path + ": x must be increasing");
    const double tol = 1e-9 * (g.x_max - g.x_min);
    for (int i = 0; i < g.num_points; ++i)
        if (std::abs(xs[i] - g.x(i)) > tol) throw std::runtime_error(path + ": x samples must be uniformly spaced");
    return g;
}

void cmd_propagate(const RunConfig& c, std::ostream& os) {
    const auto ts = c.times.points();
    WavefunctionGrid in;
    if (!c.input_path.empty()) {
        in = read_wavefunction_csv(c.input_path);
    } else {
        const oracle::GridSpec g = oracle::default_grid(c.init, ts.back(), c.model, kPropagatePoints);
        in = sample_squeezed(c.init, 0.0, c.model, g.lower, g.upper, g.num_points);
    }
    PropagateOptions opts;
    if (c.x_range) {
        opts.x_min = c.x_range->first;
        opts.x_max = c.x_range->second;
    }
    opts.num_points = c.points;

    std::vector<PropagationResult> res;
    for (double t : ts) res.push_back(propagate_full(in, t, c.model, opts));

    if (c.format == Format::Csv) {
        write_csv_header(os, {"t", "x", "re_psi", "im_psi"});
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const auto& g = res[i].grid;
            for (int k = 0; k < g.num_points; ++k)
                write_csv_row(os, {ts[i], g.x(k), g.values[k].real(), g.values[k].imag()});
        }
        return;
    }
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& g = res[i].grid;
        ojson o;
        o["t"] = ts[i];
        o["method"] = res[i].method;
        if (res[i].transport) o["transport_discrepancy"] = res[i].transport_discrepancy;
        o["x_min"] = g.x_min;
        o["x_max"] = g.x_max;
        o["num_points"] = g.num_points;
        ojson re = ojson::array(), im = ojson::array();
        for (const cplx& v : g.values) {
            re.push_back(v.real());
            im.push_back(v.imag());
        }
        o["re_psi"] = std::move(re);
        o["im_psi"] = std::move(im);
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << '\n';
}

void cmd_tmin(const RunConfig& c, std::ostream& os) {
    if (!(c.times.stop > c.times.start)) throw UsageError("tmin needs a search interval, e.g. --t-grid 0:3:1");
    const int brackets = c.points > 0 ? c.points : kTminBrackets;
    const MinimumUncertaintyTimes r = minimum_uncertainty_times(c.init, c.model, c.times.start, c.times.stop, brackets);
    if (c.format == Format::Csv) {
        std::vector<std::pair<double, int>> all;
        for (double t : r.roots) all.emplace_back(t, 0);
        for (double t : r.touching) all.emplace_back(t, 1);
        std::sort(all.begin(), all.end());
        os << "t,kind\n";
        for (const auto& [t, k] : all) os << format_number(t) << ',' << (k == 0 ? "root" : "touching") << '\n';
        return;
    }
    ojson o;
    o["roots"] = r.roots;
    o["touching"] = r.touching;
    os << o.dump(2) << '\n';
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
    const auto results = run_acceptance(c.quick);
    bool all = true;
    ojson arr = ojson::array();
    for (const auto& r : results) {
        all = all && r.pass;
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"measured", r.measured},
                       {"tolerance", r.tolerance},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    }
    ojson o;
    o["quick"] = c.quick;
    o["pass"] = all;
    o["criteria"] = std::move(arr);
    os << o.dump(2) << '\n';
    return all ? 0 : 1;
}

}  // namespace

std::vector<double> TimeGrid::points() const {
    if (count <= 1) return {start};
    std::vector<double> ts(count);
    for (int i = 0; i < count; ++i) ts[i] = start + (stop - start) * i / (count - 1);
    ts.back() = stop;
    return ts;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    // general keeps large integers in exponent form, so at most 17 significant digits appear
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general);
    return std::string(buf, r.ptr);
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    std::vector<std::pair<std::string, std::string>> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end())
            throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        kv.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return kv;
}

RunConfig parse_args(int argc, const char* const* argv) {
    std::vector<std::string> args(argv, argv + argc);

    std::string config_path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (!config_path.empty()) {
        const bool time_on_cli = given_on_command_line(args, "t") || given_on_command_line(args, "t-grid");
        for (const auto& [key, value] : read_config_file(config_path)) {
            if (given_on_command_line(args, key)) continue;
            if ((key == "t" || key == "t-grid") && time_on_cli) continue;
            if (key == "quick") {
                if (value == "true" || value == "1") args.push_back("--quick");
                else if (value != "false" && value != "0") throw UsageError("config: quick must be true or false");
                continue;
            }
            args.push_back("--" + key + "=" + value);
        }
    }

    CLI::App app{"Degenerate parametric amplifier: closed-form dynamics, statistics and verification", "dpa"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    std::string model = "phi0", init_s, t_grid_s, nmax_s = "auto", format_s = "csv", x_range_s, p_range_s, cfg;
    double omega = 1.0, lambda = 0.25, t_single = 0.0;
    int n = 0;
    RunConfig rc;

    app.add_option("--config", cfg, "key=value file; command-line flags override its values");
    app.add_option("--model", model, "Pump phase variant")->check(CLI::IsMember({"phi0", "phi90"}))->capture_default_str();
    app.add_option("--omega", omega, "Oscillator frequency")->capture_default_str();
    app.add_option("--lambda", lambda, "Pump strength, 0 <= lambda < omega")->capture_default_str();
    app.add_option("--init", init_s, "Initial data alpha,beta,gamma,delta,eps,kappa (default: vacuum, beta = sqrt(omega))");
    app.add_option("--n", n, "Fock index of the evolving state")->check(CLI::NonNegativeNumber)->capture_default_str();
    auto* t_opt = app.add_option("--t", t_single, "Single time");
    auto* tg_opt = app.add_option("--t-grid", t_grid_s, "Time grid start:stop:count");
    t_opt->excludes(tg_opt);
    app.add_option("--nmax", nmax_s, "Fock cutoff: INT or auto")->capture_default_str();
    app.add_option("--level", rc.level, "Contour level of the quadratic form")->capture_default_str();
    app.add_option("--format", format_s, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", rc.out_path, "Output file (default: standard output)");
    app.add_option("--points", rc.points, "Grid, contour or bracketing resolution (0: command default)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--x-range", x_range_s, "Output x range lo:hi (wigner, propagate)");
    app.add_option("--p-range", p_range_s, "Output p range lo:hi (wigner)");
    app.add_option("--input", rc.input_path, "propagate: CSV with columns x, Re psi, Im psi");
    app.add_flag("--quick", rc.quick, "verify: reduced sample counts, same tolerances");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"mu", "Fundamental solutions mu0, mu1 and the Wronskian"},
        {"ermakov", "Ermakov parameters and slow invariants A, B, C, D"},
        {"stats", "Photon-number and quadrature statistics"},
        {"amplitudes", "Fock-basis transition amplitudes c_mn for the --n column"},
        {"wigner", "Wigner function of the dynamical vacuum on a grid"},
        {"figure1", "Contours Q = level of the vacuum Wigner function"},
        {"propagate", "Propagate a sampled wavefunction with the Green's function"},
        {"squeeze-params", "Squeeze angles theta, phi, strength tau and displacement xi"},
        {"tmin", "Minimum-uncertainty times (zeros of alpha) in the --t-grid interval"},
        {"verify", "Run the acceptance suite and print a JSON report"},
    };
    for (const auto& [name, desc] : commands) app.add_subcommand(name, desc)->fallthrough();

    std::vector<const char*> cargv;
    for (const auto& a : args) cargv.push_back(a.c_str());
    try {
        app.parse(int(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    rc.command = app.get_subcommands().front()->get_name();
    rc.format = format_s == "json" ? Format::Json : Format::Csv;
    if (nmax_s != "auto") {
        const int v = to_int(nmax_s, "--nmax");
        if (v < 1) throw UsageError("--nmax must be positive or auto");
        rc.nmax = v;
    }
    if (!x_range_s.empty()) rc.x_range = parse_range(x_range_s, "--x-range");
    if (!p_range_s.empty()) rc.p_range = parse_range(p_range_s, "--p-range");
    if (tg_opt->count()) {
        rc.times = parse_time_grid(t_grid_s);
        rc.time_given = true;
    } else {
        if (!std::isfinite(t_single)) throw UsageError("--t must be finite");
        rc.times = TimeGrid{t_single, t_single, 1};
        rc.time_given = t_opt->count() > 0;
    }
    if (!std::isfinite(omega) || !std::isfinite(lambda)) throw UsageError("--omega and --lambda must be finite");
    if (!std::isfinite(rc.level)) throw UsageError("--level must be finite");

    rc.model = make_model(omega, lambda, parse_variant(model));
    rc.init = init_s.empty() ? vacuum_init(omega, n) : parse_init(init_s);
    rc.init.n = n;
    validate(rc.init);
    return rc;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::ostringstream buf;
    int code = 0;
    try {
        if (c.command == "mu") cmd_mu(c, buf);
        else if (c.command == "ermakov") cmd_ermakov(c, buf);
        else if (c.command == "stats") cmd_stats(c, buf);
        else if (c.command == "amplitudes") cmd_amplitudes(c, buf);
        else if (c.command == "wigner") cmd_wigner(c, buf);
        else if (c.command == "figure1") cmd_figure1(c, buf);
        else if (c.command == "propagate") cmd_propagate(c, buf);
        else if (c.command == "squeeze-params") cmd_squeeze(c, buf);
        else if (c.command == "tmin") cmd_tmin(c, buf);
        else if (c.command == "verify") code = cmd_verify(c, buf);
        else throw UsageError("unknown command '" + c.command + "'");
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << usage_line() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (c.out_path.empty()) {
        out << buf.str();
        out.flush();
    } else {
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f || !(f << buf.str()) || !f.flush()) {
            err << "error: cannot write '" << c.out_path << "'\n";
            return 1;
        }
    }
    return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    try {
        rc = parse_args(argc, argv);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << usage_line() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n' << usage_line() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return run(rc, out, err);
}

}  // namespace dpa::cli
