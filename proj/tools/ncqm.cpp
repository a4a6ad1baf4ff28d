// ncqm: spectra and residual verification for rotationally invariant
// Hamiltonians on the noncommutative phase space.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "ncqm/fock.hpp"
#include "ncqm/models.hpp"
#include "ncqm/serialize.hpp"
#include "ncqm/solver.hpp"
#include "ncqm/specfun.hpp"
#include "ncqm/wells.hpp"

using namespace ncqm;

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("NCQM_LOG");
    if (!env) return LogLevel::Info;
    const std::string v = env;
    if (v == "quiet") return LogLevel::Quiet;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Info;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::Info) std::cerr << "[ncqm] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::Debug) std::cerr << "[ncqm] " << msg << "\n";
}

int parse_half_label(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const int num = std::stoi(s.substr(0, slash));
        const int den = std::stoi(s.substr(slash + 1));
        if (den == 2) return num;
        if (den == 1) return 2 * num;
        throw CLI::ValidationError("labels are integers or halves, e.g. 2 or 3/2");
    }
    const double v = std::stod(s);
    const long long tw = std::llround(2.0 * v);
    if (std::abs(2.0 * v - tw) > 1e-9) throw CLI::ValidationError("labels are integers or halves");
    return int(tw);
}

struct CommonOptions {
    double theta = 0.0, kappa = 0.0, hbar = 1.0, mu = 1.0;
    int cutoff = 20;
    int truncation = 0;  // 0 = adaptive (solve_converged)
    double tol = 1e-9;
    std::string format = "json";
    std::string out;
    int jobs = 1;

    NCParams params() const { return {theta, kappa, hbar, mu}; }
};

void emit(const CommonOptions& opt, const std::string& csv, const Json& doc,
          const std::vector<WellRow>& table_rows = {}) {
    std::string payload;
    if (opt.format == "csv") {
        payload = csv;
    } else if (opt.format == "table" && !table_rows.empty()) {
        payload = render_well_table(table_rows);
    } else {
        payload = doc.dump(2) + "\n";
    }
    if (opt.out.empty()) {
        std::cout << payload;
    } else {
        write_file(opt.out, payload);
        log_info("wrote " + opt.out);
    }
}

// deterministic per-irrep fan-out: results merged in input order
template <typename Fn>
auto irrep_map(const std::vector<IrrepLabel>& irreps, int jobs, Fn&& fn) {
    using Result = decltype(fn(irreps.front()));
    std::vector<Result> out(irreps.size());
    if (jobs <= 1 || irreps.size() <= 1) {
        for (size_t i = 0; i < irreps.size(); ++i) out[i] = fn(irreps[i]);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < irreps.size(); i = next.fetch_add(1)) {
            try {
                out[i] = fn(irreps[i]);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, int(irreps.size())); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<IrrepLabel> select_irreps(const NCParams& p, const std::optional<int>& twice_k,
                                      const std::optional<int>& twice_j, int twice_max_label) {
    const Region reg = classify_region(p);
    if (twice_k) {
        IrrepLabel ir = IrrepLabel::sl2(*twice_k, +1);
        if (!ir.admissible_for(reg)) throw IrrepRegionMismatchError();
        if (*twice_k > 1) return {ir, IrrepLabel::sl2(*twice_k, -1)};
        return {ir};
    }
    if (twice_j) {
        IrrepLabel ir = IrrepLabel::su2(*twice_j);
        if (!ir.admissible_for(reg)) throw IrrepRegionMismatchError();
        return {ir};
    }
    return admissible_irreps(reg, 0.5 * twice_max_label);
}

// ----- subcommand payloads ---------------------------------------------------

int run_verify(const CommonOptions& opt) {
    const NCParams p = opt.params();
    log_info("verify: region=" + std::string(to_string(classify_region(p))) +
             " cutoff=" + std::to_string(opt.cutoff));
    const auto rows = verify_all(p, opt.cutoff);
    bool all_pass = true;
    std::ostringstream table;
    for (const auto& c : rows) {
        all_pass = all_pass && c.pass;
        table << (c.pass ? "[pass] " : "[FAIL] ") << c.check << "  residual=" << format_double(c.residual)
              << "  tol=" << format_double(c.tolerance) << "\n";
    }
    std::cout << table.str();
    Json jrows = Json::array();
    for (const auto& c : rows) jrows.push_back(to_json(c));
    if (!opt.out.empty())
        emit(opt, csv_checks(rows), document("verify", p, jrows));
    return all_pass ? 0 : 1;
}

int run_oscillator(const CommonOptions& opt, double omega, int levels) {
    const NCParams p = opt.params();
    const OscillatorSpec spec{omega};
    const Region reg = classify_region(p);
    const Frequencies f = oscillator_frequencies(p, spec);
    log_debug("oscillator frequencies " + format_double(f.plus) + ", " + format_double(f.minus));

    struct Entry {
        double energy;
        QuantaPair q;
    };
    std::vector<Entry> lattice;
    for (int np = 0; np <= levels; ++np)
        for (int nm = 0; np + nm <= levels; ++nm)
            lattice.push_back({p.hbar * (f.plus * (np + 0.5) + f.minus * (nm + 0.5)), {np, nm}});
    std::sort(lattice.begin(), lattice.end(), [](const Entry& a, const Entry& b) {
        return a.energy != b.energy ? a.energy < b.energy : a.q.n_plus < b.q.n_plus;
    });
    lattice.resize(size_t(std::min<size_t>(lattice.size(), size_t(levels))));

    std::vector<SpectrumRow> rows;
    const double mw2 = p.mu * p.mu * omega * omega;
    for (const Entry& e : lattice) {
        SpectrumRow row;
        row.region = to_string(reg);
        row.quanta = e.q;
        row.energy = e.energy;
        if (reg == Region::SuperCritical) {
            row.irrep = IrrepLabel::su2(e.q.n_plus + e.q.n_minus);
            row.twice_m = e.q.n_plus - e.q.n_minus;
        } else {
            // s = sign pairing the quanta difference with l per region
            const int sfrak = reg == Region::NegativeKappa && (-p.kappa - p.theta * mw2) < 0.0 ? -1 : +1;
            const int l = reg == Region::NegativeKappa ? sfrak * (e.q.n_plus - e.q.n_minus)
                                                       : e.q.n_minus - e.q.n_plus;
            const int twice_k = std::abs(l) + 1;
            row.irrep = IrrepLabel::sl2(twice_k, l >= 0 ? +1 : -1);
            row.twice_m = e.q.n_plus + e.q.n_minus + 1;
        }
        rows.push_back(row);
    }
    Json jrows = Json::array();
    for (const auto& rw : rows) jrows.push_back(to_json(rw));
    emit(opt, csv_spectrum(rows), document("oscillator", p, jrows));
    return 0;
}

int run_landau(const CommonOptions& opt, double b_field, double charge, int levels,
               const std::string& sweep) {
    const NCParams p = opt.params();
    const LandauSpec spec{b_field, charge};
    if (!sweep.empty()) {
        // kappa sweep of the density of states: "min:max:count"
        double lo, hi;
        int count;
        char c1, c2;
        std::istringstream in(sweep);
        if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2)
            throw CLI::ValidationError("--sweep-kappa expects min:max:count");
        std::vector<std::pair<double, double>> xy;
        Json jrows = Json::array();
        for (int i = 0; i < count; ++i) {
            const double kappa = lo + (hi - lo) * i / (count - 1.0);
            NCParams pk = p;
            pk.kappa = kappa;
            const DensityOfStates d = landau_density_of_states(pk, spec);
            xy.emplace_back(kappa, d.divergent ? std::numeric_limits<double>::infinity() : d.value);
            jrows.push_back(Json{{"kappa", kappa},
                                 {"rho", d.divergent ? Json("divergent") : Json(d.value)},
                                 {"divergent", d.divergent}});
        }
        emit(opt, csv_xy(xy, "kappa", "rho"), document("landau-density-sweep", p, jrows));
        return 0;
    }
    const auto lv = landau_spectrum(p, spec, levels);
    const DensityOfStates rho = landau_density_of_states(p, spec);
    std::ostringstream csv;
    csv << "level,energy,degeneracy\n";
    Json jrows = Json::array();
    for (const auto& l : lv) {
        csv << l.n << ',' << format_double(l.energy) << ',' << l.degeneracy << '\n';
        jrows.push_back(Json{{"level", l.n}, {"energy", l.energy}, {"degeneracy", l.degeneracy}});
    }
    Json doc = document("landau", p, jrows);
    doc["effective_field"] = landau_effective_field(p, spec);
    doc["density_of_states"] = rho.divergent ? Json("divergent") : Json(rho.value);
    emit(opt, csv.str(), doc);
    return 0;
}

int run_well(const CommonOptions& opt, double a2_over_theta, std::optional<double> v0, bool infinite,
             const std::optional<int>& twice_k, const std::optional<int>& twice_j, int twice_max_label) {
    const NCParams p = opt.params();
    const Region reg = classify_region(p);
    const std::vector<IrrepLabel> irreps = select_irreps(p, twice_k, twice_j, twice_max_label);
    log_info("well: region=" + std::string(to_string(reg)) + " irreps=" + std::to_string(irreps.size()));

    const auto spectra = irrep_map(irreps, opt.jobs, [&](const IrrepLabel& ir) {
        if (infinite) return infinite_well_spectrum(p, ir, a2_over_theta);
        return finite_well_bound_states(p, ir, WellSpec::finite(*v0, a2_over_theta));
    });

    std::vector<WellRow> rows;
    for (size_t i = 0; i < irreps.size(); ++i) {
        int index = 0;
        for (double e : spectra[i]) rows.push_back({to_string(reg), irreps[i], index++, e, "bound"});
        if (!infinite && reg == Region::ZeroKappa)
            rows.push_back({to_string(reg), irreps[i], -1, *v0, "continuum-marker"});
    }
    Json jrows = Json::array();
    for (const auto& rw : rows) jrows.push_back(to_json(rw));
    Json doc = document("well", p, jrows);
    doc["a2_over_theta"] = a2_over_theta;
    doc["v0"] = infinite ? Json("infinite") : Json(*v0);
    emit(opt, csv_wells(rows), doc, rows);
    return 0;
}

int run_spectrum(const CommonOptions& opt, const std::string& poly, const std::string& table_path,
                 int levels, const std::optional<int>& twice_k, const std::optional<int>& twice_j,
                 int twice_max_label) {
    const NCParams p = opt.params();
    const Region reg = classify_region(p);

    RadialPotential v;
    if (!poly.empty()) {
        std::vector<double> coef;
        std::istringstream in(poly);
        std::string tok;
        while (std::getline(in, tok, ',')) coef.push_back(std::stod(tok));
        v = [coef](double r2) {
            double acc = 0.0, pw = 1.0;
            for (double c : coef) {
                acc += c * pw;
                pw *= r2;
            }
            return acc;
        };
    } else {
        std::ifstream in(table_path);
        if (!in) throw IoError("cannot read potential table: " + table_path);
        std::vector<std::pair<double, double>> pts;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || std::isalpha(line[0])) continue;
            std::istringstream ls(line);
            double r2, val;
            char comma;
            if (ls >> r2 >> comma >> val) pts.emplace_back(r2, val);
        }
        if (pts.size() < 2) throw IoError("potential table needs at least two rows");
        std::sort(pts.begin(), pts.end());
        v = [pts](double r2) {
            if (r2 <= pts.front().first) return pts.front().second;
            if (r2 >= pts.back().first) return pts.back().second;
            const auto hi = std::upper_bound(pts.begin(), pts.end(), std::make_pair(r2, -1e300));
            const auto lo = hi - 1;
            const double t = (r2 - lo->first) / (hi->first - lo->first);
            return lo->second + t * (hi->second - lo->second);
        };
    }

    const std::vector<IrrepLabel> irreps = select_irreps(p, twice_k, twice_j, twice_max_label);
    const auto results = irrep_map(irreps, opt.jobs, [&](const IrrepLabel& ir) {
        if (ir.family == IrrepLabel::Family::Su2) return eigensolve(build_hamiltonian(p, ir, v, 0));
        if (opt.truncation > 0)  // expert mode: fixed truncation, no convergence loop
            return eigensolve(build_hamiltonian(p, ir, v, opt.truncation));
        return solve_converged(p, ir, v, levels, opt.tol);
    });

    std::vector<WellRow> rows;
    Json jresults = Json::array();
    for (size_t i = 0; i < irreps.size(); ++i) {
        SpectrumResult trimmed = results[i];
        const int n = std::min<int>(levels, int(trimmed.eigenvalues.size()));
        trimmed.eigenvalues.resize(size_t(n));
        trimmed.converged.resize(size_t(n));
        jresults.push_back(to_json(trimmed));
        for (int idx = 0; idx < n; ++idx) {
            const bool conv = trimmed.converged[size_t(idx)];
            rows.push_back({to_string(reg), irreps[i], idx, trimmed.eigenvalues[size_t(idx)],
                            conv ? "bound" : "continuum-marker"});
        }
    }
    emit(opt, csv_wells(rows), document("spectrum", p, jresults), rows);
    return 0;
}

// config-file defaults: flags override --config values, which override built-ins
void apply_config(CLI::App& app, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config: " + path);
    Json cfg = Json::parse(in);
    std::function<void(CLI::App*)> walk = [&](CLI::App* a) {
        for (CLI::Option* o : a->get_options()) {
            const auto lnames = o->get_lnames();
            if (lnames.empty()) continue;
            const std::string name = lnames.front();
            if (o->count() > 0 || !cfg.contains(name)) continue;
            const Json& val = cfg.at(name);
            try {
                if (val.is_boolean()) {
                    if (val.get<bool>()) o->add_result("true");
                } else {
                    o->add_result(val.is_string() ? val.get<std::string>() : val.dump());
                }
                o->run_callback();
            } catch (const CLI::Error&) {
                throw CLI::ValidationError("config value for --" + name + " is invalid");
            }
        }
        for (CLI::App* sub : a->get_subcommands({})) walk(sub);
    };
    walk(&app);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of rotationally invariant Hamiltonians on the noncommutative phase space"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    CommonOptions opt;
    std::string config_path;
    app.add_option("--theta", opt.theta, "coordinate noncommutativity (length^2, >= 0)");
    app.add_option("--kappa", opt.kappa, "momentum noncommutativity (momentum^2)");
    app.add_option("--hbar", opt.hbar, "action quantum (default 1)");
    app.add_option("--mu", opt.mu, "mass (default 1)");
    app.add_option("--cutoff", opt.cutoff, "per-mode Fock cutoff for verification (default 20)");
    app.add_option("--truncation", opt.truncation, "fixed sl2 truncation for spectrum (0 = adaptive)");
    app.add_option("--tol", opt.tol, "convergence tolerance (default 1e-9)");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", opt.out, "output path (default stdout)");
    app.add_option("--jobs", opt.jobs, "worker threads for per-irrep sweeps");
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run the Fock-space residual battery");

    // oscillator
    double omega = 1.0;
    int levels = 10;
    CLI::App* osc = app.add_subcommand("oscillator", "isotropic oscillator spectrum");
    osc->add_option("--omega", omega, "oscillator frequency");
    osc->add_option("--levels", levels, "number of levels");

    // landau
    double b_field = 1.0, charge = 1.0;
    std::string sweep;
    CLI::App* lan = app.add_subcommand("landau", "Landau levels and density of states");
    lan->add_option("--B", b_field, "magnetic field");
    lan->add_option("--e", charge, "charge (eB > 0)");
    lan->add_option("--levels", levels, "number of levels");
    lan->add_option("--sweep-kappa", sweep, "density sweep min:max:count (plot-ready x,y output)");

    // well
    double a2_over_theta = 1.0;
    std::optional<double> v0;
    bool infinite = false;
    std::string k_str, j_str, max_label_str = "3";
    CLI::App* well = app.add_subcommand("well", "cylindrical well spectra");
    well->add_option("--A2-over-theta", a2_over_theta, "squared radius over theta")->required();
    well->add_option("--V0", v0, "barrier height");
    well->add_flag("--infinite", infinite, "hard well");
    well->add_option("--k", k_str, "single sl2 irrep label (p/2 form)");
    well->add_option("--j", j_str, "single su2 irrep label (p/2 form)");
    well->add_option("--max-label", max_label_str, "sweep irreps up to this label");

    // spectrum
    std::string poly, table_path;
    CLI::App* spectrum = app.add_subcommand("spectrum", "central potential via the three-term recursion");
    spectrum->add_option("--potential-poly", poly, "polynomial in r^2: c0,c1,...");
    spectrum->add_option("--potential-file", table_path, "two-column CSV table of (r^2, V)");
    spectrum->add_option("--levels", levels, "eigenvalues per irrep");
    spectrum->add_option("--k", k_str, "single sl2 irrep label (p/2 form)");
    spectrum->add_option("--j", j_str, "single su2 irrep label (p/2 form)");
    spectrum->add_option("--max-label", max_label_str, "sweep irreps up to this label");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) apply_config(app, config_path);

        opt.params().validate();
        const auto opt_half = [](const CLI::App* a, const std::string& name,
                                 const std::string& s) -> std::optional<int> {
            return a->count(name) > 0 ? std::optional<int>(parse_half_label(s)) : std::nullopt;
        };

        if (verify->parsed()) return run_verify(opt);
        if (osc->parsed()) return run_oscillator(opt, omega, levels);
        if (lan->parsed()) return run_landau(opt, b_field, charge, levels, sweep);
        if (well->parsed()) {
            if (infinite == v0.has_value())
                throw CLI::ValidationError("well needs exactly one of --V0 or --infinite");
            return run_well(opt, a2_over_theta, v0, infinite, opt_half(well, "--k", k_str),
                            opt_half(well, "--j", j_str), parse_half_label(max_label_str));
        }
        if (spectrum->parsed()) {
            if (poly.empty() == table_path.empty())
                throw CLI::ValidationError("spectrum needs exactly one of --potential-poly or --potential-file");
            return run_spectrum(opt, poly, table_path, levels, opt_half(spectrum, "--k", k_str),
                                opt_half(spectrum, "--j", j_str), parse_half_label(max_label_str));
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        std::cerr << "ncqm: " << e.what() << "\n";
        return 2;
    } catch (const CriticalRegionError& e) {
        std::cerr << "ncqm: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "ncqm: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "ncqm: " << e.what() << "\n";
        return 2;
    }
}
