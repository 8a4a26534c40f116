#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <cavityqed/cavityqed.hpp>

#include "record.hpp"

namespace cavityqed::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const Constants& K = kCodata2018;

const std::set<std::string, std::less<>> kCliKeys{"eta", "lambda0", "modes", "gamma", "sweep", "backend", "digits", "max_sweeps"};

struct Flags {
    std::optional<std::string> config, format, out, sweep, eta, lambda0, modes, ratio, digits, gamma, backend, max_sweeps;
};

// Everything a command needs after defaults, config file and flags have been merged.
struct Settings {
    ConfigMap map;
    SystemConfig sys;
    std::optional<double> ratio;
    int digits = 17;
    Format format = Format::Csv;

    bool has(std::string_view k) const { return map.contains(k); }
    int line(std::string_view k) const {
        const auto it = map.find(k);
        return it == map.end() ? 0 : it->second.line;
    }
    double number(std::string_view k, double fallback) const { return config_double(map, k, fallback); }

    std::optional<SweepSpec> sweep() const {
        const auto it = map.find("sweep");
        if (it == map.end()) return std::nullopt;
        return SweepSpec::parse(it->second.value, it->second.line);
    }

    EigenBackend backend() const {
        const auto it = map.find("backend");
        if (it == map.end() || it->second.value == "jacobi") return EigenBackend::Jacobi;
        if (it->second.value == "eigen") return EigenBackend::Eigen;
        throw ConfigError("expected 'jacobi' or 'eigen'", it->second.line, "backend");
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Accepts either the key/value text format or a JSON document; for JSON the
// "input" object of a previous run is used when present.
ConfigMap load_any_config(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') return parse_config_text(text);

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    const json& in = doc.contains("input") ? doc["input"] : doc;
    if (!in.is_object()) throw ConfigError("JSON config must be an object", 0, "input");
    ConfigMap m;
    for (auto it = in.begin(); it != in.end(); ++it) {
        const json& v = it.value();
        std::string s;
        if (v.is_string())
            s = v.get<std::string>();
        else if (v.is_number_integer())
            s = v.dump();
        else if (v.is_number())
            s = format_number(v.get<double>(), 17);
        else
            throw ConfigError("expected a number or string", 0, it.key());
        m[it.key()] = {s, 0};
    }
    return m;
}

Settings resolve(const Flags& f) {
    Settings s;
    if (f.config) s.map = load_any_config(*f.config);
    for (const auto& [k, e] : s.map)
        if (!is_system_key(k) && !kCliKeys.contains(k)) throw ConfigError("unknown key", e.line, k);

    const auto put = [&](const char* key, const std::optional<std::string>& v) {
        if (v) s.map[key] = {*v, 0};
    };
    put("sweep", f.sweep);
    put("eta", f.eta);
    put("lambda0", f.lambda0);
    put("modes", f.modes);
    put("ratio", f.ratio);
    put("digits", f.digits);
    put("gamma", f.gamma);
    put("backend", f.backend);
    put("max_sweeps", f.max_sweeps);

    s.sys = apply_system_keys(s.map);
    if (s.has("ratio")) {
        const double r = s.number("ratio", 0.0);
        if (!(r >= 0.0)) throw ConfigError("must be >= 0", s.line("ratio"), "ratio");
        s.ratio = r;
        if (s.sys.units == UnitsMode::SI) {
            if (!(r > 0.0)) throw ConfigError("must be > 0 in si units", s.line("ratio"), "ratio");
            s.sys.omega = plasma_frequency(s.sys) / r;
        }
    }
    const long digits = config_integer(s.map, "digits", 17);
    if (digits < 1 || digits > 17) throw ConfigError("must be between 1 and 17", s.line("digits"), "digits");
    s.digits = static_cast<int>(digits);
    if (f.format) {
        if (*f.format == "json")
            s.format = Format::Json;
        else if (*f.format != "csv")
            throw ConfigError("expected 'csv' or 'json'", 0, "format");
    }
    s.backend();
    return s;
}

json system_echo(const Settings& s) {
    json j;
    if (s.sys.units == UnitsMode::Ratio) {
        j["units"] = "ratio";
        j["ratio"] = s.sys.ratio;
        return j;
    }
    j["units"] = "si";
    j["n_electrons"] = s.sys.n_electrons;
    j["area"] = s.sys.area;
    j["lz"] = s.sys.lz;
    j["nz"] = s.sys.nz;
    j["omega"] = s.sys.mode_frequency();
    if (s.ratio) j["ratio"] = *s.ratio;
    return j;
}

void reject_sweep(const Settings& s, const std::string& cmd) {
    if (s.has("sweep")) throw ConfigError(cmd + " does not take a sweep", s.line("sweep"), "sweep");
}

SweepSpec sweep_or(const Settings& s, const std::string& def, std::initializer_list<const char*> vars) {
    SweepSpec sp = s.has("sweep") ? *s.sweep() : SweepSpec::parse(def);
    for (const char* v : vars)
        if (sp.var == v) return sp;
    std::string allowed;
    for (const char* v : vars) allowed += (allowed.empty() ? "" : ", ") + std::string(v);
    throw ConfigError("cannot sweep '" + sp.var + "' here (allowed: " + allowed + ")", s.line("sweep"), "sweep");
}

int positive_modes(const Settings& s, long def) {
    const long m = config_integer(s.map, "modes", def);
    if (m < 1 || m > 2000) throw ConfigError("must be between 1 and 2000", s.line("modes"), "modes");
    return static_cast<int>(m);
}

double lambda0_of(const Settings& s) {
    const double l = s.number("lambda0", 2.0);
    if (!(l >= 1.0)) throw ConfigError("must be >= 1", s.line("lambda0"), "lambda0");
    return l;
}

// ---------------------------------------------------------------- phase

OutputRecord cmd_phase(const Settings& s) {
    OutputRecord rec;
    rec.command = "phase";
    rec.input = system_echo(s);
    rec.columns = {"gamma", "phase_code", "phase"};

    std::vector<double> gammas;
    if (s.has("gamma")) {
        reject_sweep(s, "phase with an explicit gamma");
        gammas.push_back(s.number("gamma", 0.0));
        rec.input["gamma"] = gammas.back();
    } else if (s.has("sweep")) {
        const auto sp = sweep_or(s, "", {"gamma"});
        gammas = sp.values();
        rec.input["sweep"] = sp.to_string();
    } else {
        gammas.push_back(DerivedScales::from(s.sys).gamma());
    }
    rec.input["digits"] = s.digits;

    std::map<std::string, int> counts{{"stable", 0}, {"critical", 0}, {"unstable", 0}};
    for (double g : gammas) {
        if (!(g >= 0.0)) throw ConfigError("gamma must be >= 0", s.has("gamma") ? s.line("gamma") : s.line("sweep"),
                                           s.has("gamma") ? "gamma" : "sweep");
        const Phase p = classify_phase(g);
        const std::string label(to_string(p));
        ++counts[label];
        rec.add_row({g, static_cast<double>(static_cast<int>(p)), label});
    }
    for (const auto& [k, v] : counts) rec.summary[k + "_rows"] = v;
    return rec;
}

// ---------------------------------------------------------------- response

void parity_summary(OutputRecord& rec, const std::vector<double>& x, const std::vector<ResponseValue>& v) {
    const std::size_t n = x.size();
    double scale_x = 0.0, scale_re = 0.0, scale_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        scale_x = std::max(scale_x, std::abs(x[i]));
        scale_re = std::max(scale_re, std::abs(v[i].re));
        scale_im = std::max(scale_im, std::abs(v[i].im));
    }
    double even = 0.0, odd = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        if (std::abs(x[i] + x[j]) > 1e-12 * scale_x) {
            rec.summary["parity_re_even_residual"] = nullptr;
            rec.summary["parity_im_odd_residual"] = nullptr;
            return;
        }
        if (scale_re > 0.0) even = std::max(even, std::abs(v[i].re - v[j].re) / scale_re);
        if (scale_im > 0.0) odd = std::max(odd, std::abs(v[i].im + v[j].im) / scale_im);
    }
    rec.summary["parity_re_even_residual"] = even;
    rec.summary["parity_im_odd_residual"] = odd;
}

OutputRecord cmd_response(const Settings& s, const std::string& kind) {
    static const std::map<std::string, ResponseKind> kinds{{"aa", ResponseKind::AA}, {"ea", ResponseKind::EA},
                                                           {"jj", ResponseKind::JJ}, {"ja", ResponseKind::JA},
                                                           {"aj", ResponseKind::AJ}, {"sigma", ResponseKind::Sigma}};
    const auto kit = kinds.find(kind);
    if (kit == kinds.end()) throw ConfigError("unknown response kind '" + kind + "'", 0, "kind");

    const double eta = s.number("eta", 0.05);
    if (!(eta > 0.0)) throw ConfigError("must be > 0", s.line("eta"), "eta");
    const auto sp = sweep_or(s, "w=-3:3:601", {"w"});
    const auto scales = DerivedScales::from(s.sys);
    const double wt = scales.omega_tilde();

    OutputRecord rec;
    rec.command = "response " + kind;
    rec.input = system_echo(s);
    rec.input["eta"] = eta;
    rec.input["sweep"] = sp.to_string();
    rec.input["digits"] = s.digits;
    rec.columns = {"w_over_omega_tilde", "w", "re", "im"};
    const bool sigma = kit->second == ResponseKind::Sigma;
    const double s0 = sigma0(scales.omega_p(), eta * wt);
    if (sigma) {
        rec.columns.push_back("re_over_sigma0");
        rec.columns.push_back("im_over_sigma0");
    }

    const auto x = sp.values();
    std::vector<ResponseValue> vals;
    vals.reserve(x.size());
    for (double xi : x) {
        const BroadenedFrequency f{xi * wt, eta * wt};
        ResponseValue v;
        switch (kit->second) {
        case ResponseKind::AA: v = chi_aa_freq(f, wt, scales.volume()); break;
        case ResponseKind::EA: v = chi_ea_freq(f, wt, scales.volume()); break;
        case ResponseKind::JJ: v = chi_jj_freq(f, scales); break;
        case ResponseKind::JA: v = chi_mixed_freq(f, scales, Mixed::JA); break;
        case ResponseKind::AJ: v = chi_mixed_freq(f, scales, Mixed::AJ); break;
        case ResponseKind::Sigma: v = optical_conductivity(f, scales); break;
        }
        vals.push_back(v);
        std::vector<Cell> row{xi, f.w, v.re, v.im};
        if (sigma) {
            row.emplace_back(v.re / s0);
            row.emplace_back(v.im / s0);
        }
        rec.add_row(std::move(row));
    }

    rec.summary["omega_tilde"] = wt;
    rec.summary["gamma"] = scales.gamma();
    rec.summary["eta_abs"] = eta * wt;
    parity_summary(rec, x, vals);
    if (sigma) {
        const double dc = dc_conductivity(scales.gamma(), s0);
        const double dc_num = dc_limit_numeric(scales.omega_p(), wt, eta * wt);
        rec.summary["sigma0"] = s0;
        rec.summary["sigma_dc"] = dc;
        rec.summary["sigma_dc_over_sigma0"] = dc / s0;
        rec.summary["sigma_dc_extrapolated"] = dc_num;
        rec.summary["sigma_dc_extrapolated_over_sigma0"] = dc_num / s0;
        rec.summary["drude_mass_ratio"] = drude_effective_mass(scales.gamma()) / K.m_e;
    }
    return rec;
}

// ---------------------------------------------------------------- eft

std::string default_lambda_sweep(const EftConfig& cfg) {
    const double pole = cfg.pole_lambda0();
    const double top = std::isfinite(pole) ? std::min(pole, 1e12) : 1e12;
    return "lambda0=1:" + format_number(top, 17) + ":101:log";
}

void add_eft_scalars(OutputRecord& rec, const EftConfig& cfg) {
    rec.summary["alpha_dim"] = cfg.alpha_dim();
    rec.summary["n_alpha"] = cfg.alpha_dim() * cfg.n_electrons();
    rec.summary["kappa_z"] = cfg.kappa_z();
    rec.summary["omega_tilde_kz"] = cfg.omega_tilde_kz();
    rec.summary["pole_lambda0"] = cfg.pole_lambda0();
    rec.summary["pole_lambda_freq2"] = landau_pole(cfg);
}

// Runs `row` over a lambda0 sweep, stopping at the first hard pole.
void lambda_rows(OutputRecord& rec, const EftConfig& base, const SweepSpec& sp,
                 const std::function<std::vector<Cell>(const EftConfig&)>& row) {
    bool truncated = false;
    for (double l : sp.values()) {
        if (!(l >= 1.0)) throw DomainError("lambda0 must be >= 1 (sweep value " + format_number(l, 17) + ")");
        const auto c = base.with_lambda0(l);
        try {
            rec.add_row(row(c));
        } catch (const PoleError& e) {
            truncated = true;
            rec.summary["truncated"] = true;
            rec.summary["truncated_at_lambda0"] = l;
            rec.summary["notice"] = std::string("sweep truncated at the pole: ") + e.what();
            break;
        }
    }
    if (!truncated) rec.summary["truncated"] = false;
}

OutputRecord cmd_eft(const Settings& s, const std::string& sub) {
    const auto cfg = EftConfig::make(s.sys, lambda0_of(s));
    OutputRecord rec;
    rec.command = "eft " + sub;
    rec.input = system_echo(s);
    add_eft_scalars(rec, cfg);

    if (sub == "coupling" || sub == "mass" || sub == "mu" || sub == "casimir") {
        const auto sp = sweep_or(s, sub == "casimir" ? "lambda0=1:10:91" : default_lambda_sweep(cfg), {"lambda0"});
        rec.input["sweep"] = sp.to_string();
        if (sub == "coupling") {
            rec.columns = {"lambda0", "lambda_freq2", "coupling", "in_window"};
            lambda_rows(rec, cfg, sp, [](const EftConfig& c) -> std::vector<Cell> {
                return {c.lambda0(), c.lambda_freq2(), effective_coupling(c), c.in_stability_window() ? 1.0 : 0.0};
            });
        } else if (sub == "mass") {
            rec.columns = {"lambda0", "coupling", "in_window", "mass_ratio", "mass"};
            lambda_rows(rec, cfg, sp, [](const EftConfig& c) -> std::vector<Cell> {
                const double m = renormalized_mass(c);
                return {c.lambda0(), effective_coupling(c), c.in_stability_window() ? 1.0 : 0.0, m / K.m_e, m};
            });
        } else if (sub == "mu") {
            const double kf = cfg.scales().k_fermi();
            const double free = K.hbar * K.hbar * kf * kf / (2.0 * K.m_e);
            rec.columns = {"lambda0", "mass_ratio", "mu", "mu_over_free"};
            lambda_rows(rec, cfg, sp, [&](const EftConfig& c) -> std::vector<Cell> {
                const double mu = chemical_potential(kf, c);
                return {c.lambda0(), renormalized_mass(c) / K.m_e, mu, mu / free};
            });
            rec.summary["k_fermi"] = kf;
            rec.summary["mu_free"] = free;
        } else {
            rec.columns = {"lambda0", "energy_density", "pressure"};
            lambda_rows(rec, cfg, sp, [](const EftConfig& c) -> std::vector<Cell> {
                return {c.lambda0(), casimir_energy_density(c), casimir_pressure(c)};
            });
        }
    } else if (sub == "jellium") {
        const auto sp = sweep_or(s, "rs=0.2:10:99", {"rs", "lambda0"});
        rec.input["sweep"] = sp.to_string();
        if (sp.var == "rs") {
            rec.input["lambda0"] = cfg.lambda0();
            rec.columns = {"rs", "tau", "eps_x", "energy"};
            for (double rs : sp.values()) {
                const auto j = jellium(rs, cfg);
                rec.add_row({rs, j.tau, j.eps_x, j.tau + j.eps_x});
            }
            const auto j = jellium(1.0, cfg);
            rec.summary["rs_min"] = j.rs_min;
            rec.summary["mass_ratio"] = renormalized_mass(cfg) / K.m_e;
            rec.summary["rydberg_energy"] = rydberg_energy();
        } else {
            rec.columns = {"lambda0", "mass_ratio", "rs_min"};
            lambda_rows(rec, cfg, sp, [](const EftConfig& c) -> std::vector<Cell> {
                return {c.lambda0(), renormalized_mass(c) / K.m_e, jellium(1.0, c).rs_min};
            });
        }
    } else if (sub == "chi") {
        const double eta = s.number("eta", 0.0);
        if (!(eta >= 0.0)) throw ConfigError("must be >= 0", s.line("eta"), "eta");
        const auto sp = sweep_or(s, "w=-3:3:600", {"w"});
        const double lo = cfg.omega_tilde_kz();
        rec.input["lambda0"] = cfg.lambda0();
        rec.input["eta"] = eta;
        rec.input["sweep"] = sp.to_string();
        rec.columns = {"w_over_omega_tilde_kz", "w", "re", "im"};
        const auto x = sp.values();
        std::vector<ResponseValue> vals;
        for (double xi : x) {
            const BroadenedFrequency f{xi * lo, eta * lo};
            const auto v = eft_chi_aa(f, cfg);
            vals.push_back(v);
            rec.add_row({xi, f.w, v.re, v.im});
        }
        rec.summary["box_height"] = eft_box_height(s.sys.lz);
        rec.summary["window_lower"] = lo;
        rec.summary["window_upper"] = std::sqrt(cfg.lambda_freq2());
        parity_summary(rec, x, vals);
    } else {
        throw ConfigError("unknown eft subcommand '" + sub + "'", 0, "sub");
    }
    rec.input["digits"] = s.digits;
    return rec;
}

// ---------------------------------------------------------------- manymode

OutputRecord cmd_manymode(const Settings& s, const std::string& sub) {
    OutputRecord rec;
    rec.command = "manymode " + sub;
    rec.input = system_echo(s);
    const auto backend = s.backend();
    rec.input["backend"] = backend == EigenBackend::Jacobi ? "jacobi" : "eigen";

    if (sub == "diag") {
        reject_sweep(s, "manymode diag");
        const int M = positive_modes(s, 1);
        const auto scales = DerivedScales::from(s.sys);
        const bool si = s.sys.units == UnitsMode::SI;
        const double w = si ? scales.omega() : 1.0;
        const double wp = si ? scales.omega_p() : s.sys.ratio;
        const long max_sweeps = config_integer(s.map, "max_sweeps", JacobiOptions{}.max_sweeps);
        if (max_sweeps < 1) throw ConfigError("must be >= 1", s.line("max_sweeps"), "max_sweeps");
        const auto modes = ModeSet::ladder_1d(M, w);
        auto nm = diagonalize_w(build_w(modes, wp), backend, {JacobiOptions{}.rel_tol, static_cast<int>(max_sweeps)});
        nm.eps_tilde = rotated_polarizations(modes, nm.U);
        const auto occ = manymode_photon_occupation(modes, nm);
        rec.input["modes"] = M;
        if (s.has("max_sweeps")) rec.input["max_sweeps"] = max_sweeps;
        rec.columns = {"index", "Omega", "Omega_over_omega", "eps_tilde_norm2", "occupation"};
        for (int g = 0; g < M; ++g) {
            const auto& e = nm.eps_tilde[static_cast<std::size_t>(g)];
            rec.add_row({static_cast<double>(g), nm.Omega(g), nm.Omega(g) / w, e[0] * e[0] + e[1] * e[1] + e[2] * e[2],
                         occ[static_cast<std::size_t>(g)]});
        }
        rec.summary["sweeps"] = nm.sweeps;
        rec.summary["omega_tilde"] = std::sqrt(w * w + wp * wp);
        rec.summary["trace_residual"] = std::abs(nm.Omega2.sum() - build_w(modes, wp).trace()) /
                                        build_w(modes, wp).trace();
    } else if (sub == "lowest-scan") {
        const int M = positive_modes(s, 100);
        const auto sp = sweep_or(s, "ratio=0:0.9:10", {"ratio"});
        rec.input["modes"] = M;
        rec.input["sweep"] = sp.to_string();
        rec.columns = {"ratio", "rel_diff_percent", "rel_diff_cutoff_percent", "omega_tilde", "omega_lowest"};
        const auto ratios = sp.values();
        if (std::any_of(ratios.begin(), ratios.end(), [](double r) { return r < 0.0; }))
            throw ConfigError("ratios must be >= 0", s.line("sweep"), "sweep");
        double worst = 0.0;
        for (const auto& r : lowest_mode_scan(ratios, M)) {
            rec.add_row({r.ratio, r.rel_diff_percent, r.rel_diff_cutoff_percent, r.omega_tilde, r.omega_lowest});
            worst = std::max(worst, r.rel_diff_percent);
        }
        rec.summary["max_rel_diff_percent"] = worst;
    } else if (sub == "coupling-run") {
        reject_sweep(s, "manymode coupling-run");
        const int M = positive_modes(s, 200);
        const double r = s.ratio ? *s.ratio : DerivedScales::from(s.sys).ratio();
        rec.input["modes"] = M;
        rec.columns = {"M", "g_ex", "g_ex_over_ratio2", "g_eft_1d"};
        bool monotone = true;
        double prev = -1.0;
        for (int m = 1; m <= M; ++m) {
            const double g = exact_coupling_1d(m, 1.0, r, backend);
            const double eft = coupling_1d(m / K.c_light, 1.0, r);
            rec.add_row({static_cast<double>(m), g, r > 0.0 ? g / (r * r) : 0.0, eft});
            monotone = monotone && g > prev;
            prev = g;
        }
        rec.summary["ratio"] = r;
        rec.summary["monotone"] = monotone;
        rec.summary["saturation_bound"] = kPi * r / 2.0;
    } else {
        throw ConfigError("unknown manymode subcommand '" + sub + "'", 0, "sub");
    }
    rec.input["digits"] = s.digits;
    return rec;
}

void emit(const Settings& s, const Flags& f, const OutputRecord& rec, std::ostream& out) {
    if (!f.out || *f.out == "-") {
        write_record(out, rec, s.format, s.digits);
        return;
    }
    std::ofstream file(*f.out, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file '" + *f.out + "'", 0, "out");
    write_record(file, rec, s.format, s.digits);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cavity-coupled 2D electron gas: spectra, response, continuum theory and mode mixing", "cavityqed"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    Flags f;
    app.add_option("--config", f.config, "Key/value or JSON config file (JSON output of a previous run works)");
    app.add_option("--format", f.format, "Output format: csv or json");
    app.add_option("--out", f.out, "Output path, '-' for stdout");
    app.add_option("--sweep", f.sweep, "var=start:stop:count[:log]");
    app.add_option("--eta", f.eta, "Broadening in units of the dressed frequency");
    app.add_option("--lambda0", f.lambda0, "Dimensionless upper cutoff (>= 1)");
    app.add_option("--modes", f.modes, "Number of cavity modes");
    app.add_option("--ratio", f.ratio, "omega_p / omega; in si units this sets the mode frequency");
    app.add_option("--gamma", f.gamma, "Collective coupling for a single phase row");
    app.add_option("--digits", f.digits, "Significant digits in output (1-17)");
    app.add_option("--backend", f.backend, "Eigensolver: jacobi or eigen");
    app.add_option("--max-sweeps", f.max_sweeps, "Jacobi sweep limit for manymode diag");

    std::string kind, sub_eft, sub_mm;
    auto* phase = app.add_subcommand("phase", "Phase label over gamma");
    auto* resp = app.add_subcommand("response", "Single-mode response functions and conductivity");
    resp->add_option("kind", kind, "aa, ea, jj, ja, aj or sigma")->required();
    auto* eft = app.add_subcommand("eft", "Continuum effective theory");
    eft->add_option("sub", sub_eft, "coupling, mass, mu, casimir, jellium or chi")->required();
    auto* mm = app.add_subcommand("manymode", "Exact many-mode diagonalization");
    mm->add_option("sub", sub_mm, "diag, lowest-scan or coupling-run")->required();
    for (auto* sc : {phase, resp, eft, mm}) sc->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << version() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfig;
    }

    try {
        const Settings s = resolve(f);
        OutputRecord rec;
        if (*phase)
            rec = cmd_phase(s);
        else if (*resp)
            rec = cmd_response(s, kind);
        else if (*eft)
            rec = cmd_eft(s, sub_eft);
        else
            rec = cmd_manymode(s, sub_mm);
        emit(s, f, rec, out);
        return kOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const UnitModeError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const ConvergenceError& e) {
        err << "convergence error after " << e.sweeps() << " sweeps: " << e.what() << '\n';
        return kConvergence;
    } catch (const PoleError& e) {
        err << "pole: " << e.what() << '\n';
        return kDomain;
    } catch (const Error& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace cavityqed::cli
