#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "kgwell/comparison.hpp"
#include "kgwell/eigensolver.hpp"
#include "kgwell/errors.hpp"
#include "kgwell/oracle.hpp"
#include "kgwell/units.hpp"
#include "svg.hpp"

namespace kgwell::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParamFlags {
    std::optional<double> mbar;
    std::optional<double> vbar;
    std::optional<double> mass_mev;
    std::optional<double> v0_mev;
    std::optional<double> a_fm;
    double hbar_c = codata_hbar_c;
    bool natural = false;
};

struct Options {
    ParamFlags params;
    bool json = false;
    bool csv = false;
    std::string output;
    std::string svg;
    std::size_t grid_n = 2000;
    double tol = 1e-10;
    std::string norm = "l2";
    std::size_t samples = 501;
    int state = 0;
    double step = 1e-4;
    double tolerance = 1e-6;
    std::optional<double> vbar_from;
    std::optional<double> vbar_to;
    std::size_t steps = 11;
};

bool lab_form_given(const ParamFlags& p) {
    return p.mass_mev || p.v0_mev || p.a_fm;
}

bool natural_form_given(const ParamFlags& p) { return p.mbar || p.vbar || p.natural; }

/// Resolves either parameter form into (m_bar, v_bar). When `need_vbar` is
/// false the depth may be omitted (scan and nonrel supply their own).
DimensionlessParams resolve(const ParamFlags& p, bool need_vbar) {
    const bool lab = lab_form_given(p);
    const bool nat = natural_form_given(p);
    if (lab && nat) {
        throw usage_error("give either --mbar/--vbar or --mass-mev/--v0-mev/--a-fm, not both");
    }
    if (lab) {
        if (!p.mass_mev || !p.v0_mev || !p.a_fm) {
            throw usage_error("laboratory form requires --mass-mev, --v0-mev and --a-fm");
        }
        return to_dimensionless({*p.mass_mev, *p.v0_mev, *p.a_fm, p.hbar_c});
    }
    if (!p.mbar) throw usage_error("missing --mbar (or the laboratory form)");
    if (need_vbar && !p.vbar) throw usage_error("missing --vbar");
    DimensionlessParams d{*p.mbar, p.vbar.value_or(1.0)};
    validate(d);
    return d;
}

NormKind parse_norm(const std::string& s) {
    if (s == "l2" || s == "L2") return NormKind::l2;
    if (s == "kg-charge" || s == "KG-charge") return NormKind::kg_charge;
    throw usage_error("--norm must be l2 or kg-charge");
}

SpectrumOptions spectrum_options(const Options& o) {
    SpectrumOptions s;
    s.grid_n = o.grid_n;
    s.tol = o.tol;
    s.samples = o.samples;
    s.norm = parse_norm(o.norm);
    return s;
}

ShootingConfig shooting_config(const Options& o) {
    ShootingConfig c;
    c.step = o.step;
    c.grid_n = o.grid_n;
    c.tol = o.tol;
    return c;
}

void emit(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot open output file '" + path + "'");
    f << body;
}

void emit_warnings(const SpectrumReport& r, std::ostream& err) {
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
}

void maybe_svg(const Options& o, const SpectrumReport& r, const std::vector<BoundState>& states) {
    if (o.svg.empty()) return;
    std::ofstream f(o.svg, std::ios::binary);
    if (!f) throw usage_error("cannot open SVG file '" + o.svg + "'");
    f << render_svg(r.m_bar, r.v_bar, states, 1.5);
}

std::string spectrum_json(const SpectrumReport& r) {
    ordered_json j;
    j["params"]["m_bar"] = round_sig12(r.m_bar);
    j["params"]["v_bar"] = round_sig12(r.v_bar);
    j["states"] = ordered_json::array();
    for (const auto& s : r.states) {
        ordered_json st;
        st["n"] = s.n;
        st["parity"] = std::string(to_string(s.parity));
        st["e_bar"] = round_sig12(s.e_bar);
        st["e_over_mc2"] = round_sig12(s.e_bar / r.m_bar);
        st["binding_bar"] = round_sig12(r.m_bar - s.e_bar);
        st["alpha_bar"] = round_sig12(s.alpha_bar);
        st["nodes"] = s.nodes;
        j["states"].push_back(std::move(st));
    }
    j["solver"]["tol"] = r.tol;
    j["solver"]["grid_n"] = r.grid_n;
    j["solver"]["method"] = r.method;
    return j.dump(2) + "\n";
}

std::string spectrum_csv(const SpectrumReport& r) {
    std::string s = "n,parity,e_bar,e_over_mc2,binding_bar,alpha_bar,nodes\n";
    for (const auto& st : r.states) {
        s += fmt::format("{},{},{},{},{},{},{}\n", st.n, to_string(st.parity), format_number(st.e_bar),
                         format_number(st.e_bar / r.m_bar), format_number(r.m_bar - st.e_bar),
                         format_number(st.alpha_bar), st.nodes);
    }
    return s;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream& err) {
    const auto d = resolve(o.params, true);
    const SpectrumReport r = find_spectrum(d.m_bar, d.v_bar, spectrum_options(o));
    emit_warnings(r, err);
    emit(o.csv ? spectrum_csv(r) : spectrum_json(r), o.output, out);
    maybe_svg(o, r, r.states);
    return exit_ok;
}

int cmd_wavefunction(const Options& o, std::ostream& out, std::ostream& err) {
    const auto d = resolve(o.params, true);
    const SpectrumReport r = find_spectrum(d.m_bar, d.v_bar, spectrum_options(o));
    emit_warnings(r, err);
    if (o.state < 0 || static_cast<std::size_t>(o.state) >= r.states.size()) {
        throw usage_error(fmt::format("state {} not found; spectrum has {} state(s)", o.state,
                                      r.states.size()));
    }
    const BoundState& st = r.states[static_cast<std::size_t>(o.state)];
    std::string body = "y,psi,dpsi_dy,region\n";
    for (const auto& s : st.samples) {
        body += fmt::format("{},{},{},{}\n", format_number(s.y), format_number(s.psi),
                            format_number(s.dpsi_dy), to_string(s.region));
    }
    emit(body, o.output, out);
    maybe_svg(o, r, {st});
    return exit_ok;
}

std::vector<double> vbar_values(const Options& o) {
    if (o.vbar_from || o.vbar_to) {
        if (!o.vbar_from || !o.vbar_to) throw usage_error("--vbar-from and --vbar-to go together");
        if (o.steps < 1) throw usage_error("--steps must be at least 1");
        std::vector<double> v;
        for (std::size_t i = 0; i < o.steps; ++i) {
            const double t = o.steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(o.steps - 1);
            v.push_back(*o.vbar_from + t * (*o.vbar_to - *o.vbar_from));
        }
        return v;
    }
    if (o.params.vbar) return {*o.params.vbar};
    throw usage_error("give --vbar or --vbar-from/--vbar-to/--steps");
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
    if (lab_form_given(o.params)) throw usage_error("scan takes natural parameters (--mbar)");
    if (!o.vbar_from || !o.vbar_to) throw usage_error("scan requires --vbar-from and --vbar-to");
    const auto d = resolve(o.params, false);
    std::string body = "v_bar,n,parity,e_bar\n";
    for (double v : vbar_values(o)) {
        SpectrumOptions so = spectrum_options(o);
        so.samples = 3;
        const SpectrumReport r = find_spectrum(d.m_bar, v, so);
        emit_warnings(r, err);
        for (const auto& st : r.states) {
            body += fmt::format("{},{},{},{}\n", format_number(v), st.n, to_string(st.parity),
                                format_number(st.e_bar));
        }
    }
    emit(body, o.output, out);
    return exit_ok;
}

std::string optional_number(bool present, double x) { return present ? format_number(x) : ""; }

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto d = resolve(o.params, true);
    const ValidationResult v =
        validate_spectrum(d.m_bar, d.v_bar, spectrum_options(o), shooting_config(o));
    emit_warnings(v.report, err);

    std::string body;
    if (o.json) {
        ordered_json j;
        j["params"]["m_bar"] = round_sig12(d.m_bar);
        j["params"]["v_bar"] = round_sig12(d.v_bar);
        j["rows"] = ordered_json::array();
        for (const auto& r : v.rows) {
            ordered_json row;
            row["n"] = r.n;
            row["parity_analytic"] = r.analytic ? ordered_json(std::string(to_string(r.analytic->parity))) : ordered_json();
            row["parity_oracle"] = r.oracle ? ordered_json(std::string(to_string(r.oracle->parity))) : ordered_json();
            row["e_bar_analytic"] = r.analytic ? ordered_json(round_sig12(r.analytic->e_bar)) : ordered_json();
            row["e_bar_oracle"] = r.oracle ? ordered_json(round_sig12(r.oracle->e_bar)) : ordered_json();
            row["delta"] = (r.analytic && r.oracle) ? ordered_json(round_sig12(r.delta())) : ordered_json();
            row["nodes_analytic"] = r.analytic ? ordered_json(r.analytic->nodes) : ordered_json();
            row["nodes_oracle"] = r.oracle ? ordered_json(r.oracle->nodes) : ordered_json();
            j["rows"].push_back(std::move(row));
        }
        j["tolerance"] = o.tolerance;
        j["oracle_step"] = o.step;
        j["passed"] = v.passed(o.tolerance);
        body = j.dump(2) + "\n";
    } else {
        body = "n,parity_analytic,parity_oracle,e_bar_analytic,e_bar_oracle,delta,nodes_analytic,nodes_oracle\n";
        for (const auto& r : v.rows) {
            const bool both = r.analytic && r.oracle;
            body += fmt::format("{},{},{},{},{},{},{},{}\n", r.n,
                                r.analytic ? std::string(to_string(r.analytic->parity)) : "",
                                r.oracle ? std::string(to_string(r.oracle->parity)) : "",
                                optional_number(r.analytic.has_value(), r.analytic ? r.analytic->e_bar : 0.0),
                                optional_number(r.oracle.has_value(), r.oracle ? r.oracle->e_bar : 0.0),
                                optional_number(both, r.delta()),
                                r.analytic ? std::to_string(r.analytic->nodes) : "",
                                r.oracle ? std::to_string(r.oracle->nodes) : "");
        }
    }
    emit(body, o.output, out);
    maybe_svg(o, v.report, v.report.states);

    if (!v.passed(o.tolerance)) {
        err << fmt::format("validation failed: {} analytic vs {} oracle level(s), max delta {}\n",
                           v.report.states.size(), v.oracle.size(), format_number(v.max_delta()));
        return exit_validation_failed;
    }
    return exit_ok;
}

int cmd_nonrel(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<double> depths;
    double m_bar = 0.0;
    if (lab_form_given(o.params)) {
        const auto d = resolve(o.params, true);
        m_bar = d.m_bar;
        depths = {d.v_bar};
    } else {
        m_bar = resolve(o.params, false).m_bar;
        depths = vbar_values(o);
    }
    std::string body = "v_bar,kg_binding,schrodinger_binding,rel_diff\n";
    for (double v : depths) {
        SpectrumOptions so = spectrum_options(o);
        so.samples = 3;
        const auto row = nonrel_comparison(m_bar, v, so, shooting_config(o));
        if (!row) {
            err << "warning: no bound state at v_bar = " << format_number(v) << '\n';
            body += format_number(v) + ",,,\n";
            continue;
        }
        body += fmt::format("{},{},{},{}\n", format_number(row->v_bar), format_number(row->kg_binding),
                            format_number(row->schrodinger_binding), format_number(row->rel_diff));
    }
    emit(body, o.output, out);
    return exit_ok;
}

void add_param_flags(CLI::App* sub, Options& o, bool with_vbar) {
    sub->add_option("--mbar", o.params.mbar, "Dimensionless mass m c^2 / (hbar c / a)");
    if (with_vbar) sub->add_option("--vbar", o.params.vbar, "Dimensionless well depth V0 / (hbar c / a)");
    sub->add_flag("--natural", o.params.natural, "Parameters are given in natural (dimensionless) form");
    sub->add_option("--mass-mev", o.params.mass_mev, "Rest energy m c^2 in MeV");
    sub->add_option("--v0-mev", o.params.v0_mev, "Well depth V0 in MeV");
    sub->add_option("--a-fm", o.params.a_fm, "Well half-range a in fm");
    sub->add_option("--hbar-c", o.params.hbar_c, "hbar c in MeV fm")->capture_default_str();
}

void add_solver_flags(CLI::App* sub, Options& o) {
    sub->add_option("--grid-n", o.grid_n, "Energy scan points per parity")->capture_default_str();
    sub->add_option("--tol", o.tol, "Root tolerance in E")->capture_default_str();
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
}

} // namespace

std::string format_number(double x) { return fmt::format("{:.12g}", x); }

double round_sig12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of Klein-Gordon particles in a triangular well", "kgwell"};
    app.require_subcommand(1);
    Options o;

    auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies (JSON or CSV)");
    add_param_flags(spectrum, o, true);
    add_solver_flags(spectrum, o);
    spectrum->add_flag("--json", o.json, "JSON output (default)");
    spectrum->add_flag("--csv", o.csv, "CSV output");
    spectrum->add_option("--svg", o.svg, "Also write an SVG plot");
    spectrum->add_option("--norm", o.norm, "l2 or kg-charge")->capture_default_str();

    auto* wave = app.add_subcommand("wavefunction", "Samples of one normalized state (CSV)");
    add_param_flags(wave, o, true);
    add_solver_flags(wave, o);
    wave->add_option("--state", o.state, "Level index n, ascending in energy")->capture_default_str();
    wave->add_option("--samples", o.samples, "Number of samples on [-1.5, 1.5]")->capture_default_str();
    wave->add_option("--svg", o.svg, "Also write an SVG plot");
    wave->add_option("--norm", o.norm, "l2 or kg-charge")->capture_default_str();

    auto* scan = app.add_subcommand("scan", "Track levels across well depths (CSV)");
    add_param_flags(scan, o, false);
    add_solver_flags(scan, o);
    scan->add_option("--vbar-from", o.vbar_from, "First depth");
    scan->add_option("--vbar-to", o.vbar_to, "Last depth");
    scan->add_option("--steps", o.steps, "Number of depths")->capture_default_str();

    auto* validate_cmd = app.add_subcommand("validate", "Compare against direct RK4 shooting");
    add_param_flags(validate_cmd, o, true);
    add_solver_flags(validate_cmd, o);
    validate_cmd->add_flag("--json", o.json, "JSON output");
    validate_cmd->add_flag("--csv", o.csv, "CSV output (default)");
    validate_cmd->add_option("--step", o.step, "Oracle integration step")->capture_default_str();
    validate_cmd->add_option("--tolerance", o.tolerance, "Largest accepted |delta E|")->capture_default_str();
    validate_cmd->add_option("--svg", o.svg, "Also write an SVG plot");

    auto* nonrel = app.add_subcommand("nonrel", "Klein-Gordon vs Schrodinger binding energies (CSV)");
    add_param_flags(nonrel, o, true);
    add_solver_flags(nonrel, o);
    nonrel->add_option("--vbar-from", o.vbar_from, "First depth");
    nonrel->add_option("--vbar-to", o.vbar_to, "Last depth");
    nonrel->add_option("--steps", o.steps, "Number of depths")->capture_default_str();
    nonrel->add_option("--step", o.step, "Schrodinger integration step")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (o.json && o.csv) throw usage_error("--json and --csv are mutually exclusive");
        if (spectrum->parsed()) return cmd_spectrum(o, out, err);
        if (wave->parsed()) return cmd_wavefunction(o, out, err);
        if (scan->parsed()) return cmd_scan(o, out, err);
        if (validate_cmd->parsed()) return cmd_validate(o, out, err);
        if (nonrel->parsed()) return cmd_nonrel(o, out, err);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const accuracy_error& e) {
        err << "solver accuracy error: " << e.what() << '\n';
        return exit_accuracy;
    } catch (const invalid_parameter& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const config_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error& e) {
        err << "solver error: " << e.what() << '\n';
        return exit_accuracy;
    }
    return exit_usage;
}

} // namespace kgwell::cli
