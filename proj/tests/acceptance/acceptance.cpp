// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <fmt/format.h>
#include <json.hpp>

#include "kgwell/comparison.hpp"
#include "kgwell/eigensolver.hpp"
#include "kgwell/oracle.hpp"
#include "kgwell/specfun.hpp"

using namespace kgwell;

namespace {

constexpr double tol_b_identity = 1e-12;
constexpr double tol_kummer = 1e-10;
constexpr double tol_contiguous = 1e-9;
constexpr double tol_realness = 1e-10;
constexpr double tol_residual = 1e-5;
constexpr double tol_spectrum = 1e-6;
constexpr double tol_continuity = 1e-8;
constexpr double tol_step_halving = 1e-8;

const std::array<double, 2> masses{1.0, 2.0};
const std::array<double, 4> depths{1.0, 2.0, 5.0, 10.0};

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    fmt::print("{} [{}] {}: {} ({:.1f} s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail, secs);
    std::fflush(stdout);
}

double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

Outcome b_identity() {
    std::mt19937_64 g(1);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = uniform(g, 0.01, 10.0);
        const double v = uniform(g, 0.01, 50.0);
        const double e = uniform(g, -0.999, 0.999) * m;
        const double expected = m * m / (2.0 * v);
        worst = std::max(worst, std::abs(interior_coeffs(e, m, v).b_std - expected) / expected);
    }
    return {worst <= tol_b_identity, fmt::format("max rel err {:.2e} over 1000 samples (tol {:.0e})", worst, tol_b_identity)};
}

Outcome kummer_kernel() {
    using C = std::complex<double>;
    std::mt19937_64 g(2);
    double worst_exp = 0.0, worst_zero = 0.0, worst_transform = 0.0, worst_contig = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double r = uniform(g, 0.0, 10.0);
        const double phi = uniform(g, -M_PI, M_PI);
        const C z = std::polar(r, phi);
        const C a(uniform(g, -1.0, 2.0), uniform(g, -2.0, 2.0));
        const C b(uniform(g, 0.5, 3.0), uniform(g, -0.5, 0.5));

        const C ez = std::exp(z);
        worst_exp = std::max(worst_exp, std::abs(kummer_m(a, a, z) - ez) / std::abs(ez));
        worst_zero = std::max(worst_zero, std::abs(kummer_m(a, b, 0.0) - 1.0));

        const C raw = kummer_m_series(a, b, z);
        const C transformed = std::exp(z) * kummer_m_series(b - a, b, -z);
        worst_transform = std::max(worst_transform, std::abs(raw - transformed) / std::max(1.0, std::abs(raw)));

        const C t1 = (b - a) * kummer_m(a - 1.0, b, z);
        const C t2 = (2.0 * a - b + z) * kummer_m(a, b, z);
        const C t3 = a * kummer_m(a + 1.0, b, z);
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
        worst_contig = std::max(worst_contig, std::abs(t1 + t2 - t3) / scale);
    }
    const bool pass = worst_exp <= tol_kummer && worst_zero <= tol_kummer && worst_transform <= tol_kummer &&
                      worst_contig <= tol_contiguous;
    return {pass, fmt::format("M(a,a,z)=e^z {:.1e}, M(a,b,0)=1 {:.1e}, transformation {:.1e} (tol {:.0e}), "
                              "contiguous {:.1e} (tol {:.0e})",
                              worst_exp, worst_zero, worst_transform, tol_kummer, worst_contig, tol_contiguous)};
}

Outcome pcf_realness_residual() {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    double worst_imag = 0.0, worst_residual = 0.0;
    const double h = 1e-3;
    for (double b : {0.1, 0.5, 2.0}) {
        for (int k = -300; k <= 300; ++k) {
            const double rho = 0.01 * k;
            const C x = i * rho * rho / 2.0;
            const C phase = std::exp(-i * rho * rho / 4.0);
            const C ue = phase * kummer_m(0.25 - i * b / 2.0, 0.5, x);
            const C uo = rho * phase * kummer_m(0.75 - i * b / 2.0, 1.5, x);
            worst_imag = std::max({worst_imag, std::abs(ue.imag()) / (1.0 + std::abs(ue)),
                                   std::abs(uo.imag()) / (1.0 + std::abs(uo))});
            for (auto f : {pcf_even, pcf_odd}) {
                const double u = f(b, rho);
                const double d2 = (f(b, rho + h) - 2.0 * u + f(b, rho - h)) / (h * h);
                worst_residual = std::max(worst_residual, std::abs(d2 + (rho * rho / 4.0 - b) * u) / (1.0 + std::abs(u)));
            }
        }
    }
    return {worst_imag <= tol_realness && worst_residual <= tol_residual,
            fmt::format("imag residue {:.1e} (tol {:.0e}), ODE residual {:.1e} (tol {:.0e})", worst_imag,
                        tol_realness, worst_residual, tol_residual)};
}

Outcome spectrum_vs_oracle() {
    double worst = 0.0;
    std::size_t levels = 0;
    std::string problem;
    for (double m : masses) {
        for (double v : depths) {
            const auto result = validate_spectrum(m, v);
            levels += result.report.states.size();
            if (!result.counts_match()) problem += fmt::format(" count mismatch at ({},{})", m, v);
            for (const auto& row : result.rows) {
                if (!row.parity_match() || !row.nodes_match()) {
                    problem += fmt::format(" parity/nodes mismatch at ({},{}) n={}", m, v, row.n);
                }
                worst = std::max(worst, row.delta());
            }
        }
    }
    return {problem.empty() && worst <= tol_spectrum,
            fmt::format("{} levels over 8 parameter sets, max |dE| {:.1e} (tol {:.0e}){}", levels, worst,
                        tol_spectrum, problem)};
}

double rel(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

Outcome boundary_decay() {
    double worst_psi = 0.0, worst_dpsi = 0.0, worst_tail = 0.0;
    std::size_t states = 0;
    for (double m : masses) {
        for (double v : depths) {
            for (const auto& s : find_spectrum(m, v).states) {
                ++states;
                const double decay = std::exp(-s.alpha_bar);
                // Right edge: interior limit vs exterior d1 e^{-alpha y}.
                worst_psi = std::max(worst_psi, rel(s.psi_edge, s.d1 * decay));
                worst_dpsi = std::max(worst_dpsi, rel(s.dpsi_edge, -s.alpha_bar * s.d1 * decay));
                // Left edge from the assembled well grid vs exterior c1 e^{alpha y}.
                const Sample& left = s.well_grid.front();
                worst_psi = std::max(worst_psi, rel(left.psi, s.c1 * decay));
                worst_dpsi = std::max(worst_dpsi, rel(left.dpsi_dy, s.alpha_bar * s.c1 * decay));
                for (const Sample& p : s.samples) {
                    if (p.region == Region::right_tail) {
                        worst_tail = std::max(worst_tail, rel(p.psi, s.d1 * std::exp(-s.alpha_bar * p.y)));
                    } else if (p.region == Region::left_tail) {
                        worst_tail = std::max(worst_tail, rel(p.psi, s.c1 * std::exp(s.alpha_bar * p.y)));
                    }
                }
            }
        }
    }
    const bool pass = worst_psi <= tol_continuity && worst_dpsi <= tol_continuity && worst_tail <= tol_continuity;
    return {pass, fmt::format("{} states: psi jump {:.1e}, psi' jump {:.1e}, tail vs C e^(-+alpha y) {:.1e} (tol {:.0e})",
                              states, worst_psi, worst_dpsi, worst_tail, tol_continuity)};
}

Outcome weak_potential_limit() {
    std::vector<double> diffs;
    std::string detail;
    for (double v : {0.4, 0.2, 0.1}) {
        const auto row = nonrel_comparison(10.0, v);
        if (!row) return {false, fmt::format("no bound state at V0={}", v)};
        diffs.push_back(row->rel_diff);
        detail += fmt::format(" V0={}: {:.4e}", v, row->rel_diff);
    }
    const bool pass = diffs[1] < diffs[0] && diffs[2] < diffs[1];
    return {pass, "m=10 rel diff" + detail + " (strictly decreasing)"};
}

Outcome oracle_step_halving() {
    double worst = 0.0;
    std::string problem;
    ShootingConfig fine;
    fine.step = 5e-5;
    for (double m : masses) {
        for (double v : depths) {
            const auto a = kg_shoot_spectrum(m, v);
            const auto b = kg_shoot_spectrum(m, v, fine);
            if (a.size() != b.size()) {
                problem += fmt::format(" level count changed at ({},{})", m, v);
                continue;
            }
            for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i].e_bar - b[i].e_bar));
        }
    }
    return {problem.empty() && worst <= tol_step_halving,
            fmt::format("step 1e-4 -> 5e-5, max |dE| {:.1e} (tol {:.0e}){}", worst, tol_step_halving, problem)};
}

struct Run {
    int status;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + KGWELL_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string schema_problem(const std::string& body) {
    using json = nlohmann::ordered_json;
    json j;
    try {
        j = json::parse(body);
    } catch (const std::exception& e) {
        return std::string("not JSON: ") + e.what();
    }
    std::vector<std::string> top;
    for (auto it = j.begin(); it != j.end(); ++it) top.push_back(it.key());
    if (top != std::vector<std::string>{"params", "states", "solver"}) return "top-level keys";
    if (!j["params"]["m_bar"].is_number() || !j["params"]["v_bar"].is_number()) return "params";
    if (!j["states"].is_array() || j["states"].empty()) return "states";
    const std::vector<std::string> keys{"n", "parity", "e_bar", "e_over_mc2", "binding_bar", "alpha_bar", "nodes"};
    for (std::size_t i = 0; i < j["states"].size(); ++i) {
        const auto& s = j["states"][i];
        std::vector<std::string> got;
        for (auto it = s.begin(); it != s.end(); ++it) got.push_back(it.key());
        if (got != keys) return "state keys";
        if (s["n"] != static_cast<int>(i)) return "state labels";
        if (s["parity"] != "even" && s["parity"] != "odd") return "parity value";
        if (!s["e_bar"].is_number() || !s["nodes"].is_number_integer()) return "state types";
    }
    const auto& solver = j["solver"];
    if (!solver["tol"].is_number() || !solver["grid_n"].is_number_integer() || !solver["method"].is_string()) {
        return "solver";
    }
    return "";
}

Outcome cli_determinism() {
    const Run a = run_cli("spectrum --mbar 1 --vbar 5 --json");
    const Run b = run_cli("spectrum --mbar 1 --vbar 5 --json");
    const Run c = run_cli("spectrum --mbar 1 --vbar 5 --json");
    const Run v = run_cli("validate --mbar 1 --vbar 5");
    const bool identical = a.status == 0 && a.out == b.out && a.out == c.out && !a.out.empty();
    const std::string schema = schema_problem(a.out);
    const bool pass = identical && schema.empty() && v.status == 0;
    return {pass, fmt::format("3 runs {}, schema {}, validate exit {}", identical ? "byte-identical" : "DIFFER",
                              schema.empty() ? "valid" : "invalid (" + schema + ")", v.status)};
}

} // namespace

int main() {
    report(1, "b-identity", b_identity);
    report(2, "Kummer kernel identities", kummer_kernel);
    report(3, "parabolic-cylinder realness and ODE residual", pcf_realness_residual);
    report(4, "analytic vs shooting spectrum", spectrum_vs_oracle);
    report(5, "edge continuity and exterior decay", boundary_decay);
    report(6, "weak-potential limit", weak_potential_limit);
    report(7, "oracle step halving", oracle_step_halving);
    report(8, "CLI determinism and schema", cli_determinism);
    fmt::print("{} of 8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
