#include "ncosc/cli_support.hpp"
#include "ncosc/core.hpp"
#include "ncosc/degeneracy.hpp"
#include "ncosc/errors.hpp"
#include "ncosc/oracle.hpp"
#include "ncosc/rational.hpp"
#include "ncosc/wavefunctions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace ncosc;
using nlohmann::ordered_json;

namespace {

struct Options {
    // global
    std::string units = "si";
    bool dimensionless = false;
    bool si = false;
    double mass = 0.0, omega = 0.0, B = 0.0, theta = 0.0, hbar = 0.0;
    CLI::Option *mass_opt = nullptr, *omega_opt = nullptr, *B_opt = nullptr,
                *theta_opt = nullptr, *hbar_opt = nullptr;
    std::string out;
    std::string format;
    double case_tol = default_case_tolerance;
    std::uint64_t seed = 12345;

    // spectrum
    int n_r_max = 3;
    int m_l_min = -3, m_l_max = 3;

    // degeneracy
    std::int64_t n = 0, k = 0;
    std::string f_text;
    std::vector<std::int64_t> scan;
    int group_nr_max = 6;
    int group_ml_min = -12, group_ml_max = 12;
    std::string profile_max;
    bool nonneg_m = false;

    // density
    int d_n_r = 0, d_m_l = 0;
    double radius = 0.0;  // 0 = auto extent
    int resolution = 256;
    bool mask_outside = false;

    // verify
    std::string suite = "all";
    int n_1d = 16, margin = 4, draws = 0;
    double tol_comm = 1e-10, tol_fd = 1e-6, tol_resid = 1e-6, tol_norm = 1e-8;
};

UnitsMode resolve_units(const Options& o) {
    if (o.dimensionless && o.si) throw DomainError("--dimensionless and --si conflict");
    if (o.dimensionless) return UnitsMode::dimensionless;
    if (o.si) return UnitsMode::si;
    return o.units == "dimensionless" ? UnitsMode::dimensionless : UnitsMode::si;
}

// Dimensionless mode starts from m = omega = hbar = theta = 1, B = 0; SI mode
// requires the scales explicitly (theta only where the command consumes it).
PhysicalParams assemble_params(const Options& o, UnitsMode units, bool need_theta) {
    PhysicalParams p;
    if (units == UnitsMode::si) {
        p.hbar = default_hbar_si;
        if (o.hbar_opt->count()) p.hbar = o.hbar;
        if (!o.mass_opt->count() || !o.omega_opt->count())
            throw DomainError("SI units require --mass and --omega");
        if (need_theta && !o.theta_opt->count())
            throw DomainError("SI units require --theta for this command");
        p.mass = o.mass;
        p.omega = o.omega;
        if (o.theta_opt->count())
            p.theta = o.theta;
        else if (o.mass > 0.0 && o.omega > 0.0)
            p.theta = p.hbar / (o.mass * o.omega);  // placeholder, classification only
    } else {
        if (o.mass_opt->count()) p.mass = o.mass;
        if (o.omega_opt->count()) p.omega = o.omega;
        if (o.theta_opt->count()) p.theta = o.theta;
        if (o.hbar_opt->count()) p.hbar = o.hbar;
    }
    if (o.B_opt->count()) p.B = o.B;
    return p;
}

class OutputTarget {
public:
    OutputTarget(const std::string& path, bool binary) {
        if (path.empty()) {
            os_ = &std::cout;
            return;
        }
        file_.open(path, binary ? std::ios::out | std::ios::binary : std::ios::out);
        if (!file_) throw DomainError("cannot open output path: " + path);
        os_ = &file_;
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
};

const char* units_name(UnitsMode u) { return u == UnitsMode::si ? "si" : "dimensionless"; }

std::vector<std::string> param_echo(UnitsMode u, const PhysicalParams& p) {
    return {
        std::string("units=") + units_name(u),
        "mass=" + format_double(p.mass),
        "omega=" + format_double(p.omega),
        "B=" + format_double(p.B),
        "theta=" + format_double(p.theta),
        "hbar=" + format_double(p.hbar),
    };
}

ordered_json params_json(UnitsMode u, const PhysicalParams& p) {
    return ordered_json{{"units", units_name(u)}, {"mass", p.mass},   {"omega", p.omega},
                        {"B", p.B},               {"theta", p.theta}, {"hbar", p.hbar}};
}

void write_comments(std::ostream& os, const std::vector<std::string>& lines) {
    for (const auto& l : lines) os << "# " << l << '\n';
}

std::string resolve_format(const Options& o, const std::string& fallback) {
    return o.format.empty() ? fallback : o.format;
}

int cmd_classify(const Options& o) {
    const UnitsMode units = resolve_units(o);
    const PhysicalParams p = assemble_params(o, units, true);
    const CaseLabel label = classify_case(p, o.case_tol);
    const EffectiveParams e = effective_params(p);

    OutputTarget out(o.out, false);
    auto& os = out.stream();
    os << "case: " << case_name(label) << '\n'
       << "M_eff: " << format_double(e.M_eff) << '\n'
       << "Omega: " << format_double(e.Omega) << '\n'
       << "gamma: " << format_double(e.gamma) << '\n'
       << "L_factor: " << format_double(e.L_factor) << '\n';
    const double ratio = e.gamma / e.Omega;
    const char* ratio_name = label == CaseLabel::no_field       ? "kappa"
                             : label == CaseLabel::intermediate ? "xi"
                                                                : "gamma/Omega";
    os << ratio_name << ": " << format_double(ratio);
    if (label == CaseLabel::saturated)
        os << " (Omega = gamma; Landau regime)";
    else if (auto r = approximate_rational(ratio, 1e-8, 1000))  // display hint for rounded inputs
        os << " ~ " << format_rational(*r);
    os << '\n';
    return 0;
}

int cmd_spectrum(const Options& o) {
    const UnitsMode units = resolve_units(o);
    const PhysicalParams p = assemble_params(o, units, true);
    const EffectiveParams e = effective_params(p);
    const std::string fmt = resolve_format(o, "csv");
    if (fmt == "pgm") throw DomainError("spectrum supports csv or json output");

    if (o.n_r_max > max_box_bound || std::abs(o.m_l_min) > max_box_bound ||
        std::abs(o.m_l_max) > max_box_bound)
        throw DomainError("spectrum: quantum-number box exceeds the sanity bound");
    const bool empty = o.n_r_max < 0 || o.m_l_min > o.m_l_max;
    if (!empty) {
        const std::uint64_t rows = static_cast<std::uint64_t>(o.n_r_max + 1) *
                                   static_cast<std::uint64_t>(o.m_l_max - o.m_l_min + 1);
        if (rows > default_state_budget) throw BudgetExceeded("spectrum: box too large");
    }

    const double ratio = e.gamma / e.Omega;
    const auto ratio_rat = approximate_rational(ratio, 1e-12, 1000000);
    const auto coefficient_text = [&](QuantumNumbers q) {
        if (ratio_rat) return format_rational(energy_coefficient_exact(*ratio_rat, q));
        return format_double(2.0 * q.n_r + std::abs(q.m_l) + 1.0 - q.m_l * ratio);
    };

    OutputTarget out(o.out, false);
    auto& os = out.stream();
    if (fmt == "json") {
        ordered_json doc;
        doc["params"] = params_json(units, p);
        doc["rows"] = ordered_json::array();
        if (!empty)
            for (int n_r = 0; n_r <= o.n_r_max; ++n_r)
                for (int m_l = o.m_l_min; m_l <= o.m_l_max; ++m_l) {
                    const QuantumNumbers q{n_r, m_l};
                    doc["rows"].push_back(ordered_json{{"n_r", n_r},
                                                       {"m_l", m_l},
                                                       {"coefficient", coefficient_text(q)},
                                                       {"energy", energy(e, q)}});
                }
        os << doc.dump(2) << '\n';
        return 0;
    }
    write_comments(os, param_echo(units, p));
    os << "n_r,m_l,coefficient,energy\n";
    if (!empty)
        for (int n_r = 0; n_r <= o.n_r_max; ++n_r)
            for (int m_l = o.m_l_min; m_l <= o.m_l_max; ++m_l) {
                const QuantumNumbers q{n_r, m_l};
                os << n_r << ',' << m_l << ',' << coefficient_text(q) << ','
                   << format_double(energy(e, q)) << '\n';
            }
    return 0;
}

std::string states_field(const std::vector<QuantumNumbers>& states) {
    std::string s;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i) s += ';';
        s += '(' + std::to_string(states[i].n_r) + ' ' + std::to_string(states[i].m_l) + ')';
    }
    return s;
}

int cmd_degeneracy(const Options& o) {
    const UnitsMode units = resolve_units(o);
    const PhysicalParams p = assemble_params(o, units, false);
    const std::string fmt = resolve_format(o, "csv");
    if (fmt == "pgm") throw DomainError("degeneracy supports csv or json output");

    OutputTarget out(o.out, false);
    auto& os = out.stream();

    if (!o.scan.empty()) {
        const std::int64_t n_max = o.scan[0], k_max = o.scan[1];
        if (n_max < 1 || k_max < 1 || n_max > max_box_bound || k_max > max_box_bound)
            throw DomainError("degeneracy --scan bounds must lie in [1, 10000]");
        if (static_cast<std::uint64_t>(n_max) * static_cast<std::uint64_t>(k_max) >
            default_state_budget)
            throw BudgetExceeded("degeneracy --scan enumerates too many pairs");
        if (fmt == "json") {
            ordered_json doc;
            doc["params"] = params_json(units, p);
            doc["pairs"] = ordered_json::array();
            for (std::int64_t n = 1; n <= n_max; ++n)
                for (std::int64_t k = 1; k <= k_max; ++k)
                    doc["pairs"].push_back(
                        ordered_json{{"n", n},
                                     {"k", k},
                                     {"kappa", format_rational(kappa_from_pair(n, k))},
                                     {"theta_d", theta_d_case1(p.mass, p.omega, p.hbar, n, k)}});
            os << doc.dump(2) << '\n';
            return 0;
        }
        write_comments(os, param_echo(units, p));
        os << "n,k,kappa,theta_d\n";
        for (std::int64_t n = 1; n <= n_max; ++n)
            for (std::int64_t k = 1; k <= k_max; ++k)
                os << n << ',' << k << ',' << format_rational(kappa_from_pair(n, k)) << ','
                   << format_double(theta_d_case1(p.mass, p.omega, p.hbar, n, k)) << '\n';
        return 0;
    }

    if (!o.f_text.empty()) {
        if (o.n < 1 || o.k < 1)
            throw DomainError("Case III candidate search requires --n and --k");
        const Rational f = parse_rational(o.f_text);
        if (f <= 0) throw DomainError("--f must be positive");
        const auto candidates = g_candidates(f, o.n, o.k);
        const Rational diff_a(BigInt(4) * o.n * o.k, BigInt(o.n) * o.n - BigInt(o.k) * o.k);
        if (fmt == "json") {
            ordered_json doc;
            doc["f"] = format_rational(f);
            doc["n"] = o.n;
            doc["k"] = o.k;
            doc["candidates"] = ordered_json::array();
            for (const auto& g : candidates) {
                const XiValue xi = xi_exact(f, g);
                doc["candidates"].push_back(ordered_json{
                    {"branch", g == f - diff_a ? "4nk/(n^2-k^2)" : "(n^2-k^2)/(nk)"},
                    {"g", format_rational(g)},
                    {"xi", xi.exact ? format_rational(*xi.exact) : format_double(xi.value)}});
            }
            os << doc.dump(2) << '\n';
            return 0;
        }
        write_comments(os, {"f=" + format_rational(f), "n=" + std::to_string(o.n),
                            "k=" + std::to_string(o.k)});
        os << "branch,g,xi\n";
        for (const auto& g : candidates) {
            const XiValue xi = xi_exact(f, g);
            os << (g == f - diff_a ? "4nk/(n^2-k^2)" : "(n^2-k^2)/(nk)") << ','
               << format_rational(g) << ','
               << (xi.exact ? format_rational(*xi.exact) : format_double(xi.value)) << '\n';
        }
        return 0;
    }

    if (p.B == 0.0) {
        if (o.n < 1 || o.k < 1)
            throw DomainError("degeneracy at B = 0 requires the ratio pair --n and --k");
        const Rational kappa = kappa_from_pair(o.n, o.k);
        const double theta_d = theta_d_case1(p.mass, p.omega, p.hbar, o.n, o.k);
        if (!o.profile_max.empty()) {
            const auto profile =
                degeneracy_count_profile(kappa, parse_rational(o.profile_max), o.nonneg_m);
            if (fmt == "json") {
                ordered_json doc;
                doc["kappa"] = format_rational(kappa);
                doc["theta_d"] = theta_d;
                doc["profile"] = ordered_json::array();
                for (const auto& [coeff, count] : profile)
                    doc["profile"].push_back(
                        ordered_json{{"coefficient", format_rational(coeff)}, {"count", count}});
                os << doc.dump(2) << '\n';
                return 0;
            }
            write_comments(os, {"kappa=" + format_rational(kappa),
                                "theta_d=" + format_double(theta_d)});
            os << "coefficient,count\n";
            for (const auto& [coeff, count] : profile)
                os << format_rational(coeff) << ',' << count << '\n';
            return 0;
        }
        const auto levels =
            group_levels(kappa, o.group_nr_max, o.group_ml_min, o.group_ml_max);
        if (fmt == "json") {
            ordered_json doc;
            doc["kappa"] = format_rational(kappa);
            doc["theta_d"] = theta_d;
            doc["levels"] = ordered_json::array();
            for (const auto& level : levels) {
                ordered_json states = ordered_json::array();
                for (const auto& q : level.states)
                    states.push_back(ordered_json::array({q.n_r, q.m_l}));
                doc["levels"].push_back(ordered_json{
                    {"coefficient", format_rational(level.coefficient)}, {"states", states}});
            }
            os << doc.dump(2) << '\n';
            return 0;
        }
        write_comments(os, {"kappa=" + format_rational(kappa),
                            "theta_d=" + format_double(theta_d)});
        os << "coefficient,states\n";
        for (const auto& level : levels)
            os << format_rational(level.coefficient) << ',' << states_field(level.states) << '\n';
        return 0;
    }

    const CaseLabel label = classify_case(p, o.case_tol);
    if (label == CaseLabel::saturated) {
        if (fmt == "json") {
            ordered_json doc;
            doc["message"] = "every level infinitely degenerate; theta_d = theta";
            doc["theta_d"] = p.theta;
            os << doc.dump(2) << '\n';
            return 0;
        }
        os << "# every level infinitely degenerate; theta_d = theta\n";
        os << "theta_d," << format_double(p.theta) << '\n';
        return 0;
    }
    // intermediate field: report the ratio; exact candidates come from --f.
    // 1e-14 keeps the hint from stopping at an early convergent of a deep rational.
    const double xi = xi_from_params(p);
    const auto xi_rat = approximate_rational(xi, 1e-14, 1000000000);
    if (fmt == "json") {
        ordered_json doc;
        doc["params"] = params_json(units, p);
        doc["xi"] = xi;
        if (xi_rat) doc["xi_rational"] = format_rational(*xi_rat);
        os << doc.dump(2) << '\n';
        return 0;
    }
    write_comments(os, param_echo(units, p));
    os << "xi," << format_double(xi);
    if (xi_rat) os << ',' << format_rational(*xi_rat);
    os << '\n';
    return 0;
}

int cmd_density(const Options& o) {
    const UnitsMode units = resolve_units(o);
    const PhysicalParams p = assemble_params(o, units, true);
    if (o.d_n_r < 0) throw DomainError("--n-r must be nonnegative");
    const Eigenstate state{effective_params(p), {o.d_n_r, o.d_m_l}};
    const double radius = o.radius != 0.0 ? o.radius : auto_density_radius(state);
    DensityGrid grid = density_grid(state, radius, o.resolution);

    if (o.mask_outside) {
        const double step = 2.0 * grid.radius / grid.resolution;
        const double r2 = grid.radius * grid.radius;
        for (int i = 0; i < grid.resolution; ++i) {
            const double y = grid.radius - (i + 0.5) * step;
            for (int j = 0; j < grid.resolution; ++j) {
                const double x = -grid.radius + (j + 0.5) * step;
                if (x * x + y * y > r2)
                    grid.values[static_cast<std::size_t>(i) * grid.resolution + j] = 0.0;
            }
        }
        grid.outside_disc_masked = true;
    }

    auto header = param_echo(units, p);
    header.push_back("n_r=" + std::to_string(o.d_n_r));
    header.push_back("m_l=" + std::to_string(o.d_m_l));
    header.push_back("radius=" + format_double(grid.radius));
    header.push_back("resolution=" + std::to_string(grid.resolution));
    header.push_back("length_scale=" + format_double(grid.length_scale));
    header.push_back("max_value=" + format_double(grid.max_value));
    if (grid.outside_disc_masked) header.push_back("masked=1");

    const std::string fmt = resolve_format(o, "pgm");
    if (fmt == "json") throw DomainError("density supports pgm or csv output");
    OutputTarget out(o.out, fmt == "pgm");
    if (fmt == "pgm")
        write_pgm16(out.stream(), grid, header);
    else
        write_density_csv(out.stream(), grid, header);
    return 0;
}

int cmd_verify(const Options& o) {
    const UnitsMode units = resolve_units(o);
    const PhysicalParams p = assemble_params(o, units, true);
    validate(p, o.case_tol);  // constraint check up front: exit 2 before any suite runs

    const DimensionlessForm dim = to_dimensionless(p);
    const PhysicalParams dp = dim.params;
    const EffectiveParams de = effective_params(dp);

    ordered_json report;
    report["params"] = params_json(units, p);
    report["dimensionless"] = ordered_json{{"B", dp.B}, {"theta", dp.theta}};
    report["suites"] = ordered_json::array();
    bool all_pass = true;

    const auto add_check = [](ordered_json& checks, const std::string& name, double value,
                              double threshold) {
        const bool pass = value <= threshold;
        checks.push_back(ordered_json{
            {"name", name}, {"value", value}, {"threshold", threshold}, {"pass", pass}});
        return pass;
    };

    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = {"commutators", "fd", "residual", "normalization"};
    else
        suites = {o.suite};

    for (const auto& suite : suites) {
        ordered_json checks = ordered_json::array();
        bool suite_pass = true;

        if (suite == "commutators") {
            const auto run_draw = [&](const std::string& tag, const PhysicalParams& q) {
                for (const auto& [name, value] :
                     commutator_residuals(build_nc_operators(q, o.n_1d), q, o.margin))
                    suite_pass &= add_check(checks, tag + "/" + name, value, o.tol_comm);
            };
            run_draw("config", dp);
            std::mt19937_64 rng(o.seed);
            std::uniform_real_distribution<double> theta_draw(0.1, 2.0);
            std::uniform_real_distribution<double> fill_draw(0.0, 0.95);
            for (int i = 0; i < o.draws; ++i) {
                PhysicalParams q;
                q.theta = theta_draw(rng);
                q.B = fill_draw(rng) / q.theta;  // keeps B*theta strictly below hbar
                run_draw("draw" + std::to_string(i), q);
            }
        } else if (suite == "fd") {
            const double ls = std::sqrt(de.hbar / (de.M_eff * de.Omega));
            for (const int m_l : {-2, 0, 3}) {
                const double r_max = 9.5 * ls * std::sqrt(8.0 + std::abs(m_l));
                const auto fd =
                    fd_radial_eigenvalues_richardson(de, m_l, r_max, 1500, 3000, 4);
                for (int j = 0; j < 4; ++j) {
                    const double exact = energy(de, {j, m_l});
                    suite_pass &= add_check(
                        checks, "fd/m=" + std::to_string(m_l) + "/state" + std::to_string(j),
                        std::abs(fd[j] - exact) / exact, o.tol_fd);
                }
            }
        } else if (suite == "residual") {
            for (const QuantumNumbers q : {QuantumNumbers{0, 0}, {1, 2}, {2, -3}})
                suite_pass &= add_check(checks,
                                        "residual/(" + std::to_string(q.n_r) + "," +
                                            std::to_string(q.m_l) + ")",
                                        hamiltonian_residual(de, q), o.tol_resid);
        } else if (suite == "normalization") {
            for (const QuantumNumbers q :
                 {QuantumNumbers{0, 0}, {3, 0}, {2, 5}, {1, -4}, {6, 2}})
                suite_pass &= add_check(checks,
                                        "norm/(" + std::to_string(q.n_r) + "," +
                                            std::to_string(q.m_l) + ")",
                                        std::abs(normalization_check({de, q}) - 1.0), o.tol_norm);
            const std::pair<QuantumNumbers, QuantumNumbers> pairs[] = {
                {{0, 0}, {1, 0}}, {{2, 5}, {4, 5}}, {{1, -4}, {3, -4}}};
            for (const auto& [qa, qb] : pairs)
                suite_pass &= add_check(checks,
                                        "overlap/(" + std::to_string(qa.n_r) + "," +
                                            std::to_string(qa.m_l) + ")x(" +
                                            std::to_string(qb.n_r) + "," +
                                            std::to_string(qb.m_l) + ")",
                                        std::abs(orthogonality_check({de, qa}, {de, qb})),
                                        o.tol_norm);
        } else {
            throw DomainError("unknown verify suite: " + suite);
        }

        report["suites"].push_back(
            ordered_json{{"suite", suite}, {"checks", checks}, {"pass", suite_pass}});
        all_pass &= suite_pass;
    }

    report["pass"] = all_pass;
    OutputTarget out(o.out, false);
    out.stream() << report.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"isotropic oscillator on the noncommutative plane: spectra, degeneracy, densities"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; command-line flags win");
    app.allow_config_extras(false);

    app.add_option("--units", o.units, "unit system: si or dimensionless")
        ->check(CLI::IsMember({"si", "dimensionless"}))
        ->capture_default_str();
    app.add_flag("--dimensionless", o.dimensionless, "shorthand for --units dimensionless");
    app.add_flag("--si", o.si, "shorthand for --units si");
    o.mass_opt = app.add_option("--mass", o.mass, "particle mass (kg)");
    o.omega_opt = app.add_option("--omega", o.omega, "oscillator frequency (1/s)");
    o.B_opt = app.add_option("--B", o.B, "magnetic field, unit charge folded in (kg/s)");
    o.theta_opt = app.add_option("--theta", o.theta, "noncommutativity parameter (m^2)");
    o.hbar_opt = app.add_option("--hbar", o.hbar, "reduced Planck constant (J*s)");
    app.add_option("--out", o.out, "output path (stdout when omitted)");
    app.add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "pgm"}));
    app.add_option("--case-tol", o.case_tol, "relative tolerance for B*theta = hbar detection")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized verification draws")
        ->capture_default_str();

    auto* classify = app.add_subcommand("classify", "case label and effective parameters");
    classify->fallthrough();

    auto* spectrum = app.add_subcommand("spectrum", "energy table over a quantum-number box");
    spectrum->fallthrough();
    spectrum->add_option("--n-r-max", o.n_r_max, "largest radial quantum number")
        ->capture_default_str();
    spectrum->add_option("--m-l-min", o.m_l_min, "smallest angular momentum")
        ->capture_default_str();
    spectrum->add_option("--m-l-max", o.m_l_max, "largest angular momentum")
        ->capture_default_str();

    auto* degeneracy = app.add_subcommand(
        "degeneracy", "degenerate theta values, exact level grouping, field candidates");
    degeneracy->fallthrough();
    degeneracy->add_option("--n", o.n, "ratio pair n (kappa = k/(2n+k))");
    degeneracy->add_option("--k", o.k, "ratio pair k");
    degeneracy->add_option("--f", o.f_text,
                           "exact rational f = B/(m omega); switches to candidate search");
    degeneracy->add_option("--scan", o.scan, "enumerate ratio pairs up to n_max k_max")
        ->expected(2);
    degeneracy->add_option("--group-nr-max", o.group_nr_max, "grouping box: largest n_r")
        ->capture_default_str();
    degeneracy->add_option("--group-ml-min", o.group_ml_min, "grouping box: smallest m_l")
        ->capture_default_str();
    degeneracy->add_option("--group-ml-max", o.group_ml_max, "grouping box: largest m_l")
        ->capture_default_str();
    degeneracy->add_option("--profile-max", o.profile_max,
                           "emit level-size counts for all coefficients up to this rational");
    degeneracy->add_flag("--nonneg-m", o.nonneg_m, "restrict the profile to m_l >= 0");

    auto* density = app.add_subcommand("density", "probability-density raster of one eigenstate");
    density->fallthrough();
    density->add_option("--n-r", o.d_n_r, "radial quantum number")->capture_default_str();
    density->add_option("--m-l", o.d_m_l, "angular momentum quantum number")
        ->capture_default_str();
    density->add_option("--radius", o.radius, "half-width of the sampled square (0 = auto)")
        ->capture_default_str();
    density->add_option("--resolution", o.resolution, "pixels per side")->capture_default_str();
    density->add_flag("--mask-outside-disc", o.mask_outside,
                      "zero samples outside the inscribed disc");

    auto* verify = app.add_subcommand("verify", "run the built-in oracle suites");
    verify->fallthrough();
    verify->add_option("--suite", o.suite, "which oracle suite to run")
        ->check(CLI::IsMember({"commutators", "fd", "residual", "normalization", "all"}))
        ->capture_default_str();
    verify->add_option("--n-1d", o.n_1d, "1D ladder truncation size")->capture_default_str();
    verify->add_option("--margin", o.margin, "shells discarded before measuring residuals")
        ->capture_default_str();
    verify->add_option("--draws", o.draws, "extra random parameter draws for the commutator suite")
        ->capture_default_str();
    verify->add_option("--tol-commutator", o.tol_comm, "commutator residual bound")
        ->capture_default_str();
    verify->add_option("--tol-fd", o.tol_fd, "finite-difference relative error bound")
        ->capture_default_str();
    verify->add_option("--tol-residual", o.tol_resid, "Hamiltonian residual bound")
        ->capture_default_str();
    verify->add_option("--tol-normalization", o.tol_norm, "normalization/overlap bound")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify)) return cmd_classify(o);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(o);
        if (app.got_subcommand(degeneracy)) return cmd_degeneracy(o);
        if (app.got_subcommand(density)) return cmd_density(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ConstraintViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CaseMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GridTooCoarse& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SingularSample& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const EmptyResult& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
