#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "relkin/dynamics.hpp"
#include "relkin/errors.hpp"
#include "relkin/halfplane.hpp"
#include "relkin/kinematics.hpp"
#include "relkin/qdeform.hpp"
#include "relkin/units.hpp"
#include "relkin/verify/suites.hpp"

namespace relkin::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kReportVersion = "0.1.0";

enum class Format { json, csv, human };

/// Failures that map to an exit code without a C++ exception type of their own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

/// JSON value for a double; non-finite values become strings.
Json number(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return format_number(x);
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        double v = 0.0;
        const char* begin = item.data();
        const char* end = item.data() + item.size();
        while (begin < end && *begin == ' ') {
            ++begin;
        }
        const auto res = std::from_chars(begin, end, v);
        if (res.ec != std::errc() || res.ptr != end) {
            throw UsageError(std::string("cannot parse ") + what + ": '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.size() != expected) {
        throw UsageError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated values");
    }
    return out;
}

Vec3 parse_vec3(const std::string& text, const char* what) {
    const auto v = parse_list(text, 3, what);
    return {v[0], v[1], v[2]};
}

/// A command's result: a JSON document plus, for tabular output, a table.
struct Output {
    Json json;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string render(const Output& o, Format f) {
    std::ostringstream os;
    if (f == Format::json) {
        os << o.json.dump(2) << '\n';
        return os.str();
    }
    if (!o.header.empty()) {
        const char sep = f == Format::csv ? ',' : ' ';
        for (std::size_t i = 0; i < o.header.size(); ++i) {
            os << (i ? std::string(1, sep) : "") << o.header[i];
        }
        os << '\n';
        for (const auto& row : o.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? std::string(1, sep) : "") << row[i];
            }
            os << '\n';
        }
        return os.str();
    }
    // Flat record.
    if (f == Format::csv) {
        bool first = true;
        for (const auto& [k, v] : o.json.items()) {
            os << (first ? "" : ",") << k;
            first = false;
        }
        os << '\n';
        first = true;
        for (const auto& [k, v] : o.json.items()) {
            os << (first ? "" : ",") << (v.is_string() ? v.get<std::string>() : v.dump());
            first = false;
        }
        os << '\n';
        return os.str();
    }
    for (const auto& [k, v] : o.json.items()) {
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    return os.str();
}

// ------------------------------------------------------------------ convert

struct ConvertArgs {
    double mass = 0.0;
    std::optional<double> rapidity, counter_rapidity, phi, velocity;
    std::optional<std::string> momenta;
    std::string units = "natural";
};

Output cmd_convert(const ConvertArgs& a) {
    const int given = a.rapidity.has_value() + a.counter_rapidity.has_value() + a.phi.has_value() +
                      a.velocity.has_value() + a.momenta.has_value();
    if (given != 1) {
        throw UsageError("give exactly one of --rapidity, --counter-rapidity, --phi, --momenta, --velocity");
    }
    const UnitSystem u = parse_unit_system(a.units);
    const double m = u.mass_to_core(a.mass);

    MomentumState s;
    if (a.rapidity) {
        s = momenta_from_rapidity(m, *a.rapidity);
    } else if (a.counter_rapidity) {
        s = momenta_from_counter_rapidity(m, *a.counter_rapidity);
    } else if (a.phi) {
        s = momenta_from_phi(m, *a.phi);
    } else if (a.velocity) {
        const double beta = u.velocity_to_core(*a.velocity);
        if (m == 0.0) {
            throw PreconditionError("a massless state is not fixed by its velocity; use --phi");
        }
        if (!(beta >= 0.0) || !(beta < 1.0)) {
            throw DomainError("velocity must satisfy 0 <= v < c for a massive state");
        }
        s = momenta_from_rapidity(m, std::atanh(beta));
    } else {
        const auto v = parse_list(*a.momenta, 2, "--momenta");
        s = {m, v[0], v[1]};
        if (m == 0.0 && std::abs(s.p0 - s.p) > 1e-12 * std::abs(s.p0)) {
            throw DomainError("a massless state needs p0 = p");
        }
    }

    Json j;
    j["units"] = a.units;
    j["m"] = number(u.mass_from_core(s.mass));
    j["p0"] = number(s.p0);
    if (!u.is_natural()) {
        j["energy"] = number(u.energy_from_core(s.p0));
    }
    j["p"] = number(s.p);
    if (s.mass == 0.0) {
        if (!(s.p0 > 0.0)) {
            throw DomainError("massless state needs p0 > 0");
        }
        j["psi"] = "inf";
        j["chi"] = 0.0;
        j["phi"] = number(1.0 / s.p0);
        j["pi0"] = number(s.p0);
    } else {
        const AngleState angles = angles_from_momenta(s);
        j["psi"] = number(angles.psi);
        if (angles.at_rest()) {
            j["chi"] = "rest";
            j["phi"] = "rest";
            j["pi0"] = 0.0;
        } else {
            j["chi"] = number(angles.counter->chi);
            j["phi"] = number(angles.counter->phi);
            j["pi0"] = number(angles.counter->pi0);
        }
    }
    const VelocityPair vp = velocity_pair(s);
    j["v"] = number(u.velocity_from_core(vp.v));
    j["v_bar"] = number(u.velocity_from_core(vp.v_bar));
    return {j, {}, {}};
}

// ---------------------------------------------------------------------- run

struct TrajectoryArgs {
    std::string field = "electric";
    std::string E = "0,0,0", B = "0,0,0", r0 = "0,0,0", p = "0,0,0";
    double k = 0.0, mass = 1.0, charge = 1.0, tau_end = 1.0, step = 1e-3, max_drift = 1e-6;
    std::size_t stride = 1;
};

Output cmd_trajectory(const TrajectoryArgs& a) {
    FieldConfig field;
    if (a.field == "electric") {
        field = FieldConfig::uniform_electric(parse_vec3(a.E, "--E"));
        field.B = parse_vec3(a.B, "--B");
    } else if (a.field == "magnetic") {
        field = FieldConfig::uniform_magnetic(parse_vec3(a.B, "--B"));
        field.E = parse_vec3(a.E, "--E");
    } else {
        field = FieldConfig::coulomb(a.k);
        field.B = parse_vec3(a.B, "--B");
    }
    if (a.stride == 0) {
        throw UsageError("--stride must be positive");
    }
    IntegratorOptions opts;
    opts.max_shell_drift = a.max_drift;
    const Trajectory tr =
        integrate_lorentz(ParticleState::on_shell(a.mass, a.charge, parse_vec3(a.r0, "--r0"), parse_vec3(a.p, "--p")),
                          field, a.tau_end, a.step, opts);

    Output o;
    o.header = {"tau", "t", "x", "y", "z", "px", "py", "pz", "p0", "shell_residual", "energy_integral"};
    o.json = Json::array();
    for (std::size_t i = 0; i < tr.size(); ++i) {
        if (i % a.stride != 0 && i + 1 != tr.size()) {
            continue;
        }
        const auto& s = tr[i];
        const std::vector<double> v{s.state.tau,   s.state.t,   s.state.r.x(),    s.state.r.y(),
                                    s.state.r.z(), s.state.p.x(), s.state.p.y(), s.state.p.z(),
                                    s.state.p0,    s.shell_residual, s.energy_integral};
        std::vector<std::string> row;
        Json obj;
        for (std::size_t c = 0; c < v.size(); ++c) {
            row.push_back(format_number(v[c]));
            obj[o.header[c]] = number(v[c]);
        }
        o.rows.push_back(std::move(row));
        o.json.push_back(std::move(obj));
    }
    return o;
}

Output cmd_solve_mass(double K, double pi0) {
    const MassRoots r = solve_mass_equation(K, pi0);
    Json j;
    j["K"] = K;
    j["pi0"] = pi0;
    j["zero_root"] = r.zero_root;
    if (r.mass) {
        j["roots"] = Json::array({number(-*r.mass), 0.0, number(*r.mass)});
        j["y"] = number(*r.y);
        j["exact"] = number(*r.mass);
        j["approx"] = number(*r.cubic_y * pi0);
        j["relative_gap"] = number(*r.relative_gap);
        j["residual"] = number(*r.residual);
    } else {
        j["roots"] = Json::array({0.0});
        j["y"] = nullptr;
        j["exact"] = nullptr;
        j["approx"] = nullptr;
        j["relative_gap"] = nullptr;
        j["residual"] = nullptr;
    }
    return {j, {}, {}};
}

Output cmd_ladder(double mass, double kappa, const std::string& jmax, double planck) {
    const auto rows = quantized_ladder(mass, kappa, parse_half_integer(jmax.c_str()), planck);
    Output o;
    o.header = {"J", "alpha", "v", "lambda"};
    o.json = Json::array();
    for (const auto& r : rows) {
        o.rows.push_back({format_number(r.J.value()), std::to_string(r.alpha), format_number(r.v),
                          format_number(r.lambda)});
        Json obj;
        obj["J"] = r.J.value();
        obj["alpha"] = r.alpha;
        obj["v"] = number(r.v);
        obj["lambda"] = number(r.lambda);
        obj["closed_form"] = number(r.closed_form);
        obj["sum_residual"] = number(r.sum_residual);
        o.json.push_back(std::move(obj));
    }
    return o;
}

Json boundary_json(const HalfPlanePoint& p) {
    return p.is_infinite() ? Json("inf") : Json(p.re());
}

Output cmd_hyperdist(const std::string& zs, const std::string& ws) {
    const auto zv = parse_list(zs, 2, "--z");
    const auto wv = parse_list(ws, 2, "--w");
    const HalfPlanePoint z(zv[0], zv[1]);
    const HalfPlanePoint w(wv[0], wv[1]);
    const double d = distance(z, w);
    const double closed = distance_closed_form(z, w);
    Json j;
    j["z"] = Json::array({z.re(), z.im()});
    j["w"] = Json::array({w.re(), w.im()});
    j["distance"] = number(d);
    if (z.value() == w.value()) {
        j["endpoints"] = nullptr;
    } else {
        const GeodesicEndpoints e = geodesic_endpoints(z, w);
        j["endpoints"] = Json{{"z_star", boundary_json(e.z_star)}, {"w_star", boundary_json(e.w_star)}};
    }
    j["closed_form"] = number(closed);
    j["method_agreement"] = number(std::abs(d - closed));
    return {j, {}, {}};
}

// ------------------------------------------------------------------- verify

Json erratum_json(const Erratum& e) {
    Json j;
    j["id"] = e.id;
    j["printed"] = e.printed;
    j["used"] = e.used;
    j["printed_residual"] = e.printed_residual ? number(*e.printed_residual) : Json(nullptr);
    j["note"] = e.note;
    return j;
}

Output cmd_verify(const std::string& suite, const verify::VerifyConfig& cfg, bool& all_pass) {
    const auto results = verify::run_suites(suite, cfg);
    Output o;
    o.json["version"] = kReportVersion;
    o.json["seed"] = cfg.seed;
    o.json["prng"] = verify::kPrngName;
    o.json["suites"] = Json::array();
    o.header = {"suite", "id", "residual", "tol", "pass"};
    all_pass = true;
    for (const auto& r : results) {
        Json s;
        s["name"] = r.name;
        s["checks"] = Json::array();
        for (const auto& c : r.report.checks) {
            s["checks"].push_back(Json{{"id", c.id},
                                       {"paper_ref", c.formula},
                                       {"residual", number(c.residual)},
                                       {"tol", c.tolerance},
                                       {"pass", c.pass}});
            o.rows.push_back({r.name, c.id, format_number(c.residual), format_number(c.tolerance),
                              c.pass ? "true" : "false"});
            all_pass = all_pass && c.pass;
        }
        s["errata"] = Json::array();
        for (const auto& e : r.report.errata) {
            s["errata"].push_back(erratum_json(e));
        }
        s["observations"] = Json::array();
        for (const auto& ob : r.report.observations) {
            s["observations"].push_back(Json{{"id", ob.id}, {"value", number(ob.value)}, {"note", ob.note}});
        }
        o.json["suites"].push_back(std::move(s));
    }
    return o;
}

std::string render_verify_human(const Output& o) {
    std::ostringstream os;
    os << "seed " << o.json["seed"].dump() << " (" << o.json["prng"].get<std::string>() << ")\n";
    std::size_t failed = 0, total = 0;
    for (const auto& s : o.json["suites"]) {
        os << "[" << s["name"].get<std::string>() << "]\n";
        for (const auto& c : s["checks"]) {
            const bool pass = c["pass"].get<bool>();
            failed += pass ? 0 : 1;
            ++total;
            os << "  " << (pass ? "PASS " : "FAIL ") << c["id"].get<std::string>() << "  residual "
               << (c["residual"].is_string() ? c["residual"].get<std::string>() : c["residual"].dump()) << " <= "
               << c["tol"].dump() << '\n';
        }
        for (const auto& e : s["errata"]) {
            os << "  ERRATUM " << e["id"].get<std::string>() << ": " << e["note"].get<std::string>() << '\n';
        }
    }
    os << (total - failed) << "/" << total << " checks passed\n";
    return os.str();
}

std::uint64_t parse_seed(const std::string& text, const char* where) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw UsageError(std::string("invalid seed in ") + where + ": '" + text + "'");
    }
    return v;
}

Format parse_format(const std::string& f) {
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    return Format::human;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relativistic kinematics toolkit: conversions, runs and identity verification", "relkin"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> format_opt;
    std::optional<std::string> seed_opt;
    std::vector<std::string> tolerance_opts;
    std::optional<std::string> out_path;
    app.add_option("--format", format_opt, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
    app.add_option("--seed", seed_opt, "Seed for randomized suites (default 42 or $RELKIN_SEED)");
    app.add_option("--tolerance", tolerance_opts, "Tolerance override name=value (repeatable)");
    app.add_option("--out", out_path, "Write the result to this file instead of stdout");

    ConvertArgs conv;
    auto* convert = app.add_subcommand("convert", "Convert between rapidity, counter-rapidity and momenta");
    convert->add_option("--mass", conv.mass, "Rest mass (m c in natural units)")->required();
    convert->add_option("--rapidity", conv.rapidity, "Rapidity psi");
    convert->add_option("--counter-rapidity", conv.counter_rapidity, "Counter-rapidity chi");
    convert->add_option("--phi", conv.phi, "phi = chi / m (allows m = 0)");
    convert->add_option("--momenta", conv.momenta, "Energy and momentum 'p0,p'");
    convert->add_option("--velocity", conv.velocity, "Speed v");
    convert->add_option("--units", conv.units, "Unit system")->check(CLI::IsMember({"natural", "si"}));

    auto* run_cmd = app.add_subcommand("run", "Produce trajectories, mass roots, ladders, distances");
    run_cmd->require_subcommand(1);

    TrajectoryArgs traj;
    auto* trajectory = run_cmd->add_subcommand("trajectory", "Integrate the Lorentz-force equations (CSV)");
    trajectory->add_option("--field", traj.field)->check(CLI::IsMember({"electric", "magnetic", "coulomb"}));
    trajectory->add_option("--E", traj.E, "Electric field 'x,y,z'");
    trajectory->add_option("--B", traj.B, "Magnetic field 'x,y,z'");
    trajectory->add_option("--k", traj.k, "Coulomb strength: V = k / r");
    trajectory->add_option("--mass", traj.mass);
    trajectory->add_option("--charge", traj.charge);
    trajectory->add_option("--r0", traj.r0, "Initial position 'x,y,z'");
    trajectory->add_option("--p", traj.p, "Initial momentum 'px,py,pz'");
    trajectory->add_option("--tau-end", traj.tau_end);
    trajectory->add_option("--step", traj.step);
    trajectory->add_option("--max-drift", traj.max_drift, "Largest tolerated relative shell drift per step");
    trajectory->add_option("--stride", traj.stride, "Write every n-th sample");

    double K = 0.0, pi0 = 1.0;
    auto* solve_mass = run_cmd->add_subcommand("solve-mass", "Roots of m / (K pi0) = tanh(m / pi0)");
    solve_mass->add_option("--K", K)->required();
    solve_mass->add_option("--pi0", pi0);

    double l_mass = 1.0, l_kappa = 1.0, l_planck = 1.0;
    std::string l_jmax = "2";
    auto* ladder = run_cmd->add_subcommand("ladder", "Quantized velocity ladder (CSV)");
    ladder->add_option("--mass", l_mass);
    ladder->add_option("--kappa", l_kappa);
    ladder->add_option("--jmax", l_jmax, "Largest J, e.g. 2, 1.5 or 3/2");
    ladder->add_option("--planck", l_planck);

    std::string hz, hw;
    auto* hyperdist = run_cmd->add_subcommand("hyperdist", "Hyperbolic distance in the upper half-plane");
    hyperdist->add_option("--z", hz, "Point 're,im'")->required();
    hyperdist->add_option("--w", hw, "Point 're,im'")->required();

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run identity suites and print a report");
    verify_cmd->add_option("--suite", suite)->check(
        CLI::IsMember({"all", "kinematics", "dynamics", "spinor", "qdeform", "gamma", "halfplane"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }

    try {
        verify::VerifyConfig cfg;
        if (const char* env = std::getenv("RELKIN_SEED"); env != nullptr && *env != '\0') {
            cfg.seed = parse_seed(env, "RELKIN_SEED");
        }
        if (seed_opt) {
            cfg.seed = parse_seed(*seed_opt, "--seed");
        }
        for (const auto& t : tolerance_opts) {
            const auto eq = t.find('=');
            if (eq == std::string::npos) {
                throw UsageError("--tolerance expects name=value, got '" + t + "'");
            }
            const auto v = parse_list(t.substr(eq + 1), 1, "--tolerance value");
            cfg.tolerances.set(t.substr(0, eq), v[0]);
        }

        Output result;
        Format default_format = Format::json;
        int code = kOk;
        bool is_verify = false;
        if (*convert) {
            result = cmd_convert(conv);
            default_format = Format::human;
        } else if (*trajectory) {
            result = cmd_trajectory(traj);
            default_format = Format::csv;
        } else if (*solve_mass) {
            result = cmd_solve_mass(K, pi0);
        } else if (*ladder) {
            result = cmd_ladder(l_mass, l_kappa, l_jmax, l_planck);
            default_format = Format::csv;
        } else if (*hyperdist) {
            result = cmd_hyperdist(hz, hw);
        } else {
            bool pass = true;
            result = cmd_verify(suite, cfg, pass);
            code = pass ? kOk : kCheckFailed;
            is_verify = true;
        }

        const Format fmt = format_opt ? parse_format(*format_opt) : default_format;
        const std::string text =
            is_verify && fmt == Format::human ? render_verify_human(result) : render(result, fmt);
        if (out_path) {
            std::ofstream file(*out_path, std::ios::binary);
            if (!file || !(file << text)) {
                err << "error: cannot write " << *out_path << '\n';
                return kBadInput;
            }
        } else {
            out << text;
        }
        return code;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kNoConvergence;
    } catch (const StepRejected& e) {
        err << "error: " << e.what() << " (step " << e.step() << ", drift " << e.drift() << ")\n";
        return kNoConvergence;
    } catch (const std::exception& e) {
        // DomainError, PreconditionError, UsageError and parse failures.
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

}  // namespace relkin::cli
