#include "relkin/verify/suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <numbers>

#include "relkin/dynamics.hpp"
#include "relkin/errors.hpp"
#include "relkin/gamma_algebra.hpp"
#include "relkin/halfplane.hpp"
#include "relkin/kinematics.hpp"
#include "relkin/qdeform.hpp"
#include "relkin/spinor.hpp"

namespace relkin::verify {
namespace {

using std::abs;
using std::max;

double rel(double a, double b) {
    const double scale = max(abs(a), abs(b));
    return scale == 0.0 ? 0.0 : abs(a - b) / scale;
}

Eigen::Vector3d random_direction(Rng& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double az = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double s = std::sqrt(max(0.0, 1.0 - z * z));
    return {s * std::cos(az), s * std::sin(az), z};
}

/// Adds a check whose bound comes from the named tolerance.
class Recorder {
public:
    Recorder(CheckReport& report, const Tolerances& tol) : report_(report), tol_(tol) {}

    void check(std::string id, std::string formula, double residual, const std::string& tol_name) {
        report_.add(std::move(id), std::move(formula), residual, tol_.get(tol_name));
    }
    void exact(std::string id, std::string formula, double residual) {
        report_.add(std::move(id), std::move(formula), residual, 0.0);
    }
    void flag(std::string id, std::string formula, bool holds) {
        exact(std::move(id), std::move(formula), holds ? 0.0 : 1.0);
    }
    void observe(std::string id, double value, std::string note) {
        report_.observations.push_back({std::move(id), value, std::move(note)});
    }
    void erratum(std::string id, std::string printed, std::string used, std::optional<double> residual,
                 std::string note) {
        report_.errata.push_back({std::move(id), std::move(printed), std::move(used), residual, std::move(note)});
    }

private:
    CheckReport& report_;
    const Tolerances& tol_;
};

// ---------------------------------------------------------------- kinematics

CheckReport kinematics_suite(const VerifyConfig& cfg, Rng& rng) {
    CheckReport report;
    Recorder rec(report, cfg.tolerances);

    double dual = 0.0, shell = 0.0, tanh_id = 0.0, sinh_id = 0.0, invol = 0.0, roundtrip = 0.0, vel = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const double m = rng.uniform(1e-3, 10.0);
        const double psi = 5.0 * (1.0 - rng.uniform());  // (0, 5]
        const MomentumState a = momenta_from_rapidity(m, psi);
        const double chi = reciprocity(psi);
        const MomentumState b = momenta_from_counter_rapidity(m, chi);
        dual = max({dual, rel(a.p0, b.p0), rel(a.p, b.p)});
        shell = max({shell, relative_shell_residual(a), relative_shell_residual(b)});
        const double tp = std::tanh(psi);
        const double tc = std::tanh(chi);
        tanh_id = max(tanh_id, abs(tp * tp + tc * tc - 1.0));
        sinh_id = max(sinh_id, abs(std::sinh(psi) * std::sinh(chi) - 1.0));
        invol = max(invol, rel(reciprocity(chi), psi));
        const AngleState angles = angles_from_momenta(a);
        roundtrip = max(roundtrip, rel(angles.psi, psi));
        if (angles.counter) {
            roundtrip = max(roundtrip, rel(angles.counter->chi, chi));
        }
        const VelocityPair vp = velocity_pair(a);
        vel = max(vel, abs(vp.v * vp.v + vp.v_bar * vp.v_bar - 1.0));
    }
    rec.check("kinematics.dual_representation",
              "m (cosh psi, sinh psi) = m (coth chi, 1/sinh chi), chi = ln coth(psi/2); relative", dual,
              "dual_representation");
    rec.check("kinematics.mass_shell", "|p0^2 - p^2 - m^2| / p0^2 in both forms", shell, "mass_shell");
    rec.check("kinematics.tanh_identity", "tanh^2 psi + tanh^2 chi = 1", tanh_id, "angle_identity");
    rec.check("kinematics.sinh_identity", "sinh psi sinh chi = 1", sinh_id, "angle_identity");
    rec.check("kinematics.reciprocity_involution", "reciprocity(reciprocity(psi)) = psi; relative", invol,
              "roundtrip");
    rec.check("kinematics.angles_roundtrip", "angles_from_momenta recovers (psi, chi); relative", roundtrip,
              "roundtrip");
    rec.check("kinematics.velocity_pair", "v^2 + v_bar^2 = 1", vel, "angle_identity");

    // P0(m) at fixed phi = 1 approaches pi0 = 1 quadratically in m.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0;
    for (double m = 1e-2; m >= 0.99e-6; m /= 10.0, ++n) {
        const double err = abs(momenta_from_phi(m, 1.0).p0 - 1.0);
        const double x = std::log10(m);
        const double y = std::log10(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rec.observe("kinematics.massless_slope_value", slope, "log-log slope of |P0(m) - pi0| at phi = 1");
    rec.check("kinematics.massless_slope", "|slope of log|P0(m) - pi0| vs log m - 2|", abs(slope - 2.0),
              "massless_slope");
    const MomentumState massless = momenta_from_phi(0.0, 2.0);
    rec.check("kinematics.massless_point", "m = 0, phi = 2: p0 = p = 1/phi",
              max(abs(massless.p0 - 0.5), abs(massless.p - 0.5)), "rounding");
    return report;
}

// ------------------------------------------------------------------ dynamics

double state_distance(const ParticleState& s, const std::array<double, 8>& exact) {
    const std::array<double, 8> got{s.t, s.r.x(), s.r.y(), s.r.z(), s.p.x(), s.p.y(), s.p.z(), s.p0};
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        num += (got[i] - exact[i]) * (got[i] - exact[i]);
        den += exact[i] * exact[i];
    }
    return std::sqrt(num / den);
}

double max_shell_drift(const Trajectory& tr) {
    double d = 0.0;
    for (const auto& s : tr) {
        d = max(d, abs(s.shell_residual) / (s.state.mass * s.state.mass));
    }
    return d;
}

CheckReport dynamics_suite(const VerifyConfig& cfg, Rng& rng) {
    CheckReport report;
    Recorder rec(report, cfg.tolerances);
    double drift = 0.0;

    {
        // Uniform E along x with a transverse momentum: hyperbolic motion
        // with transverse mass m_T and rapidity growing at rate eE/m.
        const double m = 1.0, e = 1.0, E = 0.5, tau = 5.0;
        const Vec3 p_init(0.3, 0.2, 0.0);
        const FieldConfig field = FieldConfig::uniform_electric(Vec3(E, 0.0, 0.0));
        const Trajectory tr =
            integrate_lorentz(ParticleState::on_shell(m, e, Vec3::Zero(), p_init), field, tau, 1e-3);
        drift = max(drift, max_shell_drift(tr));
        const double mT = std::hypot(m, p_init.y());
        const double psi0 = std::asinh(p_init.x() / mT);
        const double psi = psi0 + e * E * tau / m;
        const double px = mT * std::sinh(psi);
        const double p0 = mT * std::cosh(psi);
        const std::array<double, 8> exact{(px - mT * std::sinh(psi0)) / (e * E),
                                          (p0 - mT * std::cosh(psi0)) / (e * E),
                                          p_init.y() * tau / m,
                                          0.0,
                                          px,
                                          p_init.y(),
                                          0.0,
                                          p0};
        rec.check("dynamics.uniform_electric", "RK4 state at tau = 5 vs closed hyperbolic motion; relative",
                  state_distance(tr.back().state, exact), "uniform_electric");
    }
    {
        const double m = 1.0, e = 1.0, E = 0.5, tau = 5.0;
        const FieldConfig field = FieldConfig::uniform_electric(Vec3(E, 0.0, 0.0));
        const ParticleState init = ParticleState::on_shell(m, e, Vec3::Zero(), Vec3(0.3, 0.0, 0.0));
        const Trajectory tr = integrate_lorentz(init, field, tau, 1e-3);
        drift = max(drift, max_shell_drift(tr));
        const ParticleState& last = tr.back().state;
        const double accumulated = std::atanh(0.3 / init.p0) + e * E * tau / m;
        rec.check("dynamics.rapidity_integral", "atanh(p/p0) at tau = psi0 + (e/m) int E dtau",
                  abs(std::atanh(last.p.x() / last.p0) - accumulated), "rapidity_integral");

        const HyperbolicSolution sol = fit_hyperbolic_solution(init.p0, init.p.x(), m);
        const double psi = e * E * tau / m;
        rec.check("dynamics.hyperbolic_solution", "p0 = A(cosh psi + B sinh psi), p = A(sinh psi + B cosh psi)",
                  max(rel(sol.p0_at(psi), last.p0), rel(sol.p_at(psi), last.p.x())), "uniform_electric");
    }
    {
        const FieldConfig field = FieldConfig::uniform_electric(Vec3(0.5, 0.0, 0.0));
        const Trajectory tr = integrate_lorentz(
            ParticleState::on_shell(1.0, 1.0, Vec3::Zero(), Vec3(0.3, 0.1, 0.0)), field, 0.01, 1e-4);
        const FieldTensor F = FieldTensor::at(field, tr[50].state.r, 1.0);
        rec.check("dynamics.covariant_form", "du/dtau - (e/m) F u by central difference, h = 1e-4",
                  covariant_residual(tr, 50, F).cwiseAbs().maxCoeff(), "covariant");
        rec.flag("dynamics.tensor_antisymmetric", "F_mu_nu = -F_nu_mu",
                 FieldTensor::from_fields(Vec3(0.5, -0.2, 0.1), Vec3(0.3, 0.7, -1.1)).antisymmetric(0.0));
    }
    {
        // Bound Coulomb orbit (attractive, k < 0) near circular.
        const double k = -0.1;
        const double p2 = (0.01 + std::sqrt(1e-4 + 0.04)) / 2.0;
        const Trajectory tr = integrate_lorentz(
            ParticleState::on_shell(1.0, 1.0, Vec3(1.0, 0.0, 0.0), Vec3(0.0, std::sqrt(p2), 0.0)),
            FieldConfig::coulomb(k), 50.0, 1e-3);
        drift = max(drift, max_shell_drift(tr));
        const double e0 = tr.front().energy_integral;
        double worst = 0.0;
        for (const auto& s : tr) {
            worst = max(worst, abs(s.energy_integral - e0) / abs(e0));
        }
        rec.check("dynamics.coulomb_energy", "p0 + k/r conserved over tau in [0, 50]; relative", worst,
                  "coulomb_energy");
    }
    {
        const Vec3 p_init(0.5, 0.0, 0.2);
        const Trajectory tr = integrate_lorentz(ParticleState::on_shell(1.0, 1.0, Vec3::Zero(), p_init),
                                                FieldConfig::uniform_magnetic(Vec3(0.0, 0.0, 1.0)), 50.0, 1e-3);
        drift = max(drift, max_shell_drift(tr));
        double worst = 0.0;
        for (const auto& s : tr) {
            worst = max(worst, rel(s.state.p.norm(), p_init.norm()));
        }
        rec.check("dynamics.magnetic_speed", "|p| constant in a uniform B; relative", worst, "uniform_magnetic");
    }
    rec.check("dynamics.shell_drift", "max |p0^2 - p^2 - m^2| / m^2 along all runs", drift, "shell_drift");

    double rotation = 0.0, fit = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = rng.uniform(0.1, 3.0);
        const MomentumState s = momenta_from_rapidity(m, rng.uniform(0.0, 3.0));
        const ProjectedMomenta q = projected_evolution(s.p0, s.p, rng.uniform(-2.0, 2.0));
        rotation = max(rotation, abs((q.p0 - q.p) * (q.p0 + q.p) - m * m) / (q.p0 * q.p0));
        const HyperbolicSolution h = fit_hyperbolic_solution(s.p0, s.p, m);
        fit = max(fit, abs(h.A * h.A * (1.0 - h.B * h.B) - m * m) / (h.A * h.A));
    }
    rec.check("dynamics.projected_rotation", "projected evolution keeps p0^2 - p^2; relative to p0^2", rotation,
              "mass_shell");
    rec.check("dynamics.hyperbolic_constants", "A^2 (1 - B^2) = m^2; relative to A^2", fit, "mass_shell");
    return report;
}

// -------------------------------------------------------------------- spinor

CheckReport spinor_suite(const VerifyConfig& cfg, Rng& rng) {
    CheckReport report;
    Recorder rec(report, cfg.tolerances);
    const Complex i_unit(0.0, 1.0);

    double boost = 0.0, block_vs_coupled = 0.0, basis = 0.0, det = 0.0;
    const ChiralBasisMaps maps = ChiralBasisMaps::make();
    for (int i = 0; i < 1000; ++i) {
        const double m = rng.uniform(0.1, 5.0);
        const Eigen::Vector3d P(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
        Spinor xi0(Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)),
                   Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
        xi0.normalize();
        const SpinorPair pair = boost_spinors(m, P, xi0);
        const CoupledResiduals c = coupled_residuals(pair);
        const double block = chiral_dirac_residual(pair);
        boost = max({boost, c.right, c.left});
        block_vs_coupled = max(block_vs_coupled, abs(block - max(c.right, c.left)));

        const double P0 = std::sqrt(m * m + P.squaredNorm());
        const Mat4c chiral = chiral_block_operator(m, P0, P);
        const Mat4c from_standard = maps.S * standard_dirac_operator(m, P0, P) * maps.S.adjoint();
        basis = max(basis, (from_standard - chiral).cwiseAbs().maxCoeff() / chiral.cwiseAbs().maxCoeff());

        // Off shell: det of the block is the squared shell residual.
        const double P0_off = rng.uniform(0.0, 10.0);
        const double shell = P0_off * P0_off - P.squaredNorm() - m * m;
        const double d = chiral_block_operator(m, P0_off, P).determinant().real();
        const double scale = std::pow(P0_off * P0_off + P.squaredNorm() + m * m, 2);
        det = max(det, abs(d - shell * shell) / scale);
    }
    rec.check("spinor.boost_coupled", "m xi_R = (P0 + sigma.P) xi_L and m xi_L = (P0 - sigma.P) xi_R", boost,
              "spinor_boost");
    rec.check("spinor.block_equals_coupled", "block residual = max of the coupled residuals", block_vs_coupled,
              "spinor_boost");
    rec.check("spinor.basis_change", "S (gamma^mu P_mu - m) S^-1 = chiral block; relative entrywise", basis,
              "basis_change");
    rec.check("spinor.block_determinant", "det block = (P0^2 - P^2 - m^2)^2; relative", det, "determinant");

    double split = 0.0, full_angle = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = rng.uniform(0.0, 5.0);
        const double phi = rng.uniform(0.1, 3.0);
        const Eigen::Vector3d n = random_direction(rng);
        const Spinor xi = helicity_spinor(n, +1);
        const SplitResiduals s = split_dirac_residuals(m, phi, n, xi);
        split = max({split, s.left, s.right});
        if (m > 0.0) {
            const SplitResiduals f = split_dirac_residuals(m, phi, n, xi, EigenvalueConvention::full_angle);
            full_angle = max({full_angle, f.left, f.right});
        }
    }
    rec.check("spinor.split_equations",
              "(P0 + sigma.P) xi = m coth(m phi/2) xi, (P0 - sigma.P) xi = m tanh(m phi/2) xi", split, "split");
    rec.observe("spinor.split_full_angle", full_angle,
                "max residual with m coth(m phi), m tanh(m phi); not consistent with P0 = m coth(m phi)");

    // Massless limit at phi = 1/pi0: eigenvalues 2 pi0 and 0, approached at O(m).
    const double pi0 = 1.0;
    double order = 0.0;
    for (const double m : {1e-4, 1e-6}) {
        const MomentumState s = momenta_from_phi(m, 1.0 / pi0);
        const Eigen::Vector3d n = Eigen::Vector3d::UnitZ();
        const Spinor xi = helicity_spinor(n, +1);
        const Mat2c P0 = Mat2c::Identity() * s.p0;
        const Mat2c sP = sigma_dot(s.p * n);
        const double left = ((P0 + sP) * xi - 2.0 * pi0 * xi).norm();
        const double right = ((P0 - sP) * xi).norm();
        order = max(order, max(left, right) / m);
    }
    rec.check("spinor.massless_order", "|(P0 +- sigma.P) xi - {2 pi0, 0} xi| / m", order, "massless_order");

    const WeylReport weyl = massless_weyl_check(0.5, Eigen::Vector3d(1.0, 2.0, 2.0));
    rec.check("spinor.weyl_helicity", "sigma.n xi_R = xi_R, sigma.n xi_L = -xi_L",
              max(weyl.right_helicity_residual, weyl.left_helicity_residual), "spinor_boost");
    rec.check("spinor.weyl_eigenvalues", "m = 0 eigenvalues {2 pi0, 0} at pi0 = 0.5",
              max(abs(weyl.left_eigenvalue - 1.0), abs(weyl.right_eigenvalue)), "spinor_boost");
    rec.flag("spinor.parity_violation", "massless system not invariant under P -> -P, R <-> L",
             !weyl.parity_symmetric);

    double half_shift = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Complex z(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0));
        if (abs(std::cosh(z)) < 0.1 || abs(std::sinh(z)) < 0.1) {
            continue;
        }
        const Complex lhs = coth(z + i_unit * (std::numbers::pi / 2.0));
        const Complex rhs = std::tanh(z);
        half_shift = max(half_shift, abs(lhs - rhs) / max(1.0, abs(rhs)));
    }
    rec.check("spinor.half_shift", "coth(z + i pi/2) = tanh z", half_shift, "half_shift");

    const double chi = 1.0;
    const Complex shifted = coth(Complex(chi / 2.0, std::numbers::pi));
    rec.check("spinor.full_period", "coth((chi + 2 pi i)/2) = coth(chi/2)",
              abs(shifted - 1.0 / std::tanh(chi / 2.0)), "half_shift");
    rec.erratum("chi_period", "chi -> chi + 2 pi i exchanges coth(chi/2) and tanh(chi/2)",
                "the exchange holds under chi -> chi + i pi; chi + 2 pi i leaves both unchanged",
                abs(shifted - std::tanh(chi / 2.0)), "evaluated at chi = 1");

    const Eigen::Vector3d n = Eigen::Vector3d::UnitZ();
    const CompletedDiracReport completed =
        completed_dirac_residual(1.0, 1.0, n, helicity_spinor(n, +1), helicity_spinor(n, +1));
    rec.check("spinor.completed_equations",
              "(P0 +- sigma.P) Psi = m coth(m/pi0) Psi, m tanh(m/pi0) Psi at phi = 2/pi0",
              max(completed.residual_1, completed.residual_2), "spinor_boost");
    rec.observe("spinor.completed_literal", max(completed.literal_residual_1, completed.literal_residual_2),
                "same equations with momenta taken at phi = 1/pi0");
    return report;
}

// ------------------------------------------------------------------- qdeform

CheckReport qdeform_suite(const VerifyConfig& cfg, Rng& rng) {
    CheckReport report;
    Recorder rec(report, cfg.tolerances);

    double bracket = 0.0, phi_form = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = rng.uniform(0.01, 3.0);
        const double kappa = rng.uniform(0.5, 5.0);
        const double alpha = rng.uniform(0.1, 5.0);
        const KappaState s = kappa_state(m, kappa, alpha);
        bracket = max(bracket, rel(kappa / s.deformed_P, q_bracket(alpha, std::exp(m / kappa))));
        // alpha = phi kappa turns the plain momenta into the counter-rapidity form.
        const MomentumState ref = momenta_from_phi(m, alpha / kappa);
        phi_form = max({phi_form, rel(s.P0, ref.p0), rel(s.P, ref.p)});
    }
    rec.check("qdeform.q_bracket", "kappa / P = (alpha)_q, q = exp(m/kappa); relative", bracket, "q_identity");
    rec.check("qdeform.phi_substitution", "alpha = phi kappa reproduces m coth(m phi), m / sinh(m phi)", phi_form,
              "q_identity");

    double equal_point = 0.0;
    for (const double m : {0.0, 0.1, 1.0, 10.0}) {
        equal_point = max(equal_point, rel(kappa_state(m, 1.0, 1.0).deformed_P, 1.0));
    }
    rec.check("qdeform.equal_momentum_point", "P(m, alpha = 1) = kappa for m in {0, 0.1, 1, 10}", equal_point,
              "rounding");

    double sum = 0.0, printed = 0.0;
    for (int twice = 1; twice <= 10; ++twice) {
        for (const double x : {0.05, 0.3, 1.0}) {
            const HalfInteger J = HalfInteger::from_twice(twice);
            const double closed = std::sinh(J.alpha() * x) / std::sinh(x);
            sum = max(sum, rel(finite_exponential_sum(J, x), closed));
            printed = max(printed, rel(finite_exponential_sum(J, x, 1.0), closed));
        }
    }
    rec.check("qdeform.finite_sum", "sum_{n=-J}^{J} exp(2 n x) = sinh((2J+1) x) / sinh x, J = 1/2..5", sum,
              "q_identity");
    rec.erratum("sum_exponent", "sum_{n=-J}^{J} exp(n m/kappa)", "sum_{n=-J}^{J} exp(2 n m/kappa)", printed,
                "largest relative mismatch of the printed sum over J = 1/2..5, x in {0.05, 0.3, 1}");

    double quad = 0.0;
    for (const auto& [m, kappa, alpha] : std::vector<std::array<double, 3>>{{1.0, 1.0, 2.0}, {3.0, 1.0, 1.0}}) {
        quad = max(quad, integral_representation_check(m, kappa, alpha));
    }
    for (int i = 0; i < 50; ++i) {
        quad = max(quad, integral_representation_check(rng.uniform(0.05, 3.0), rng.uniform(0.5, 3.0),
                                                       rng.uniform(0.1, 3.0)));
    }
    rec.check("qdeform.integral_representation", "int_{-alpha/2}^{alpha/2} exp(2 x t) dt = sinh(x alpha) / x",
              quad, "quadrature");

    for (const double K : {0.5, 1.0}) {
        rec.flag("qdeform.mass_subcritical_K" + std::string(K < 1.0 ? "0.5" : "1"), "K <= 1: only m = 0",
                 !solve_mass_equation(K, 1.0).y.has_value());
    }
    const MassRoots coarse = solve_mass_equation(1.1, 1.0);
    const MassRoots fine = solve_mass_equation(1.001, 1.0);
    rec.check("qdeform.mass_residual", "|tanh y - y/K| at K = 1.1 and K = 1.001",
              max(*coarse.residual, *fine.residual), "mass_solver");
    rec.check("qdeform.cubic_coarse", "|y_cubic - y| / y at K = 1.1", *coarse.relative_gap, "cubic_coarse");
    rec.check("qdeform.cubic_fine", "|y_cubic - y| / y at K = 1.001", *fine.relative_gap, "cubic_fine");
    rec.observe("qdeform.root_K1.1", *coarse.y, "positive root y = m / pi0 at K = 1.1");

    bool decreasing = true;
    double ladder_sum = 0.0;
    const auto rows = quantized_ladder(1.0, 1.0, HalfInteger::from_twice(10));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ladder_sum = max(ladder_sum, rows[i].sum_residual);
        if (i > 0 && !(rows[i].v < rows[i - 1].v)) {
            decreasing = false;
        }
    }
    rec.flag("qdeform.ladder_monotone", "v_J strictly decreasing in J", decreasing);
    rec.check("qdeform.ladder_sum", "ladder rows: closed form vs direct sum; relative", ladder_sum, "q_identity");

    const double flat = abs(circle_length(1.0, 1e-4, 1.0) / (2.0 * std::numbers::pi * 1e-4) - 1.0);
    rec.check("qdeform.circle_flat_limit", "2 pi kappa sinh(m alpha / kappa) -> 2 pi m alpha at m/kappa = 1e-4",
              flat, "flat_limit");

    double wave = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lambda = rng.uniform(0.1, 10.0);
        wave = max(wave, rel(wavelength_from_counter_mass(counter_mass_from_wavelength(lambda)), lambda));
    }
    rec.check("qdeform.wavelength_roundtrip", "lambda = h / pi0 round trip", wave, "q_identity");
    return report;
}

// --------------------------------------------------------------------- gamma

CheckReport gamma_suite(const VerifyConfig& cfg, Rng& rng) {
    CheckReport report;
    Recorder rec(report, cfg.tolerances);

    report.append(commutator_suite(3));
    CheckReport matrix = gamma_realization_check();
    matrix.append(casimir_check());
    const double gamma_tol = cfg.tolerances.get("gamma_matrix");
    for (auto& c : matrix.checks) {
        c.tolerance = gamma_tol;
        c.pass = c.residual <= gamma_tol;
    }
    report.append(std::move(matrix));

    double compose = 0.0, oracle = 0.0, shell_id = 0.0, comp_add = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double chi = rng.uniform(0.1, 3.0);
        const double d1 = rng.uniform(-0.05, 1.0);
        const double d2 = rng.uniform(-0.05, 1.0);
        const VelocityComponents a = counter_boost_velocity(1.0 / std::tanh(chi), 1.0 / std::sinh(chi), d1);
        const VelocityComponents two = counter_boost_velocity(a.u0, a.u, d2);
        const VelocityComponents one =
            counter_boost_velocity(1.0 / std::tanh(chi), 1.0 / std::sinh(chi), d1 + d2);
        compose = max({compose, rel(two.u0, one.u0), rel(two.u, one.u)});
        const double target = chi + d1 + d2;
        oracle = max({oracle, rel(one.u0, 1.0 / std::tanh(target)), rel(one.u, 1.0 / std::sinh(target))});
        const CounterBoostParam b = CounterBoostParam::make(d1 == 0.0 ? 0.5 : d1);
        shell_id = max(shell_id, abs((b.V0 - b.V) * (b.V0 + b.V) - 1.0) / (b.V0 * b.V0));
        const double x = rng.uniform(0.0, 2.0), y = rng.uniform(0.0, 2.0);
        comp_add = max(comp_add, rel(complementary_velocity_add(std::tanh(x), std::tanh(y)), std::tanh(x + y)));
    }
    rec.check("gamma.counter_boost_composition", "boost(delta2) after boost(delta1) = boost(delta1 + delta2)",
              compose, "counter_boost");
    rec.check("gamma.counter_boost_translation", "boost(delta) maps (coth chi, 1/sinh chi) to chi + delta",
              oracle, "counter_boost");
    rec.check("gamma.counter_boost_shell", "V0^2 - V^2 = 1 with V0 = coth delta, V = 1/sinh delta; relative to V0^2", shell_id,
              "counter_boost");
    rec.check("gamma.complementary_addition", "(tanh a + tanh b) / (1 + tanh a tanh b) = tanh(a + b)", comp_add,
              "counter_boost");

    VelocityComponents rest{1.0, 0.0};
    for (int i = 0; i < 1'000'000; ++i) {
        rest = counter_boost_velocity(rest.u0, rest.u, 0.1);
    }
    rec.exact("gamma.rest_fixed_point", "(1, 0) fixed after 10^6 boosts with delta = 0.1",
              abs(rest.u0 - 1.0) + abs(rest.u));

    {
        const double chi = 1.0, delta = 0.5;
        const double u0 = 1.0 / std::tanh(chi);
        const double printed = (u0 * std::cosh(delta) + 1.0) / (u0 + std::cosh(delta));
        rec.erratum("counter_boost_V0", "V0 = cosh delta", "V0 = coth delta", abs(printed - 1.0 / std::tanh(1.5)),
                    "u0' vs coth(chi + delta) at chi = 1, delta = 0.5");
    }

    double shell = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double rho = rng.uniform(0.5, 2.0);
        const double a = rng.uniform(0.0, 3.0), b = rng.uniform(0.0, 3.0);
        const Eigen::Vector3d n1 = random_direction(rng), n2 = random_direction(rng);
        const FourVector x{rho * std::cosh(a), rho * std::sinh(a) * n1.x(), rho * std::sinh(a) * n1.y(),
                           rho * std::sinh(a) * n1.z()};
        const FourVector r{rho * std::cosh(b), rho * std::sinh(b) * n2.x(), rho * std::sinh(b) * n2.y(),
                           rho * std::sinh(b) * n2.z()};
        shell = max(shell, rel(fourvector_transform(x, r).rho2(), rho * rho));
    }
    rec.check("gamma.fourvector_shell", "transform keeps rho^2; relative", shell, "shell_preservation");
    return report;
}

// ----------------------------------------------------------------- halfplane

HalfPlanePoint random_point(Rng& rng) {
    return {rng.uniform(-5.0, 5.0), std::exp(rng.uniform(std::log(0.05), std::log(5.0)))};
}

HalfPlanePoint mobius(const HalfPlanePoint& z, double a, double b, double c, double d) {
    const std::complex<double> w = (a * z.value() + b) / (c * z.value() + d);
    return {w.real(), w.imag()};
}

CheckReport halfplane_suite(const VerifyConfig& cfg, Rng& rng) {
    CheckReport report;
    Recorder rec(report, cfg.tolerances);

    double agree = 0.0, symmetric = 0.0;
    for (int i = 0; i < 10'000; ++i) {
        const HalfPlanePoint z = random_point(rng), w = random_point(rng);
        const double d = distance(z, w);
        agree = max(agree, abs(d - distance_closed_form(z, w)));
        symmetric = max(symmetric, abs(d - distance(w, z)));
    }
    rec.check("halfplane.distance_methods", "ln cross ratio = arccosh(1 + |z-w|^2 / (2 Im z Im w))", agree,
              "distance");
    rec.check("halfplane.distance_symmetric", "rho(z, w) = rho(w, z)", symmetric, "distance");

    double triangle = 0.0, mob = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const HalfPlanePoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
        triangle = max(triangle, distance(a, c) - distance(a, b) - distance(b, c));

        // a d - b c = 1 with a > 0 chosen freely: d = (1 + b c) / a
        const double A = rng.uniform(0.5, 2.0), B = rng.uniform(-2.0, 2.0), C = rng.uniform(-2.0, 2.0);
        const double D = (1.0 + B * C) / A;
        const HalfPlanePoint d4 = random_point(rng);
        const auto before = cross_ratio(a, b, c, d4);
        const auto after = cross_ratio(mobius(a, A, B, C, D), mobius(b, A, B, C, D), mobius(c, A, B, C, D),
                                       mobius(d4, A, B, C, D));
        mob = max(mob, abs(after - before) / abs(before));
    }
    rec.check("halfplane.triangle", "rho(a, c) <= rho(a, b) + rho(b, c)", max(0.0, triangle), "distance");
    rec.check("halfplane.mobius_invariance", "cross ratio unchanged under SL(2, R); relative", mob, "mobius");

    rec.check("halfplane.anchor_distance", "rho(i, 2i) = ln 2",
              abs(distance(HalfPlanePoint(0.0, 1.0), HalfPlanePoint(0.0, 2.0)) - std::log(2.0)), "anchor");
    rec.check("halfplane.anchor_integral", "2m int_2^3 dx / (x^2 - 5x + 4) = 2 ln 2",
              abs(momentum_distance_integral(2.0, 3.0, 2.5, 4.0) - 2.0 * std::log(2.0)), "anchor");

    double integral = 0.0, affine = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x2 = rng.uniform(-3.0, 3.0);
        const double width = rng.uniform(0.2, 4.0);
        const double x1 = x2 + width;
        const double p0 = 0.5 * (x1 + x2), p2 = x1 * x2;
        const double margin = 0.05 * width;
        const double zl = rng.uniform(x2 + margin, x1 - margin);
        const double wl = rng.uniform(x2 + margin, x1 - margin);
        const double quad = momentum_distance_integral(zl, wl, p0, p2);
        const double cr = momentum_distance_cross_ratio(zl, wl, p0, p2);
        const double closed = momentum_distance_closed_form(zl, wl, p0, p2);
        integral = max({integral, abs(quad - cr), abs(quad - closed), abs(cr - closed)});

        const double sa = rng.uniform(0.5, 2.0), sb = rng.uniform(-2.0, 2.0);
        const auto map = [&](double x) { return sa * x + sb; };
        const double y1 = map(x1), y2 = map(x2);
        affine = max(affine, abs(momentum_distance_integral(map(zl), map(wl), 0.5 * (y1 + y2), y1 * y2) - quad));
    }
    rec.check("halfplane.momentum_integral", "2m int dx/F = ln cross ratio of roots = partial-fraction form",
              integral, "momentum_integral");
    rec.check("halfplane.affine_invariance", "integral invariant under x -> a x + b applied to roots and ends",
              affine, "momentum_integral");

    double det = 0.0, ric = 0.0, recovery = 0.0, semigroup = 0.0, shift = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double m = rng.uniform(0.1, 2.0);
        const double p0 = m + rng.uniform(0.0, 3.0);
        const double p2 = (p0 - m) * (p0 + m);
        const double phi = rng.uniform(0.5, 2.0);
        const GFunctionState g = g_evolution(p0, p2, phi);
        det = max(det, g.determinant_residual());
        ric = max(ric, riccati_residual(p0, p2, phi, 1e-5));
        const double expected = m / std::tanh(m * phi);
        recovery = max(recovery, rel(p0 - g.U, expected));

        const double f1 = rng.uniform(0.0, 1.0), f2 = rng.uniform(0.0, 1.0);
        const Eigen::Matrix2d whole = g_evolution(p0, p2, f1 + f2).transfer();
        const Eigen::Matrix2d parts = g_evolution(p0, p2, f1).transfer() * g_evolution(p0, p2, f2).transfer();
        semigroup = max(semigroup, (whole - parts).cwiseAbs().maxCoeff() / whole.cwiseAbs().maxCoeff());

        const double u = rng.uniform(-2.0, 2.0);
        const auto [q0, q2] = shift_roots(p0, p2, u);
        const GFunctionState gs = g_evolution(q0, q2, phi);
        shift = max({shift, rel(gs.mass(), m), abs(gs.U - (g.U + u)) / max(1.0, abs(g.U))});
    }
    rec.check("halfplane.determinant", "g0^2 + 2 p0 g0 g1 + p^2 g1^2 = exp(2 p0 phi); relative", det,
              "determinant");
    rec.check("halfplane.riccati", "dU/dphi = U^2 - 2 p0 U + p^2, central difference h = 1e-5", ric, "riccati");
    rec.check("halfplane.coth_recovery", "p0 - U = m coth(m phi); relative", recovery, "coth_recovery");
    rec.check("halfplane.semigroup", "T(phi1 + phi2) = T(phi1) T(phi2); relative entrywise", semigroup,
              "semigroup");
    rec.check("halfplane.root_shift", "shifting both roots by u keeps m and shifts U by u", shift,
              "coth_recovery");
    rec.check("halfplane.riccati_massless", "U = p0 - 1/phi solves the Riccati equation at m = 0",
              riccati_residual(1.5, 2.25, 0.7, 1e-5), "riccati");

    const double r1 = riccati_residual(2.5, 4.0, 0.5, 1e-3);
    const double r2 = riccati_residual(2.5, 4.0, 0.5, 5e-4);
    rec.observe("halfplane.riccati_richardson_ratio", r1 / r2, "residual ratio for h = 1e-3 vs 5e-4");
    rec.check("halfplane.riccati_order", "residual ratio for h vs h/2 within 20% of 4", abs(r1 / r2 - 4.0) / 4.0,
              "richardson");

    rec.erratum("determinant_exponent", "g0 (g0 + 2 p0 g1) + p^2 g1^2 = exp(a1 phi)",
                "right side exp(2 p0 phi), the determinant of exp(E phi) for trace(E) = 2 p0", std::nullopt,
                "the symbol a1 is not defined where the identity is stated");
    {
        const HalfPlanePoint z(0.0, 1.0), w(0.0, 2.0);
        const GeodesicEndpoints e = geodesic_endpoints(z, w);
        const double printed = std::log(std::abs(cross_ratio(w, e.z_star, z, e.w_star)));
        rec.erratum("cross_ratio_ordering", "rho(z, w) = ln [w, z*; z, w*] with [z1, z2; z3, z4] as defined",
                    "ln of (w - z*)(z - w*) / ((z - z*)(w - w*)), the expanded form",
                    abs(printed - distance(z, w)), "printed ordering gives -rho at z = i, w = 2i");
    }
    {
        // U = 3, W = 2, roots 1 and 4: the product of logarithms vs the difference.
        const double m = 1.5, x1 = 4.0, x2 = 1.0, U = 3.0, W = 2.0;
        const double product = std::log((U - x1) / (W - x1)) * std::log((W - x2) / (U - x2)) / (2.0 * m);
        const double difference = (std::log((U - x1) / (W - x1)) - std::log((U - x2) / (W - x2))) / (2.0 * m);
        rec.erratum("integral_log_product", "(1/2m) ln((U - x1)/(W - x1)) ln((W - x2)/(U - x2))",
                    "(1/2m) [ln((U - x1)/(W - x1)) - ln((U - x2)/(W - x2))]", abs(product - difference),
                    "evaluated at roots 1, 4 over [2, 3]");
    }
    return report;
}

using SuiteFn = CheckReport (*)(const VerifyConfig&, Rng&);

struct SuiteEntry {
    std::string name;
    SuiteFn fn;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {"kinematics", &kinematics_suite}, {"dynamics", &dynamics_suite}, {"spinor", &spinor_suite},
        {"qdeform", &qdeform_suite},       {"gamma", &gamma_suite},       {"halfplane", &halfplane_suite},
    };
    return entries;
}

}  // namespace

Tolerances::Tolerances()
    : values_{
          {"anchor", 1e-10},
          {"angle_identity", 1e-12},
          {"basis_change", 1e-14},
          {"coth_recovery", 1e-10},
          {"coulomb_energy", 1e-8},
          {"counter_boost", 1e-12},
          {"covariant", 1e-6},
          {"cubic_coarse", 0.1},
          {"cubic_fine", 1e-3},
          {"determinant", 1e-10},
          {"distance", 1e-12},
          {"dual_representation", 1e-10},
          {"flat_limit", 1e-6},
          {"gamma_matrix", 1e-13},
          {"half_shift", 1e-12},
          {"mass_shell", 1e-12},
          {"mass_solver", 1e-12},
          {"massless_order", 1.0},
          {"massless_slope", 0.1},
          {"mobius", 1e-10},
          {"momentum_integral", 1e-8},
          {"q_identity", 1e-12},
          {"quadrature", 1e-9},
          {"rapidity_integral", 1e-6},
          {"riccati", 1e-8},
          {"richardson", 0.2},
          {"roundtrip", 1e-10},
          {"rounding", 0x1.0p-51},
          {"semigroup", 1e-12},
          {"shell_drift", 1e-8},
          {"shell_preservation", 1e-12},
          {"spinor_boost", 1e-12},
          {"split", 1e-10},
          {"uniform_electric", 1e-8},
          {"uniform_magnetic", 1e-10},
      } {}

void Tolerances::set(const std::string& name, double value) {
    const auto it = values_.find(name);
    if (it == values_.end()) {
        throw PreconditionError("unknown tolerance name: " + name);
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw PreconditionError("tolerance must be positive and finite: " + name);
    }
    it->second = value;
}

double Tolerances::get(const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) {
        throw PreconditionError("unknown tolerance name: " + name);
    }
    return it->second;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) {
            out.push_back(e.name);
        }
        return out;
    }();
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
    const auto& entries = registry();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].name == name) {
            // Independent stream per suite: the seed mixed with the suite's position.
            Rng rng(config.seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
            return {name, entries[i].fn(config, rng)};
        }
    }
    throw PreconditionError("unknown suite: " + name);
}

std::vector<SuiteResult> run_suites(const std::string& selection, const VerifyConfig& config) {
    std::vector<std::string> names;
    if (selection == "all") {
        names = suite_names();
    } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), selection) == known.end()) {
            throw PreconditionError("unknown suite: " + selection);
        }
        names.push_back(selection);
    }
    std::vector<std::future<SuiteResult>> pending;
    pending.reserve(names.size());
    for (const auto& n : names) {
        pending.push_back(std::async(std::launch::async, [&config, n] { return run_suite(n, config); }));
    }
    std::vector<SuiteResult> out;
    out.reserve(pending.size());
    for (auto& f : pending) {
        out.push_back(f.get());
    }
    return out;
}

}  // namespace relkin::verify
