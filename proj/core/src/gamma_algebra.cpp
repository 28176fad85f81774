#include "relkin/gamma_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "relkin/errors.hpp"

namespace relkin {
namespace {

constexpr double kMatrixTol = 1e-13;
constexpr double kShellTol = 1e-10;

double l1_norm(const Polynomial& p) {
    double s = 0.0;
    for (const auto& [m, c] : p.terms()) {
        s += std::abs(boost::rational_cast<double>(c));
    }
    return s;
}

double max_abs(const Mat4c& m) {
    return m.cwiseAbs().maxCoeff();
}

Mat4c comm(const Mat4c& a, const Mat4c& b) {
    return a * b - b * a;
}

/// Exact comparison of two operator actions over a polynomial basis.
struct ExactTally {
    double worst = 0.0;
    std::size_t failures = 0;

    void compare(const OperatorAction& lhs, const OperatorAction& rhs, const std::vector<Polynomial>& basis) {
        bool failed = false;
        for (const auto& f : basis) {
            const Polynomial diff = lhs(f) - rhs(f);
            if (!diff.is_zero()) {
                worst = std::max(worst, l1_norm(diff));
                failed = true;
            }
        }
        failures += failed ? 1 : 0;
    }
};

OperatorAction multiply_by(const Polynomial& p) {
    return [p](const Polynomial& f) { return p * f; };
}

OperatorAction zero_action() {
    return [](const Polynomial&) { return Polynomial(); };
}

/// sum of eta-weighted terms; terms with zero metric factor are skipped.
OperatorAction eta_combination(std::vector<std::pair<int, OperatorAction>> terms) {
    std::vector<OperatorAction> kept;
    for (auto& [coeff, op] : terms) {
        if (coeff != 0) {
            kept.push_back(scaled(Rational(coeff), std::move(op)));
        }
    }
    return kept.empty() ? zero_action() : sum(std::move(kept));
}

}  // namespace

CounterBoostParam CounterBoostParam::make(double delta) {
    if (delta == 0.0 || !std::isfinite(delta)) {
        throw PreconditionError("counter-boost parameter delta must be finite and nonzero");
    }
    return {delta, 1.0 / std::tanh(delta), 1.0 / std::sinh(delta), std::tanh(delta)};
}

VelocityComponents counter_boost_velocity(double u0, double u, double delta) {
    if (!(u0 >= 1.0) || !(u >= 0.0)) {
        throw PreconditionError("need u0 >= 1 and u >= 0");
    }
    if (std::abs((u0 - u) * (u0 + u) - 1.0) > kShellTol * u0 * u0) {
        throw PreconditionError("(u0, u) is not on the unit shell u0^2 - u^2 = 1");
    }
    if (delta == 0.0) {
        return {u0, u};
    }
    if (u > 0.0) {
        const double chi = std::atanh(1.0 / u0);
        if (!(chi + delta > 0.0)) {
            throw DomainError("counter-rapidity chi + delta must stay positive");
        }
    }
    const CounterBoostParam b = CounterBoostParam::make(delta);
    const double den = u0 + b.V0;
    if (den == 0.0) {
        throw DomainError("counter-boost denominator vanishes");
    }
    return {(u0 * b.V0 + 1.0) / den, u * b.V / den};
}

double complementary_velocity_add(double v_bar, double V_bar) {
    if (!(v_bar >= 0.0 && v_bar <= 1.0) || !(V_bar >= 0.0 && V_bar <= 1.0)) {
        throw PreconditionError("complementary velocities must lie in [0, 1]");
    }
    return (v_bar + V_bar) / (1.0 + v_bar * V_bar);
}

double FourVector::spatial_norm() const {
    return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
}

double FourVector::rho2() const {
    return x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3;
}

FourVector fourvector_transform(const FourVector& x, const FourVector& r) {
    const double rho2 = x.rho2();
    if (!(rho2 > 0.0)) {
        throw PreconditionError("transformation needs a timelike vector (rho^2 > 0)");
    }
    if (std::abs(r.rho2() - rho2) > kShellTol * std::max({rho2, x.x0 * x.x0, r.x0 * r.x0})) {
        throw PreconditionError("x and r must lie on the same shell rho^2");
    }
    const double den = x.x0 + r.x0;
    if (den == 0.0 || !std::isfinite(den)) {
        throw DomainError("x0 + r0 vanishes");
    }
    const double scale = r.spatial_norm() / den;
    return {(x.x0 * r.x0 + rho2) / den, x.x1 * scale, x.x2 * scale, x.x3 * scale};
}

Polynomial generator_apply(int nu, const Polynomial& poly, int max_degree) {
    if (poly.degree() > max_degree) {
        throw PreconditionError("polynomial degree exceeds the configured bound");
    }
    return PolyOperator::generator(nu).apply(poly);
}

CheckReport commutator_suite(int max_degree) {
    const std::vector<Polynomial> basis = monomial_basis(max_degree);
    const Polynomial rho2 = Polynomial::rho2();

    std::array<OperatorAction, 4> G;
    std::array<std::array<OperatorAction, 4>, 4> M;
    for (int mu = 0; mu < 4; ++mu) {
        G[mu] = action(PolyOperator::generator(mu));
        for (int nu = 0; nu < 4; ++nu) {
            M[mu][nu] = action(PolyOperator::lorentz(mu, nu));
        }
    }
    const OperatorAction D = action(PolyOperator::dilatation());
    const OperatorAction rho2_op = multiply_by(rho2);

    CheckReport report;

    {
        double worst = 0.0;
        for (int nu = 0; nu < 4; ++nu) {
            for (int mu = 0; mu < 4; ++mu) {
                const Polynomial lhs = generator_apply(nu, Polynomial::lower(mu), max_degree);
                const Polynomial rhs = rho2 * Rational(metric(nu, mu)) - Polynomial::lower(nu) * Polynomial::lower(mu);
                worst = std::max(worst, l1_norm(lhs - rhs));
            }
        }
        report.add("gamma.poly.generator_on_coordinates", "G_nu x_mu = rho^2 eta_nu_mu - x_nu x_mu", worst, 0.0);
    }

    ExactTally gg, g_rho, rho_m, m_g, m_m, m_m_printed, m_d, d_g, d_rho;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            gg.compare(commutator(G[mu], G[nu]), compose(rho2_op, M[mu][nu]), basis);
            rho_m.compare(commutator(rho2_op, M[mu][nu]), zero_action(), basis);
            m_d.compare(commutator(M[mu][nu], D), zero_action(), basis);
            for (int la = 0; la < 4; ++la) {
                m_g.compare(commutator(M[mu][nu], G[la]),
                            eta_combination({{metric(nu, la), G[mu]}, {-metric(mu, la), G[nu]}}), basis);
                for (int et = 0; et < 4; ++et) {
                    const OperatorAction lhs = commutator(M[mu][nu], M[la][et]);
                    m_m.compare(lhs,
                                eta_combination({{metric(nu, la), M[mu][et]},
                                                 {-metric(mu, la), M[nu][et]},
                                                 {-metric(nu, et), M[mu][la]},
                                                 {metric(mu, et), M[nu][la]}}),
                                basis);
                    m_m_printed.compare(lhs,
                                        eta_combination({{metric(mu, la), M[nu][et]},
                                                         {-metric(nu, la), M[mu][et]},
                                                         {metric(mu, et), M[la][nu]},
                                                         {-metric(nu, et), M[la][mu]}}),
                                        basis);
                }
            }
        }
        g_rho.compare(commutator(G[mu], rho2_op), zero_action(), basis);
        d_g.compare(commutator(D, G[mu]), G[mu], basis);
    }
    d_rho.compare(commutator(D, rho2_op), multiply_by(rho2 * Rational(2)), basis);

    report.add("gamma.poly.generator_commutator", "[G_mu, G_nu] = rho^2 M_mu_nu", gg.worst, 0.0);
    report.add("gamma.poly.generator_rho2", "[G_mu, rho^2] = 0", g_rho.worst, 0.0);
    report.add("gamma.poly.rho2_lorentz", "[rho^2, M_mu_nu] = 0", rho_m.worst, 0.0);
    report.add("gamma.poly.lorentz_generator", "[M_mu_nu, G_la] = eta_nu_la G_mu - eta_mu_la G_nu", m_g.worst, 0.0);
    report.add("gamma.poly.lorentz_algebra",
               "[M_mu_nu, M_la_et] = eta_nu_la M_mu_et - eta_mu_la M_nu_et - eta_nu_et M_mu_la + eta_mu_et M_nu_la",
               m_m.worst, 0.0);
    report.add("gamma.poly.lorentz_dilatation", "[M_mu_nu, D] = 0", m_d.worst, 0.0);
    report.add("gamma.poly.dilatation_generator", "[D, G_mu] = G_mu", d_g.worst, 0.0);
    report.add("gamma.poly.dilatation_rho2", "[D, rho^2] = 2 rho^2", d_rho.worst, 0.0);

    report.errata.push_back(
        {"lorentz_algebra_sign",
         "[M_mu_nu, M_la_et] = eta_mu_la M_nu_et - eta_nu_la M_mu_et + eta_mu_et M_la_nu - eta_nu_et M_la_mu",
         "overall sign flipped (the form consistent with [M_mu_nu, G_la] and M = x_mu d_nu - x_nu d_mu)",
         m_m_printed.worst,
         std::to_string(m_m_printed.failures) + " of 256 index combinations fail as printed"});
    return report;
}

GammaBasis GammaBasis::chiral() {
    const ChiralBasisMaps maps = ChiralBasisMaps::make();
    GammaBasis b;
    for (int mu = 0; mu < 4; ++mu) {
        b.gamma[mu] = maps.S * standard_gamma(mu) * maps.S.adjoint();
    }
    return b;
}

Mat4c GammaBasis::sigma(int mu, int nu) const {
    return 0.25 * comm(gamma[mu], gamma[nu]);
}

Mat4c GammaBasis::G(int mu) const {
    return 0.5 * gamma[mu];
}

Mat4c GammaBasis::gamma5() const {
    return Complex(0.0, 1.0) * gamma[0] * gamma[1] * gamma[2] * gamma[3];
}

CheckReport gamma_realization_check() {
    const GammaBasis b = GammaBasis::chiral();
    const Mat4c id = Mat4c::Identity();
    CheckReport report;

    double anti = 0.0, herm = 0.0, gg = 0.0, mg = 0.0, mm = 0.0, mm_printed = 0.0, unnormalized = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        const double sign = mu == 0 ? 1.0 : -1.0;
        herm = std::max(herm, max_abs(b.gamma[mu].adjoint() - sign * b.gamma[mu]));
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4c anticomm = b.gamma[mu] * b.gamma[nu] + b.gamma[nu] * b.gamma[mu];
            anti = std::max(anti, max_abs(anticomm - 2.0 * metric(mu, nu) * id));
            gg = std::max(gg, max_abs(comm(b.G(mu), b.G(nu)) - b.sigma(mu, nu)));
            const Mat4c raw = comm(b.gamma[mu], b.gamma[nu]);
            for (int la = 0; la < 4; ++la) {
                const Mat4c rhs_g = metric(nu, la) * b.G(mu) - metric(mu, la) * b.G(nu);
                mg = std::max(mg, max_abs(comm(b.sigma(mu, nu), b.G(la)) - rhs_g));
                const Mat4c rhs_gamma = metric(nu, la) * b.gamma[mu] - metric(mu, la) * b.gamma[nu];
                unnormalized = std::max(unnormalized, max_abs(comm(raw, b.gamma[la]) - rhs_gamma));
                for (int et = 0; et < 4; ++et) {
                    const Mat4c lhs = comm(b.sigma(mu, nu), b.sigma(la, et));
                    const Mat4c rhs = metric(nu, la) * b.sigma(mu, et) - metric(mu, la) * b.sigma(nu, et) -
                                      metric(nu, et) * b.sigma(mu, la) + metric(mu, et) * b.sigma(nu, la);
                    const Mat4c printed = metric(mu, la) * b.sigma(nu, et) - metric(nu, la) * b.sigma(mu, et) +
                                          metric(mu, et) * b.sigma(la, nu) - metric(nu, et) * b.sigma(la, mu);
                    mm = std::max(mm, max_abs(lhs - rhs));
                    mm_printed = std::max(mm_printed, max_abs(lhs - printed));
                }
            }
        }
    }

    report.add("gamma.matrix.anticommutator", "{gamma_mu, gamma_nu} = 2 eta_mu_nu 1", anti, kMatrixTol);
    report.add("gamma.matrix.hermiticity", "gamma_0^+ = gamma_0, gamma_k^+ = -gamma_k", herm, kMatrixTol);
    Mat4c g5_expected = Mat4c::Zero();
    g5_expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
    report.add("gamma.matrix.gamma5", "i gamma_0 gamma_1 gamma_2 gamma_3 = diag(1, 1, -1, -1)",
               max_abs(b.gamma5() - g5_expected), kMatrixTol);
    report.add("gamma.matrix.generator_commutator", "[G_mu, G_nu] = M_mu_nu (G = gamma/2, M = [gamma, gamma]/4)",
               gg, kMatrixTol);
    report.add("gamma.matrix.lorentz_generator", "[M_mu_nu, G_la] = eta_nu_la G_mu - eta_mu_la G_nu", mg,
               kMatrixTol);
    report.add("gamma.matrix.lorentz_algebra",
               "[M_mu_nu, M_la_et] = eta_nu_la M_mu_et - eta_mu_la M_nu_et - eta_nu_et M_mu_la + eta_mu_et M_nu_la",
               mm, kMatrixTol);

    report.errata.push_back({"sigma_normalization", "Sigma_mu_nu = [gamma_mu, gamma_nu]",
                             "Sigma_mu_nu = [gamma_mu, gamma_nu] / 4 with G_mu = gamma_mu / 2", unnormalized,
                             "unnormalized Sigma misses [Sigma_mu_nu, gamma_la] = eta gamma - eta gamma by a factor 4"});
    report.errata.push_back({"lorentz_algebra_sign_matrix",
                             "[Sigma_mu_nu, Sigma_la_et] = eta_mu_la Sigma_nu_et - eta_nu_la Sigma_mu_et + ...",
                             "overall sign flipped", mm_printed,
                             "same sign issue as the differential-operator realization"});
    return report;
}

CheckReport casimir_check() {
    const GammaBasis b = GammaBasis::chiral();
    CheckReport report;

    Mat4c C1 = Mat4c::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        C1 += static_cast<double>(metric(mu, mu)) * b.G(mu) * b.G(mu);
    }

    double with_g = 0.0, with_m = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        with_g = std::max(with_g, max_abs(comm(C1, b.G(mu))));
        for (int nu = 0; nu < 4; ++nu) {
            with_m = std::max(with_m, max_abs(comm(C1, b.sigma(mu, nu))));
        }
    }
    report.add("gamma.casimir.c1_generator", "[C1, G_mu] = 0, C1 = G^mu G_mu", with_g, kMatrixTol);
    report.add("gamma.casimir.c1_lorentz", "[C1, M_mu_nu] = 0", with_m, kMatrixTol);
    report.observations.push_back({"gamma.casimir.c1_scalar", C1(0, 0).real(), "C1 is this multiple of the identity"});

    // Candidate second Casimirs: the literal all-lower-index sums, and a
    // contraction with balanced indices.
    Mat4c literal = Mat4c::Zero();
    Mat4c balanced = Mat4c::Zero();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const Mat4c Mmn = b.sigma(mu, nu);
            literal += 0.5 * Mmn * Mmn * C1;
            balanced += 0.5 * static_cast<double>(metric(mu, mu) * metric(nu, nu)) * Mmn * Mmn * C1;
            for (int la = 0; la < 4; ++la) {
                const Mat4c Mml = b.sigma(mu, la);
                literal -= Mml * Mml * b.G(mu) * b.G(nu);
                const Mat4c Mnl = b.sigma(nu, la);
                balanced -= static_cast<double>(metric(nu, nu) * metric(la, la) * metric(mu, mu)) * Mml * Mnl *
                            b.G(mu) * b.G(nu);
            }
        }
    }
    const auto worst_commutator = [&](const Mat4c& C) {
        double w = 0.0;
        for (int mu = 0; mu < 4; ++mu) {
            w = std::max(w, max_abs(comm(C, b.G(mu))));
            for (int nu = 0; nu < 4; ++nu) {
                w = std::max(w, max_abs(comm(C, b.sigma(mu, nu))));
            }
        }
        return w;
    };
    report.observations.push_back({"gamma.casimir.c2_literal", worst_commutator(literal),
                                   "max commutator norm of the literal index sums with all generators"});
    report.observations.push_back({"gamma.casimir.c2_balanced", worst_commutator(balanced),
                                   "max commutator norm of the balanced contraction with all generators"});
    return report;
}

}  // namespace relkin
