#include "relkin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relkin/errors.hpp"

namespace relkin {
namespace {

// Packed RK4 state: t, r(3), p(3), p0.
using Packed = Eigen::Matrix<double, 8, 1>;

Packed pack(const ParticleState& s) {
    Packed y;
    y << s.t, s.r, s.p, s.p0;
    return y;
}

void unpack(const Packed& y, ParticleState& s) {
    s.t = y(0);
    s.r = y.segment<3>(1);
    s.p = y.segment<3>(4);
    s.p0 = y(7);
}

Packed rhs(const Packed& y, const FieldConfig& fields, double mass, double charge) {
    const Vec3 r = y.segment<3>(1);
    const Vec3 p = y.segment<3>(4);
    const double p0 = y(7);
    const Vec3 eE = fields.electric_force(r, charge);
    const Vec3 eB = charge * fields.B;

    Packed d;
    d(0) = p0 / mass;
    d.segment<3>(1) = p / mass;
    d.segment<3>(4) = (eE * p0 + p.cross(eB)) / mass;
    d(7) = eE.dot(p) / mass;
    return d;
}

TrajectorySample sample(const ParticleState& s, const FieldConfig& fields) {
    TrajectorySample out;
    out.state = s;
    out.shell_residual = (s.p0 - s.p.norm()) * (s.p0 + s.p.norm()) - s.mass * s.mass;
    out.energy_integral = s.p0 + fields.potential(s.r, s.charge);
    return out;
}

}  // namespace

ParticleState ParticleState::on_shell(double mass, double charge, const Vec3& r, const Vec3& p) {
    ParticleState s;
    s.mass = mass;
    s.charge = charge;
    s.r = r;
    s.p = p;
    s.p0 = std::sqrt(mass * mass + p.squaredNorm());
    return s;
}

FieldConfig FieldConfig::uniform_electric(const Vec3& E) {
    FieldConfig f;
    f.kind = FieldKind::uniform_electric;
    f.E = E;
    return f;
}

FieldConfig FieldConfig::uniform_magnetic(const Vec3& B) {
    FieldConfig f;
    f.kind = FieldKind::uniform_magnetic;
    f.B = B;
    return f;
}

FieldConfig FieldConfig::coulomb(double k) {
    FieldConfig f;
    f.kind = FieldKind::coulomb;
    f.coulomb_k = k;
    return f;
}

Vec3 FieldConfig::electric_force(const Vec3& r, double charge) const {
    if (kind == FieldKind::coulomb) {
        const double rn = r.norm();
        return coulomb_k * r / (rn * rn * rn);
    }
    return charge * E;
}

double FieldConfig::potential(const Vec3& r, double charge) const {
    if (kind == FieldKind::coulomb) {
        return coulomb_k / r.norm();
    }
    return -charge * E.dot(r);
}

FieldTensor FieldTensor::from_fields(const Vec3& E, const Vec3& B) {
    FieldTensor f;
    for (int j = 0; j < 3; ++j) {
        f.lower(0, j + 1) = E(j);
        f.lower(j + 1, 0) = -E(j);
    }
    f.lower(1, 2) = -B(2);
    f.lower(2, 1) = B(2);
    f.lower(2, 3) = -B(0);
    f.lower(3, 2) = B(0);
    f.lower(3, 1) = -B(1);
    f.lower(1, 3) = B(1);
    return f;
}

FieldTensor FieldTensor::at(const FieldConfig& fields, const Vec3& r, double charge) {
    if (fields.kind != FieldKind::coulomb) {
        return from_fields(fields.E, fields.B);
    }
    if (charge == 0.0) {
        throw PreconditionError("Coulomb field tensor needs a nonzero charge");
    }
    return from_fields(fields.electric_force(r, charge) / charge, fields.B);
}

Eigen::Matrix4d FieldTensor::mixed() const {
    Eigen::Matrix4d m = lower;
    m.bottomRows<3>() *= -1.0;
    return m;
}

bool FieldTensor::antisymmetric(double tol) const {
    return (lower + lower.transpose()).cwiseAbs().maxCoeff() <= tol;
}

Trajectory integrate_lorentz(const ParticleState& initial, const FieldConfig& fields,
                             double tau_end, double step, const IntegratorOptions& options) {
    if (!(initial.mass > 0.0)) {
        throw DomainError("proper-time integration needs mass > 0");
    }
    if (!(step > 0.0)) {
        throw PreconditionError("step must be positive");
    }
    if (!(tau_end > initial.tau)) {
        throw PreconditionError("tau_end must exceed the initial proper time");
    }

    const double span = tau_end - initial.tau;
    const auto n_steps = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
    const double m = initial.mass;
    const double e = initial.charge;

    Trajectory out;
    out.reserve(n_steps + 1);
    out.push_back(sample(initial, fields));

    ParticleState s = initial;
    Packed y = pack(initial);
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const double tau_next = k == n_steps ? tau_end : initial.tau + static_cast<double>(k) * step;
        const double h = tau_next - s.tau;

        const Packed k1 = rhs(y, fields, m, e);
        const Packed k2 = rhs(y + 0.5 * h * k1, fields, m, e);
        const Packed k3 = rhs(y + 0.5 * h * k2, fields, m, e);
        const Packed k4 = rhs(y + h * k3, fields, m, e);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        unpack(y, s);
        s.tau = tau_next;
        TrajectorySample next = sample(s, fields);

        const double drift = std::abs(next.shell_residual) / (m * m);
        if (!(drift <= options.max_shell_drift)) {
            throw StepRejected(k, drift,
                               "mass-shell drift " + std::to_string(drift) + " at step " +
                                   std::to_string(k) + " exceeds bound");
        }
        out.push_back(std::move(next));
    }
    return out;
}

ProjectedMomenta projected_evolution(double p0, double p, double psi_span) {
    const double c = std::cosh(psi_span);
    const double s = std::sinh(psi_span);
    return {p0 * c + p * s, p * c + p0 * s};
}

double HyperbolicSolution::p0_at(double psi) const {
    return A * (std::cosh(psi) + B * std::sinh(psi));
}

double HyperbolicSolution::p_at(double psi) const {
    return A * (std::sinh(psi) + B * std::cosh(psi));
}

HyperbolicSolution fit_hyperbolic_solution(double p0, double p, double mass) {
    if (!(p0 > 0.0)) {
        throw PreconditionError("fit needs p0 > 0");
    }
    if (mass > 0.0 && p0 * p0 < p * p) {
        throw PreconditionError("spacelike (p0^2 < p^2) input for a massive state");
    }
    const double shell = (p0 - p) * (p0 + p) - mass * mass;
    if (std::abs(shell) > 1e-8 * std::max(p0 * p0, mass * mass)) {
        throw PreconditionError("(p0, p) is not on the shell of the requested mass");
    }
    return {p0, p / p0};
}

Vec4 covariant_residual(std::span<const TrajectorySample> trajectory, std::size_t index,
                        const FieldTensor& tensor) {
    if (index == 0 || index + 1 >= trajectory.size()) {
        throw PreconditionError("central difference needs an interior trajectory sample");
    }
    const auto four_velocity = [](const ParticleState& s) {
        Vec4 u;
        u << s.p0 / s.mass, s.p / s.mass;
        return u;
    };
    const ParticleState& prev = trajectory[index - 1].state;
    const ParticleState& here = trajectory[index].state;
    const ParticleState& next = trajectory[index + 1].state;

    const Vec4 du = (four_velocity(next) - four_velocity(prev)) / (next.tau - prev.tau);
    const Vec4 u = four_velocity(here);
    return du - (here.charge / here.mass) * (tensor.mixed() * u);
}

}  // namespace relkin
