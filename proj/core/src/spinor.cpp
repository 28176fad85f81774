#include "relkin/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relkin/errors.hpp"

namespace relkin {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kEigenvectorTol = 1e-10;

Eigen::Vector3d unit_or_z(const Eigen::Vector3d& v) {
    const double n = v.norm();
    return n > 0.0 ? Eigen::Vector3d(v / n) : Eigen::Vector3d::UnitZ();
}

/// Helicity sign of xi along n, or PreconditionError if xi is not an eigenvector.
int helicity_of(const Spinor& xi, const Eigen::Vector3d& n) {
    const double norm = xi.norm();
    if (norm == 0.0) {
        throw PreconditionError("spinor must be nonzero");
    }
    const Spinor image = sigma_dot(n) * xi;
    const int sign = xi.dot(image).real() >= 0.0 ? 1 : -1;
    if ((image - static_cast<double>(sign) * xi).norm() > kEigenvectorTol * norm) {
        throw PreconditionError("spinor is not a helicity (sigma . n) eigenvector");
    }
    return sign;
}

double eigen_residual(const Mat2c& op, const Spinor& xi, double eigenvalue) {
    return (op * xi - eigenvalue * xi).norm() / xi.norm();
}

/// m coth(x) with x = m * scale, written so that m = 0 gives 1/scale.
double m_coth(double mass, double scale) {
    const double x = mass * scale;
    return (x == 0.0 ? 1.0 : x / std::tanh(x)) / scale;
}

}  // namespace

Mat2c pauli(int k) {
    Mat2c s;
    switch (k) {
        case 1:
            s << 0.0, 1.0, 1.0, 0.0;
            break;
        case 2:
            s << 0.0, -kI, kI, 0.0;
            break;
        case 3:
            s << 1.0, 0.0, 0.0, -1.0;
            break;
        default:
            throw PreconditionError("Pauli index must be 1, 2 or 3");
    }
    return s;
}

Mat2c sigma_dot(const Eigen::Vector3d& a) {
    return a(0) * pauli(1) + a(1) * pauli(2) + a(2) * pauli(3);
}

Spinor helicity_spinor(const Eigen::Vector3d& n, int sign) {
    const Eigen::Vector3d u = unit_or_z(n);
    const double theta = std::acos(std::clamp(u(2), -1.0, 1.0));
    const double phi = std::atan2(u(1), u(0));
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Spinor xi;
    if (sign > 0) {
        xi << c, std::polar(s, phi);
    } else {
        xi << -std::polar(s, -phi), c;
    }
    return xi;
}

SpinorPair boost_spinors(double mass, const Eigen::Vector3d& P, const Spinor& xi0) {
    if (!(mass > 0.0)) {
        throw DomainError("spinor boost needs mass > 0");
    }
    if (xi0.norm() == 0.0) {
        throw PreconditionError("rest spinor must be nonzero");
    }
    const double p = P.norm();
    const double P0 = std::sqrt(mass * mass + p * p);
    const double norm = std::sqrt(2.0 * mass * (P0 + mass));
    const Mat2c sP = sigma_dot(P);
    const Mat2c diag = Mat2c::Identity() * (P0 + mass);

    SpinorPair out;
    out.xi_R = (diag + sP) * xi0 / norm;
    out.xi_L = (diag - sP) * xi0 / norm;
    out.context = {mass, P0, p};
    out.direction = unit_or_z(P);
    return out;
}

CoupledResiduals coupled_residuals(const SpinorPair& pair) {
    const Mat2c sP = sigma_dot(pair.momentum());
    const Mat2c P0 = Mat2c::Identity() * pair.context.p0;
    const double m = pair.context.mass;
    return {(m * pair.xi_R - (P0 + sP) * pair.xi_L).norm(),
            (m * pair.xi_L - (P0 - sP) * pair.xi_R).norm()};
}

Mat4c chiral_block_operator(double mass, double P0, const Eigen::Vector3d& P) {
    const Mat2c sP = sigma_dot(P);
    const Mat2c id = Mat2c::Identity();
    Mat4c op;
    op << -mass * id, P0 * id + sP, P0 * id - sP, -mass * id;
    return op;
}

double chiral_dirac_residual(const SpinorPair& pair) {
    Bispinor psi;
    psi << pair.xi_R, pair.xi_L;
    const Bispinor image =
        chiral_block_operator(pair.context.mass, pair.context.p0, pair.momentum()) * psi;
    return std::max(image.head<2>().norm(), image.tail<2>().norm());
}

ChiralBasisMaps ChiralBasisMaps::make() {
    const Mat2c id = Mat2c::Identity();
    ChiralBasisMaps maps;
    maps.S << id, id, id, -id;
    maps.S /= std::numbers::sqrt2;
    maps.gamma5.setZero();
    maps.gamma5.diagonal() << 1.0, 1.0, -1.0, -1.0;
    return maps;
}

Mat4c standard_gamma(int mu) {
    const Mat2c id = Mat2c::Identity();
    const Mat2c zero = Mat2c::Zero();
    Mat4c g;
    if (mu == 0) {
        g << id, zero, zero, -id;
    } else {
        const Mat2c s = pauli(mu);
        g << zero, s, -s, zero;
    }
    return g;
}

Mat4c standard_dirac_operator(double mass, double P0, const Eigen::Vector3d& P) {
    Mat4c op = P0 * standard_gamma(0) - mass * Mat4c::Identity();
    for (int k = 1; k <= 3; ++k) {
        op -= P(k - 1) * standard_gamma(k);
    }
    return op;
}

SplitResiduals split_dirac_residuals(double mass, double phi, const Eigen::Vector3d& direction,
                                     const Spinor& xi, EigenvalueConvention convention) {
    if (!(mass >= 0.0)) {
        throw PreconditionError("mass must be non-negative");
    }
    if (!(phi > 0.0)) {
        throw PreconditionError("phi must be positive");
    }
    const Eigen::Vector3d n = unit_or_z(direction);
    helicity_of(xi, n);

    const MomentumState s = momenta_from_phi(mass, phi);
    const Mat2c sP = sigma_dot(s.p * n);
    const Mat2c P0 = Mat2c::Identity() * s.p0;

    SplitResiduals out;
    if (convention == EigenvalueConvention::half_angle) {
        out.left_eigenvalue = m_coth(mass, 0.5 * phi);
        out.right_eigenvalue = mass * std::tanh(0.5 * mass * phi);
    } else {
        out.left_eigenvalue = m_coth(mass, phi);
        out.right_eigenvalue = mass * std::tanh(mass * phi);
    }
    out.left = eigen_residual(P0 + sP, xi, out.left_eigenvalue);
    out.right = eigen_residual(P0 - sP, xi, out.right_eigenvalue);
    return out;
}

WeylReport massless_weyl_check(double pi0, const Eigen::Vector3d& direction) {
    if (!(pi0 > 0.0)) {
        throw PreconditionError("pi0 must be positive");
    }
    const Eigen::Vector3d n = unit_or_z(direction);
    const Mat2c sn = sigma_dot(n);

    WeylReport r;
    const Spinor xi_R = helicity_spinor(n, +1);
    const Spinor xi_L = helicity_spinor(n, -1);
    r.right_helicity_residual = (sn * xi_R - xi_R).norm();
    r.left_helicity_residual = (sn * xi_L + xi_L).norm();

    // m -> 0 system on the positive-helicity spinor: P0 = P = pi0.
    const MomentumState s = momenta_from_phi(0.0, 1.0 / pi0);
    const auto rayleigh = [](const Mat2c& op, const Spinor& xi) {
        return xi.dot(op * xi).real() / xi.squaredNorm();
    };
    const Mat2c P0 = Mat2c::Identity() * s.p0;
    const Mat2c sP = sigma_dot(s.p * n);
    r.left_eigenvalue = rayleigh(P0 + sP, xi_R);
    r.right_eigenvalue = rayleigh(P0 - sP, xi_R);

    // Parity image: P -> -P, and the equation that was attached to one
    // chirality is now attached to the other.
    const Eigen::Vector3d n_image = -n;
    const Spinor xi_image = helicity_spinor(n_image, +1);
    const Mat2c sP_image = sigma_dot(s.p * n_image);
    r.parity_left_eigenvalue = rayleigh(P0 - sP_image, xi_image);
    r.parity_right_eigenvalue = rayleigh(P0 + sP_image, xi_image);

    const double tol = 1e-12 * pi0;
    r.parity_symmetric = std::abs(r.parity_left_eigenvalue - r.left_eigenvalue) <= tol &&
                         std::abs(r.parity_right_eigenvalue - r.right_eigenvalue) <= tol;
    return r;
}

CompletedDiracReport completed_dirac_residual(double mass, double pi0, const Eigen::Vector3d& direction,
                                              const Spinor& psi1, const Spinor& psi2) {
    if (!(mass > 0.0) || !(pi0 > 0.0)) {
        throw PreconditionError("completed equations need mass > 0 and pi0 > 0");
    }
    const Eigen::Vector3d n = unit_or_z(direction);
    helicity_of(psi1, n);
    helicity_of(psi2, n);

    CompletedDiracReport r;
    r.coth_eigenvalue = m_coth(mass, 1.0 / pi0);
    r.tanh_eigenvalue = mass * std::tanh(mass / pi0);

    const auto residuals = [&](const MomentumState& s, double& res1, double& res2) {
        const Mat2c P0 = Mat2c::Identity() * s.p0;
        const Mat2c sP = sigma_dot(s.p * n);
        res1 = eigen_residual(P0 + sP, psi1, r.coth_eigenvalue);
        res2 = eigen_residual(P0 - sP, psi2, r.tanh_eigenvalue);
    };
    residuals(momenta_from_phi(mass, 2.0 / pi0), r.residual_1, r.residual_2);
    residuals(momenta_from_phi(mass, 1.0 / pi0), r.literal_residual_1, r.literal_residual_2);
    return r;
}

Complex coth(Complex z) {
    return std::cosh(z) / std::sinh(z);
}

}  // namespace relkin
