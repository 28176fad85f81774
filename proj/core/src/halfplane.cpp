#include "relkin/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "relkin/errors.hpp"
#include "relkin/quadrature.hpp"

namespace relkin {
namespace {

using cd = std::complex<double>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_segment(double zl, double wl, double p0, double p2, double& x2, double& x1) {
    std::tie(x2, x1) = shell_roots(p0, p2);
    const auto inside = [&](double x) { return x > x2 && x < x1; };
    if (!std::isfinite(zl) || !std::isfinite(wl)) {
        throw PreconditionError("segment ends must be finite");
    }
    if (!inside(zl) || !inside(wl)) {
        throw DomainError("integration segment must lie strictly between the roots of x^2 - 2 p0 x + p^2");
    }
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double re, double im) : value_(re, im) {
    if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0.0)) {
        throw PreconditionError("half-plane point needs finite coordinates and im > 0");
    }
}

HalfPlanePoint HalfPlanePoint::boundary(double re) {
    if (!std::isfinite(re)) {
        throw PreconditionError("boundary point must be finite; use infinity()");
    }
    HalfPlanePoint p;
    p.value_ = cd(re, 0.0);
    return p;
}

HalfPlanePoint HalfPlanePoint::infinity() {
    HalfPlanePoint p;
    p.infinite_ = true;
    return p;
}

std::complex<double> cross_ratio(const HalfPlanePoint& z1, const HalfPlanePoint& z2, const HalfPlanePoint& z3,
                                 const HalfPlanePoint& z4) {
    const HalfPlanePoint* pts[] = {&z1, &z2, &z3, &z4};
    int n_inf = 0;
    for (int i = 0; i < 4; ++i) {
        n_inf += pts[i]->is_infinite() ? 1 : 0;
        for (int j = i + 1; j < 4; ++j) {
            const bool both_inf = pts[i]->is_infinite() && pts[j]->is_infinite();
            const bool same = !pts[i]->is_infinite() && !pts[j]->is_infinite() && pts[i]->value() == pts[j]->value();
            if (both_inf || same) {
                throw PreconditionError("cross ratio needs four distinct points");
            }
        }
    }
    if (n_inf > 1) {
        throw PreconditionError("at most one point may be at infinity");
    }
    const auto diff = [](const HalfPlanePoint& a, const HalfPlanePoint& b) {
        return (a.is_infinite() || b.is_infinite()) ? cd(1.0, 0.0) : a.value() - b.value();
    };
    return (diff(z1, z4) * diff(z3, z2)) / (diff(z1, z2) * diff(z3, z4));
}

GeodesicEndpoints geodesic_endpoints(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    if (z.is_boundary() || w.is_boundary()) {
        throw PreconditionError("geodesic endpoints need interior points");
    }
    if (z.value() == w.value()) {
        throw PreconditionError("geodesic through a single point is not unique");
    }
    const double dx = w.re() - z.re();
    const double xc = (std::norm(w.value()) - std::norm(z.value())) / (2.0 * dx);
    if (dx == 0.0 || !std::isfinite(xc)) {
        const HalfPlanePoint foot = HalfPlanePoint::boundary(z.re());
        if (z.im() < w.im()) {
            return {foot, HalfPlanePoint::infinity()};
        }
        return {HalfPlanePoint::infinity(), foot};
    }
    // Ends are the roots of x^2 - 2 xc x + C; take the large one directly and
    // the other from the product to avoid cancellation on nearly vertical arcs.
    const double R = std::abs(z.value() - cd(xc, 0.0));
    const double C = 2.0 * xc * z.re() - std::norm(z.value());
    const double big = xc >= 0.0 ? xc + R : xc - R;
    const double small = big != 0.0 ? C / big : 0.0;
    const double left = std::min(big, small);
    const double right = std::max(big, small);
    if (z.re() < w.re()) {
        return {HalfPlanePoint::boundary(left), HalfPlanePoint::boundary(right)};
    }
    return {HalfPlanePoint::boundary(right), HalfPlanePoint::boundary(left)};
}

double distance(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    if (z.is_boundary() || w.is_boundary()) {
        throw PreconditionError("distance needs interior points");
    }
    if (z.value() == w.value()) {
        return 0.0;
    }
    const GeodesicEndpoints e = geodesic_endpoints(z, w);
    return std::log(std::abs(cross_ratio(w, e.w_star, z, e.z_star)));
}

double distance_closed_form(const HalfPlanePoint& z, const HalfPlanePoint& w) {
    if (z.is_boundary() || w.is_boundary()) {
        throw PreconditionError("distance needs interior points");
    }
    return 2.0 * std::asinh(std::abs(z.value() - w.value()) / (2.0 * std::sqrt(z.im() * w.im())));
}

double GFunctionState::mass() const {
    return std::sqrt(std::max(0.0, p0 * p0 - p2));
}

double GFunctionState::determinant_residual() const {
    const double e = std::exp(2.0 * p0 * phi);
    return std::abs(g0 * g0 + 2.0 * p0 * g0 * g1 + p2 * g1 * g1 - e) / e;
}

Eigen::Matrix2d GFunctionState::transfer() const {
    return g0 * Eigen::Matrix2d::Identity() + g1 * companion_matrix(p0, p2);
}

Eigen::Matrix2d companion_matrix(double p0, double p2) {
    Eigen::Matrix2d E;
    E << 0.0, -p2, 1.0, 2.0 * p0;
    return E;
}

GFunctionState g_evolution(double p0, double p2, double phi) {
    if (!std::isfinite(p0) || !std::isfinite(p2) || !std::isfinite(phi)) {
        throw PreconditionError("g_evolution needs finite inputs");
    }
    const double disc = p0 * p0 - p2;
    if (disc < -8.0 * kEps * std::max(p0 * p0, std::abs(p2))) {
        throw PreconditionError("complex eigenvalues: need p0^2 >= p^2");
    }
    const double m = disc > 0.0 ? std::sqrt(disc) : 0.0;
    const double ep = std::exp(p0 * phi);

    GFunctionState s;
    s.p0 = p0;
    s.p2 = p2;
    s.phi = phi;
    if (m == 0.0) {
        s.g1 = phi * ep;
        s.g0 = ep * (1.0 - p0 * phi);
    } else {
        const double sh_over_m = std::sinh(m * phi) / m;
        s.g1 = ep * sh_over_m;
        s.g0 = ep * (std::cosh(m * phi) - p0 * sh_over_m);
    }
    s.U = s.g1 != 0.0 ? -s.g0 / s.g1 : std::numeric_limits<double>::quiet_NaN();
    return s;
}

double riccati_residual(double p0, double p2, double phi, double h) {
    if (!(h > 0.0) || !(phi > h)) {
        throw PreconditionError("riccati_residual needs phi > h > 0");
    }
    const double up = g_evolution(p0, p2, phi + h).U;
    const double um = g_evolution(p0, p2, phi - h).U;
    const double u = g_evolution(p0, p2, phi).U;
    const double derivative = (up - um) / (2.0 * h);
    return std::abs(derivative - (u * u - 2.0 * p0 * u + p2));
}

std::pair<double, double> shift_roots(double p0, double p2, double u) {
    return {p0 + u, p2 + 2.0 * p0 * u + u * u};
}

std::pair<double, double> shell_roots(double p0, double p2) {
    const double disc = p0 * p0 - p2;
    if (!(disc > 0.0)) {
        throw DomainError("x^2 - 2 p0 x + p^2 needs two distinct real roots");
    }
    const double m = std::sqrt(disc);
    return {p0 - m, p0 + m};
}

double momentum_distance_integral(double zl, double wl, double p0, double p2) {
    double x2 = 0.0, x1 = 0.0;
    check_segment(zl, wl, p0, p2, x2, x1);
    const double two_m = x1 - x2;
    const auto f = [&](double x) { return two_m / ((x - x1) * (x - x2)); };
    return std::abs(adaptive_simpson(f, std::min(zl, wl), std::max(zl, wl)).value);
}

double momentum_distance_cross_ratio(double zl, double wl, double p0, double p2) {
    double x2 = 0.0, x1 = 0.0;
    check_segment(zl, wl, p0, p2, x2, x1);
    if (zl == wl) {
        return 0.0;
    }
    // z* is the root on the side of zl.
    const bool ascending = zl < wl;
    const HalfPlanePoint z = HalfPlanePoint::boundary(zl);
    const HalfPlanePoint w = HalfPlanePoint::boundary(wl);
    const HalfPlanePoint z_star = HalfPlanePoint::boundary(ascending ? x2 : x1);
    const HalfPlanePoint w_star = HalfPlanePoint::boundary(ascending ? x1 : x2);
    return std::log(std::abs(cross_ratio(w, w_star, z, z_star)));
}

double momentum_distance_closed_form(double zl, double wl, double p0, double p2) {
    double x2 = 0.0, x1 = 0.0;
    check_segment(zl, wl, p0, p2, x2, x1);
    return std::abs(std::log((wl - x1) / (zl - x1)) - std::log((wl - x2) / (zl - x2)));
}

}  // namespace relkin
