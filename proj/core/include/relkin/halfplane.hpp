#pragma once

// Upper half-plane geometry and the g-function evolution of the mass-shell
// quadratic F(x) = x^2 - 2 p0 x + p^2.

#include <Eigen/Dense>
#include <complex>
#include <utility>

namespace relkin {

/// A point of H (im > 0), a real boundary point, or the point at infinity.
class HalfPlanePoint {
public:
    /// Interior point; throws PreconditionError unless im > 0 and both parts are finite.
    HalfPlanePoint(double re, double im);

    static HalfPlanePoint boundary(double re);
    static HalfPlanePoint infinity();

    bool is_infinite() const noexcept { return infinite_; }
    bool is_boundary() const noexcept { return infinite_ || value_.imag() == 0.0; }
    std::complex<double> value() const noexcept { return value_; }
    double re() const noexcept { return value_.real(); }
    double im() const noexcept { return value_.imag(); }

private:
    HalfPlanePoint() = default;
    std::complex<double> value_;
    bool infinite_ = false;
};

/// [z1, z2; z3, z4] = (z1 - z4)(z3 - z2) / ((z1 - z2)(z3 - z4)).
/// Factors containing a point at infinity are dropped.
std::complex<double> cross_ratio(const HalfPlanePoint& z1, const HalfPlanePoint& z2, const HalfPlanePoint& z3,
                                 const HalfPlanePoint& z4);

struct GeodesicEndpoints {
    HalfPlanePoint z_star;
    HalfPlanePoint w_star;
};

/// Ends of the geodesic through z and w, ordered so that z lies between z*
/// and w on it.
GeodesicEndpoints geodesic_endpoints(const HalfPlanePoint& z, const HalfPlanePoint& w);

/// ln of (w - z*)(z - w*) / ((z - z*)(w - w*)).
double distance(const HalfPlanePoint& z, const HalfPlanePoint& w);

/// 2 asinh(|z - w| / (2 sqrt(Im z Im w))), equivalent to
/// cosh rho = 1 + |z - w|^2 / (2 Im z Im w).
double distance_closed_form(const HalfPlanePoint& z, const HalfPlanePoint& w);

/// exp(E phi) = g0 + g1 E for the companion matrix E = [[0, -p^2], [1, 2 p0]].
struct GFunctionState {
    double p0 = 0.0;
    double p2 = 0.0;
    double phi = 0.0;
    double g0 = 1.0;
    double g1 = 0.0;
    double U = 0.0;  ///< -g0/g1; NaN at phi = 0

    double mass() const;
    /// |g0^2 + 2 p0 g0 g1 + p^2 g1^2 - exp(2 p0 phi)| / exp(2 p0 phi)
    double determinant_residual() const;
    /// g0 I + g1 E
    Eigen::Matrix2d transfer() const;
};

Eigen::Matrix2d companion_matrix(double p0, double p2);

/// Requires p0^2 >= p2. The confluent case p0^2 = p2 uses g1 = phi exp(p0 phi).
GFunctionState g_evolution(double p0, double p2, double phi);

/// |(U(phi + h) - U(phi - h)) / 2h - (U^2 - 2 p0 U + p^2)|; requires phi > h > 0.
double riccati_residual(double p0, double p2, double phi, double h);

/// Shift both roots of F by u: returns (p0 + u, p2 + 2 p0 u + u^2).
std::pair<double, double> shift_roots(double p0, double p2, double u);

/// Roots x2 < x1 of F; requires p0^2 > p2.
std::pair<double, double> shell_roots(double p0, double p2);

/// 2m |integral_{zl}^{wl} dx / F(x)| by adaptive Simpson. Both ends must lie
/// strictly between the roots.
double momentum_distance_integral(double zl, double wl, double p0, double p2);

/// The same quantity as ln of the cross ratio with the roots as geodesic ends.
double momentum_distance_cross_ratio(double zl, double wl, double p0, double p2);

/// The same quantity from the partial-fraction antiderivative.
double momentum_distance_closed_form(double zl, double wl, double p0, double p2);

}  // namespace relkin
