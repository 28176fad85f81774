#pragma once

// Exact multivariate polynomials over the rationals in the contravariant
// coordinates x^0..x^3 of Minkowski space (metric +,-,-,-), and first-order
// differential operators with polynomial coefficients acting on them.

#include <array>
#include <boost/rational.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace relkin {

using Rational = boost::rational<std::int64_t>;

/// Exponents of x^0..x^3.
using Monomial = std::array<int, 4>;

/// eta_{mu nu} = diag(1, -1, -1, -1)
constexpr int metric(int mu, int nu) {
    return mu != nu ? 0 : (mu == 0 ? 1 : -1);
}

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Rational constant);

    static Polynomial constant(Rational c) { return Polynomial(c); }
    static Polynomial monomial(const Monomial& exponents, Rational coeff = 1);
    /// Contravariant coordinate x^mu.
    static Polynomial upper(int mu);
    /// Covariant coordinate x_mu = eta_{mu nu} x^nu.
    static Polynomial lower(int mu);
    /// rho^2 = x^mu x_mu
    static Polynomial rho2();

    /// d/dx^mu
    Polynomial derivative(int mu) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept;
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(Rational scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, Rational s) { return a *= s; }
    friend Polynomial operator*(Rational s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, Rational c);

    std::map<Monomial, Rational> terms_;
};

/// First-order differential operator  f -> c(x) f + sum_mu a^mu(x) d f / dx^mu.
class PolyOperator {
public:
    PolyOperator() = default;

    /// Multiplication by a polynomial.
    static PolyOperator multiply(Polynomial p);
    /// d/dx^mu
    static PolyOperator partial(int mu);
    /// D = x^mu d_mu (dilatation)
    static PolyOperator dilatation();
    /// G_nu = rho^2 d_nu - x_nu D
    static PolyOperator generator(int nu);
    /// M_{mu nu} = x_mu d_nu - x_nu d_mu
    static PolyOperator lorentz(int mu, int nu);

    Polynomial apply(const Polynomial& f) const;

    const Polynomial& multiplier() const noexcept { return multiplier_; }
    const std::array<Polynomial, 4>& vector_field() const noexcept { return field_; }

    PolyOperator& operator+=(const PolyOperator& other);
    PolyOperator& operator*=(Rational scalar);
    friend PolyOperator operator+(PolyOperator a, const PolyOperator& b) { return a += b; }
    friend PolyOperator operator*(Rational s, PolyOperator a) { return a *= s; }
    /// Left multiplication of every coefficient by a polynomial: (p A) f = p (A f).
    friend PolyOperator operator*(const Polynomial& p, const PolyOperator& a);

private:
    Polynomial multiplier_;
    std::array<Polynomial, 4> field_;
};

/// An operator used in identity checks: any composition/linear combination
/// of PolyOperators, represented by its action.
using OperatorAction = std::function<Polynomial(const Polynomial&)>;

OperatorAction action(const PolyOperator& op);
/// [A, B] f = A(B f) - B(A f)
OperatorAction commutator(OperatorAction a, OperatorAction b);
OperatorAction compose(OperatorAction a, OperatorAction b);
OperatorAction scaled(Rational s, OperatorAction a);
OperatorAction sum(std::vector<OperatorAction> terms);

/// All monomials of total degree <= max_degree (35 of them for degree 3).
std::vector<Polynomial> monomial_basis(int max_degree);

}  // namespace relkin
