#include "relkin/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "relkin/errors.hpp"

namespace relkin {
namespace {

void check_index(int mu) {
    if (mu < 0 || mu > 3) {
        throw PreconditionError("Minkowski index must be in 0..3");
    }
}

}  // namespace

Polynomial::Polynomial(Rational constant) {
    add_term({0, 0, 0, 0}, constant);
}

Polynomial Polynomial::monomial(const Monomial& exponents, Rational coeff) {
    Polynomial p;
    p.add_term(exponents, coeff);
    return p;
}

Polynomial Polynomial::upper(int mu) {
    check_index(mu);
    Monomial m{0, 0, 0, 0};
    m[static_cast<std::size_t>(mu)] = 1;
    return monomial(m);
}

Polynomial Polynomial::lower(int mu) {
    return upper(mu) * Rational(metric(mu, mu));
}

Polynomial Polynomial::rho2() {
    Polynomial r;
    for (int mu = 0; mu < 4; ++mu) {
        r += upper(mu) * lower(mu);
    }
    return r;
}

Polynomial Polynomial::derivative(int mu) const {
    check_index(mu);
    const auto i = static_cast<std::size_t>(mu);
    Polynomial d;
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) {
            continue;
        }
        Monomial lowered = m;
        --lowered[i];
        d.add_term(lowered, c * Rational(m[i]));
    }
    return d;
}

int Polynomial::degree() const noexcept {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
    }
    return deg;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, Rational c) {
    if (c.numerator() == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.numerator() == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(Rational scalar) {
    if (scalar.numerator() == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < 4; ++i) {
                m[i] = ma[i] + mb[i];
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        os << (first ? "" : " + ") << c;
        for (std::size_t i = 0; i < 4; ++i) {
            if (m[i] > 0) {
                os << "*x" << i;
                if (m[i] > 1) {
                    os << '^' << m[i];
                }
            }
        }
        first = false;
    }
    return os.str();
}

PolyOperator PolyOperator::multiply(Polynomial p) {
    PolyOperator op;
    op.multiplier_ = std::move(p);
    return op;
}

PolyOperator PolyOperator::partial(int mu) {
    check_index(mu);
    PolyOperator op;
    op.field_[static_cast<std::size_t>(mu)] = Polynomial(Rational(1));
    return op;
}

PolyOperator PolyOperator::dilatation() {
    PolyOperator op;
    for (int mu = 0; mu < 4; ++mu) {
        op.field_[static_cast<std::size_t>(mu)] = Polynomial::upper(mu);
    }
    return op;
}

PolyOperator PolyOperator::generator(int nu) {
    check_index(nu);
    PolyOperator rho_d = Polynomial::rho2() * partial(nu);
    PolyOperator xD = Polynomial::lower(nu) * dilatation();
    return rho_d + Rational(-1) * xD;
}

PolyOperator PolyOperator::lorentz(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    return Polynomial::lower(mu) * partial(nu) + Rational(-1) * (Polynomial::lower(nu) * partial(mu));
}

Polynomial PolyOperator::apply(const Polynomial& f) const {
    Polynomial out = multiplier_ * f;
    for (int mu = 0; mu < 4; ++mu) {
        const auto& a = field_[static_cast<std::size_t>(mu)];
        if (!a.is_zero()) {
            out += a * f.derivative(mu);
        }
    }
    return out;
}

PolyOperator& PolyOperator::operator+=(const PolyOperator& other) {
    multiplier_ += other.multiplier_;
    for (std::size_t i = 0; i < 4; ++i) {
        field_[i] += other.field_[i];
    }
    return *this;
}

PolyOperator& PolyOperator::operator*=(Rational scalar) {
    multiplier_ *= scalar;
    for (auto& a : field_) {
        a *= scalar;
    }
    return *this;
}

PolyOperator operator*(const Polynomial& p, const PolyOperator& a) {
    PolyOperator out;
    out.multiplier_ = p * a.multiplier_;
    for (std::size_t i = 0; i < 4; ++i) {
        out.field_[i] = p * a.field_[i];
    }
    return out;
}

OperatorAction action(const PolyOperator& op) {
    return [op](const Polynomial& f) { return op.apply(f); };
}

OperatorAction commutator(OperatorAction a, OperatorAction b) {
    return [a = std::move(a), b = std::move(b)](const Polynomial& f) { return a(b(f)) - b(a(f)); };
}

OperatorAction compose(OperatorAction a, OperatorAction b) {
    return [a = std::move(a), b = std::move(b)](const Polynomial& f) { return a(b(f)); };
}

OperatorAction scaled(Rational s, OperatorAction a) {
    return [s, a = std::move(a)](const Polynomial& f) { return a(f) * s; };
}

OperatorAction sum(std::vector<OperatorAction> terms) {
    return [terms = std::move(terms)](const Polynomial& f) {
        Polynomial out;
        for (const auto& t : terms) {
            out += t(f);
        }
        return out;
    };
}

std::vector<Polynomial> monomial_basis(int max_degree) {
    std::vector<Polynomial> basis;
    for (int a = 0; a <= max_degree; ++a) {
        for (int b = 0; a + b <= max_degree; ++b) {
            for (int c = 0; a + b + c <= max_degree; ++c) {
                for (int d = 0; a + b + c + d <= max_degree; ++d) {
                    basis.push_back(Polynomial::monomial({a, b, c, d}));
                }
            }
        }
    }
    return basis;
}

}  // namespace relkin
