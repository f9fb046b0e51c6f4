/*
   Copyright 2026 The thuecubic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef THUECUBIC_POLYNOMIAL_HPP
#define THUECUBIC_POLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bareiss.hpp"
#include "exact.hpp"

namespace thuecubic {

/**
 * Dense univariate polynomial, coefficients stored by ascending degree.
 *
 * The zero polynomial is the empty coefficient list and has degree -1.
 * Every mutating operation trims trailing zeros, so a nonzero polynomial
 * always has a nonzero leading coefficient.
 */
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

    static Polynomial monomial(const T& v, std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[k] = v;
        return Polynomial(std::move(c));
    }

    /// X
    static Polynomial identity() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coefficients() const { return c_; }

    /// Coefficient of X^i; zero past the degree.
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    const T& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class S>
    S evaluate(const S& at) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + S(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(d));
    }

    /// X^d * p(1/X) for a nominal degree d >= deg p (defaults to deg p).
    Polynomial reverse(int nominal_degree = -2) const {
        if (is_zero()) return {};
        const int d = nominal_degree == -2 ? degree() : nominal_degree;
        if (d < degree()) throw std::invalid_argument("reverse: nominal degree below degree");
        std::vector<T> r(static_cast<std::size_t>(d) + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const T& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(T(1));
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    /// p(q(X))
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
        return acc;
    }

    std::string to_string(const char* var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const T& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (!first) os << (v < 0 ? " - " : " + ");
            else if (v < 0) os << "-";
            T a = v < 0 ? T(-v) : v;
            if (i == 0 || a != 1) os << a;
            if (i > 0) os << var;
            if (i > 1) os << "^" << i;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        return os << p.to_string();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coefficients().size());
    for (const auto& v : p.coefficients()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& v : p.coefficients()) g = gcd(g, v);
    return g;
}

/// Primitive integer polynomial with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> c;
    for (const auto& v : p.coefficients()) c.emplace_back(v / g);
    return IntPoly(std::move(c));
}

/// Positive rational multiple of p with coprime integer coefficients.
/// Scaling by a positive constant keeps every sign of p(x).
inline IntPoly clear_denominators(const RatPoly& p) {
    Int l = 1;
    for (const auto& v : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Int> c;
    for (const auto& v : p.coefficients()) {
        const Rat t = v * l;
        c.emplace_back(t.get_num());
    }
    IntPoly q(std::move(c));
    const Int g = content(q);
    if (g > 1) {
        std::vector<Int> d;
        for (const auto& v : q.coefficients()) d.emplace_back(v / g);
        q = IntPoly(std::move(d));
    }
    return q;
}

/// Quotient and remainder over a field.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = a.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const Rat& lb = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        const Rat f = r[static_cast<std::size_t>(k + db)] / lb;
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

/// Monic gcd over Q (zero if both inputs are zero).
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const Rat l = a.leading();
    return a * Rat(1 / l);
}

inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    return primitive_part(clear_denominators(gcd(to_rat(a), to_rat(b))));
}

/// Product of the distinct irreducible factors, primitive.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() < 1) return p;
    const RatPoly rp = to_rat(p);
    const RatPoly g = gcd(rp, rp.derivative());
    return primitive_part(clear_denominators(divmod(rp, g).first));
}

// ---------------------------------------------------------------------------
// Resultants

/// Sylvester matrix, rows of p first: deg q shifted copies of p followed by
/// deg p shifted copies of q.
template <class T>
SquareMatrix<T> sylvester_matrix(const Polynomial<T>& p, const Polynomial<T>& q) {
    const int dp = p.degree();
    const int dq = q.degree();
    const std::size_t n = static_cast<std::size_t>(dp + dq);
    SquareMatrix<T> s(n);
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i)
            s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + dp - i)) =
                p.coeff(static_cast<std::size_t>(i));
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i)
            s(static_cast<std::size_t>(dq + r), static_cast<std::size_t>(r + dq - i)) =
                q.coeff(static_cast<std::size_t>(i));
    return s;
}

/**
 * Res(p, q) = lc(p)^deg(q) * prod q(a) over the roots a of p, computed as
 * the Sylvester determinant. Res(X - 2, X - 3) = -1.
 */
template <class T>
T resultant(const Polynomial<T>& p, const Polynomial<T>& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (p.degree() == 0 && q.degree() == 0) return T(1);
    if (p.degree() == 0) {
        T r(1);
        for (int i = 0; i < q.degree(); ++i) r *= p.leading();
        return r;
    }
    if (q.degree() == 0) {
        T r(1);
        for (int i = 0; i < p.degree(); ++i) r *= q.leading();
        return r;
    }
    return bareiss_determinant(sylvester_matrix(p, q));
}

template <class T>
T discriminant(const Polynomial<T>& p) {
    const int d = p.degree();
    if (d < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    T r = resultant(p, p.derivative()) / p.leading();
    if ((d * (d - 1) / 2) % 2) r = -r;
    return r;
}

}  // namespace thuecubic

#endif  // THUECUBIC_POLYNOMIAL_HPP
