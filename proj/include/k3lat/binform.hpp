#pragma once

#include <k3lat/exact.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace k3lat {

// Homogeneous binary form of degree d over Q:
//   c[0]*t^d + c[1]*t^(d-1)*s + ... + c[d]*s^d.
// The point at infinity is the zero locus of s; a form vanishes there to
// order min{i : c[i] != 0}.
struct BinForm {
    int degree = 0;
    std::vector<Rat> c;  // size degree + 1

    BinForm() : c(1, Rat(0)) {}
    explicit BinForm(int d) : degree(d), c(d + 1, Rat(0)) {
        if (d < 0) throw std::invalid_argument("BinForm: negative degree");
    }
    BinForm(int d, std::vector<Rat> coeffs) : degree(d), c(std::move(coeffs)) {
        if (d < 0 || c.size() != static_cast<std::size_t>(d) + 1)
            throw std::invalid_argument("BinForm: coefficient count must be degree + 1");
    }

    bool operator==(const BinForm&) const = default;

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
    }

    // order of vanishing at s = 0 (the point at infinity)
    int val_s() const {
        for (int i = 0; i <= degree; ++i)
            if (c[i] != 0) return i;
        throw std::invalid_argument("val_s: zero form");
    }

    // order of vanishing at t = 0
    int val_t() const {
        for (int i = degree; i >= 0; --i)
            if (c[i] != 0) return degree - i;
        throw std::invalid_argument("val_t: zero form");
    }

    BinForm operator*(const BinForm& o) const {
        BinForm p(degree + o.degree);
        for (int i = 0; i <= degree; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j <= o.degree; ++j) p.c[i + j] += c[i] * o.c[j];
        }
        return p;
    }

    BinForm operator-(const BinForm& o) const {
        if (degree != o.degree) throw std::invalid_argument("BinForm: degree mismatch in subtraction");
        BinForm r(degree);
        for (int i = 0; i <= degree; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }

    BinForm scaled(const Rat& f) const {
        BinForm r(degree);
        for (int i = 0; i <= degree; ++i) r.c[i] = c[i] * f;
        return r;
    }

    BinForm pow(int e) const {
        BinForm r(0, {Rat(1)});
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // leading coefficient in t (first nonzero), 0 for the zero form
    Rat lead() const {
        for (int i = 0; i <= degree; ++i)
            if (c[i] != 0) return c[i];
        return Rat(0);
    }
};

namespace detail {

// Univariate polynomials over Q, ascending powers of t, no trailing zeros.
using UPoly = std::vector<Rat>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(Int(i)));
    trim(d);
    return d;
}

inline UPoly monic(UPoly p) {
    trim(p);
    if (p.empty()) return p;
    Rat l = p.back();
    for (auto& x : p) x /= l;
    return p;
}

// remainder of a by b (b nonzero)
inline UPoly rem(UPoly a, const UPoly& b) {
    trim(a);
    while (deg(a) >= deg(b) && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

// exact quotient a / b (throws if not divisible)
inline UPoly quot(UPoly a, const UPoly& b) {
    trim(a);
    if (b.empty()) throw std::invalid_argument("UPoly: division by zero");
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (!a.empty() && deg(a) >= deg(b)) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::invalid_argument("UPoly: non-exact division");
    trim(q);
    return q;
}

inline UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

// form -> (s-valuation, dehomogenized univariate of exact degree d - val_s)
inline std::pair<int, UPoly> split(const BinForm& f) {
    int a = f.val_s();
    UPoly p;
    // c[i] multiplies t^(d-i); after stripping s^a the t-degree runs 0..d-a
    for (int i = f.degree; i >= a; --i) p.push_back(f.c[i]);
    trim(p);
    return {a, p};
}

// univariate of degree m, times s^a, as a form of degree m + a
inline BinForm homogenize(const UPoly& p, int s_power) {
    int m = deg(p);
    if (m < 0) return BinForm(0);
    BinForm f(m + s_power);
    for (int j = 0; j <= m; ++j) f.c[f.degree - j] = p[j];  // t^j term
    return f;
}

} // namespace detail

// Monic gcd of two binary forms (not both zero). The s-power (shared
// vanishing at infinity) is part of the gcd.
inline BinForm poly_gcd(const BinForm& f, const BinForm& g) {
    bool fz = f.is_zero(), gz = g.is_zero();
    if (fz && gz) throw std::invalid_argument("poly_gcd: both forms zero");
    if (fz || gz) {
        auto [a, p] = detail::split(fz ? g : f);
        return detail::homogenize(detail::monic(std::move(p)), a);
    }
    auto [af, pf] = detail::split(f);
    auto [ag, pg] = detail::split(g);
    return detail::homogenize(detail::gcd(pf, pg), std::min(af, ag));
}

struct SquarefreeFactor {
    BinForm factor;
    int multiplicity;
};

// f = c * prod factor_i^mult_i with monic squarefree pairwise-coprime factors.
// A power of s (vanishing at infinity) comes out as its own factor.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const BinForm& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero form");
    std::vector<SquarefreeFactor> out;
    auto [a, p] = detail::split(f);
    p = detail::monic(std::move(p));
    if (detail::deg(p) >= 1) {
        // Yun's algorithm
        detail::UPoly d = detail::derivative(p);
        detail::UPoly g = detail::gcd(p, d);
        detail::UPoly w = detail::quot(p, g);
        int i = 1;
        while (detail::deg(w) >= 1) {
            detail::UPoly y = detail::gcd(w, g);
            detail::UPoly z = detail::quot(w, y);
            if (detail::deg(z) >= 1) out.push_back({detail::homogenize(z, 0), i});
            w = std::move(y);
            if (!g.empty() && detail::deg(w) >= 0) g = detail::quot(g, w);
            ++i;
        }
    }
    if (a > 0) {
        BinForm s(1);
        s.c[1] = 1;
        out.push_back({s, a});
    }
    return out;
}

} // namespace k3lat
