#pragma once

#include <k3lat/binform.hpp>
#include <k3lat/lattice.hpp>

namespace k3lat {

// Weierstrass data of an elliptic K3 over P^1: sections of O(8) and O(12).
struct WeierstrassModel {
    BinForm g2;  // degree 8
    BinForm g3;  // degree 12

    WeierstrassModel(BinForm a, BinForm b) : g2(std::move(a)), g3(std::move(b)) {
        if (g2.degree != 8 || g3.degree != 12)
            throw std::invalid_argument("WeierstrassModel: g2 must have degree 8 and g3 degree 12");
    }
};

// NS lattice together with an isotropic genus-one fiber class.
struct FibrationData {
    Lattice ns;
    std::vector<Int> fiber;
};

// Smallest positive fibre degree: gcd of the pairings of the fiber class
// with an NS basis.
inline Int fibration_index(const FibrationData& d) {
    if (d.fiber.size() != d.ns.rank())
        throw std::invalid_argument("fibration_index: fiber vector length mismatch");
    bool zero = true;
    for (const auto& x : d.fiber)
        if (x != 0) zero = false;
    if (zero) throw std::invalid_argument("fibration_index: fiber class is zero");
    if (d.ns.pair(d.fiber, d.fiber) != 0)
        throw std::invalid_argument("fibration_index: fiber class is not isotropic");
    Int g = 0;
    for (std::size_t i = 0; i < d.ns.rank(); ++i) {
        Int p = 0;
        for (std::size_t j = 0; j < d.ns.rank(); ++j) p += d.ns.gram(i, j) * d.fiber[j];
        g = gcd_int(g, p);
    }
    if (g == 0)
        throw std::invalid_argument("fibration_index: fiber class pairs to zero with all of NS");
    return g;
}

// Delta = g2^3 - 27 g3^2, a section of O(24).
inline BinForm discriminant_form(const WeierstrassModel& w) {
    return w.g2.pow(3) - w.g3.pow(2).scaled(Rat(27));
}

namespace detail {

// product of the squarefree factors of f whose multiplicity is >= threshold
inline BinForm high_multiplicity_part(const BinForm& f, int threshold) {
    BinForm prod(0, {Rat(1)});
    for (const auto& [factor, mult] : squarefree_decomposition(f))
        if (mult >= threshold) prod = prod * factor;
    return prod;
}

} // namespace detail

// Friedman's smoothness conditions: Delta nonzero and no point of P^1
// (including infinity) with v(g2) >= 4 and v(g3) >= 6.
inline bool is_valid(const WeierstrassModel& w) {
    if (discriminant_form(w).is_zero()) return false;
    bool g2z = w.g2.is_zero(), g3z = w.g3.is_zero();
    if (g2z && g3z) return false;  // Delta = 0, unreachable past the check above
    if (g2z) return detail::high_multiplicity_part(w.g3, 6).degree == 0;
    if (g3z) return detail::high_multiplicity_part(w.g2, 4).degree == 0;
    BinForm a = detail::high_multiplicity_part(w.g2, 4);
    BinForm b = detail::high_multiplicity_part(w.g3, 6);
    if (a.degree == 0 || b.degree == 0) return true;
    return poly_gcd(a, b).degree == 0;
}

// Number of simple roots of Delta on P^1.
inline Int nodal_fiber_count(const WeierstrassModel& w) {
    BinForm delta = discriminant_form(w);
    if (delta.is_zero()) throw std::invalid_argument("nodal_fiber_count: discriminant vanishes");
    Int count = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(delta))
        if (mult == 1) count += factor.degree;
    return count;
}

// Degree of the j-map [g2^3 : Delta] : P^1 -> P^1.
inline Int j_degree(const WeierstrassModel& w) {
    BinForm delta = discriminant_form(w);
    if (delta.is_zero()) throw std::invalid_argument("j_degree: discriminant vanishes");
    if (w.g2.is_zero()) return 0;  // constant j
    return Int(24 - poly_gcd(w.g2.pow(3), delta).degree);
}

// T_X inside T_J as the kernel of the Tate-Shafarevich character, with the
// inclusion index (= order of the image of alpha).
inline std::pair<Embedding, Int> jacobian_kernel(const Lattice& tJ, const Character& alpha) {
    if (alpha.domain != tJ) throw std::invalid_argument("jacobian_kernel: character domain mismatch");
    Embedding ker = character_kernel(alpha);
    return {ker, alpha.order()};
}

} // namespace k3lat
