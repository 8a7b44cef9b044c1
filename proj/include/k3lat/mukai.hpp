#pragma once

#include <k3lat/lattice.hpp>

#include <vector>

namespace k3lat {

// Algebraic classes of the surface: the Neron-Severi lattice with its
// intersection form.
struct NSContext {
    Lattice ns;
};

// (r, c1, s) in H^0 + H^2 + H^4 with c1 in the NS lattice.
struct MukaiVector {
    Int r;
    std::vector<Int> c1;
    Int s;

    bool is_zero() const {
        if (r != 0 || s != 0) return false;
        for (const auto& x : c1)
            if (x != 0) return false;
        return true;
    }
};

inline Int mukai_pairing(const MukaiVector& v, const MukaiVector& w, const NSContext& ctx) {
    if (v.c1.size() != ctx.ns.rank() || w.c1.size() != ctx.ns.rank())
        throw std::invalid_argument("mukai_pairing: c1 length does not match the NS lattice");
    return ctx.ns.pair(v.c1, w.c1) - v.r * w.s - v.s * w.r;
}

// Mukai vector from Chern data on a K3: sqrt(td) = (1, 0, 1), so
// s = r + (c1^2 - 2 c2) / 2.
inline MukaiVector from_chern(const Int& r, const std::vector<Int>& c1, const Int& c2,
                              const NSContext& ctx) {
    if (c1.size() != ctx.ns.rank())
        throw std::invalid_argument("from_chern: c1 length does not match the NS lattice");
    Int c1sq = ctx.ns.pair(c1, c1);
    if (c1sq % 2 != 0)
        throw std::invalid_argument("from_chern: c1^2 odd, the NS form is not even");
    return MukaiVector{r, c1, r + (c1sq - 2 * c2) / 2};
}

inline bool is_isotropic(const MukaiVector& v, const NSContext& ctx) {
    return mukai_pairing(v, v, ctx) == 0;
}

inline bool is_primitive(const MukaiVector& v) {
    Int g = gcd_int(v.r, v.s);
    for (const auto& x : v.c1) g = gcd_int(g, x);
    return g == 1;
}

// n = gcd over all integral algebraic omega of <omega, v>; closed form with
// omega ranging over (1,0,0), (0,b_i,0), (0,0,1).
inline Int fineness_index(const MukaiVector& v, const NSContext& ctx) {
    if (v.is_zero()) throw std::invalid_argument("fineness_index: zero Mukai vector");
    Int g = gcd_int(v.r, v.s);
    for (std::size_t i = 0; i < ctx.ns.rank(); ++i) {
        Int p = 0;
        for (std::size_t j = 0; j < ctx.ns.rank(); ++j) p += ctx.ns.gram(i, j) * v.c1[j];
        g = gcd_int(g, p);
    }
    return g;
}

// <u, v> mod n with n the fineness index of v; residue 1 marks a valid
// obstruction representative.
inline Int obstruction_residue(const MukaiVector& u, const MukaiVector& v, const NSContext& ctx) {
    Int n = fineness_index(v, ctx);
    Int p = mukai_pairing(u, v, ctx) % n;
    if (p < 0) p += n;
    return p;
}

// All splitting types (a_1 >= ... >= a_rank) of a rank-`rank` bundle on P^1
// with the given degree and h^0 = sum max(a_i + 1, 0).
inline std::vector<std::vector<Int>> p1_splitting_types(int rank, const Int& degree,
                                                        const Int& h0) {
    if (rank < 1) throw std::invalid_argument("p1_splitting_types: rank must be >= 1");
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    // every part with a_i >= 0 satisfies a_i + 1 <= h0
    Int hi = h0 > 0 ? h0 - 1 : Int(-1);
    auto rec = [&](auto&& self, int pos, Int remaining, Int h_remaining, Int bound) -> void {
        if (pos == rank) {
            if (remaining == 0 && h_remaining == 0) out.push_back(cur);
            return;
        }
        Int left(rank - pos - 1);
        // non-increasing parts: the rest sums to at most left * a, so
        // a >= ceil(remaining / (left + 1))
        Int lo = -floor_div(-remaining, left + 1);
        for (Int a = bound; a >= lo; --a) {
            Int h = a >= 0 ? a + 1 : Int(0);
            if (h > h_remaining) continue;
            cur.push_back(a);
            self(self, pos + 1, remaining - a, h_remaining - h, a);
            cur.pop_back();
        }
    };
    rec(rec, 0, degree, h0, hi);
    return out;
}

// Poincare pairing in the middle cohomology of Gr(2,4): 1 iff the second
// partition is the complement of the first in the 2x2 box.
inline Int schubert_pairing(const std::vector<int>& lam, const std::vector<int>& mu) {
    auto check = [](const std::vector<int>& p) {
        if (p.size() > 2) throw std::invalid_argument("schubert_pairing: partition outside the 2x2 box");
        int total = 0, prev = 2;
        for (int part : p) {
            if (part < 0 || part > 2 || part > prev)
                throw std::invalid_argument("schubert_pairing: partition outside the 2x2 box");
            total += part;
            prev = part;
        }
        if (total != 2) throw std::invalid_argument("schubert_pairing: partition must have degree 2");
    };
    check(lam);
    check(mu);
    auto norm = [](const std::vector<int>& p) {
        std::vector<int> q = p;
        q.resize(2, 0);
        return q;
    };
    std::vector<int> l = norm(lam), m = norm(mu);
    // complement of (l0, l1) in the 2x2 box is (2 - l1, 2 - l0)
    return (m[0] == 2 - l[1] && m[1] == 2 - l[0]) ? 1 : 0;
}

} // namespace k3lat
