#pragma once

#include <k3lat/lattice.hpp>

namespace k3lat {

inline bool is_isometry(const RatMat& m, const Lattice& source, const Lattice& target) {
    if (m.rows != target.rank() || m.cols != source.rank())
        throw std::invalid_argument("is_isometry: matrix dimensions do not match the lattices");
    return m.transpose() * to_rat(target.gram) * m == to_rat(source.gram);
}

// Form-preserving rational map between lattices; the isometry identity is
// checked at construction.
struct RationalIsometry {
    Lattice source, target;
    RatMat matrix;  // maps source coordinates to target coordinates (columns = images)

    RationalIsometry() = default;
    RationalIsometry(Lattice src, Lattice tgt, RatMat m)
        : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
        if (!is_isometry(matrix, source, target))
            throw std::invalid_argument("RationalIsometry: matrix does not preserve the forms");
    }

    static RationalIsometry identity(const Lattice& l) {
        return RationalIsometry(l, l, RatMat::identity(l.rank()));
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (v.size() != source.rank()) throw std::invalid_argument("apply: length mismatch");
        std::vector<Rat> out(target.rank(), Rat(0));
        for (std::size_t i = 0; i < target.rank(); ++i)
            for (std::size_t j = 0; j < source.rank(); ++j) out[i] += matrix(i, j) * v[j];
        return out;
    }

    RationalIsometry compose(const RationalIsometry& inner) const {
        if (inner.target != source) throw std::invalid_argument("compose: lattice mismatch");
        return RationalIsometry(inner.source, target, matrix * inner.matrix);
    }
};

// Coefficient c = 1/lambda with lambda^2 = e_norm * r_norm, so that the
// rank-1 summand v -> c * <v,e> * r extends an isometry across the spans
// of e and r. Exists iff the product of the norms is a positive square.
inline Rat rank1_extension_coefficient(const Int& e_norm, const Int& r_norm) {
    if (e_norm == 0 || r_norm == 0)
        throw std::invalid_argument("rank1_extension_coefficient: norms must be nonzero");
    Int prod = e_norm * r_norm;
    auto lambda = prod > 0 ? exact_sqrt(prod) : std::nullopt;
    if (!lambda)
        throw std::invalid_argument(
            "rank1_extension_coefficient: norm product is not a positive perfect square");
    return Rat(1, *lambda);
}

// Extend a partial isometry V' -> W' across orthogonal rank-1 complements
// Q e and Q r, sending e to (|<e,e>| / lambda) * r.
inline RationalIsometry extend_isometry(const RationalIsometry& partial,
                                        const Int& e_norm, const Int& r_norm) {
    Rat c = rank1_extension_coefficient(e_norm, r_norm);
    Lattice src = direct_sum(partial.source, rank1(e_norm));
    Lattice tgt = direct_sum(partial.target, rank1(r_norm));
    std::size_t sr = partial.source.rank(), tr = partial.target.rank();
    RatMat m(tr + 1, sr + 1);
    for (std::size_t i = 0; i < tr; ++i)
        for (std::size_t j = 0; j < sr; ++j) m(i, j) = partial.matrix(i, j);
    m(tr, sr) = c * Rat(abs_int(e_norm));
    return RationalIsometry(std::move(src), std::move(tgt), std::move(m));
}

inline RationalIsometry block_sum(const RationalIsometry& a, const RationalIsometry& b) {
    Lattice src = direct_sum(a.source, b.source);
    Lattice tgt = direct_sum(a.target, b.target);
    std::size_t ar = a.target.rank(), ac = a.source.rank();
    RatMat m(ar + b.target.rank(), ac + b.source.rank());
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j) m(i, j) = a.matrix(i, j);
    for (std::size_t i = 0; i < b.target.rank(); ++i)
        for (std::size_t j = 0; j < b.source.rank(); ++j) m(ar + i, ac + j) = b.matrix(i, j);
    return RationalIsometry(std::move(src), std::move(tgt), std::move(m));
}

// omega = x + i*y with rational real and imaginary parts.
struct PeriodPoint {
    Lattice lattice;
    std::vector<Rat> re, im;
};

// <omega, omega> = 0 and <omega, conj(omega)> > 0, written out over Q.
inline bool is_period_point(const PeriodPoint& p) {
    if (p.re.size() != p.lattice.rank() || p.im.size() != p.lattice.rank())
        throw std::invalid_argument("is_period_point: vector length mismatch");
    Rat xx = p.lattice.pair(p.re, p.re);
    Rat yy = p.lattice.pair(p.im, p.im);
    Rat xy = p.lattice.pair(p.re, p.im);
    return xx == yy && xy == 0 && xx + yy > 0;
}

inline PeriodPoint transport_period(const RationalIsometry& iso, const PeriodPoint& p) {
    if (!is_period_point(p)) throw std::invalid_argument("transport_period: invalid period point");
    if (iso.source != p.lattice) throw std::invalid_argument("transport_period: lattice mismatch");
    return PeriodPoint{iso.target, iso.apply(p.re), iso.apply(p.im)};
}

// Lattice-level form of the kernel Hodge-isometry condition: the isometry
// must map kerA into kerB integrally (the induced forms then match because
// the ambient map is an isometry, but the Grams are compared anyway).
inline bool caldararu_kernel_check(const Embedding& kerA, const Embedding& kerB,
                                   const RationalIsometry& iso) {
    if (kerA.ambient != iso.source || kerB.ambient != iso.target)
        throw std::invalid_argument("caldararu_kernel_check: embeddings do not match the isometry");
    std::size_t k = kerA.sub_rank();
    RatMat coords(k, kerB.sub_rank());
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rat> v;
        for (const auto& x : kerA.basis.row(i)) v.push_back(Rat(x));
        std::vector<Rat> img = iso.apply(v);
        auto x = solve_left(kerB.basis, img);
        if (!x) throw std::invalid_argument("caldararu_kernel_check: image outside the span of kerB");
        for (std::size_t j = 0; j < x->size(); ++j) {
            if (!is_integral((*x)[j])) return false;
            coords(i, j) = (*x)[j];
        }
    }
    IntMat c = to_int(coords);
    return c * kerB.induced_gram() * c.transpose() == kerA.induced_gram();
}

} // namespace k3lat
