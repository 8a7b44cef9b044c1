#pragma once

#include <k3lat/matrix.hpp>

#include <string>
#include <utility>
#include <vector>

namespace k3lat {

// Finitely generated free abelian group with an integral bilinear form.
struct Lattice {
    IntMat gram;

    Lattice() = default;
    explicit Lattice(IntMat g) : gram(std::move(g)) {
        if (!gram.is_symmetric()) throw std::invalid_argument("Lattice: Gram matrix not symmetric");
    }

    std::size_t rank() const { return gram.rows; }

    bool is_even() const {
        for (std::size_t i = 0; i < rank(); ++i)
            if (gram(i, i) % 2 != 0) return false;
        return true;
    }

    Int pair(const std::vector<Int>& v, const std::vector<Int>& w) const {
        if (v.size() != rank() || w.size() != rank())
            throw std::invalid_argument("Lattice::pair: vector length mismatch");
        Int s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) s += v[i] * gram(i, j) * w[j];
        return s;
    }

    Rat pair(const std::vector<Rat>& v, const std::vector<Rat>& w) const {
        if (v.size() != rank() || w.size() != rank())
            throw std::invalid_argument("Lattice::pair: vector length mismatch");
        Rat s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) s += v[i] * Rat(gram(i, j)) * w[j];
        return s;
    }

    bool operator==(const Lattice&) const = default;
};

// Sublattice given by basis rows in ambient coordinates.
struct Embedding {
    Lattice ambient;
    IntMat basis;  // each row = one sublattice basis vector

    Embedding() = default;
    Embedding(Lattice amb, IntMat b) : ambient(std::move(amb)), basis(std::move(b)) {
        if (basis.cols != ambient.rank())
            throw std::invalid_argument("Embedding: basis width must equal ambient rank");
        if (rank(basis) != basis.rows)
            throw std::invalid_argument("Embedding: basis rows not linearly independent");
    }

    std::size_t sub_rank() const { return basis.rows; }

    // Gram matrix of the induced form on the sublattice
    IntMat induced_gram() const { return basis * ambient.gram * basis.transpose(); }

    Lattice as_lattice() const { return Lattice(induced_gram()); }

    // canonical form: sublattices are equal iff their basis HNFs agree
    IntMat hnf_basis() const { return hnf(basis).h; }

    bool same_sublattice(const Embedding& o) const {
        return ambient == o.ambient && hnf_basis() == o.hnf_basis();
    }
};

// Finite-order character on a lattice: an element of T^v (x) Q/Z, the value
// on basis vector i being values[i]/modulus.
struct Character {
    Lattice domain;
    Int modulus = 1;           // n >= 1
    std::vector<Int> values;   // residues mod n, one per basis vector

    Character() = default;
    Character(Lattice dom, Int n, std::vector<Int> vals)
        : domain(std::move(dom)), modulus(std::move(n)), values(std::move(vals)) {
        if (modulus < 1) throw std::invalid_argument("Character: order must be >= 1");
        if (values.size() != domain.rank())
            throw std::invalid_argument("Character: one value per basis vector required");
        for (auto& v : values) {
            v %= modulus;
            if (v < 0) v += modulus;
        }
    }

    Int eval(const std::vector<Int>& v) const {
        if (v.size() != values.size()) throw std::invalid_argument("Character::eval: length mismatch");
        Int s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * values[i];
        s %= modulus;
        if (s < 0) s += modulus;
        return s;
    }

    // exact order of the character as an element of T^v (x) Q/Z
    Int order() const {
        Int g = modulus;
        for (const auto& v : values) g = gcd_int(g, v);
        return modulus / g;
    }
};

// ---- standard constructors -------------------------------------------------

// Negated E8 Cartan matrix, nodes ordered as the chain 1-2-3-4-5-6-7 with
// node 8 attached to node 5.
inline Lattice e8_neg() {
    IntMat g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -2;
    // Dynkin diagram edges: chain 0-1-2-3-4-5-6, node 7 attached to node 4
    const int edges[7][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    for (const auto& e : edges) {
        g(e[0], e[1]) = 1;
        g(e[1], e[0]) = 1;
    }
    return Lattice(std::move(g));
}

inline Lattice hyperbolic_u() {
    return Lattice(IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}});
}

inline Lattice rank1(const Int& d) {
    if (d == 0) throw std::invalid_argument("rank1: d must be nonzero");
    IntMat g(1, 1);
    g(0, 0) = d;
    return Lattice(std::move(g));
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    IntMat g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
    return Lattice(std::move(g));
}

// The K3 lattice -E8 + -E8 + U + U + U, rank 22.
inline Lattice k3_lattice() {
    Lattice l = direct_sum(e8_neg(), e8_neg());
    for (int i = 0; i < 3; ++i) l = direct_sum(l, hyperbolic_u());
    return l;
}

inline Lattice standard(const std::string& name) {
    if (name == "E8neg") return e8_neg();
    if (name == "U") return hyperbolic_u();
    if (name == "K3") return k3_lattice();
    if (name.rfind("rank1:", 0) == 0) return rank1(Int(name.substr(6)));
    throw std::invalid_argument("standard: unknown lattice name '" + name + "'");
}

// ---- lattice operations ----------------------------------------------------

inline Int discriminant(const Lattice& l) { return det(l.gram); }

// Nontrivial invariant factors of the Gram matrix (the group T^v / T).
inline std::vector<Int> discriminant_group(const Lattice& l) {
    if (det(l.gram) == 0) throw std::invalid_argument("discriminant_group: singular Gram matrix");
    IntMat s = snf(l.gram).s;
    std::vector<Int> factors;
    for (std::size_t i = 0; i < s.rows; ++i)
        if (s(i, i) > 1) factors.push_back(s(i, i));
    return factors;
}

inline std::pair<std::size_t, std::size_t> signature(const Lattice& l) {
    auto res = congruence_diagonalize(to_rat(l.gram));
    return {res.pos, res.neg};
}

// Primitive basis of {v in ambient : <v, w> = 0 for all w in the image}.
inline Embedding orthogonal_complement(const Embedding& e) {
    IntMat m = e.ambient.gram * e.basis.transpose();  // n x k
    IntMat kbasis = left_kernel(m);
    return Embedding(e.ambient, std::move(kbasis));
}

// Smallest primitive sublattice containing the image, and the inclusion index.
inline std::pair<Embedding, Int> saturation(const Embedding& e) {
    if (e.sub_rank() == 0) return {e, Int(1)};
    auto res = snf(e.basis);
    std::size_t k = e.sub_rank();
    Int index = 1;
    for (std::size_t i = 0; i < k; ++i) index *= res.s(i, i);
    // rows of V^-1 scaled by the elementary divisors span the image;
    // the unscaled rows span the saturation
    IntMat vinv = to_int(inverse(to_rat(res.v)));
    IntMat sat(k, e.ambient.rank());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < e.ambient.rank(); ++j) sat(i, j) = vinv(i, j);
    return {Embedding(e.ambient, std::move(sat)), index};
}

// Index of a full-rank sublattice: |det(basis matrix)|.
inline Int sublattice_index(const Embedding& e) {
    if (e.sub_rank() != e.ambient.rank())
        throw std::invalid_argument("sublattice_index: sublattice not of full rank");
    return abs_int(det(e.basis));
}

// Index of a full-rank inclusion recovered from discriminants:
// index^2 = |disc_sub| / |disc_super|.
inline Int index_from_discriminants(const Int& disc_sub, const Int& disc_super) {
    Int a = abs_int(disc_sub), b = abs_int(disc_super);
    if (b == 0 || a % b != 0)
        throw std::invalid_argument("index_from_discriminants: discriminant quotient not integral");
    auto root = exact_sqrt(a / b);
    if (!root)
        throw std::invalid_argument("index_from_discriminants: quotient is not a perfect square");
    return *root;
}

// Kernel sublattice {v : c(v) = 0 mod n}, primitive of full rank in the domain.
inline Embedding character_kernel(const Character& c) {
    std::size_t r = c.domain.rank();
    // left kernel of the column (values..., n) projects bijectively onto the kernel
    IntMat col(r + 1, 1);
    for (std::size_t i = 0; i < r; ++i) col(i, 0) = c.values[i];
    col(r, 0) = c.modulus;
    IntMat k = left_kernel(col);
    // drop rows supported only on the auxiliary coordinate
    IntMat basis(0, r);
    std::vector<Int> rows;
    for (std::size_t i = 0; i < k.rows; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < r; ++j)
            if (k(i, j) != 0) nonzero = true;
        if (nonzero)
            for (std::size_t j = 0; j < r; ++j) rows.push_back(k(i, j));
    }
    basis.rows = rows.size() / r;
    basis.a = std::move(rows);
    basis = hnf(basis).h;
    // trim zero rows of the HNF
    std::size_t nz = 0;
    for (std::size_t i = 0; i < basis.rows; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (basis(i, j) != 0) { nz = i + 1; break; }
    basis.a.resize(nz * r);
    basis.rows = nz;
    return Embedding(c.domain, std::move(basis));
}

// Restriction of a character to a sublattice, reduced to its exact order.
inline Character restrict_character(const Character& c, const Embedding& e) {
    if (e.ambient != c.domain)
        throw std::invalid_argument("restrict_character: embedding not inside the character domain");
    std::vector<Int> vals;
    for (std::size_t i = 0; i < e.sub_rank(); ++i) vals.push_back(c.eval(e.basis.row(i)));
    Int g = c.modulus;
    for (const auto& v : vals) g = gcd_int(g, v);
    Int n = c.modulus / g;
    for (auto& v : vals) v /= g;
    return Character(e.as_lattice(), n, std::move(vals));
}

// Intersection of two sublattices of the same ambient.
inline Embedding intersect(const Embedding& e1, const Embedding& e2) {
    if (e1.ambient != e2.ambient) throw std::invalid_argument("intersect: ambient lattices differ");
    std::size_t k1 = e1.sub_rank(), k2 = e2.sub_rank(), n = e1.ambient.rank();
    if (k1 == 0 || k2 == 0) return Embedding(e1.ambient, IntMat(0, n));
    IntMat stacked(k1 + k2, n);
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(i, j) = e1.basis(i, j);
    for (std::size_t i = 0; i < k2; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(k1 + i, j) = -e2.basis(i, j);
    IntMat k = left_kernel(stacked);  // {(x,y) : x B1 - y B2 = 0}
    IntMat basis(k.rows, n);
    for (std::size_t r = 0; r < k.rows; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < k1; ++i) s += k(r, i) * e1.basis(i, j);
            basis(r, j) = s;
        }
    basis = hnf(basis).h;
    std::size_t nz = 0;
    for (std::size_t i = 0; i < basis.rows; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (basis(i, j) != 0) { nz = i + 1; break; }
    basis.a.resize(nz * n);
    basis.rows = nz;
    return Embedding(e1.ambient, std::move(basis));
}

// Number of elements of order dividing n in T^v (x) Q/Z: n^rank.
inline Int brauer_element_count(const Lattice& t, const Int& n) {
    if (n < 1) throw std::invalid_argument("brauer_element_count: n must be >= 1");
    Int count = 1;
    for (std::size_t i = 0; i < t.rank(); ++i) count *= n;
    return count;
}

// Image of an embedding-into-an-embedding back in the outer ambient:
// rows of `inner.basis` are coordinates w.r.t. `outer.basis`.
inline Embedding compose(const Embedding& outer, const Embedding& inner) {
    if (inner.ambient.rank() != outer.sub_rank())
        throw std::invalid_argument("compose: rank mismatch");
    return Embedding(outer.ambient, inner.basis * outer.basis);
}

} // namespace k3lat
