#pragma once

#include <k3lat/hodge.hpp>
#include <k3lat/lattice.hpp>

#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace k3lat {

// A K3 family from the catalog: NS lattice, polarization, projective data,
// and the genus-one fiber class when the family is fibred.
struct FamilySpec {
    std::string name;
    Lattice ns;
    std::vector<Int> polarization;
    Int degree;            // self-intersection of the polarization
    Int ambient_dim;       // n of P^n
    std::optional<std::vector<Int>> fiber;
};

inline FamilySpec builtin(const std::string& name) {
    auto mk = [&](Lattice ns, std::vector<Int> pol, Int ambient,
                  std::optional<std::vector<Int>> fib) {
        Int deg = ns.pair(pol, pol);
        return FamilySpec{name, std::move(ns), std::move(pol), deg, ambient, std::move(fib)};
    };
    if (name == "M")  // double cover of P^2 branched along a sextic
        return mk(rank1(2), {Int(1)}, 2, std::nullopt);
    if (name == "M_alpha")  // resolved nodal sextic double cover, basis (D, e)
        return mk(Lattice(IntMat{{Int(2), Int(0)}, {Int(0), Int(-2)}}),
                  {Int(1), Int(0)}, 2, std::vector<Int>{Int(1), Int(-1)});
    if (name == "M_beta")  // (2,3) class in P^1 x P^2, basis (D, F), H = D + F
        return mk(Lattice(IntMat{{Int(2), Int(3)}, {Int(3), Int(0)}}),
                  {Int(1), Int(1)}, 5, std::vector<Int>{Int(0), Int(1)});
    if (name == "Y")  // degree 8 surface in P^5
        return mk(rank1(8), {Int(1)}, 5, std::nullopt);
    if (name == "J0")  // quartic in P^3 containing a line, basis (H, L)
        return mk(Lattice(IntMat{{Int(4), Int(1)}, {Int(1), Int(-2)}}),
                  {Int(1), Int(0)}, 3, std::vector<Int>{Int(1), Int(-1)});
    if (name == "J3")  // double cover of P^1 x P^1 branched along a (4,4) curve
        return mk(Lattice(IntMat{{Int(0), Int(2)}, {Int(2), Int(0)}}),
                  {Int(1), Int(1)}, 3, std::vector<Int>{Int(1), Int(0)});
    throw std::invalid_argument("builtin: unknown family '" + name + "'");
}

enum class Series { X3k, X3k1, X3k2, Y4m5 };

inline Series series_from_string(const std::string& s) {
    if (s == "X3k") return Series::X3k;
    if (s == "X3k1") return Series::X3k1;
    if (s == "X3k2") return Series::X3k2;
    if (s == "Y4m5") return Series::Y4m5;
    throw std::invalid_argument("series_from_string: unknown series '" + s + "'");
}

inline std::string to_string(Series s) {
    switch (s) {
        case Series::X3k: return "X3k";
        case Series::X3k1: return "X3k1";
        case Series::X3k2: return "X3k2";
        case Series::Y4m5: return "Y4m5";
    }
    throw std::logic_error("to_string: bad series");
}

inline Int series_degree(Series s, const Int& param) {
    if (param < 1) throw std::invalid_argument("series_degree: parameter must be >= 1");
    switch (s) {
        case Series::X3k: return 6 * param - 2;
        case Series::X3k1: return 6 * param;
        case Series::X3k2: return 6 * param + 2;
        case Series::Y4m5: return 8 * param + 8;
    }
    throw std::logic_error("series_degree: bad series");
}

inline Int series_ambient_dim(Series s, const Int& param) {
    switch (s) {
        case Series::X3k: return 3 * param;
        case Series::X3k1: return 3 * param + 1;
        case Series::X3k2: return 3 * param + 2;
        case Series::Y4m5: return 4 * param + 5;
    }
    throw std::logic_error("series_ambient_dim: bad series");
}

// l = 3 * squarefree_part(3k - 1) * d^2 makes (3k-1)(3l) a perfect square.
inline Int solve_partner(const Int& k, const Int& d) {
    if (k < 1 || d < 1) throw std::invalid_argument("solve_partner: k and d must be >= 1");
    return 3 * squarefree_part(3 * k - 1) * d * d;
}

// lambda with lambda^2 = d1 * d2, when the product is a perfect square.
inline std::optional<Int> correspondence_lambda(const Int& d1, const Int& d2) {
    if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("correspondence_lambda: degrees must be positive");
    return exact_sqrt(d1 * d2);
}

// No correspondence between generic X_{3k} and X_{3m+2}: the degree product
// 4 (3k-1)(3m+1) has square part iff (3k-1)(3m+1) is a square, which is
// impossible mod 3. The residue argument is re-verified against the direct
// square test on every call.
inline bool x3k_x3m2_obstruction(const Int& k, const Int& m) {
    if (k < 1 || m < 1) throw std::invalid_argument("x3k_x3m2_obstruction: parameters must be >= 1");
    Int residue = ((3 * k - 1) * (3 * m + 1)) % 3;
    bool by_residue = residue == 2;  // 2 is a quadratic non-residue pattern mod 3
    bool by_square_test =
        !correspondence_lambda(series_degree(Series::X3k, k), series_degree(Series::X3k2, m))
             .has_value();
    if (by_residue != by_square_test)
        throw std::logic_error("x3k_x3m2_obstruction: residue argument disagrees with the square test");
    return by_square_test;
}

struct CorrespondencePair {
    Int k, l, lambda;
    bool operator==(const CorrespondencePair&) const = default;
};

// All parameter pairs within bounds whose series degrees have a square
// product, sorted lexicographically. Work shards over k; threads capped by
// max_threads (0 or 1 = sequential).
inline std::vector<CorrespondencePair> enumerate_pairs(Series s1, Series s2, const Int& k_max,
                                                       const Int& param_max,
                                                       unsigned max_threads = 1) {
    if (k_max < 1 || param_max < 1)
        throw std::invalid_argument("enumerate_pairs: bounds must be >= 1");
    long kmax = static_cast<long>(k_max), pmax = static_cast<long>(param_max);
    auto scan_k = [&](long k, std::vector<CorrespondencePair>& out) {
        Int d1 = series_degree(s1, k);
        for (long l = 1; l <= pmax; ++l) {
            auto lambda = correspondence_lambda(d1, series_degree(s2, l));
            if (lambda) out.push_back({Int(k), Int(l), *lambda});
        }
    };
    unsigned nt = max_threads > 1 ? std::min<unsigned>(max_threads, static_cast<unsigned>(kmax)) : 1;
    std::vector<std::vector<CorrespondencePair>> per_k(kmax);
    if (nt <= 1) {
        for (long k = 1; k <= kmax; ++k) scan_k(k, per_k[k - 1]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < nt; ++w)
            workers.emplace_back([&, w] {
                for (long k = 1 + w; k <= kmax; k += nt) scan_k(k, per_k[k - 1]);
            });
        for (auto& t : workers) t.join();
    }
    std::vector<CorrespondencePair> out;
    for (auto& chunk : per_k) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

// ---- index-embedding reproduction ------------------------------------------

struct IndexChainResult {
    std::string name;
    Int expected_index;
    Int index_by_discriminants;
    Int index_by_basis;
    bool pass = false;
};

struct IndexEmbeddingReport {
    std::vector<IndexChainResult> chains;
    std::vector<Int> complement_vector;  // N_Y-perp generator in the (D, F) basis
    Int r_norm = 0;                      // self-intersection of r = 3H - 8F
    bool pass = false;
};

namespace detail {

// coordinates of each `sub` basis row w.r.t. the rows of `super` (both in
// ambient coordinates); throws if a row falls outside or is non-integral
inline IntMat coords_in(const IntMat& super, const IntMat& sub) {
    IntMat x(sub.rows, super.rows);
    for (std::size_t i = 0; i < sub.rows; ++i) {
        std::vector<Rat> v;
        for (const auto& e : sub.row(i)) v.push_back(Rat(e));
        auto sol = solve_left(super, v);
        if (!sol) throw std::invalid_argument("coords_in: vector outside the span");
        for (std::size_t j = 0; j < super.rows; ++j) {
            if (!is_integral((*sol)[j])) throw std::invalid_argument("coords_in: non-integral coordinate");
            x(i, j) = num((*sol)[j]);
        }
    }
    return x;
}

inline IntMat stack(const IntMat& a, const IntMat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("stack: width mismatch");
    IntMat m(a.rows + b.rows, a.cols);
    std::copy(a.a.begin(), a.a.end(), m.a.begin());
    std::copy(b.a.begin(), b.a.end(), m.a.begin() + a.a.size());
    return m;
}

} // namespace detail

// Rebuild the two transcendental-lattice inclusion chains inside the K3
// lattice and verify their indices (2 and 9) by discriminant quotient and
// by an explicit full-rank coordinate determinant.
inline IndexEmbeddingReport reproduce_index_embeddings() {
    IndexEmbeddingReport rep;
    Lattice L = k3_lattice();
    std::size_t n = L.rank();  // 22; U blocks at columns 16..21
    auto vec = [&](std::initializer_list<std::pair<int, Int>> entries) {
        std::vector<Int> v(n, Int(0));
        for (auto& [i, val] : entries) v[i] = val;
        return v;
    };
    auto row_mat = [&](const std::vector<std::vector<Int>>& rows) {
        IntMat m(rows.size(), n);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
        return m;
    };
    auto run_chain = [&](const std::string& name, const IntMat& ns_small, const IntMat& ns_big,
                         const std::vector<Int>& extra, Int expected) {
        // T_big = complement of the smaller NS, T_small = complement of the
        // bigger NS; sub = T_small + Z extra sits inside T_big with the
        // expected index
        Embedding t_big = orthogonal_complement(Embedding(L, ns_small));
        Embedding t_small = orthogonal_complement(Embedding(L, ns_big));
        IntMat sub = detail::stack(t_small.basis, row_mat({extra}));
        Int disc_sub = abs_int(det(Lattice(sub * L.gram * sub.transpose()).gram));
        Int disc_big = abs_int(det(t_big.induced_gram()));
        IndexChainResult r;
        r.name = name;
        r.expected_index = expected;
        r.index_by_discriminants = index_from_discriminants(disc_sub, disc_big);
        r.index_by_basis = abs_int(det(detail::coords_in(t_big.basis, sub)));
        r.pass = r.index_by_discriminants == expected && r.index_by_basis == expected;
        rep.chains.push_back(r);
    };

    // M chain: D = u1 + v1, e = u2 - v2
    auto D_m = vec({{16, Int(1)}, {17, Int(1)}});
    auto e_m = vec({{18, Int(1)}, {19, Int(-1)}});
    run_chain("M_alpha->M", row_mat({D_m}), row_mat({D_m, e_m}), e_m, 2);

    // M_beta chain: F = u1, D = 3 v1 + u2 + v2, H = D + F, r = 3H - 8F = 3D - 5F
    auto F_b = vec({{16, Int(1)}});
    auto D_b = vec({{17, Int(3)}, {18, Int(1)}, {19, Int(1)}});
    std::vector<Int> H_b(n), r_b(n);
    for (std::size_t i = 0; i < n; ++i) {
        H_b[i] = D_b[i] + F_b[i];
        r_b[i] = 3 * D_b[i] - 5 * F_b[i];
    }
    run_chain("M_beta->Y", row_mat({H_b}), row_mat({D_b, F_b}), r_b, 9);
    rep.r_norm = L.pair(r_b, r_b);

    // degenerate chain: T_M into itself
    {
        Embedding t_m = orthogonal_complement(Embedding(L, row_mat({D_m})));
        IndexChainResult r;
        r.name = "M->M";
        r.expected_index = 1;
        r.index_by_discriminants = index_from_discriminants(
            abs_int(det(t_m.induced_gram())), abs_int(det(t_m.induced_gram())));
        r.index_by_basis = abs_int(det(detail::coords_in(t_m.basis, t_m.basis)));
        r.pass = r.index_by_discriminants == 1 && r.index_by_basis == 1;
        rep.chains.push_back(r);
    }

    // complement vector in the (D, F) basis of Pic(M_beta)
    FamilySpec mb = builtin("M_beta");
    Embedding span_h(mb.ns, IntMat{{Int(1), Int(1)}});
    Embedding comp = orthogonal_complement(span_h);
    if (comp.sub_rank() == 1) {
        rep.complement_vector = comp.basis.row(0);
        if (rep.complement_vector[0] < 0)
            for (auto& x : rep.complement_vector) x = -x;
    }

    rep.pass = rep.r_norm == -72 && rep.complement_vector == std::vector<Int>{Int(3), Int(-5)};
    for (const auto& c : rep.chains) rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace k3lat
