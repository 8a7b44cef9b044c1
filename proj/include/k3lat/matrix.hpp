#pragma once

#include <k3lat/exact.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace k3lat {

// Dense row-major matrix over an exact scalar (Int or Rat).
template <typename T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows = init.size();
        cols = rows ? init.begin()->size() : 0;
        a.reserve(rows * cols);
        for (const auto& row : init) {
            if (row.size() != cols) throw std::invalid_argument("Mat: ragged initializer");
            for (const auto& v : row) a.push_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool operator==(const Mat&) const = default;

    bool is_square() const { return rows == cols; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = i + 1; j < cols; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols != o.rows) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat p(rows, o.cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < cols; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols; ++j) p(i, j) += x * o(k, j);
            }
        return p;
    }

    Mat operator-(const Mat& o) const {
        if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat: dimension mismatch");
        Mat d(rows, cols);
        for (std::size_t i = 0; i < a.size(); ++i) d.a[i] = a[i] - o.a[i];
        return d;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i -= q * row j
    void row_axpy(std::size_t i, std::size_t j, const T& q) {
        for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) -= q * (*this)(j, c);
    }
    void col_axpy(std::size_t i, std::size_t j, const T& q) {
        for (std::size_t r = 0; r < rows; ++r) (*this)(r, i) -= q * (*this)(r, j);
    }
    void scale_row(std::size_t i, const T& s) {
        for (std::size_t c = 0; c < cols; ++c) (*this)(i, c) *= s;
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
    return r;
}

inline IntMat to_int(const RatMat& m) {
    IntMat r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (!is_integral(m.a[i])) throw std::invalid_argument("to_int: non-integral entry");
        r.a[i] = num(m.a[i]);
    }
    return r;
}

struct HnfResult {
    IntMat h;  // row Hermite normal form
    IntMat u;  // unimodular, u * a = h
};

// Row-style HNF with positive pivots; entries above each pivot reduced into [0, pivot).
inline HnfResult hnf(const IntMat& A) {
    IntMat H = A;
    IntMat U = IntMat::identity(A.rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols && r < H.rows; ++c) {
        // Euclidean elimination in column c, rows r..end
        for (;;) {
            std::size_t piv = H.rows;
            for (std::size_t i = r; i < H.rows; ++i) {
                if (H(i, c) == 0) continue;
                if (piv == H.rows || abs_int(H(i, c)) < abs_int(H(piv, c))) piv = i;
            }
            if (piv == H.rows) break;
            if (piv != r) { H.swap_rows(r, piv); U.swap_rows(r, piv); }
            bool done = true;
            for (std::size_t i = r + 1; i < H.rows; ++i) {
                if (H(i, c) == 0) continue;
                Int q = H(i, c) / H(r, c);
                H.row_axpy(i, r, q);
                U.row_axpy(i, r, q);
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H(r, c) == 0) continue;
        if (H(r, c) < 0) { H.scale_row(r, Int(-1)); U.scale_row(r, Int(-1)); }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(H(i, c), H(r, c));
            if (q != 0) { H.row_axpy(i, r, q); U.row_axpy(i, r, q); }
        }
        ++r;
    }
    return {std::move(H), std::move(U)};
}

struct SnfResult {
    IntMat s;  // diagonal, d1 | d2 | ..., di >= 0
    IntMat u;  // unimodular row transform
    IntMat v;  // unimodular column transform, u * a * v = s
};

inline SnfResult snf(const IntMat& A) {
    IntMat S = A;
    IntMat U = IntMat::identity(A.rows);
    IntMat V = IntMat::identity(A.cols);
    std::size_t n = std::min(S.rows, S.cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block to the pivot slot
            std::size_t bi = S.rows, bj = S.cols;
            for (std::size_t i = t; i < S.rows; ++i)
                for (std::size_t j = t; j < S.cols; ++j) {
                    if (S(i, j) == 0) continue;
                    if (bi == S.rows || abs_int(S(i, j)) < abs_int(S(bi, bj))) { bi = i; bj = j; }
                }
            if (bi == S.rows) { t = n; break; }  // trailing block zero
            if (bi != t) { S.swap_rows(t, bi); U.swap_rows(t, bi); }
            if (bj != t) { S.swap_cols(t, bj); V.swap_cols(t, bj); }
            bool again = false;
            for (std::size_t i = t + 1; i < S.rows; ++i) {
                if (S(i, t) == 0) continue;
                Int q = S(i, t) / S(t, t);
                S.row_axpy(i, t, q);
                U.row_axpy(i, t, q);
                if (S(i, t) != 0) again = true;
            }
            for (std::size_t j = t + 1; j < S.cols; ++j) {
                if (S(t, j) == 0) continue;
                Int q = S(t, j) / S(t, t);
                S.col_axpy(j, t, q);
                V.col_axpy(j, t, q);
                if (S(t, j) != 0) again = true;
            }
            if (again) continue;
            // pivot row/column clean; enforce divisibility into the rest
            bool fixed = true;
            for (std::size_t i = t + 1; i < S.rows && fixed; ++i)
                for (std::size_t j = t + 1; j < S.cols && fixed; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.row_axpy(t, i, Int(-1));  // row t += row i
                        U.row_axpy(t, i, Int(-1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t >= n) break;
    }
    for (std::size_t t = 0; t < n; ++t)
        if (S(t, t) < 0) { S.scale_row(t, Int(-1)); U.scale_row(t, Int(-1)); }
    return {std::move(S), std::move(U), std::move(V)};
}

// Fraction-free (Bareiss) determinant.
inline Int det(const IntMat& A) {
    if (!A.is_square()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    IntMat m = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

inline Rat det(const RatMat& A) {
    if (!A.is_square()) throw std::invalid_argument("det: matrix not square");
    RatMat m = A;
    Rat d = 1;
    for (std::size_t k = 0; k < m.rows; ++k) {
        std::size_t p = k;
        while (p < m.rows && m(p, k) == 0) ++p;
        if (p == m.rows) return 0;
        if (p != k) { m.swap_rows(k, p); d = -d; }
        d *= m(k, k);
        for (std::size_t i = k + 1; i < m.rows; ++i) {
            if (m(i, k) == 0) continue;
            Rat f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < m.cols; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return d;
}

// Inverse of a nonsingular rational matrix (Gauss-Jordan).
inline RatMat inverse(const RatMat& A) {
    if (!A.is_square()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = A.rows;
    RatMat m = A, inv = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) throw std::invalid_argument("inverse: singular matrix");
        if (p != k) { m.swap_rows(k, p); inv.swap_rows(k, p); }
        Rat piv = m(k, k);
        for (std::size_t j = 0; j < n; ++j) { m(k, j) /= piv; inv(k, j) /= piv; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat f = m(i, k);
            for (std::size_t j = 0; j < n; ++j) { m(i, j) -= f * m(k, j); inv(i, j) -= f * inv(k, j); }
        }
    }
    return inv;
}

inline std::size_t rank(const IntMat& A) {
    IntMat h = hnf(A).h;
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows; ++i)
        for (std::size_t j = 0; j < h.cols; ++j)
            if (h(i, j) != 0) { ++r; break; }
    return r;
}

// Basis of {v : v * M = 0}, primitive (rows of the HNF transform at zero rows).
inline IntMat left_kernel(const IntMat& M) {
    auto [h, u] = hnf(M);
    std::vector<std::size_t> zero_rows;
    for (std::size_t i = 0; i < h.rows; ++i) {
        bool z = true;
        for (std::size_t j = 0; j < h.cols; ++j)
            if (h(i, j) != 0) { z = false; break; }
        if (z) zero_rows.push_back(i);
    }
    IntMat k(zero_rows.size(), M.rows);
    for (std::size_t r = 0; r < zero_rows.size(); ++r)
        for (std::size_t c = 0; c < M.rows; ++c) k(r, c) = u(zero_rows[r], c);
    return k;
}

inline IntMat right_kernel(const IntMat& M) { return left_kernel(M.transpose()); }

// Solve x * B = v over Q (B with independent rows); nullopt if v outside the row span.
inline std::optional<std::vector<Rat>> solve_left(const IntMat& B, const std::vector<Rat>& v) {
    if (v.size() != B.cols) throw std::invalid_argument("solve_left: length mismatch");
    // Gaussian elimination on [B^T | v^T]
    std::size_t n = B.cols, k = B.rows;
    RatMat m(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = Rat(B(j, i));
        m(i, k) = v[i];
    }
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) continue;
        if (p != r) m.swap_rows(r, p);
        Rat piv = m(r, c);
        for (std::size_t j = 0; j <= k; ++j) m(r, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j <= k; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    // consistency: rows past r must have zero rhs
    for (std::size_t i = r; i < n; ++i)
        if (m(i, k) != 0) return std::nullopt;
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m(i, k);
    return x;
}

struct CongruenceResult {
    RatMat d;  // diagonal
    RatMat p;  // p^T * g * p = d
    std::size_t pos = 0, neg = 0;
};

// Exact symmetric congruence diagonalization over Q with signature count.
inline CongruenceResult congruence_diagonalize(const RatMat& G) {
    if (!G.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: matrix not symmetric");
    std::size_t n = G.rows;
    RatMat D = G, P = RatMat::identity(n);
    // column operation E applied as D -> E^T D E, P -> P E
    auto add_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
        for (std::size_t r = 0; r < n; ++r) D(r, dst) += f * D(r, src);
        for (std::size_t c = 0; c < n; ++c) D(dst, c) += f * D(src, c);
        for (std::size_t r = 0; r < n; ++r) P(r, dst) += f * P(r, src);
    };
    auto swap_basis = [&](std::size_t i, std::size_t j) {
        D.swap_cols(i, j);
        D.swap_rows(i, j);
        P.swap_cols(i, j);
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (D(k, k) == 0) {
            std::size_t j = k + 1;
            for (; j < n; ++j)
                if (D(j, j) != 0) { swap_basis(k, j); break; }
            if (D(k, k) == 0) {
                // all trailing diagonals vanish; split a hyperbolic pair if any off-diagonal remains
                std::size_t m = k + 1;
                for (; m < n; ++m)
                    if (D(k, m) != 0) { add_col(k, m, Rat(1)); break; }
                if (D(k, k) == 0) continue;  // row is null, leave the zero
            }
        }
        for (std::size_t j = k + 1; j < n; ++j)
            if (D(k, j) != 0) add_col(j, k, -D(k, j) / D(k, k));
    }
    CongruenceResult res{std::move(D), std::move(P), 0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        if (res.d(k, k) > 0) ++res.pos;
        else if (res.d(k, k) < 0) ++res.neg;
    }
    return res;
}

} // namespace k3lat
