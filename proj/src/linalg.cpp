#include "skewcyclic/linalg.hpp"

#include <algorithm>

namespace skewcyclic {

PolyMatrix PolyMatrix::identity(FieldSpecPtr F, size_t n) {
    PolyMatrix m(std::move(F), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(F_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

PolyMatrix PolyMatrix::first_rows(size_t k) const {
    PolyMatrix t(F_, k, cols_);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(i, j) = at(i, j);
    return t;
}

bool PolyMatrix::is_zero() const {
    for (const Poly& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

static void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shapes differ");
}

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_shape(a, b);
    PolyMatrix r(a.field_ptr(), a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = poly_add(a.field(), a.at(i, j), b.at(i, j));
    return r;
}

PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_shape(a, b);
    PolyMatrix r(a.field_ptr(), a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = poly_sub(a.field(), a.at(i, j), b.at(i, j));
    return r;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions differ");
    PolyMatrix r(a.field_ptr(), a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) =
                    poly_add(a.field(), r.at(i, j), poly_mul(a.field(), a.at(i, k), b.at(k, j)));
            }
        }
    return r;
}

PolyMatrix mat_stack(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionMismatch("column counts differ");
    PolyMatrix r(top.field_ptr(), top.rows() + bottom.rows(), top.cols());
    for (size_t i = 0; i < top.rows(); ++i)
        for (size_t j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j);
    for (size_t i = 0; i < bottom.rows(); ++i)
        for (size_t j = 0; j < bottom.cols(); ++j) r.at(top.rows() + i, j) = bottom.at(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// Hermite form
// ---------------------------------------------------------------------------

PolyMatrix hermite_form(const PolyMatrix& m) {
    const FieldSpec& F = m.field();
    PolyMatrix h = m;
    size_t rows = h.rows(), cols = h.cols();
    auto row_sub = [&](size_t dst, size_t src, const Poly& q) {
        if (q.is_zero()) return;
        for (size_t j = 0; j < cols; ++j)
            h.at(dst, j) = poly_sub(F, h.at(dst, j), poly_mul(F, q, h.at(src, j)));
    };
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on the rows below r until one nonzero entry remains in col c
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i) {
                if (h.at(i, c).is_zero()) continue;
                if (piv == rows || h.at(i, c).degree() < h.at(piv, c).degree()) piv = i;
            }
            if (piv == rows) break; // column clear
            bool others = false;
            for (size_t i = r; i < rows; ++i) {
                if (i == piv || h.at(i, c).is_zero()) continue;
                others = true;
                Poly q = poly_divmod(F, h.at(i, c), h.at(piv, c)).quot;
                row_sub(i, piv, q);
            }
            if (!others) {
                if (piv != r)
                    for (size_t j = 0; j < cols; ++j) std::swap(h.at(piv, j), h.at(r, j));
                // monic pivot, then reduce the rows above
                FieldElement inv = F.inv(h.at(r, c).leading());
                for (size_t j = 0; j < cols; ++j) h.at(r, j) = poly_scale(F, h.at(r, j), inv);
                for (size_t i = 0; i < r; ++i) {
                    Poly q = poly_divmod(F, h.at(i, c), h.at(r, c)).quot;
                    row_sub(i, r, q);
                }
                ++r;
                break;
            }
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// Smith form
// ---------------------------------------------------------------------------

namespace {

struct SmithWorker {
    const FieldSpec& F;
    PolyMatrix A, U, V;

    SmithWorker(const PolyMatrix& m)
        : F(m.field()), A(m), U(PolyMatrix::identity(m.field_ptr(), m.rows())),
          V(PolyMatrix::identity(m.field_ptr(), m.cols())) {}

    void row_swap(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < A.cols(); ++j) std::swap(A.at(a, j), A.at(b, j));
        for (size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void col_swap(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < A.rows(); ++i) std::swap(A.at(i, a), A.at(i, b));
        for (size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    // row dst -= q * row src
    void row_sub(size_t dst, size_t src, const Poly& q) {
        if (q.is_zero()) return;
        for (size_t j = 0; j < A.cols(); ++j)
            A.at(dst, j) = poly_sub(F, A.at(dst, j), poly_mul(F, q, A.at(src, j)));
        for (size_t j = 0; j < U.cols(); ++j)
            U.at(dst, j) = poly_sub(F, U.at(dst, j), poly_mul(F, q, U.at(src, j)));
    }
    void col_sub(size_t dst, size_t src, const Poly& q) {
        if (q.is_zero()) return;
        for (size_t i = 0; i < A.rows(); ++i)
            A.at(i, dst) = poly_sub(F, A.at(i, dst), poly_mul(F, q, A.at(i, src)));
        for (size_t i = 0; i < V.rows(); ++i)
            V.at(i, dst) = poly_sub(F, V.at(i, dst), poly_mul(F, q, V.at(i, src)));
    }
    void row_scale(size_t i, FieldElement s) {
        for (size_t j = 0; j < A.cols(); ++j) A.at(i, j) = poly_scale(F, A.at(i, j), s);
        for (size_t j = 0; j < U.cols(); ++j) U.at(i, j) = poly_scale(F, U.at(i, j), s);
    }
    void row_add(size_t dst, size_t src) {
        for (size_t j = 0; j < A.cols(); ++j)
            A.at(dst, j) = poly_add(F, A.at(dst, j), A.at(src, j));
        for (size_t j = 0; j < U.cols(); ++j)
            U.at(dst, j) = poly_add(F, U.at(dst, j), U.at(src, j));
    }

    void run() {
        size_t t = 0, lim = std::min(A.rows(), A.cols());
        while (t < lim) {
            // minimal-degree nonzero pivot at (t..,t..)
            size_t pi = A.rows(), pj = 0;
            for (size_t i = t; i < A.rows(); ++i)
                for (size_t j = t; j < A.cols(); ++j) {
                    if (A.at(i, j).is_zero()) continue;
                    if (pi == A.rows() || A.at(i, j).degree() < A.at(pi, pj).degree()) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == A.rows()) break; // rest is zero
            row_swap(t, pi);
            col_swap(t, pj);
            for (long guard = 0;; ++guard) {
                if (guard > 100000) throw InvalidParameters("Smith reduction did not terminate");
                bool clean = true;
                for (size_t i = t + 1; i < A.rows(); ++i) {
                    if (A.at(i, t).is_zero()) continue;
                    auto dm = poly_divmod(F, A.at(i, t), A.at(t, t));
                    row_sub(i, t, dm.quot);
                    if (!A.at(i, t).is_zero()) { // remainder got smaller; make it pivot
                        row_swap(i, t);
                        clean = false;
                    }
                }
                if (!clean) continue;
                for (size_t j = t + 1; j < A.cols(); ++j) {
                    if (A.at(t, j).is_zero()) continue;
                    auto dm = poly_divmod(F, A.at(t, j), A.at(t, t));
                    col_sub(j, t, dm.quot);
                    if (!A.at(t, j).is_zero()) {
                        col_swap(j, t);
                        clean = false;
                    }
                }
                if (!clean) continue;
                // pivot must divide every remaining entry
                bool fixed = false;
                for (size_t i = t + 1; i < A.rows() && !fixed; ++i)
                    for (size_t j = t + 1; j < A.cols() && !fixed; ++j) {
                        if (A.at(i, j).is_zero()) continue;
                        if (!poly_divmod(F, A.at(i, j), A.at(t, t)).rem.is_zero()) {
                            row_add(t, i);
                            fixed = true;
                        }
                    }
                if (!fixed) break;
            }
            row_scale(t, F.inv(A.at(t, t).leading()));
            ++t;
        }
    }
};

Poly det_bareiss(const PolyMatrix& m) {
    const FieldSpec& F = m.field();
    size_t n = m.rows();
    PolyMatrix b = m;
    bool negate = false;
    Poly prev = Poly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k).is_zero()) {
            size_t s = k + 1;
            while (s < n && b.at(s, k).is_zero()) ++s;
            if (s == n) return Poly::zero();
            for (size_t j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(s, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = poly_sub(F, poly_mul(F, b.at(i, j), b.at(k, k)),
                                    poly_mul(F, b.at(i, k), b.at(k, j)));
                b.at(i, j) = poly_div_exact(F, num, prev);
            }
        prev = b.at(k, k);
    }
    Poly d = b.at(n - 1, n - 1);
    return negate ? poly_neg(F, d) : d;
}

} // namespace

SmithDecomposition smith_form(const PolyMatrix& m) {
    SmithWorker w(m);
    w.run();
    SmithDecomposition out{w.U, w.A, w.V, {}};
    for (size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (!out.D.at(i, i).is_zero()) out.invariants.push_back(out.D.at(i, i));

    // verification: U M V = D, diagonal D, divisibility chain, unimodular U, V
    if (!(mat_mul(mat_mul(out.U, m), out.V) == out.D))
        throw InvalidParameters("internal: Smith decomposition failed verification");
    for (size_t i = 0; i < out.D.rows(); ++i)
        for (size_t j = 0; j < out.D.cols(); ++j)
            if (i != j && !out.D.at(i, j).is_zero())
                throw InvalidParameters("internal: Smith form not diagonal");
    for (size_t i = 0; i + 1 < out.invariants.size(); ++i)
        if (!poly_divmod(m.field(), out.invariants[i + 1], out.invariants[i]).rem.is_zero())
            throw InvalidParameters("internal: Smith divisibility chain violated");
    if (determinant(out.U).degree() != 0 || determinant(out.V).degree() != 0)
        throw InvalidParameters("internal: Smith transforms not unimodular");
    return out;
}

int rank(const PolyMatrix& m) { return int(smith_form(m).invariants.size()); }

PolyMatrix right_kernel_basis(const PolyMatrix& m) {
    SmithDecomposition s = smith_form(m);
    size_t rho = s.invariants.size();
    PolyMatrix k(m.field_ptr(), m.cols(), m.cols() - rho);
    for (size_t j = rho; j < m.cols(); ++j)
        for (size_t i = 0; i < m.cols(); ++i) k.at(i, j - rho) = s.V.at(i, j);
    if (!mat_mul(m, k).is_zero())
        throw InvalidParameters("internal: kernel basis does not annihilate");
    return k;
}

PolyMatrix left_kernel_basis(const PolyMatrix& m) {
    return right_kernel_basis(m.transpose()).transpose();
}

bool is_basic(const PolyMatrix& m) {
    for (const Poly& d : smith_form(m).invariants)
        if (d.degree() != 0) return false;
    return true;
}

bool is_minimal(const PolyMatrix& m) {
    if (rank(m) != int(m.rows())) throw NotFullRowRank("matrix does not have full row rank");
    const FieldSpec& F = m.field();
    // leading row-coefficient matrix over F
    std::vector<std::vector<FieldElement>> lc(m.rows(),
                                              std::vector<FieldElement>(m.cols(), FieldElement{0}));
    for (size_t i = 0; i < m.rows(); ++i) {
        int d = -1;
        for (size_t j = 0; j < m.cols(); ++j) d = std::max(d, m.at(i, j).degree());
        for (size_t j = 0; j < m.cols(); ++j) lc[i][j] = m.at(i, j).coeff(d);
    }
    // Gaussian rank over F
    size_t rank_f = 0;
    for (size_t c = 0; c < m.cols() && rank_f < m.rows(); ++c) {
        size_t piv = rank_f;
        while (piv < m.rows() && lc[piv][c].enc == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(lc[rank_f], lc[piv]);
        FieldElement inv = F.inv(lc[rank_f][c]);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == rank_f || lc[i][c].enc == 0) continue;
            FieldElement f = F.mul(lc[i][c], inv);
            for (size_t j = 0; j < m.cols(); ++j) lc[i][j] = F.sub(lc[i][j], F.mul(f, lc[rank_f][j]));
        }
        ++rank_f;
    }
    return rank_f == m.rows();
}

namespace {

// Strip zero rows for canonical comparison.
PolyMatrix drop_zero_rows(const PolyMatrix& m) {
    std::vector<size_t> keep;
    for (size_t i = 0; i < m.rows(); ++i) {
        bool z = true;
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) {
                z = false;
                break;
            }
        if (!z) keep.push_back(i);
    }
    PolyMatrix r(m.field_ptr(), keep.size(), m.cols());
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(keep[i], j);
    return r;
}

} // namespace

bool module_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("row modules live in different spaces");
    return drop_zero_rows(hermite_form(a)) == drop_zero_rows(hermite_form(b));
}

bool module_contains(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("row modules live in different spaces");
    const FieldSpec& F = a.field();
    PolyMatrix h = drop_zero_rows(hermite_form(a));
    // pivot column of each row of h
    std::vector<size_t> pivot(h.rows());
    for (size_t i = 0; i < h.rows(); ++i) {
        size_t c = 0;
        while (c < h.cols() && h.at(i, c).is_zero()) ++c;
        pivot[i] = c;
    }
    for (size_t i = 0; i < b.rows(); ++i) {
        std::vector<Poly> v(b.cols());
        for (size_t j = 0; j < b.cols(); ++j) v[j] = b.at(i, j);
        for (size_t r = 0; r < h.rows(); ++r) {
            const Poly& p = v[pivot[r]];
            if (p.is_zero()) continue;
            Poly q = poly_divmod(F, p, h.at(r, pivot[r])).quot;
            if (q.is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                v[j] = poly_sub(F, v[j], poly_mul(F, q, h.at(r, j)));
        }
        for (size_t j = 0; j < b.cols(); ++j)
            if (!v[j].is_zero()) return false;
    }
    return true;
}

ModuleClassification module_classify(const PolyMatrix& m) {
    ModuleClassification out{true, true, true};
    for (const Poly& d : smith_form(m).invariants) {
        if (d.coeff(0).enc == 0) out.delay_free = false;
        int nonzero_terms = 0;
        for (auto c : d.c)
            if (c.enc) ++nonzero_terms;
        if (nonzero_terms != 1) out.non_catastrophic = false; // not unit * z^k
        if (d.degree() != 0) out.direct_summand = false;
    }
    return out;
}

Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0) return Poly::one();
    if (m.rows() == 1) return m.at(0, 0);
    return det_bareiss(m);
}

} // namespace skewcyclic
