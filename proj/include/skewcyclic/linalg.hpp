#ifndef SKEWCYCLIC_LINALG_HPP
#define SKEWCYCLIC_LINALG_HPP

#include "skewcyclic/poly.hpp"

namespace skewcyclic {

// Dense matrix over F[z].  Entries are Poly values in the variable z.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(FieldSpecPtr F, size_t rows, size_t cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), e_(rows * cols) {}

    static PolyMatrix identity(FieldSpecPtr F, size_t n);

    const FieldSpecPtr& field_ptr() const { return F_; }
    const FieldSpec& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Poly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Poly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix transpose() const;
    PolyMatrix first_rows(size_t k) const;
    bool is_zero() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

  private:
    FieldSpecPtr F_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_stack(const PolyMatrix& top, const PolyMatrix& bottom);

// Row-style Hermite normal form: monic pivots on strictly increasing
// columns, entries above each pivot reduced, zero rows at the bottom.
// Canonical for the row module.
PolyMatrix hermite_form(const PolyMatrix& m);

struct SmithDecomposition {
    PolyMatrix U, D, V;          // U * M * V = D
    std::vector<Poly> invariants; // nonzero invariant factors, monic, d_i | d_(i+1)
};

// Smith normal form with transformation matrices; the decomposition is
// re-verified (U*M*V = D, divisibility chain, unimodular U and V) before it
// is returned.
SmithDecomposition smith_form(const PolyMatrix& m);

int rank(const PolyMatrix& m);

// Columns form a basis of { w : M w = 0 }; the result is basic.
PolyMatrix right_kernel_basis(const PolyMatrix& m);
// Rows form a basis of { v : v M = 0 }.
PolyMatrix left_kernel_basis(const PolyMatrix& m);

// Smith form is [[I,0],[0,0]].
bool is_basic(const PolyMatrix& m);

// Full-row-rank matrix whose row-leading-coefficient matrix has full rank
// over F.  Throws NotFullRowRank when the precondition fails.
bool is_minimal(const PolyMatrix& m);

bool module_equal(const PolyMatrix& a, const PolyMatrix& b);
// Row module of b contained in row module of a.
bool module_contains(const PolyMatrix& a, const PolyMatrix& b);

struct ModuleClassification {
    bool delay_free = false;
    bool non_catastrophic = false;
    bool direct_summand = false;
};
ModuleClassification module_classify(const PolyMatrix& m);

Poly determinant(const PolyMatrix& m);

} // namespace skewcyclic

#endif
