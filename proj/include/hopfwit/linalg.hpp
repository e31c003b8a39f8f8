#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "field.hpp"

namespace hopfwit {

using Vec = std::vector<Scalar>;

// Dense exact matrix over one Field, acting on column vectors.
// Global tensor convention: the flat index of e_i (x) f_j in U (x) V is
// i*dim(V)+j, and all maps on tensor factors are expressed in these
// coordinates.  kron matches it: kron(a,b)[(i,j),(k,l)] = a[i,k]*b[j,l].
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols); // zero matrix

    static Matrix identity(const FieldPtr& f, size_t n);
    static Matrix from_rows(const FieldPtr& f, const std::vector<Vec>& rows);
    static Matrix column(const FieldPtr& f, const Vec& v);
    static Matrix row(const FieldPtr& f, const Vec& v);
    static Matrix diagonal(const FieldPtr& f, const Vec& v);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    bool empty() const { return field_ == nullptr; }

    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    Matrix operator+(const Matrix&) const;
    Matrix operator-(const Matrix&) const;
    Matrix operator*(const Matrix&) const; // composition of linear maps
    Matrix operator*(const Scalar&) const;
    Matrix operator-() const;
    bool operator==(const Matrix&) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    bool is_zero() const;
    Vec apply(const Vec& v) const;               // column vector v
    Vec col(size_t j) const;
    Vec row_vec(size_t i) const;
    Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);
    Vec vec_rowmajor() const;                    // row-major flattening
    static Matrix from_vec(const FieldPtr&, size_t rows, size_t cols, const Vec&);

    nlohmann::json to_json() const;
    static Matrix from_json(const FieldPtr& f, const nlohmann::json& j);

private:
    size_t rows_ = 0, cols_ = 0;
    FieldPtr field_;
    std::vector<Scalar> e_;
};

Matrix kron(const Matrix& a, const Matrix& b);

// Permutation of tensor legs.  dims are the source leg dimensions; order[t] is
// the source leg placed at target slot t, so the result maps
// e_{i_0} (x) ... (x) e_{i_{k-1}}  to  e_{i_{order[0]}} (x) ... (x) e_{i_{order[k-1]}}.
Matrix leg_permutation(const FieldPtr& f, const std::vector<size_t>& dims,
                       const std::vector<size_t>& order);

// vector helpers
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
Vec zero_vec(const FieldPtr& f, size_t n);
Vec unit_vec(const FieldPtr& f, size_t n, size_t i);
bool vec_is_zero(const Vec& v);

struct RrefResult {
    Matrix r;
    std::vector<size_t> pivots; // strictly increasing pivot columns
};
RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

// Exact affine solution set {x : particular + span(kernel)}; empty() means the
// system is inconsistent.  particular has all free (non-pivot) coordinates
// equal to zero, which is the canonical-witness selection rule.
struct SolutionSet {
    std::optional<Vec> particular;
    std::vector<Vec> kernel;
    bool empty() const { return !particular.has_value(); }
};

SolutionSet solve_affine(const Matrix& a, const Vec& b);
std::vector<Vec> kernel_basis(const Matrix& a);
Vec canonical_witness(const SolutionSet& s); // EmptySolutionSet when empty

// membership of v in span(basis)
bool in_span(const std::vector<Vec>& basis, const Vec& v, const FieldPtr& f);

// Assembles the exact affine system for an unknown matrix X (x_rows x x_cols)
// from equations expr(X) == target, where each expr is affine in X.  Columns
// are produced by probing expr on the basis matrices E_ij, so arbitrary
// compositions (tensor legs, products with known maps) can be stated directly.
class AffineMapSystem {
public:
    AffineMapSystem(FieldPtr f, size_t x_rows, size_t x_cols);
    void require(std::function<Matrix(const Matrix&)> expr, Matrix target);
    SolutionSet solve() const;
    std::optional<Matrix> solve_canonical() const; // canonical witness as a matrix

private:
    FieldPtr field_;
    size_t xr_, xc_;
    std::vector<std::pair<std::function<Matrix(const Matrix&)>, Matrix>> eqs_;
};

// FNV-1a content hash of a string, as fixed-width hex; used to tie witness
// files to the presentations they were solved against.
std::string content_hash(const std::string& data);

} // namespace hopfwit
