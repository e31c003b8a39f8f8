#include "hopfwit/linalg.hpp"

#include <algorithm>

namespace hopfwit {

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols)
    : rows_(rows), cols_(cols), field_(std::move(f)), e_(rows * cols, field_->zero()) {}

Matrix Matrix::identity(const FieldPtr& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<Vec>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::column(const FieldPtr& f, const Vec& v) {
    Matrix m(f, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::row(const FieldPtr& f, const Vec& v) {
    Matrix m(f, 1, v.size());
    for (size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

Matrix Matrix::diagonal(const FieldPtr& f, const Vec& v) {
    Matrix m(f, v.size(), v.size());
    for (size_t i = 0; i < v.size(); ++i) m.at(i, i) = v[i];
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product: " + std::to_string(rows_) + "x" +
                                                  std::to_string(cols_) + " * " + std::to_string(o.rows_) +
                                                  "x" + std::to_string(o.cols_));
    Matrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply");
    Vec r = zero_vec(field_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Vec Matrix::col(size_t j) const {
    Vec r;
    r.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) r.push_back(at(i, j));
    return r;
}

Vec Matrix::row_vec(size_t i) const {
    Vec r;
    r.reserve(cols_);
    for (size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

Matrix Matrix::submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Matrix m(field_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

Vec Matrix::vec_rowmajor() const { return e_; }

Matrix Matrix::from_vec(const FieldPtr& f, size_t rows, size_t cols, const Vec& v) {
    if (v.size() != rows * cols) throw DimensionMismatch("from_vec");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < v.size(); ++i) m.e_[i] = v[i];
    return m;
}

nlohmann::json Matrix::to_json() const {
    nlohmann::json rowsj = nlohmann::json::array();
    for (size_t i = 0; i < rows_; ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (size_t j = 0; j < cols_; ++j) r.push_back(at(i, j).str());
        rowsj.push_back(std::move(r));
    }
    return nlohmann::json{{"rows", rows_}, {"cols", cols_}, {"entries", rowsj}};
}

Matrix Matrix::from_json(const FieldPtr& f, const nlohmann::json& j) {
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw ParseError("matrix: wrong row count");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw ParseError("matrix: wrong column count");
        for (size_t jj = 0; jj < cols; ++jj) m.at(i, jj) = f->parse(entries[i][jj].get<std::string>());
    }
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.rows(); ++j)
                for (size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + j, k * b.cols() + l) = a.at(i, k) * b.at(j, l);
        }
    return m;
}

Matrix leg_permutation(const FieldPtr& f, const std::vector<size_t>& dims,
                       const std::vector<size_t>& order) {
    if (order.size() != dims.size()) throw DimensionMismatch("leg_permutation");
    size_t total = 1;
    for (size_t d : dims) total *= d;
    Matrix m(f, total, total);
    std::vector<size_t> idx(dims.size(), 0);
    for (size_t flat = 0; flat < total; ++flat) {
        // decode source multi-index (row-major)
        size_t rem = flat;
        for (size_t t = dims.size(); t-- > 0;) {
            idx[t] = rem % dims[t];
            rem /= dims[t];
        }
        size_t target = 0;
        for (size_t t = 0; t < order.size(); ++t) target = target * dims[order[t]] + idx[order[t]];
        m.at(target, flat) = f->one();
    }
    return m;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_sub");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (auto& x : r) x = x * c;
    return r;
}

Vec zero_vec(const FieldPtr& f, size_t n) { return Vec(n, f->zero()); }

Vec unit_vec(const FieldPtr& f, size_t n, size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = f->one();
    return v;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(lead, j));
        Scalar pivinv = r.at(lead, col).inv();
        for (size_t j = col; j < r.cols(); ++j) r.at(lead, j) = r.at(lead, j) * pivinv;
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            Scalar factor = r.at(i, col);
            for (size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - factor * r.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

SolutionSet solve_affine(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve_affine: rhs length");
    Matrix aug = Matrix::hstack(a, Matrix::column(a.field(), b));
    RrefResult rr = rref(aug);
    SolutionSet s;
    // inconsistent iff some pivot sits in the appended column
    for (size_t p : rr.pivots)
        if (p == a.cols()) return s;

    const FieldPtr& f = a.field();
    Vec part = zero_vec(f, a.cols());
    for (size_t i = 0; i < rr.pivots.size(); ++i) part[rr.pivots[i]] = rr.r.at(i, a.cols());
    s.particular = std::move(part);

    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : rr.pivots) is_pivot[p] = true;
    for (size_t fcol = 0; fcol < a.cols(); ++fcol) {
        if (is_pivot[fcol]) continue;
        Vec v = zero_vec(f, a.cols());
        v[fcol] = f->one();
        for (size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.r.at(i, fcol);
        s.kernel.push_back(std::move(v));
    }
    return s;
}

std::vector<Vec> kernel_basis(const Matrix& a) {
    return solve_affine(a, zero_vec(a.field(), a.rows())).kernel;
}

Vec canonical_witness(const SolutionSet& s) {
    if (s.empty()) throw EmptySolutionSet("canonical witness of an empty solution set");
    return *s.particular;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, const FieldPtr& f) {
    if (basis.empty()) return vec_is_zero(v);
    Matrix m(f, v.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != v.size()) throw DimensionMismatch("in_span");
        for (size_t i = 0; i < v.size(); ++i) m.at(i, j) = basis[j][i];
    }
    return !solve_affine(m, v).empty();
}

AffineMapSystem::AffineMapSystem(FieldPtr f, size_t x_rows, size_t x_cols)
    : field_(std::move(f)), xr_(x_rows), xc_(x_cols) {}

void AffineMapSystem::require(std::function<Matrix(const Matrix&)> expr, Matrix target) {
    eqs_.emplace_back(std::move(expr), std::move(target));
}

SolutionSet AffineMapSystem::solve() const {
    size_t unknowns = xr_ * xc_;
    size_t total_rows = 0;
    std::vector<Matrix> base_vals;
    base_vals.reserve(eqs_.size());
    Matrix zero(field_, xr_, xc_);
    for (const auto& [expr, target] : eqs_) {
        Matrix f0 = expr(zero);
        if (f0.rows() != target.rows() || f0.cols() != target.cols())
            throw DimensionMismatch("AffineMapSystem equation/target shape");
        total_rows += f0.rows() * f0.cols();
        base_vals.push_back(std::move(f0));
    }
    Matrix sys(field_, total_rows, unknowns);
    Vec rhs = zero_vec(field_, total_rows);
    for (size_t u = 0; u < unknowns; ++u) {
        Matrix probe(field_, xr_, xc_);
        probe.at(u / xc_, u % xc_) = field_->one();
        size_t row0 = 0;
        for (size_t q = 0; q < eqs_.size(); ++q) {
            Vec colpart = (eqs_[q].first(probe) - base_vals[q]).vec_rowmajor();
            for (size_t i = 0; i < colpart.size(); ++i) sys.at(row0 + i, u) = colpart[i];
            row0 += colpart.size();
        }
    }
    size_t row0 = 0;
    for (size_t q = 0; q < eqs_.size(); ++q) {
        Vec t = (eqs_[q].second - base_vals[q]).vec_rowmajor();
        for (size_t i = 0; i < t.size(); ++i) rhs[row0 + i] = t[i];
        row0 += t.size();
    }
    return solve_affine(sys, rhs);
}

std::optional<Matrix> AffineMapSystem::solve_canonical() const {
    SolutionSet s = solve();
    if (s.empty()) return std::nullopt;
    return Matrix::from_vec(field_, xr_, xc_, *s.particular);
}

std::string content_hash(const std::string& data) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

} // namespace hopfwit
