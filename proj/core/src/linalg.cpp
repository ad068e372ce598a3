#include "bolalg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "bolalg/error.hpp"

namespace bolalg {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": size " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& q) { return q == 0; });
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_size(size(), other.size(), "vector add");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_size(size(), other.size(), "vector subtract");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& q : coords_) q *= s;
  return *this;
}

Vector& Vector::add_scaled(const Scalar& s, const Vector& other) {
  require_same_size(size(), other.size(), "vector axpy");
  if (s == 0) return *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (other.coords_[i] != 0) coords_[i] += s * other.coords_[i];
  return *this;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  require_same_size(v.size(), cols_, "set_row");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  require_same_size(v.size(), rows_, "set_col");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return q == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  require_same_size(v.size(), cols_, "matrix apply");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_size(rows_, other.rows_, "matrix add rows");
  require_same_size(cols_, other.cols_, "matrix add cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_size(rows_, other.rows_, "matrix subtract rows");
  require_same_size(cols_, other.cols_, "matrix subtract cols");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

Matrix& Matrix::add_scaled(const Scalar& s, const Matrix& other) {
  require_same_size(rows_, other.rows_, "matrix axpy rows");
  require_same_size(cols_, other.cols_, "matrix axpy cols");
  if (s == 0) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (other.data_[i] != 0) data_[i] += s * other.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_size(a.cols_, b.rows_, "matrix product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << to_string(m(r, c));
    }
  }
  os << ']';
  return os.str();
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

// ---------------------------------------------------------------- RREF

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(lead, j));
    const Scalar inv = 1 / a(lead, c);
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Scalar factor = a(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (a(lead, j) != 0) a(r, j) -= factor * a(lead, j);
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = lead;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
  for (const auto& v : vectors) require_same_size(v.size(), ambient, "span");
  return row_space(Matrix::from_rows(ambient, vectors));
}

Subspace Subspace::span(std::size_t ambient, std::initializer_list<Vector> vectors) {
  return span(ambient, std::span<const Vector>(vectors.begin(), vectors.size()));
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  require_same_size(v.size(), ambient_, "subspace reduce");
  Vector rem = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar coeff = rem[pivots_[i]];
    if (coeff == 0) continue;
    rem.add_scaled(-coeff, basis_.row(i));
  }
  return rem;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_size(other.ambient_, ambient_, "subspace containment");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  require_same_size(v.size(), ambient_, "subspace coordinates");
  Vector coeffs(dim());
  for (std::size_t i = 0; i < dim(); ++i) coeffs[i] = v[pivots_[i]];
  Vector rebuilt(ambient_);
  for (std::size_t i = 0; i < dim(); ++i) rebuilt.add_scaled(coeffs[i], basis_.row(i));
  if (!(rebuilt == v)) return std::nullopt;
  return coeffs;
}

std::string to_string(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(s.basis_vector(i));
  }
  return out + "}";
}

// ---------------------------------------------------------------- kernels and lattice

Subspace nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_size(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  std::vector<Vector> all = a.basis();
  for (auto& v : b.basis()) all.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_size(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da == 0 || db == 0) return Subspace::zero(n);
  // Columns [A^T | -B^T]; a kernel vector (x, y) gives the common element x A.
  Matrix stacked(n, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, i) = a.basis_matrix()(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(j, da + i) = -b.basis_matrix()(i, j);
  const Subspace kernel = nullspace(stacked);
  std::vector<Vector> common;
  for (const auto& k : kernel.basis()) {
    Vector v(n);
    for (std::size_t i = 0; i < da; ++i) v.add_scaled(k[i], a.basis_vector(i));
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineMode mode) {
  return mode == CombineMode::sum ? subspace_sum(a, b) : subspace_intersect(a, b);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b) {
  require_same_size(b.size(), m.rows(), "solve_affine");
  Matrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  const RrefResult r = rref(augmented);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;

  Vector particular(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) particular[r.pivots[i]] = r.reduced(i, m.cols());
  return AffineSolution{std::move(particular), nullspace(m)};
}

}  // namespace bolalg
