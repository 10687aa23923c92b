#include "g9/linalg.hpp"

#include <cstddef>
#include <utility>

#include "g9/error.hpp"

namespace g9 {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) {
    throw Error(Errc::ShapeMismatch, "entry count does not match shape");
  }
}

Mat::Mat(std::initializer_list<std::initializer_list<CycNum>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::ShapeMismatch, "ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diag(const std::vector<CycNum>& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::column(const std::vector<CycNum>& v) { return Mat(v.size(), 1, v); }

Mat Mat::col(std::size_t c) const {
  Mat out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CycNum Mat::trace() const {
  if (!square()) throw Error(Errc::ShapeMismatch, "trace of non-square matrix");
  CycNum t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat& Mat::operator*=(const CycNum& s) {
  for (auto& x : a_) x = s * x;
  return *this;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::ShapeMismatch, "matrix sum");
  Mat out = a;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += b.a_[k];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(Errc::ShapeMismatch, "matrix difference");
  Mat out = a;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= b.a_[k];
  return out;
}

std::string Mat::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    s += (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ", ";
      s += (*this)(r, c).to_string();
    }
    s += "]";
  }
  return s + "]";
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "matmul");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const CycNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) fma_into(out(i, j), aik, b(k, j));
    }
  return out;
}

CycNum det(const Mat& in) {
  if (!in.square()) throw Error(Errc::ShapeMismatch, "det of non-square matrix");
  const std::size_t n = in.rows();
  if (n == 0) return 1;
  Mat m = in;
  CycNum prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    const CycNum prev_inv = prev.inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycNum v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = v * prev_inv;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  CycNum d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Mat rref(Mat a, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const CycNum inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const CycNum f = -a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) fma_into(a(r, c), f, a(row, c));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

std::size_t rank(const Mat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::vector<Mat> nullspace(const Mat& a) {
  std::vector<std::size_t> piv;
  const Mat r = rref(a, &piv);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Mat> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Mat v(a.cols(), 1);
    v(f, 0) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v(piv[i], 0) = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat inverse(const Mat& a) {
  if (!a.square()) throw Error(Errc::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> piv;
  const Mat red = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is singular");
  Mat out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red(r, n + c);
  return out;
}

std::vector<CycNum> RowEchelon::reduce(std::vector<CycNum> v) const {
  if (v.size() != n_) throw Error(Errc::ShapeMismatch, "echelon vector length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const CycNum f = -v[p];
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < n_; ++c)
      if (!row[c].is_zero()) fma_into(v[c], f, row[c]);
  }
  return v;
}

bool RowEchelon::insert(std::vector<CycNum> v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < n_ && v[p].is_zero()) ++p;
  if (p == n_) return false;
  const CycNum inv = v[p].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const CycNum f = -row[p];
    for (std::size_t c = 0; c < n_; ++c)
      if (!v[c].is_zero()) fma_into(row[c], f, v[c]);
  }
  // Keep rows sorted by pivot column.
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
  return true;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

nlohmann::json cyc_to_json(const CycNum& c) {
  auto j = nlohmann::json::array();
  for (std::size_t k = 0; k < 4; ++k) j.push_back(rat_to_string(c[k]));
  return j;
}

CycNum cyc_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(Errc::ParseError, "CycNum must be a 4-tuple");
  return CycNum(rat_from_string(j[0].get<std::string>()), rat_from_string(j[1].get<std::string>()),
                rat_from_string(j[2].get<std::string>()), rat_from_string(j[3].get<std::string>()));
}

nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto e = nlohmann::json::array();
  for (const auto& x : m.entries()) e.push_back(cyc_to_json(x));
  j["entries"] = e;
  return j;
}

Mat mat_from_json(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<CycNum> e;
  for (const auto& x : j.at("entries")) e.push_back(cyc_from_json(x));
  return Mat(rows, cols, std::move(e));
}

}  // namespace g9
