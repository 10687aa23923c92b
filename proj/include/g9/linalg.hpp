#ifndef G9_LINALG_HPP
#define G9_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

#include "g9/cyclo.hpp"

namespace g9 {

// Dense row-major matrix over Q(z).
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::size_t rows, std::size_t cols, std::vector<CycNum> entries);
  Mat(std::initializer_list<std::initializer_list<CycNum>> rows);

  static Mat identity(std::size_t n);
  static Mat diag(const std::vector<CycNum>& d);
  static Mat column(const std::vector<CycNum>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  CycNum& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  const std::vector<CycNum>& entries() const { return a_; }

  Mat col(std::size_t c) const;
  Mat transpose() const;
  CycNum trace() const;
  bool is_zero() const;

  Mat& operator*=(const CycNum& s);
  friend Mat operator*(const CycNum& s, Mat m) { return m *= s; }
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> a_;
};

Mat matmul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }

// Fraction-free (Bareiss) elimination.
CycNum det(const Mat& a);
// Throws Error(Singular) when det = 0.
Mat inverse(const Mat& a);

// Reduced row-echelon form; pivots are the first nonzero entry in column
// order. Returns the pivot columns through `pivots` when non-null.
Mat rref(Mat a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Mat& a);

// Basis of {v : a v = 0}. One column vector per pivot-free column f, with
// v[f] = 1 and v = 0 on every other pivot-free column.
std::vector<Mat> nullspace(const Mat& a);

// Incrementally built reduced row-echelon basis of a subspace of Q(z)^n.
// Rows are kept fully reduced with pivot entries equal to 1, so the
// remainder of a vector against the basis is canonical.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t n) : n_(n) {}

  std::size_t width() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<CycNum>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection along the basis rows.
  std::vector<CycNum> reduce(std::vector<CycNum> v) const;
  // Adds v if it is independent of the current rows; returns whether it was.
  bool insert(std::vector<CycNum> v);

 private:
  std::size_t n_;
  std::vector<std::vector<CycNum>> rows_;
  std::vector<std::size_t> pivots_;
};

// Kronecker product in lexicographic basis order: (a (x) b)(v (x) w) = av (x) bw.
Mat kron(const Mat& a, const Mat& b);

nlohmann::json cyc_to_json(const CycNum& c);
CycNum cyc_from_json(const nlohmann::json& j);
nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

}  // namespace g9

#endif  // G9_LINALG_HPP
