#include "matrix.hpp"

#include <sstream>

namespace eqpath {

ExactMatrix ExactMatrix::identity(std::size_t n, Ring ring) {
  ExactMatrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows,
                                   Ring ring) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  ExactMatrix m(r, c, ring);
  for (std::size_t i = 0; i < r; ++i) {
    require_internal(rows[i].size() == c, "ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, ring_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& other) const {
  require_internal(cols_ == other.rows_ && ring_ == other.ring_,
                   "matrix product shape/ring mismatch");
  ExactMatrix r(rows_, other.cols_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) == 0) continue;
        r.add_to(i, j, v * other.at(k, j));
      }
    }
  }
  return r;
}

ExactMatrix ExactMatrix::add(const ExactMatrix& other) const {
  require_internal(rows_ == other.rows_ && cols_ == other.cols_ &&
                       ring_ == other.ring_,
                   "matrix sum shape/ring mismatch");
  ExactMatrix r(rows_, cols_, ring_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = ring_.add(a_[i], other.a_[i]);
  return r;
}

ExactMatrix ExactMatrix::sub(const ExactMatrix& other) const {
  return add(other.scaled(Rat(-1)));
}

ExactMatrix ExactMatrix::scaled(const Rat& c) const {
  ExactMatrix r(rows_, cols_, ring_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.mul(a_[i], c);
  return r;
}

ExactMatrix ExactMatrix::column(std::size_t j) const {
  ExactMatrix r(rows_, 1, ring_);
  for (std::size_t i = 0; i < rows_; ++i) r.set(i, 0, at(i, j));
  return r;
}

ExactMatrix ExactMatrix::columns(const std::vector<std::size_t>& idx) const {
  ExactMatrix r(rows_, idx.size(), ring_);
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
  return r;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& other) const {
  require_internal(rows_ == other.rows_ && ring_ == other.ring_,
                   "hcat shape/ring mismatch");
  ExactMatrix r(rows_, cols_ + other.cols_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (std::size_t j = 0; j < other.cols_; ++j)
      r.set(i, cols_ + j, other.at(i, j));
  }
  return r;
}

ExactMatrix ExactMatrix::cast(Ring ring) const {
  ExactMatrix r(rows_, cols_, ring);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  return r;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << ring_.name() << "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace eqpath
