#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ring.hpp"

namespace eqpath {

// Dense matrix with exact entries over a tagged coefficient ring.
// Entries are unbounded; fixed-width arithmetic is never used.
class ExactMatrix {
public:
  ExactMatrix() : rows_(0), cols_(0), ring_(Ring::integers()) {}
  ExactMatrix(std::size_t rows, std::size_t cols, Ring ring)
      : rows_(rows), cols_(cols), ring_(ring), a_(rows * cols, Rat(0)) {}

  static ExactMatrix identity(std::size_t n, Ring ring);
  static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows,
                               Ring ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const Rat& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, const Rat& v) {
    a_[i * cols_ + j] = ring_.normalize(v);
  }
  void add_to(std::size_t i, std::size_t j, const Rat& v) {
    a_[i * cols_ + j] = ring_.add(a_[i * cols_ + j], v);
  }

  bool is_zero() const;
  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ &&
           a_ == o.a_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  ExactMatrix transpose() const;
  ExactMatrix mul(const ExactMatrix& other) const;
  ExactMatrix add(const ExactMatrix& other) const;
  ExactMatrix sub(const ExactMatrix& other) const;
  ExactMatrix scaled(const Rat& c) const;
  ExactMatrix column(std::size_t j) const;
  ExactMatrix columns(const std::vector<std::size_t>& idx) const;
  // Horizontal concatenation [this | other].
  ExactMatrix hcat(const ExactMatrix& other) const;
  // Reinterpret over another ring (entries renormalized).
  ExactMatrix cast(Ring ring) const;

  std::string to_string() const;

private:
  std::size_t rows_, cols_;
  Ring ring_;
  std::vector<Rat> a_;
};

}  // namespace eqpath
