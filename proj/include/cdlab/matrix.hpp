#ifndef CDLAB_MATRIX_HPP
#define CDLAB_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cdlab/element.hpp"
#include "cdlab/rational.hpp"

namespace cdlab {

// Dense 2^n x 2^n rational matrix for a linear endomorphism of A_n in the
// standard basis. Row index = output coordinate, column = input coordinate.
class OperatorMatrix {
 public:
  OperatorMatrix(int level, std::size_t side)
      : level_(level), side_(side), entries_(side * side, Rational(0)) {}

  static OperatorMatrix zero(int level) {
    return OperatorMatrix(level, std::size_t{1} << level);
  }
  static OperatorMatrix identity(int level) {
    OperatorMatrix m = zero(level);
    for (std::size_t i = 0; i < m.side_; ++i) m.at(i, i) = 1;
    return m;
  }

  int level() const { return level_; }
  std::size_t side() const { return side_; }

  Rational& at(std::size_t row, std::size_t col) {
    return entries_[row * side_ + col];
  }
  const Rational& at(std::size_t row, std::size_t col) const {
    return entries_[row * side_ + col];
  }

  OperatorMatrix transpose() const {
    OperatorMatrix out(level_, side_);
    for (std::size_t i = 0; i < side_; ++i)
      for (std::size_t j = 0; j < side_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  Element apply(const Element& x) const {
    std::vector<Rational> out(side_, 0);
    for (std::size_t j = 0; j < side_; ++j) {
      if (x[j] == 0) continue;
      for (std::size_t i = 0; i < side_; ++i) {
        if (at(i, j) != 0) out[i] += at(i, j) * x[j];
      }
    }
    return Element(level_, std::move(out));
  }

  friend OperatorMatrix operator*(const OperatorMatrix& a,
                                  const OperatorMatrix& b) {
    OperatorMatrix out(a.level_, a.side_);
    for (std::size_t i = 0; i < a.side_; ++i) {
      for (std::size_t k = 0; k < a.side_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.side_; ++j) {
          if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
        }
      }
    }
    return out;
  }
  friend OperatorMatrix operator+(const OperatorMatrix& a,
                                  const OperatorMatrix& b) {
    OperatorMatrix out(a.level_, a.side_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
  }
  friend OperatorMatrix operator-(const OperatorMatrix& a,
                                  const OperatorMatrix& b) {
    OperatorMatrix out(a.level_, a.side_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
  }
  friend OperatorMatrix operator-(const OperatorMatrix& a) {
    OperatorMatrix out(a.level_, a.side_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      out.entries_[i] = -a.entries_[i];
    return out;
  }
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.level_ == b.level_ && a.entries_ == b.entries_;
  }

 private:
  int level_;
  std::size_t side_;
  std::vector<Rational> entries_;
};

}  // namespace cdlab

#endif  // CDLAB_MATRIX_HPP
