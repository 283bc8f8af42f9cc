#include "cdlab/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdlab {

namespace {

// Exact integer division; the Bareiss recurrence guarantees divisibility,
// and we verify it rather than assume it.
BigInt divide_exact(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  if (r != 0) {
    throw std::logic_error("fraction-free elimination lost exactness");
  }
  return q;
}

std::size_t find_pivot_row(const std::vector<std::vector<Rational>>& rows,
                           std::size_t col, std::size_t from) {
  for (std::size_t i = from; i < rows.size(); ++i) {
    if (rows[i][col] != 0) return i;
  }
  return rows.size();
}

}  // namespace

std::vector<std::vector<Rational>> rref(
    std::vector<std::vector<Rational>> rows, std::size_t cols) {
  const std::size_t nrows = rows.size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::logic_error("ragged matrix");
  }

  // Clear denominators row by row; row scaling changes neither the row
  // space nor the nullspace.
  std::vector<std::vector<BigInt>> z(nrows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < nrows; ++i) {
    BigInt common = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      common = lcm(common, rows[i][j].get_den());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      z[i][j] = rows[i][j].get_num() * (common / rows[i][j].get_den());
    }
  }

  // Forward pass: single-step Bareiss, first-nonzero pivoting only.
  BigInt prev = 1;
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < nrows; ++c) {
    std::size_t sel = pr;
    while (sel < nrows && z[sel][c] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(z[sel], z[pr]);
    for (std::size_t i = pr + 1; i < nrows; ++i) {
      if (z[i][c] == 0) {
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (z[i][j] != 0) {
            z[i][j] = divide_exact(z[pr][c] * z[i][j], prev);
          }
        }
      } else {
        for (std::size_t j = c + 1; j < cols; ++j) {
          z[i][j] =
              divide_exact(z[pr][c] * z[i][j] - z[i][c] * z[pr][j], prev);
        }
        z[i][c] = 0;
      }
    }
    prev = z[pr][c];
    pivot_cols.push_back(c);
    ++pr;
  }

  // Back substitution over the rationals: pivots to 1, zeros above.
  std::vector<std::vector<Rational>> out(pr,
                                         std::vector<Rational>(cols, 0));
  for (std::size_t k = 0; k < pr; ++k) {
    Rational pivot(z[k][pivot_cols[k]]);
    for (std::size_t j = pivot_cols[k]; j < cols; ++j) {
      if (z[k][j] != 0) {
        out[k][j] = Rational(z[k][j]) / pivot;
      }
    }
  }
  for (std::size_t k = pr; k-- > 0;) {
    for (std::size_t m = 0; m < k; ++m) {
      Rational factor = out[m][pivot_cols[k]];
      if (factor == 0) continue;
      for (std::size_t j = pivot_cols[k]; j < cols; ++j) {
        if (out[k][j] != 0) out[m][j] -= factor * out[k][j];
      }
    }
  }
  return out;
}

std::vector<std::vector<Rational>> nullspace(
    const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  auto reduced = rref(rows, cols);

  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : reduced) {
    std::size_t p = 0;
    while (p < cols && row[p] == 0) ++p;
    pivot_cols.push_back(p);
    is_pivot[p] = true;
  }

  std::vector<std::vector<Rational>> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (reduced[k][f] != 0) v[pivot_cols[k]] = -reduced[k][f];
    }
    vectors.push_back(std::move(v));
  }
  return rref(std::move(vectors), cols);
}

Subspace Subspace::zero(int level) { return Subspace(level, {}); }

Subspace Subspace::full(int level) {
  std::size_t dim = std::size_t{1} << level;
  std::vector<std::vector<Rational>> basis(dim,
                                           std::vector<Rational>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = 1;
  return Subspace(level, std::move(basis));
}

Subspace Subspace::from_spanning(int level,
                                 const std::vector<Element>& spanning) {
  std::size_t dim = std::size_t{1} << level;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(spanning.size());
  for (const Element& e : spanning) {
    if (e.level() != level) {
      throw InputError("spanning element has mismatched level");
    }
    rows.push_back(e.coeffs());
  }
  return Subspace(level, rref(std::move(rows), dim));
}

Element Subspace::basis_element(std::size_t i) const {
  return Element(level_, basis_.at(i));
}

std::vector<Element> Subspace::basis_elements() const {
  std::vector<Element> out;
  out.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    out.push_back(basis_element(i));
  return out;
}

bool Subspace::contains(const Element& x) const {
  if (x.level() != level_) {
    throw InputError("level mismatch in subspace membership test");
  }
  std::vector<Rational> v = x.coeffs();
  std::size_t cols = v.size();
  for (const auto& row : basis_) {
    std::size_t p = 0;
    while (p < cols && row[p] == 0) ++p;
    if (p == cols || v[p] == 0) continue;
    Rational factor = v[p];
    for (std::size_t j = p; j < cols; ++j) {
      if (row[j] != 0) v[j] -= factor * row[j];
    }
  }
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& c) { return c == 0; });
}

Subspace kernel(const OperatorMatrix& m) {
  std::size_t side = m.side();
  std::vector<std::vector<Rational>> rows(side,
                                          std::vector<Rational>(side));
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) rows[i][j] = m.at(i, j);
  auto basis = nullspace(rows, side);

  for (const auto& v : basis) {
    if (!m.apply(Element(m.level(), v)).is_zero()) {
      throw std::logic_error("kernel verification failed");
    }
  }
  return Subspace(m.level(), std::move(basis));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.level() != v.level()) {
    throw InputError("level mismatch in subspace intersection");
  }
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.level());

  // Solve sum a_i U_i = sum b_j V_j via the nullspace of [U^T | -V^T].
  std::size_t dim = std::size_t{1} << u.level();
  std::size_t du = u.rows().size(), dv = v.rows().size();
  std::vector<std::vector<Rational>> rows(
      dim, std::vector<Rational>(du + dv, 0));
  for (std::size_t coord = 0; coord < dim; ++coord) {
    for (std::size_t i = 0; i < du; ++i) rows[coord][i] = u.rows()[i][coord];
    for (std::size_t j = 0; j < dv; ++j)
      rows[coord][du + j] = -v.rows()[j][coord];
  }
  auto solutions = nullspace(rows, du + dv);

  std::vector<std::vector<Rational>> spanning;
  for (const auto& w : solutions) {
    std::vector<Rational> x(dim, 0);
    for (std::size_t i = 0; i < du; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t coord = 0; coord < dim; ++coord) {
        if (u.rows()[i][coord] != 0) x[coord] += w[i] * u.rows()[i][coord];
      }
    }
    spanning.push_back(std::move(x));
  }
  return Subspace(u.level(), rref(std::move(spanning), dim));
}

Subspace orthogonal_complement(const Subspace& u) {
  std::size_t dim = std::size_t{1} << u.level();
  return Subspace(u.level(), nullspace(u.rows(), dim));
}

bool contains(const Subspace& u, const Element& x) { return u.contains(x); }

}  // namespace cdlab
