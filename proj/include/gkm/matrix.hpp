#ifndef GKM_MATRIX_HPP
#define GKM_MATRIX_HPP

#include <map>
#include <utility>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// Sparse exact rational matrix; absent entries are zero. Constraint systems
/// are block sparse (one block per edge), so only nonzeros are stored.
class RationalMatrix {
  public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int row, int col, const Rational& value);
    void add(int row, int col, const Rational& value);
    Rational at(int row, int col) const;

    const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

    /// Stacks `extra` below this matrix (column counts must agree).
    void append_rows(const RationalMatrix& extra);

  private:
    int rows_;
    int cols_;
    std::map<std::pair<int, int>, Rational> entries_;
};

struct KernelResult {
    long long rank = 0;
    /// Exact kernel basis: each vector satisfies M v = 0, is keyed by one
    /// free column (ascending), and is scaled so its first nonzero entry
    /// is 1.
    std::vector<std::vector<Rational>> basis;

    long long dimension() const { return static_cast<long long>(basis.size()); }
};

/// Exact kernel via fraction-free (Bareiss) elimination over big integers,
/// followed by an exact rational back-substitution to the reduced echelon
/// form. dimension + rank == cols always.
KernelResult kernel(const RationalMatrix& m);

/// Rank only (same elimination).
long long rank(const RationalMatrix& m);

} // namespace gkm

#endif // GKM_MATRIX_HPP
