#ifndef TNN_MATRIX_HPP
#define TNN_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "tnn/polynomial.hpp"

namespace tnn {

/// Strictly increasing 1-based row/column indices.
using IndexSet = std::vector<int>;
/// Strictly increasing 0-based offsets (the sets A, B of a minor matrix).
using OffsetSet = std::vector<int>;

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rectangular grid of polynomials.
class PolyMatrix {
public:
    PolyMatrix(int rows, int cols);
    PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Polynomial& at(int i, int j) const;   // 1-based
    Polynomial& at(int i, int j);

    bool operator==(const PolyMatrix& other) const;

    /// One row per line, entries in canonical polynomial form joined by " | ".
    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Polynomial> entries_;
};

/// Throws DimensionError unless I, J are strictly increasing, in bounds,
/// and of equal cardinality.
PolyMatrix submatrix(const PolyMatrix& W, const IndexSet& I, const IndexSet& J);

/// det W[I,J], division-free (Laplace expansion memoized over column subsets).
Polynomial minor(const PolyMatrix& W, const IndexSet& I, const IndexSet& J);

/// Determinant of a square matrix.
Polynomial determinant(const PolyMatrix& W);

/// Signed permutation-sum determinant. Exponential; reference implementation
/// used to cross-check the subset DP.
Polynomial determinant_by_permutations(const PolyMatrix& W);

/// T with t_{i,j} = det W[i+A, j+B], size (m - a_k) x (n - b_k).
PolyMatrix minor_matrix(const PolyMatrix& W, const OffsetSet& A, const OffsetSet& B);

/// Consecutive 2x2 minors: minor_matrix(W, {0,1}, {0,1}).
PolyMatrix l_operator(const PolyMatrix& W);

struct MinorSweepReport {
    bool ok = true;
    // First failure in lexicographic (|I|, I, J) order.
    IndexSet failing_rows;
    IndexSet failing_cols;
};

/// Scans all (I,J) with |I| = |J| <= max_order for subtraction-freeness.
/// OpenMP-parallel when built with OpenMP; results are deterministic.
MinorSweepReport all_minors_subtraction_free(const PolyMatrix& W, int max_order);
/// Serial reference for the sweep above.
MinorSweepReport all_minors_subtraction_free_serial(const PolyMatrix& W, int max_order);

/// All entries must be constant; reports the first minor (up to max_order)
/// that evaluates negative. Throws DimensionError on a non-constant entry.
MinorSweepReport is_totally_nonnegative(const PolyMatrix& W, int max_order);

/// All index sets of size 1..max_order (capped at limit) in lexicographic
/// (|I|, I) order over {1..n}.
std::vector<IndexSet> index_sets_upto(int n, int max_order);

} // namespace tnn

#endif
