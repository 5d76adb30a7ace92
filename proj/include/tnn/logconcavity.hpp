#ifndef TNN_LOGCONCAVITY_HPP
#define TNN_LOGCONCAVITY_HPP

#include <utility>
#include <vector>

#include "tnn/matrix.hpp"
#include "tnn/network.hpp"
#include "tnn/rational.hpp"

namespace tnn {

/// Finite sequence a_0..a_m; entries outside the range are 0.
using Sequence = std::vector<Rational>;

/// b_n = a_n^2 - a_{n-1} a_{n+1}, same length as the input.
Sequence logconcave_step(const Sequence& s);

struct LogConcavityReport {
    bool holds = true;
    int failing_iteration = -1; // 1-based iteration at which negativity appeared
    int failing_index = -1;     // 0-based entry index
    std::vector<Sequence> iterates; // s itself first, then each step
};

LogConcavityReport is_infinitely_logconcave_upto(const Sequence& s, int iterations);

/// Coefficients of prod (x + r_i), ascending: a_k = e_{m-k}(r).
Sequence coeffs_from_roots(const std::vector<Rational>& roots);

/// n x n matrix with w_{i,j} = a_{j-i} (zero outside range).
PolyMatrix toeplitz_matrix(const Sequence& s, int n);

/// Columnar network of order n with one column per entry of column_weights.
/// Horizontal edges carry weight 1; the down-diagonal edges of column c carry
/// column_weights[c]. The weight matrix is the upper-triangular Toeplitz
/// matrix with w_{i,j} = e_{j-i}(column weights).
PlanarNetwork sequence_network(const std::vector<Polynomial>& column_weights, int n);

/// Numeric variant: column c's diagonal edges carry the constant roots[c].
PlanarNetwork sequence_network(const std::vector<Rational>& roots, int n);

/// Symbolic variant with fresh column symbols x1..xm.
PlanarNetwork sequence_network_symbolic(int columns, int n);

struct ConjectureReport {
    bool ok = true;
    int failing_step = -1; // 0-based index into steps when a window failed to fit
    std::string error;     // dimension failure message, if any
    MinorSweepReport sweep;
};

/// Applies the chain of (A,B)-minor-matrix steps to the weight matrix of
/// net, then sweeps all minors of the result up to max_minor_order for
/// subtraction-freeness.
ConjectureReport conjecture_check(const PlanarNetwork& net,
                                  const std::vector<std::pair<OffsetSet, OffsetSet>>& steps,
                                  int max_minor_order);

} // namespace tnn

#endif
