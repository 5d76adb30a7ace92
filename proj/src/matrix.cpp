#include "tnn/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tnn {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
    entries_.resize(static_cast<size_t>(rows) * cols);
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> grid)
    : rows_(static_cast<int>(grid.size())), cols_(0) {
    if (rows_ == 0) throw DimensionError("matrix dimensions must be positive");
    cols_ = static_cast<int>(grid.begin()->size());
    if (cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != cols_) throw DimensionError("ragged initializer");
        for (const auto& p : row) entries_.push_back(p);
    }
}

const Polynomial& PolyMatrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw DimensionError("matrix index out of range");
    return entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
}

Polynomial& PolyMatrix::at(int i, int j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw DimensionError("matrix index out of range");
    return entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string PolyMatrix::str() const {
    std::ostringstream out;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) out << " | ";
            out << at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void check_index_set(const IndexSet& I, int bound, const char* what) {
    for (size_t k = 0; k < I.size(); ++k) {
        if (I[k] < 1 || I[k] > bound)
            throw DimensionError(std::string(what) + " index out of range");
        if (k > 0 && I[k] <= I[k - 1])
            throw DimensionError(std::string(what) + " indices not strictly increasing");
    }
}

} // namespace

PolyMatrix submatrix(const PolyMatrix& W, const IndexSet& I, const IndexSet& J) {
    if (I.size() != J.size()) throw DimensionError("row and column sets differ in cardinality");
    if (I.empty()) throw DimensionError("empty index sets");
    check_index_set(I, W.rows(), "row");
    check_index_set(J, W.cols(), "column");
    PolyMatrix S(static_cast<int>(I.size()), static_cast<int>(J.size()));
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = 0; j < J.size(); ++j)
            S.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = W.at(I[i], J[j]);
    return S;
}

Polynomial determinant(const PolyMatrix& W) {
    if (W.rows() != W.cols()) throw DimensionError("determinant of non-square matrix");
    const int k = W.rows();
    // dp[mask] = determinant of the submatrix on the first popcount(mask) rows
    // and the column subset mask. Division-free.
    std::vector<Polynomial> dp(size_t(1) << k);
    dp[0] = Polynomial(1);
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        const int row = __builtin_popcount(mask);
        Polynomial acc;
        // Expanding along row r of an r x r submatrix: the p-th set bit
        // carries sign (-1)^(r+p), so the first one is + iff r is odd.
        int sign = (row % 2 == 1) ? 1 : -1;
        for (int j = 0; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            const Polynomial& entry = W.at(row, j + 1);
            if (!entry.is_zero()) {
                Polynomial contrib = dp[mask & ~(1u << j)] * entry;
                acc = (sign > 0) ? acc + contrib : acc - contrib;
            }
            sign = -sign;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(size_t(1) << k) - 1];
}

Polynomial determinant_by_permutations(const PolyMatrix& W) {
    if (W.rows() != W.cols()) throw DimensionError("determinant of non-square matrix");
    const int k = W.rows();
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    Polynomial total;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Polynomial term(1);
        for (int i = 0; i < k; ++i) term = term * W.at(i + 1, perm[i]);
        total = (inversions % 2 == 0) ? total + term : total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Polynomial minor(const PolyMatrix& W, const IndexSet& I, const IndexSet& J) {
    return determinant(submatrix(W, I, J));
}

PolyMatrix minor_matrix(const PolyMatrix& W, const OffsetSet& A, const OffsetSet& B) {
    if (A.size() != B.size() || A.empty())
        throw DimensionError("offset sets must be nonempty and of equal cardinality");
    for (size_t k = 0; k < A.size(); ++k) {
        if (A[k] < 0 || B[k] < 0) throw DimensionError("offsets must be nonnegative");
        if (k > 0 && (A[k] <= A[k - 1] || B[k] <= B[k - 1]))
            throw DimensionError("offsets not strictly increasing");
    }
    const int ak = A.back(), bk = B.back();
    if (W.rows() <= ak || W.cols() <= bk)
        throw DimensionError("offset window does not fit the matrix");
    PolyMatrix T(W.rows() - ak, W.cols() - bk);
    for (int i = 1; i <= T.rows(); ++i) {
        for (int j = 1; j <= T.cols(); ++j) {
            IndexSet I, J;
            for (int a : A) I.push_back(i + a);
            for (int b : B) J.push_back(j + b);
            T.at(i, j) = minor(W, I, J);
        }
    }
    return T;
}

PolyMatrix l_operator(const PolyMatrix& W) {
    return minor_matrix(W, {0, 1}, {0, 1});
}

std::vector<IndexSet> index_sets_upto(int n, int max_order) {
    std::vector<IndexSet> sets;
    const int cap = std::min(n, max_order);
    for (int k = 1; k <= cap; ++k) {
        IndexSet current(k);
        std::iota(current.begin(), current.end(), 1);
        while (true) {
            sets.push_back(current);
            int pos = k - 1;
            while (pos >= 0 && current[pos] == n - (k - 1 - pos)) --pos;
            if (pos < 0) break;
            ++current[pos];
            for (int q = pos + 1; q < k; ++q) current[q] = current[q - 1] + 1;
        }
    }
    return sets;
}

namespace {

struct SweepPair {
    const IndexSet* I;
    const IndexSet* J;
};

// All (I,J) pairs with |I| = |J| <= max_order in lexicographic (|I|, I, J) order.
std::vector<SweepPair> sweep_pairs(const std::vector<IndexSet>& rows,
                                   const std::vector<IndexSet>& cols) {
    std::vector<SweepPair> pairs;
    for (const auto& I : rows)
        for (const auto& J : cols)
            if (I.size() == J.size()) pairs.push_back({&I, &J});
    return pairs;
}

template <typename Check>
MinorSweepReport run_sweep(const PolyMatrix& W, int max_order, bool parallel, Check check) {
    auto rows = index_sets_upto(W.rows(), max_order);
    auto cols = index_sets_upto(W.cols(), max_order);
    auto pairs = sweep_pairs(rows, cols);
    const long count = static_cast<long>(pairs.size());
    long first_bad = count;

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first_bad)
        for (long idx = 0; idx < count; ++idx) {
            if (idx >= first_bad) continue;
            if (!check(*pairs[idx].I, *pairs[idx].J)) first_bad = std::min(first_bad, idx);
        }
#else
        parallel = false;
#endif
    }
    if (!parallel) {
        for (long idx = 0; idx < count; ++idx) {
            if (!check(*pairs[idx].I, *pairs[idx].J)) {
                first_bad = idx;
                break;
            }
        }
    }

    MinorSweepReport report;
    if (first_bad < count) {
        report.ok = false;
        report.failing_rows = *pairs[first_bad].I;
        report.failing_cols = *pairs[first_bad].J;
    }
    return report;
}

} // namespace

MinorSweepReport all_minors_subtraction_free(const PolyMatrix& W, int max_order) {
    return run_sweep(W, max_order, true, [&](const IndexSet& I, const IndexSet& J) {
        return minor(W, I, J).is_subtraction_free();
    });
}

MinorSweepReport all_minors_subtraction_free_serial(const PolyMatrix& W, int max_order) {
    return run_sweep(W, max_order, false, [&](const IndexSet& I, const IndexSet& J) {
        return minor(W, I, J).is_subtraction_free();
    });
}

MinorSweepReport is_totally_nonnegative(const PolyMatrix& W, int max_order) {
    for (int i = 1; i <= W.rows(); ++i)
        for (int j = 1; j <= W.cols(); ++j)
            if (!W.at(i, j).is_constant())
                throw DimensionError("is_totally_nonnegative requires constant entries");
    return run_sweep(W, max_order, true, [&](const IndexSet& I, const IndexSet& J) {
        return minor(W, I, J).constant_value() >= 0;
    });
}

} // namespace tnn
