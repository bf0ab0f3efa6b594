#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

// Brute-force projection oracles: enumerate the finite candidate set of a
// discrete constraint and measure the true nearest distance, so computed
// projections can be checked for optimality on random inputs.

#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "drc/projections.hpp"

namespace oracle {

using drc::Matrix;

inline Matrix randomMatrix(int rows, int cols, unsigned seed, double lo = -1.5, double hi = 1.5)
{
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uniform(lo, hi);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            m(i, k) = uniform(rng);
    return m;
}

// All matrices equal to z outside the node rows, with each node row
// replaced by a unit vector chosen from the allowed columns of that row.
// allowed[i] holds 0-based columns; an entry -1 stands for the all-zero
// row (used by the at-most-one set).
inline std::vector<Matrix> rowChoiceCandidates(const Matrix& z, int n,
                                               const std::vector<std::vector<int>>& allowed)
{
    std::vector<Matrix> out;
    Matrix work = z;
    auto recurse = [&](auto&& self, int row) -> void {
        if (row == n) {
            out.push_back(work);
            return;
        }
        for (int choice : allowed[row]) {
            for (int k = 0; k < z.cols(); ++k)
                work(row, k) = k == choice ? 1.0 : 0.0;
            self(self, row + 1);
        }
        for (int k = 0; k < z.cols(); ++k)
            work(row, k) = z(row, k);
    };
    recurse(recurse, 0);
    return out;
}

// Like rowChoiceCandidates with every column allowed; withZeroRow also
// admits the all-zero row (choice -1).
inline std::vector<Matrix> unitOrZeroRowCandidates(const Matrix& z, int n, bool withZeroRow)
{
    const int m = static_cast<int>(z.cols());
    std::vector<Matrix> out;
    Matrix work = z;
    auto recurse = [&](auto&& self, int row) -> void {
        if (row == n) {
            out.push_back(work);
            return;
        }
        for (int choice = withZeroRow ? -1 : 0; choice < m; ++choice) {
            for (int k = 0; k < m; ++k)
                work(row, k) = k == choice ? 1.0 : 0.0;
            self(self, row + 1);
        }
        for (int k = 0; k < m; ++k)
            work(row, k) = z(row, k);
    };
    recurse(recurse, 0);
    return out;
}

// All fully binary matrices of the shape of z that satisfy the
// membership predicate.
inline std::vector<Matrix> binaryCandidates(const Matrix& z,
                                            const std::function<bool(const Matrix&)>& member)
{
    const int rows = static_cast<int>(z.rows());
    const int cols = static_cast<int>(z.cols());
    const int bits = rows * cols;
    std::vector<Matrix> out;
    for (long long mask = 0; mask < (1LL << bits); ++mask) {
        Matrix b(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k)
                b(i, k) = (mask >> (i * cols + k)) & 1 ? 1.0 : 0.0;
        if (member(b))
            out.push_back(std::move(b));
    }
    return out;
}

inline bool everyColorUsedMember(const Matrix& b, int n)
{
    for (int k = 0; k < b.cols(); ++k) {
        bool used = false;
        for (int i = 0; i < n; ++i)
            used = used || b(i, k) == 1.0;
        if (!used)
            return false;
    }
    return true;
}

inline bool exactlyQMember(const Matrix& b, int n, int q)
{
    for (int k = 0; k < b.cols(); ++k) {
        int count = 0;
        for (int i = 0; i < n; ++i)
            count += b(i, k) == 1.0;
        if (count != q)
            return false;
    }
    return true;
}

inline bool linkedColumnsMember(const Matrix& b, const std::vector<drc::Edge>& edges,
                                drc::Parity parity)
{
    const int n = static_cast<int>(b.rows());
    const int firstCol = parity == drc::Parity::Odd ? 1 : 2;
    for (int k = firstCol; k < n; k += 2) {
        bool linked = false;
        for (const auto& [i, j] : edges)
            if ((b(i - 1, k - 1) == 1.0 && b(j - 1, k) == 1.0) ||
                (b(j - 1, k - 1) == 1.0 && b(i - 1, k) == 1.0))
                linked = true;
        if (!linked)
            return false;
    }
    return true;
}

inline double bestDistance(const Matrix& z, const std::vector<Matrix>& candidates)
{
    double best = std::numeric_limits<double>::infinity();
    for (const Matrix& c : candidates)
        best = std::min(best, drc::frobeniusNorm(z - c));
    return best;
}

} // namespace oracle

#endif
