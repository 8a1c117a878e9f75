#include "mpcjoin/simplex.hpp"

#include <stdexcept>

namespace mpcjoin {

LpOptimum simplex_max(const std::vector<std::vector<BigRat>>& A, const std::vector<BigRat>& b,
                      const std::vector<BigRat>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("simplex: ragged matrix");
    if (b.size() != m) throw std::invalid_argument("simplex: |b| != rows");
    for (const BigRat& v : b)
        if (v < 0) throw std::domain_error("simplex: requires b >= 0");

    // Tableau: m rows of [structural | slack | rhs], plus objective row z.
    // z[j] holds c_j - z_j; a positive entry means column j can improve.
    const std::size_t cols = n + m;
    std::vector<std::vector<BigRat>> T(m, std::vector<BigRat>(cols + 1));
    std::vector<BigRat> z(cols + 1);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) z[j] = c[j];

    while (true) {
        // Bland: entering column = smallest index with positive reduced cost.
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (z[j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;  // optimal

        // Ratio test; ties broken by smallest basis variable index (Bland).
        std::size_t leave_row = m;
        BigRat best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            BigRat ratio = T[i][cols] / T[i][enter];
            if (leave_row == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave_row])) {
                leave_row = i;
                best_ratio = ratio;
            }
        }
        if (leave_row == m) throw std::domain_error("simplex: unbounded objective");

        // Pivot on (leave_row, enter).
        BigRat piv = T[leave_row][enter];
        for (std::size_t j = 0; j <= cols; ++j) T[leave_row][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave_row || T[i][enter] == 0) continue;
            BigRat f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave_row][j];
        }
        if (z[enter] != 0) {
            BigRat f = z[enter];
            for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * T[leave_row][j];
        }
        basis[leave_row] = enter;
    }

    LpOptimum out;
    out.x.assign(n, BigRat(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = T[i][cols];
    out.objective = -z[cols];
    // At optimality the reduced cost of slack i equals -y_i.
    out.dual.assign(m, BigRat(0));
    for (std::size_t i = 0; i < m; ++i) out.dual[i] = -z[n + i];
    return out;
}

}  // namespace mpcjoin
