#include "symgen/core/linalg.hpp"

#include <utility>

namespace symgen {

std::size_t rank(IntegerMatrix m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::size_t rank(const RationalMatrix& m) {
    IntegerMatrix ints;
    ints.reserve(m.size());
    for (const auto& row : m) {
        Integer lcm = 1;
        for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> scaled;
        scaled.reserve(row.size());
        for (const auto& x : row) scaled.emplace_back(x.get_num() * (lcm / x.get_den()));
        ints.push_back(std::move(scaled));
    }
    return rank(std::move(ints));
}

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t columns) {
    RationalMatrix work = m;
    const auto pivots = rref(work, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(columns, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -work[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs, std::size_t columns) {
    RationalMatrix work = m;
    for (std::size_t i = 0; i < work.size(); ++i) work[i].push_back(rhs[i]);
    const auto pivots = rref(work, columns);
    for (std::size_t i = pivots.size(); i < work.size(); ++i)
        if (work[i][columns] != 0) return {};
    std::vector<Rational> x(columns, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = work[i][columns];
    return x;
}

}  // namespace symgen
