#include "prequant/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace prequant {

std::vector<long long> IntMatrix::smith_diagonal() const
{
    int r = rows_, c = cols_;
    std::vector<std::vector<long long>> m(static_cast<size_t>(r),
                                          std::vector<long long>(static_cast<size_t>(c), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);

    int t = 0;
    int limit = std::min(r, c);
    while (t < limit) {
        // Pick the nonzero entry of smallest magnitude in the remaining block.
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                long long v = std::llabs(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;  // remaining block is zero
        std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(pi)]);
        for (int i = 0; i < r; ++i)
            std::swap(m[static_cast<size_t>(i)][static_cast<size_t>(t)],
                      m[static_cast<size_t>(i)][static_cast<size_t>(pj)]);

        bool clean = true;
        for (int i = t + 1; i < r; ++i) {
            long long q = m[static_cast<size_t>(i)][static_cast<size_t>(t)] /
                          m[static_cast<size_t>(t)][static_cast<size_t>(t)];
            if (q != 0)
                for (int j = t; j < c; ++j)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                        q * m[static_cast<size_t>(t)][static_cast<size_t>(j)];
            if (m[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0)
                clean = false;
        }
        for (int j = t + 1; j < c; ++j) {
            long long q = m[static_cast<size_t>(t)][static_cast<size_t>(j)] /
                          m[static_cast<size_t>(t)][static_cast<size_t>(t)];
            if (q != 0)
                for (int i = t; i < r; ++i)
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                        q * m[static_cast<size_t>(i)][static_cast<size_t>(t)];
            if (m[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0)
                clean = false;
        }
        if (!clean)
            continue;  // rerun elimination with a smaller pivot
        // Enforce the divisibility chain: fold any non-divisible entry into
        // the pivot column and repeat.
        long long d = m[static_cast<size_t>(t)][static_cast<size_t>(t)];
        bool divides_all = true;
        for (int i = t + 1; i < r && divides_all; ++i)
            for (int j = t + 1; j < c && divides_all; ++j)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(j)] % d != 0) {
                    for (int jj = t; jj < c; ++jj)
                        m[static_cast<size_t>(t)][static_cast<size_t>(jj)] +=
                            m[static_cast<size_t>(i)][static_cast<size_t>(jj)];
                    divides_all = false;
                }
        if (!divides_all)
            continue;
        ++t;
    }

    std::vector<long long> diag(static_cast<size_t>(limit), 0);
    for (int i = 0; i < t; ++i)
        diag[static_cast<size_t>(i)] = std::llabs(m[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    return diag;
}

SmithSummary smith_summary(const IntMatrix& m)
{
    SmithSummary s;
    s.diagonal = m.smith_diagonal();
    for (long long d : s.diagonal) {
        if (d != 0)
            ++s.rank;
        if (d > 1)
            s.coker_torsion.push_back(d);
    }
    s.kernel_rank = m.cols() - s.rank;
    s.coker_free_rank = m.rows() - s.rank;
    return s;
}

IntMatrix flag_sigma_matrix(int n)
{
    if (n < 2)
        throw DomainError("flag matrix requires n >= 2");
    IntMatrix m(n - 1, n - 1);
    // (sigma - 1) t_i = t_{i+1} - t_i for i < n-1;
    // (sigma - 1) t_{n-1} = t_n - t_{n-1} = -(t_1 + ... + t_{n-2}) - 2 t_{n-1}.
    for (int i = 0; i + 1 < n - 1; ++i) {
        m.at(i, i) -= 1;
        m.at(i + 1, i) += 1;
    }
    for (int row = 0; row < n - 1; ++row)
        m.at(row, n - 2) -= 1;
    m.at(n - 2, n - 2) -= 1;
    return m;
}

}  // namespace prequant
