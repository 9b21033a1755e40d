#pragma once

#include <vector>

#include "prequant/errors.hpp"

namespace prequant {

// Small dense integer matrix with a Smith-normal-form service.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), 0)
    {
        if (rows < 0 || cols < 0)
            throw DomainError("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return a_[static_cast<size_t>(r * cols_ + c)]; }
    long long at(int r, int c) const { return a_[static_cast<size_t>(r * cols_ + c)]; }

    // Diagonal d_1 | d_2 | ... of the Smith normal form (non-negative).
    std::vector<long long> smith_diagonal() const;

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

struct SmithSummary {
    std::vector<long long> diagonal;     // including zeros
    int rank = 0;                        // nonzero diagonal entries
    int kernel_rank = 0;                 // cols - rank
    int coker_free_rank = 0;             // rows - rank
    std::vector<long long> coker_torsion;  // diagonal entries > 1
};

SmithSummary smith_summary(const IntMatrix& m);

// Matrix of (sigma - 1) on the degree-2 part of Z[t_1..t_n]/(sigma_1), where
// sigma cyclically permutes the t_i and t_n = -(t_1 + ... + t_{n-1});
// basis t_1..t_{n-1}.
IntMatrix flag_sigma_matrix(int n);

}  // namespace prequant
