#ifndef ABWALK_SOLVER_HPP
#define ABWALK_SOLVER_HPP

#include <cstdint>
#include <tuple>
#include <vector>

namespace abwalk {

// Symmetric sparse matrix in CSR form. The builder enforces structural
// symmetry; diagonal dominance holds for the Laplacian-submatrix systems
// this library constructs and can be verified with is_diagonally_dominant.
class SparseSymmetricMatrix {
public:
    SparseSymmetricMatrix() = default;

    // Triplets may list each off-diagonal entry once (either orientation) or
    // twice (both); duplicates are summed, the mirror entry is filled in.
    static SparseSymmetricMatrix from_triplets(
        int dimension, const std::vector<std::tuple<int, int, double>>& triplets);

    int dimension() const { return dim_; }

    // y = A * x
    void multiply(const double* x, double* y) const;

    double diagonal(int i) const;

    bool is_diagonally_dominant() const;

    const std::vector<std::int64_t>& row_offsets() const { return offsets_; }
    const std::vector<int>& columns() const { return cols_; }
    const std::vector<double>& values() const { return vals_; }

private:
    int dim_ = 0;
    std::vector<std::int64_t> offsets_;
    std::vector<int> cols_;
    std::vector<double> vals_;
};

enum class Preconditioner { none, jacobi };

struct SolveParams {
    double rel_tolerance = 1e-10;
    std::int64_t max_iterations = 0;  // 0 -> 10 * dimension
    Preconditioner preconditioner = Preconditioner::jacobi;
};

struct SolveResult {
    std::vector<double> x;
    std::int64_t iterations = 0;
    double residual = 0.0;  // ||A x - b||_2 at exit
};

// Preconditioned conjugate gradient for SPD systems. Succeeds when
// ||A x - b||_2 <= rel_tolerance * ||b||_2 (true residual, recomputed).
// Throws SolverError (carrying the best iterate) on non-convergence and
// ArgumentError on dimension mismatch.
SolveResult solve(const SparseSymmetricMatrix& a, const std::vector<double>& b,
                  const SolveParams& params = {});

double residual_norm(const SparseSymmetricMatrix& a, const std::vector<double>& x,
                     const std::vector<double>& b);

}  // namespace abwalk

#endif
