#include "abwalk/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "abwalk/error.hpp"

namespace abwalk {

SparseSymmetricMatrix SparseSymmetricMatrix::from_triplets(
    int dimension, const std::vector<std::tuple<int, int, double>>& triplets) {
    std::map<std::pair<int, int>, double> entries;
    for (auto [i, j, v] : triplets) {
        if (i < 0 || i >= dimension || j < 0 || j >= dimension)
            throw ArgumentError("triplet index out of range");
        if (i > j) std::swap(i, j);
        entries[{i, j}] += v;
    }

    SparseSymmetricMatrix m;
    m.dim_ = dimension;
    std::vector<int> row_count(dimension, 0);
    for (auto& [ij, v] : entries) {
        ++row_count[ij.first];
        if (ij.first != ij.second) ++row_count[ij.second];
    }
    m.offsets_.assign(dimension + 1, 0);
    for (int i = 0; i < dimension; ++i) m.offsets_[i + 1] = m.offsets_[i] + row_count[i];
    m.cols_.resize(m.offsets_[dimension]);
    m.vals_.resize(m.offsets_[dimension]);
    std::vector<std::int64_t> cursor(m.offsets_.begin(), m.offsets_.end() - 1);
    for (auto& [ij, v] : entries) {
        auto [i, j] = ij;
        m.cols_[cursor[i]] = j;
        m.vals_[cursor[i]++] = v;
        if (i != j) {
            m.cols_[cursor[j]] = i;
            m.vals_[cursor[j]++] = v;
        }
    }
    return m;
}

void SparseSymmetricMatrix::multiply(const double* x, double* y) const {
    for (int i = 0; i < dim_; ++i) {
        double acc = 0.0;
        for (std::int64_t p = offsets_[i]; p < offsets_[i + 1]; ++p)
            acc += vals_[p] * x[cols_[p]];
        y[i] = acc;
    }
}

double SparseSymmetricMatrix::diagonal(int i) const {
    for (std::int64_t p = offsets_[i]; p < offsets_[i + 1]; ++p)
        if (cols_[p] == i) return vals_[p];
    return 0.0;
}

bool SparseSymmetricMatrix::is_diagonally_dominant() const {
    for (int i = 0; i < dim_; ++i) {
        double diag = 0.0, off = 0.0;
        for (std::int64_t p = offsets_[i]; p < offsets_[i + 1]; ++p) {
            if (cols_[p] == i)
                diag = std::abs(vals_[p]);
            else
                off += std::abs(vals_[p]);
        }
        if (diag < off - 1e-12 * (diag + off)) return false;
    }
    return true;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

double residual_norm(const SparseSymmetricMatrix& a, const std::vector<double>& x,
                     const std::vector<double>& b) {
    if (static_cast<int>(x.size()) != a.dimension() ||
        static_cast<int>(b.size()) != a.dimension())
        throw ArgumentError("residual_norm: dimension mismatch");
    std::vector<double> ax(a.dimension());
    a.multiply(x.data(), ax.data());
    for (int i = 0; i < a.dimension(); ++i) ax[i] -= b[i];
    return norm2(ax);
}

SolveResult solve(const SparseSymmetricMatrix& a, const std::vector<double>& b,
                  const SolveParams& params) {
    const int n = a.dimension();
    if (static_cast<int>(b.size()) != n) throw ArgumentError("solve: dimension mismatch");
    if (params.rel_tolerance <= 0) throw ArgumentError("solve: rel_tolerance must be > 0");

    const double bnorm = norm2(b);
    if (bnorm == 0.0) return {std::vector<double>(n, 0.0), 0, 0.0};

    const std::int64_t max_iter =
        params.max_iterations > 0 ? params.max_iterations : static_cast<std::int64_t>(10) * n;
    const double target = params.rel_tolerance * bnorm;

    std::vector<double> inv_diag(n, 1.0);
    if (params.preconditioner == Preconditioner::jacobi) {
        for (int i = 0; i < n; ++i) {
            double d = a.diagonal(i);
            inv_diag[i] = d > 0 ? 1.0 / d : 1.0;
        }
    }

    std::vector<double> x(n, 0.0), r = b, z(n), p(n), ap(n);
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);

    auto true_residual = [&] {
        a.multiply(x.data(), ap.data());
        for (int i = 0; i < n; ++i) r[i] = b[i] - ap[i];
        return norm2(r);
    };

    std::vector<double> best_x = x;
    double best_res = bnorm;

    std::int64_t it = 0;
    while (it < max_iter) {
        ++it;
        a.multiply(p.data(), ap.data());
        double pap = dot(p, ap);
        if (pap <= 0) break;  // loss of positive definiteness / numerical stall
        double alpha = rz / pap;
        for (int i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        // periodic recompute of the true residual to stop recursion drift
        bool recomputed = false;
        if (it % 50 == 0) {
            true_residual();
            recomputed = true;
        }
        double rn = norm2(r);
        if (rn <= target) {
            if (!recomputed) rn = true_residual();
            if (rn <= target) return {std::move(x), it, rn};
        }
        if (rn < best_res) {
            best_res = rn;
            best_x = x;
        }
        for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
        double rz_new = dot(r, z);
        double beta = rz_new / rz;
        rz = rz_new;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }

    double final_res = residual_norm(a, x, b);
    if (final_res <= target) return {std::move(x), it, final_res};
    if (final_res < best_res) {
        best_res = final_res;
        best_x = x;
    }
    throw SolverError("conjugate gradient did not converge in " + std::to_string(it) +
                          " iterations (residual " + std::to_string(best_res) + ")",
                      std::move(best_x), best_res);
}

}  // namespace abwalk
