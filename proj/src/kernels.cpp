#include "gms/kernels.hpp"

#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gms::kernels {

namespace {
Mode g_mode = Mode::parallel;
// Below this row count the OpenMP fork/join overhead dominates; both paths
// compute identical values, so the cutoff only affects speed.
constexpr int kParallelCutoff = 192;
}  // namespace

Mode mode() { return g_mode; }
void set_mode(Mode m) { g_mode = m; }

namespace detail {

void btran_serial(const double* binv, int m, const double* cb, double* y) {
    std::memset(y, 0, sizeof(double) * m);
    for (int i = 0; i < m; ++i) {
        const double c = cb[i];
        if (c == 0.0) continue;
        const double* row = binv + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) y[j] += c * row[j];
    }
}

void btran_parallel(const double* binv, int m, const double* cb, double* y) {
    // Each thread owns a slice of columns and walks rows in ascending order,
    // reproducing the serial summation order per output element.
#pragma omp parallel
    {
#ifdef _OPENMP
        const int nthreads = omp_get_num_threads();
        const int tid = omp_get_thread_num();
#else
        const int nthreads = 1, tid = 0;
#endif
        const int chunk = (m + nthreads - 1) / nthreads;
        const int lo = tid * chunk;
        const int hi = lo + chunk < m ? lo + chunk : m;
        for (int j = lo; j < hi; ++j) y[j] = 0.0;
        for (int i = 0; i < m; ++i) {
            const double c = cb[i];
            if (c == 0.0) continue;
            const double* row = binv + static_cast<std::size_t>(i) * m;
            for (int j = lo; j < hi; ++j) y[j] += c * row[j];
        }
    }
}

void ftran_serial(const double* binv, int m, const std::pair<int, double>* nz,
                  std::size_t nnz, double* w) {
    for (int i = 0; i < m; ++i) {
        const double* row = binv + static_cast<std::size_t>(i) * m;
        double acc = 0.0;
        for (std::size_t k = 0; k < nnz; ++k) acc += row[nz[k].first] * nz[k].second;
        w[i] = acc;
    }
}

void ftran_parallel(const double* binv, int m, const std::pair<int, double>* nz,
                    std::size_t nnz, double* w) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        const double* row = binv + static_cast<std::size_t>(i) * m;
        double acc = 0.0;
        for (std::size_t k = 0; k < nnz; ++k) acc += row[nz[k].first] * nz[k].second;
        w[i] = acc;
    }
}

void pivot_update_serial(double* binv, int m, int pivot_row, const double* w) {
    double* prow = binv + static_cast<std::size_t>(pivot_row) * m;
    const double inverse_pivot = 1.0 / w[pivot_row];
    for (int j = 0; j < m; ++j) prow[j] *= inverse_pivot;
    for (int i = 0; i < m; ++i) {
        if (i == pivot_row) continue;
        const double factor = w[i];
        if (factor == 0.0) continue;
        double* row = binv + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) row[j] -= factor * prow[j];
    }
}

void pivot_update_parallel(double* binv, int m, int pivot_row, const double* w) {
    double* prow = binv + static_cast<std::size_t>(pivot_row) * m;
    const double inverse_pivot = 1.0 / w[pivot_row];
#pragma omp parallel for schedule(static)
    for (int j = 0; j < m; ++j) prow[j] *= inverse_pivot;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        if (i == pivot_row) continue;
        const double factor = w[i];
        if (factor == 0.0) continue;
        double* row = binv + static_cast<std::size_t>(i) * m;
        for (int j = 0; j < m; ++j) row[j] -= factor * prow[j];
    }
}

}  // namespace detail

void btran(const std::vector<double>& binv, int m, const std::vector<double>& c_basic,
           std::vector<double>& y) {
    y.resize(m);
    if (g_mode == Mode::parallel && m >= kParallelCutoff)
        detail::btran_parallel(binv.data(), m, c_basic.data(), y.data());
    else
        detail::btran_serial(binv.data(), m, c_basic.data(), y.data());
}

void ftran(const std::vector<double>& binv, int m,
           const std::vector<std::pair<int, double>>& column, std::vector<double>& w) {
    w.resize(m);
    if (g_mode == Mode::parallel && m >= kParallelCutoff)
        detail::ftran_parallel(binv.data(), m, column.data(), column.size(), w.data());
    else
        detail::ftran_serial(binv.data(), m, column.data(), column.size(), w.data());
}

void pivot_update(std::vector<double>& binv, int m, int pivot_row,
                  const std::vector<double>& w) {
    if (g_mode == Mode::parallel && m >= kParallelCutoff)
        detail::pivot_update_parallel(binv.data(), m, pivot_row, w.data());
    else
        detail::pivot_update_serial(binv.data(), m, pivot_row, w.data());
}

}  // namespace gms::kernels
