#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace gms::kernels {

/// Dense linear-algebra kernels behind the simplex solver. Every kernel has
/// a plain serial implementation and an OpenMP one; both produce bit-
/// identical output for any thread count (each output element is computed by
/// exactly one thread with a fixed summation order), so the serial variant
/// doubles as the reference in tests and benchmarks.
enum class Mode { serial, parallel };

Mode mode();
void set_mode(Mode m);

/// y = c_B^T * Binv for a row-major m x m inverse.
void btran(const std::vector<double>& binv, int m, const std::vector<double>& c_basic,
           std::vector<double>& y);

/// w = Binv * a for a sparse column a given as (row, value) pairs.
void ftran(const std::vector<double>& binv, int m,
           const std::vector<std::pair<int, double>>& column, std::vector<double>& w);

/// Product-form pivot on Binv: divides row r by w[r] and subtracts w[i] times
/// the new row r from every other row. w is the current pivot column
/// (w = Binv * a_entering).
void pivot_update(std::vector<double>& binv, int m, int pivot_row,
                  const std::vector<double>& w);

namespace detail {
void btran_serial(const double* binv, int m, const double* cb, double* y);
void btran_parallel(const double* binv, int m, const double* cb, double* y);
void ftran_serial(const double* binv, int m, const std::pair<int, double>* nz,
                  std::size_t nnz, double* w);
void ftran_parallel(const double* binv, int m, const std::pair<int, double>* nz,
                    std::size_t nnz, double* w);
void pivot_update_serial(double* binv, int m, int pivot_row, const double* w);
void pivot_update_parallel(double* binv, int m, int pivot_row, const double* w);
}  // namespace detail

}  // namespace gms::kernels
