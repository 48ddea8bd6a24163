#ifndef HSW_JACOBI_HPP
#define HSW_JACOBI_HPP

#include <vector>

#include "hsw/matrices.hpp"

namespace hsw {

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// ascending. The matrix is taken by value and destroyed in place.
//
// The rotation sweep order is fixed, and the parallel path only splits
// the row/column update of a single rotation across threads, so both
// paths produce bit-identical results.
std::vector<double> symmetric_eigenvalues(SquareMatrix a);

// Serial reference used by tests and the kernel benchmark.
std::vector<double> symmetric_eigenvalues_serial(SquareMatrix a);

} // namespace hsw

#endif
