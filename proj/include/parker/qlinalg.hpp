#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

// Exact dense linear algebra over Q by Gauss-Jordan elimination. Intended for
// small systems (cyclotomic coordinates, dense-scale kernels).

namespace parker::qlinalg {

using Vector = std::vector<mpq_class>;
using Matrix = std::vector<Vector>;  // row-major

/// A solution of a x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(Matrix a, Vector b);

/// Basis of {x : a x = 0}; `cols` is needed when a has no rows.
std::vector<Vector> kernel(Matrix a, std::size_t cols);

std::size_t rank(Matrix a);

}  // namespace parker::qlinalg
