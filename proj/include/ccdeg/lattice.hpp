#pragma once

#include <optional>
#include <vector>

#include "ccdeg/rational.hpp"

namespace ccdeg {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;  // row-major

// Basis of the kernel lattice {x in Z^ncols : rows * x = 0}. The kernel of an
// integer matrix is automatically saturated, so the basis spans every rational
// kernel vector with integer coordinates.
IntMat kernel_basis(const IntMat& rows, int ncols);

int integer_rank(IntMat rows);

// Bareiss fraction-free determinant of a square integer matrix.
Integer determinant(IntMat square);

// One solution of A x = b over the rationals, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> A,
                                                    std::vector<Rational> b);

// Basis of (rational row span of `rows`) intersected with Z^ncols.
IntMat saturated_span_basis(const IntMat& rows, int ncols);

// Integer coordinates of x in the lattice spanned by basis_rows; nullopt when
// x lies outside that lattice.
std::optional<IntVec> coordinates_in_lattice(const IntMat& basis_rows, const IntVec& x);

}  // namespace ccdeg
