#pragma once

#include <vector>

#include "nilgen/numeric.hpp"

namespace nilgen::detail {

using Row = std::vector<Integer>;
using Mat = std::vector<Row>;

// Square upper-triangular basis of a full-rank integer lattice L with
// diag(N_1..N_l) <= L. Rows are lattice vectors; row i has its pivot
// (positive) at column i. Inserting a vector extends L by that vector;
// pivots only ever shrink (each new pivot divides the old one).
//
// The triangular form alone already determines the lattice determinant
// (product of pivots), which is all the hot paths need. normalize()
// additionally reduces every above-pivot entry into [0, pivot), which
// makes the basis the unique Hermite normal form of L: two lattices are
// equal iff their normalized bases are identical.
class TriangularLattice {
public:
    explicit TriangularLattice(const std::vector<Integer>& diagonal);

    void insert(Row v);

    // Index [Z^l : L]; for a subgroup lattice this is prod(N_i) / |S|.
    Integer diagonal_product() const;

    void normalize();

    bool contains(Row v) const;

    // Back-substitution coefficients expressing a lattice member in this
    // basis. Precondition: contains(v).
    Row solve(Row v) const;

    const Mat& rows() const { return rows_; }
    std::size_t dimension() const { return rows_.size(); }

private:
    Mat rows_;
};

// Basis of the left kernel {u : u * m == 0} as rows, via row reduction
// of m with a unimodular transform carried alongside.
Mat left_kernel(const Mat& m);

// Diagonal of the Smith normal form (invariant factors, each dividing
// the next, zeros last when rank deficient). Destroys its argument.
std::vector<Integer> smith_diagonal(Mat m);

}  // namespace nilgen::detail
