#pragma once

#include "nbcss/binmat.hpp"

namespace nbcss {

// Dimensions of a hypergraph product built from seeds H_1 (r1 x n1) and
// H_2 (r2 x n2).
struct HgpShape {
    int r1 = 0, n1 = 0;
    int r2 = 0, n2 = 0;

    int block_length() const { return n1 * n2 + r1 * r2; }
    int rows_x() const { return r1 * n2; }
    int rows_z() const { return n1 * r2; }
};

HgpShape hgp_shape(const BinaryMatrix& h1, const BinaryMatrix& h2);

// Hypergraph product of two classical seeds:
//   H_X = (H_1 (x) I_n2 | I_r1 (x) H_2^T)
//   H_Z = (I_n1 (x) H_2 | H_1^T (x) I_r2)
// Index ordering (row-major within blocks, left block first):
//   left-block column (j1, k)   -> j1*n2 + k
//   right-block column (i1, i2) -> n1*n2 + i1*r2 + i2
//   H_X row (i1, k)             -> i1*n2 + k
//   H_Z row (j1, i2)            -> j1*r2 + i2
// The result is F_2-orthogonal by the mixed-product property.
CssPair hgp(const BinaryMatrix& h1, const BinaryMatrix& h2);

} // namespace nbcss
