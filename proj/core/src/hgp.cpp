#include "nbcss/hgp.hpp"

#include <algorithm>

namespace nbcss {

HgpShape hgp_shape(const BinaryMatrix& h1, const BinaryMatrix& h2) {
    if (h1.rows == 0 || h1.cols == 0 || h2.rows == 0 || h2.cols == 0)
        fail(Errc::empty_seed, "hypergraph product requires nonempty seeds");
    return HgpShape{h1.rows, h1.cols, h2.rows, h2.cols};
}

CssPair hgp(const BinaryMatrix& h1, const BinaryMatrix& h2) {
    const HgpShape s = hgp_shape(h1, h2);
    const int n1 = s.n1, n2 = s.n2, r1 = s.r1, r2 = s.r2;
    const int right_base = n1 * n2;

    const BinaryMatrix h1t = h1.transposed();
    const BinaryMatrix h2t = h2.transposed();

    CssPair pair;
    pair.hc = BinaryMatrix(s.rows_x(), s.block_length());
    pair.hd = BinaryMatrix(s.rows_z(), s.block_length());

    // H_X row (i1, k): left entries at (j1, k) for H1[i1][j1]=1,
    // right entries at (i1, i2) for H2[i2][k]=1.
    for (int i1 = 0; i1 < r1; ++i1) {
        for (int k = 0; k < n2; ++k) {
            auto& supp = pair.hc.row_support[static_cast<std::size_t>(i1 * n2 + k)];
            for (int j1 : h1.row_support[static_cast<std::size_t>(i1)])
                supp.push_back(j1 * n2 + k);
            for (int i2 : h2t.row_support[static_cast<std::size_t>(k)])
                supp.push_back(right_base + i1 * r2 + i2);
            std::sort(supp.begin(), supp.end());
        }
    }

    // H_Z row (j1, i2): left entries at (j1, k) for H2[i2][k]=1,
    // right entries at (i1, i2) for H1[i1][j1]=1.
    for (int j1 = 0; j1 < n1; ++j1) {
        for (int i2 = 0; i2 < r2; ++i2) {
            auto& supp = pair.hd.row_support[static_cast<std::size_t>(j1 * r2 + i2)];
            for (int k : h2.row_support[static_cast<std::size_t>(i2)])
                supp.push_back(j1 * n2 + k);
            for (int i1 : h1t.row_support[static_cast<std::size_t>(j1)])
                supp.push_back(right_base + i1 * r2 + i2);
            std::sort(supp.begin(), supp.end());
        }
    }

    return pair;
}

} // namespace nbcss
