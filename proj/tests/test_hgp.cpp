#include <doctest.h>

#include <random>

#include "nbcss/hgp.hpp"

#include "reference_instance.hpp"
#include "test_util.hpp"

using namespace nbcss;
using nbcss::testing::errc_of;
using nbcss::testing::random_binary_matrix;

TEST_CASE("reference instance matches the frozen supports") {
    const HgpShape shape = hgp_shape(nbcss::testing::seed_h1(), nbcss::testing::seed_h2());
    CHECK(shape.r1 == 2);
    CHECK(shape.n1 == 3);
    CHECK(shape.r2 == 2);
    CHECK(shape.n2 == 3);
    CHECK(shape.block_length() == 13);
    CHECK(shape.rows_x() == 6);
    CHECK(shape.rows_z() == 6);

    const CssPair pair = nbcss::testing::reference_pair();
    CHECK(pair.hc.rows == 6);
    CHECK(pair.hc.cols == 13);
    CHECK(pair.hd.rows == 6);
    CHECK(pair.hd.cols == 13);
    CHECK(pair.hc.row_support == nbcss::testing::expected_hx_support);
    CHECK(pair.hd.row_support == nbcss::testing::expected_hz_support);
    CHECK(check_orthogonal_f2(pair).ok());
}

TEST_CASE("reference overlaps reproduce the frozen quadruples") {
    const OverlapTable table = overlap_sets(nbcss::testing::reference_pair());
    CHECK(table.size() == nbcss::testing::expected_quadruples.size());
    for (const auto& [i, ip, j, jp] : nbcss::testing::expected_quadruples) {
        REQUIRE(table.count({i, ip}) == 1);
        CHECK(table.at({i, ip}) == std::vector<int>{j, jp});
    }
}

TEST_CASE("smallest product: [1] x [1]") {
    const BinaryMatrix one = BinaryMatrix::from_dense({{1}});
    const CssPair pair = hgp(one, one);
    CHECK(pair.hc == BinaryMatrix::from_dense({{1, 1}}));
    CHECK(pair.hd == BinaryMatrix::from_dense({{1, 1}}));
    CHECK(check_orthogonal_f2(pair).ok());
}

TEST_CASE("empty seeds are rejected") {
    const BinaryMatrix empty;
    const BinaryMatrix one = BinaryMatrix::from_dense({{1}});
    CHECK(errc_of([&] { hgp(empty, one); }) == Errc::empty_seed);
    CHECK(errc_of([&] { hgp(one, empty); }) == Errc::empty_seed);
    const BinaryMatrix no_cols(2, 0);
    CHECK(errc_of([&] { hgp(no_cols, one); }) == Errc::empty_seed);
}

TEST_CASE("products of random seeds are always orthogonal") {
    std::mt19937_64 rng(505);
    for (int t = 0; t < 50; ++t) {
        const BinaryMatrix h1 = random_binary_matrix(rng, 2 + static_cast<int>(rng() % 3),
                                                     2 + static_cast<int>(rng() % 4), 0.4);
        const BinaryMatrix h2 = random_binary_matrix(rng, 2 + static_cast<int>(rng() % 3),
                                                     2 + static_cast<int>(rng() % 4), 0.4);
        const CssPair pair = hgp(h1, h2);
        const HgpShape shape = hgp_shape(h1, h2);
        CHECK(pair.hc.rows == shape.rows_x());
        CHECK(pair.hd.rows == shape.rows_z());
        CHECK(pair.hc.cols == shape.block_length());
        CHECK(check_orthogonal_f2(pair).ok());
        pair.hc.validate();
        pair.hd.validate();
    }
}
