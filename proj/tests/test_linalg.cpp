#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "pstego/bits.hpp"

using namespace pstego;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng() & 1u) m.set(i, j);
    return m;
}

BitVector random_vector(std::mt19937_64& rng, std::size_t len) {
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i) v.set(i, rng() & 1u);
    return v;
}

// Row space as a sorted list of packed vectors; only for small dimensions.
std::vector<std::string> span_of(const BitMatrix& m) {
    std::vector<std::string> out;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << m.rows()); ++c) {
        BitVector v(m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            if ((c >> i) & 1u) v ^= m.row(i);
        out.push_back(v.to_string());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("bit vector basics") {
    auto v = BitVector::from_string("1011");
    CHECK(v.size() == 4);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.weight() == 3);
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 3});
    CHECK(v.to_string() == "1011");
    CHECK(v.to_word() == 0b1101);
    CHECK(BitVector::from_word(0b1101, 4) == v);

    const std::vector<std::size_t> keep{0, 3};
    CHECK(project(v, keep) == BitVector::from_string("11"));
    CHECK(project(v, std::vector<std::size_t>{}).size() == 0);
    CHECK(project(v, std::vector<std::size_t>{0, 1, 2, 3}) == v);

    CHECK(distance(v, BitVector::from_string("0011")) == 1);
    CHECK_THROWS(v ^= BitVector(5));
    CHECK(lex_less(BitVector::from_string("0111"), BitVector::from_string("1000")));
}

TEST_CASE("wide vectors keep bits past the length clear") {
    BitVector v(130);
    v.set(129);
    v.set(64);
    CHECK(v.weight() == 2);
    auto u = BitVector::unit(130, 3);
    v ^= u;
    CHECK(v.support() == std::vector<std::size_t>{3, 64, 129});
    CHECK(v.words().size() == 3);
    CHECK((v.words()[2] >> 2) == 0);
}

TEST_CASE("projection splits weight") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 90;
        const auto v = random_vector(rng, n);
        std::vector<std::size_t> s;
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < n; ++i) (rng() & 1u ? s : rest).push_back(i);
        CHECK(project(v, s).weight() + project(v, rest).weight() == v.weight());
    }
}

TEST_CASE("rref by hand") {
    const auto m = BitMatrix::from_strings({"110", "111"});
    const auto e = rref(m);
    CHECK(e.reduced == BitMatrix::from_strings({"110", "001"}));
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
    CHECK(e.rank == 2);

    const auto id = BitMatrix::identity(5);
    CHECK(rref(id).reduced == id);
    CHECK(rref(id).rank == 5);

    const BitMatrix zero(3, 4);
    CHECK(rref(zero).reduced == zero);
    CHECK(rref(zero).pivots.empty());
    CHECK(rref(zero).rank == 0);
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 10;
        const std::size_t cols = 1 + rng() % 80;
        const auto m = random_matrix(rng, rows, cols);
        const auto e = rref(m);
        CHECK(rref(e.reduced).reduced == e.reduced);
        CHECK(e.rank == e.pivots.size());
        CHECK(std::is_sorted(e.pivots.begin(), e.pivots.end()));
        CHECK(e.rank == rank(m.transpose()));
        for (std::size_t i = 0; i < e.rank; ++i)
            for (std::size_t r = 0; r < rows; ++r) CHECK(e.reduced.get(r, e.pivots[i]) == (r == i));
        if (rows <= 8) CHECK(span_of(e.reduced) == span_of(m));
    }
}

TEST_CASE("systematic form") {
    const auto g = BitMatrix::from_strings({"1001", "0111"});
    const auto s = systematic_form(g);
    CHECK(s.matrix == g);
    CHECK(s.perm == std::vector<std::size_t>{0, 1, 2, 3});

    const auto single = systematic_form(BitMatrix::from_strings({"01"}));
    CHECK(single.matrix == BitMatrix::from_strings({"10"}));
    CHECK(single.perm == std::vector<std::size_t>{1, 0});

    CHECK_THROWS_AS(systematic_form(BitMatrix::from_strings({"110", "110"})), rank_deficient);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cols = 4 + rng() % 12;
        const auto m = independent_rows(random_matrix(rng, 1 + rng() % 4, cols));
        if (m.rows() == 0) continue;
        const auto sf = systematic_form(m);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.rows(); ++j) CHECK(sf.matrix.get(i, j) == (i == j));
        // undo the permutation and compare row spaces
        BitMatrix back(m.rows(), cols);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (sf.matrix.get(i, j)) back.set(i, sf.perm[j]);
        CHECK(rref(back).reduced == rref(m).reduced);
    }
}

TEST_CASE("deleting columns drops dependent rows") {
    const auto id = BitMatrix::identity(3);
    const auto d = delete_columns(id, std::vector<std::size_t>{1});
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 2);
    CHECK(rank(d) == 2);

    const auto dup = BitMatrix::from_strings({"101", "100", "001"});
    CHECK(delete_columns(dup, std::vector<std::size_t>{}).rows() == 2);
    CHECK_THROWS_AS(delete_columns(id, std::vector<std::size_t>{3}), std::out_of_range);

    // Hamming [7,4] generator: minimum distance 3 keeps the dimension
    const auto g = BitMatrix::from_strings({"1000110", "0100101", "0010011", "0001111"});
    const auto g6 = delete_columns(g, std::vector<std::size_t>{0});
    CHECK(g6.rows() == 4);
    CHECK(g6.cols() == 6);
    CHECK(rank(g6) == 4);
}

TEST_CASE("null space") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 70);
        const auto ns = null_space(m);
        CHECK(ns.rows() + rank(m) == m.cols());
        if (ns.rows() > 0) {
            CHECK(m.mul_transpose(ns).is_zero());
            CHECK(rank(ns) == ns.rows());
        }
    }
}

TEST_CASE("products") {
    const auto m = BitMatrix::from_strings({"110", "011"});
    CHECK(m.mul_transpose(BitVector::from_string("111")) == BitVector::from_string("00"));
    CHECK(m.mul_transpose(BitVector::from_string("100")) == BitVector::from_string("10"));
    CHECK(m.combine_rows(BitVector::from_string("11")) == BitVector::from_string("101"));
    CHECK(m.transpose() == BitMatrix::from_strings({"10", "11", "01"}));
    CHECK(m.column(1) == BitVector::from_string("11"));
    CHECK(m.select_columns(std::vector<std::size_t>{2, 0}) == BitMatrix::from_strings({"01", "10"}));
}
