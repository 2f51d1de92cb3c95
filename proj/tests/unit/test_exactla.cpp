#include <doctest.h>

#include "support/generators.hpp"
#include "toruscalc/exactla.hpp"

using namespace toruscalc;
using toruscalc::testing::Gen;

namespace {

IntMatrix int_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long x : r)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("smith form on small fixed matrices")
{
    const SmithForm id = smith_normal_form(IntMatrix::identity(2));
    CHECK(id.invariant_factors == ints({1, 1}));
    CHECK(id.rank == 2);

    const SmithForm zero = smith_normal_form(IntMatrix(3, 2));
    CHECK(zero.invariant_factors.empty());
    CHECK(zero.rank == 0);

    // gcd of entries 2, |det| = 8
    const SmithForm s = smith_normal_form(int_rows({{2, 4}, {6, 8}}));
    CHECK(s.invariant_factors == ints({2, 4}));

    const SmithForm t = smith_normal_form(int_rows({{0, 6, 0}, {4, 0, 0}, {0, 0, 10}}));
    CHECK(t.invariant_factors == ints({2, 2, 60}));
}

TEST_CASE("smith form agrees with the gcd-of-minors oracle")
{
    Gen gen(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rows = static_cast<std::size_t>(gen.uniform(1, 5));
        const auto cols = static_cast<std::size_t>(gen.uniform(1, 5));
        const IntMatrix m = trial % 3 == 0
                                ? gen.int_matrix_of_rank(rows, cols,
                                                         static_cast<std::size_t>(gen.uniform(0, 2)), 3)
                                : gen.int_matrix(rows, cols, trial % 2 ? 4 : 12);
        const SmithForm s = smith_normal_form(m);
        CAPTURE(trial);

        Integer prod = 1;
        for (std::size_t j = 1; j <= std::min(rows, cols); ++j) {
            const Integer g = toruscalc::testing::minor_gcd(m, j);
            if (j <= s.rank) {
                prod *= s.invariant_factors[j - 1];
                CHECK(prod == g);
            } else {
                CHECK(g == 0);
            }
        }
        CHECK(s.rank == s.invariant_factors.size());
        for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            if (i + 1 < s.invariant_factors.size())
                CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
        CHECK(s.rank == rank(toruscalc::testing::to_rational(m)));
    }
}

TEST_CASE("smith form is invariant under unimodular changes")
{
    Gen gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rows = static_cast<std::size_t>(gen.uniform(1, 4));
        const auto cols = static_cast<std::size_t>(gen.uniform(1, 4));
        const IntMatrix m = gen.int_matrix(rows, cols, 6);
        const IntMatrix u = gen.unimodular(rows, 8);
        const IntMatrix v = gen.unimodular(cols, 8);
        IntMatrix umv(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t a = 0; a < rows; ++a)
                    for (std::size_t b = 0; b < cols; ++b)
                        umv(i, j) += u(i, a) * m(a, b) * v(b, j);
        CHECK(smith_normal_form(m).invariant_factors == smith_normal_form(umv).invariant_factors);
    }
}

TEST_CASE("direct summands")
{
    const std::vector<IntVector> e12{ints({1, 0, 0}), ints({0, 1, 0})};
    CHECK(is_direct_summand(e12));
    const std::vector<IntVector> two{ints({2, 0})};
    CHECK_FALSE(is_direct_summand(two));
    const std::vector<IntVector> det2{ints({1, 1}), ints({1, -1})};
    CHECK_FALSE(is_direct_summand(det2));
    const std::vector<IntVector> dependent{ints({1, 2}), ints({2, 4})};
    CHECK_FALSE(is_direct_summand(dependent));
    const std::vector<IntVector> mismatch{ints({1, 0}), ints({0, 1, 0})};
    CHECK_THROWS_AS(is_direct_summand(mismatch), std::invalid_argument);

    CHECK(is_primitive(ints({3, 5})));
    CHECK_FALSE(is_primitive(ints({4, -6})));
    CHECK(gcd_of(ints({4, -6, 10})) == 2);
}

TEST_CASE("rank and kernel on fixed matrices")
{
    const RankKernel id = rank_and_kernel(RatMatrix::identity(4));
    CHECK(id.rank == 4);
    CHECK(id.kernel_basis.empty());

    const RankKernel z = rank_and_kernel(RatMatrix(3, 4));
    CHECK(z.rank == 0);
    CHECK(z.kernel_basis.size() == 4);

    RatMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    const RankKernel rk = rank_and_kernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel_basis.size() == 1);
    const RatVector& v = rk.kernel_basis[0];
    // proportional to (-2, 1)
    CHECK(v[0] == -2 * v[1]);
    CHECK(v[1] != 0);
}

TEST_CASE("rank and kernel match the minor oracle on random matrices")
{
    Gen gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto rows = static_cast<std::size_t>(gen.uniform(1, 5));
        const auto cols = static_cast<std::size_t>(gen.uniform(1, 5));
        RatMatrix m = gen.rat_matrix(rows, cols, 3);
        if (trial % 4 == 0 && rows > 1)
            for (std::size_t j = 0; j < cols; ++j)
                m(rows - 1, j) = m(0, j) * Rational(2, 3);
        const RankKernel rk = rank_and_kernel(m);
        CAPTURE(trial);
        CHECK(rk.rank == toruscalc::testing::rank_by_minors(m));
        CHECK(rk.rank + rk.kernel_basis.size() == cols);
        for (const RatVector& v : rk.kernel_basis) {
            const RatVector img = m.apply(v);
            CHECK(std::all_of(img.begin(), img.end(), [](const Rational& x) { return x == 0; }));
        }
        // the kernel vectors are independent
        if (!rk.kernel_basis.empty())
            CHECK(rank(RatMatrix::from_columns(cols, rk.kernel_basis)) == rk.kernel_basis.size());
    }
}

TEST_CASE("subspace membership and coordinates")
{
    Subspace s(3);
    const RatVector a{1, 2, 0};
    const RatVector b{0, 1, 1};
    CHECK(s.add(a));
    CHECK(s.add(b));
    CHECK_FALSE(s.add(RatVector{1, 3, 1}));
    CHECK(s.dimension() == 2);
    CHECK(s.generator_count() == 3);

    const RatVector v{2, Rational(7, 2), Rational(-1, 2)};
    REQUIRE(s.contains(v));
    const auto c = s.coordinates(v);
    REQUIRE(c);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK((*c)[0] * a[i] + (*c)[1] * b[i] == v[i]);
    CHECK_FALSE(s.contains(RatVector{0, 0, 1}));
    CHECK_FALSE(s.coordinates(RatVector{0, 0, 1}));
}

TEST_CASE("rationals stay reduced")
{
    CHECK(to_string(Rational(1, 4) + Rational(5, 4)) == "3/2");
    CHECK(to_string(Rational(-1, 3) * Rational(6)) == "-2");
}
