#include <gtest/gtest.h>

#include "evencycle/linalg.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/random_instances.hpp"

using namespace evencycle;

namespace {

Field f2() { return Field(GF2Poly::from_string("11")); }

PolyF poly(std::initializer_list<std::uint64_t> c)
{
    PolyF p;
    for (auto v : c)
        p.coeffs.push_back(FieldElem{v});
    return p;
}

MatrixF multiply(const Field& f, const MatrixF& a, const MatrixF& b)
{
    MatrixF c(a.size(), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k)
                c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    return c;
}

PolyMatrixF random_poly_matrix(const Field& f, std::size_t n, std::size_t max_deg, Rng& rng)
{
    PolyMatrixF b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t deg = rng() % (max_deg + 1);
            for (std::size_t k = 0; k <= deg; ++k)
                b(i, j).coeffs.push_back(rng() % 3 == 0 ? f.zero() : f.random(rng));
        }
    return b;
}

}  // namespace

TEST(DetF, Examples)
{
    const Field f = f2();
    EXPECT_EQ(det_f(f, MatrixF::identity(4, f.zero(), f.one())), f.one());

    MatrixF zero_row(3, f.one());
    for (std::size_t j = 0; j < 3; ++j)
        zero_row(1, j) = f.zero();
    EXPECT_TRUE(det_f(f, zero_row).is_zero());

    const MatrixF m(2, {f.one(), f.one(), f.one(), f.zero()});
    EXPECT_EQ(det_f(f, m), f.one());
    EXPECT_EQ(det_f(f, MatrixF(0)), f.one());
}

TEST(DetF, MatchesLeibniz)
{
    Rng rng(21);
    for (unsigned d : {1u, 2u, 8u, 20u}) {
        const Field f = make_field(d, rng);
        for (std::size_t n = 1; n <= 5; ++n) {
            for (int t = 0; t < 60; ++t) {
                const MatrixF m = instances::random_matrix_f(f, n, rng);
                const auto [per, det] = oracle::leibniz(f, m);
                ASSERT_EQ(det_f(f, m), det);
                ASSERT_EQ(per, det);  // characteristic 2
            }
        }
    }
}

TEST(DetF, Multiplicative)
{
    Rng rng(22);
    const Field f = make_field(8, rng);
    for (int t = 0; t < 200; ++t) {
        const MatrixF a = instances::random_matrix_f(f, 4, rng);
        const MatrixF b = instances::random_matrix_f(f, 4, rng);
        ASSERT_EQ(det_f(f, multiply(f, a, b)), f.mul(det_f(f, a), det_f(f, b)));
    }
}

TEST(Lagrange, Examples)
{
    Rng rng(23);
    const Field f = make_field(8, rng);
    const FieldElem c = f.from_index(0x5a);
    std::vector<std::pair<FieldElem, FieldElem>> pts;
    for (std::uint64_t i = 0; i <= 6; ++i)
        pts.emplace_back(f.from_index(i), c);
    PolyF q = lagrange_interpolate(f, pts);
    EXPECT_EQ(q.degree(), 0);
    EXPECT_EQ(q.coeff(0), c);

    const Field g = f2();
    q = lagrange_interpolate(g, {{g.zero(), g.zero()}, {g.one(), g.one()}});
    EXPECT_EQ(q, poly({0, 1}));
}

TEST(Lagrange, DuplicateAbscissa)
{
    const Field g = f2();
    EXPECT_THROW(lagrange_interpolate(g, {{g.one(), g.zero()}, {g.one(), g.one()}}), UsageError);
}

TEST(Lagrange, EvaluateInterpolateRoundTrip)
{
    Rng rng(24);
    const Field f = make_field(16, rng);
    for (int t = 0; t < 100; ++t) {
        const std::size_t deg = rng() % 12;
        PolyF p;
        for (std::size_t i = 0; i <= deg; ++i)
            p.coeffs.push_back(f.random(rng));
        std::vector<std::pair<FieldElem, FieldElem>> pts;
        for (std::size_t i = 0; i <= deg; ++i) {
            const FieldElem x = f.random(rng);
            bool dup = false;
            for (const auto& pt : pts)
                dup = dup || pt.first == x;
            if (dup) {
                --i;
                continue;
            }
            pts.emplace_back(x, evaluate(f, p, x));
        }
        ASSERT_EQ(lagrange_interpolate(f, pts), p);
    }
}

TEST(DetPoly, Examples)
{
    Rng rng(25);
    const Field f = make_field(4, rng);
    PolyMatrixF diag(2);
    diag(0, 0) = poly({0, 1});
    diag(1, 1) = poly({0, 1});
    EXPECT_EQ(det_poly(f, diag, 2), poly({0, 0, 1}));

    PolyMatrixF equal_rows(2);
    equal_rows(0, 0) = equal_rows(1, 0) = poly({0, 1});
    equal_rows(0, 1) = equal_rows(1, 1) = poly({1});
    EXPECT_TRUE(det_poly(f, equal_rows, 2).is_zero());

    PolyMatrixF id(2);
    id(0, 0) = id(1, 1) = poly({1});
    EXPECT_EQ(det_poly(f, id, 0), poly({1}));
}

TEST(DetPoly, FieldTooSmall)
{
    const Field g = f2();
    PolyMatrixF id(2);
    id(0, 0) = id(1, 1) = poly({1});
    EXPECT_THROW(det_poly(g, id, 2), UsageError);
    EXPECT_EQ(det_poly(g, id, 1), poly({1}));
}

TEST(DetPoly, AgreesWithPointwiseDeterminants)
{
    Rng rng(26);
    const Field f = make_field(12, rng);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const PolyMatrixF b = random_poly_matrix(f, n, 3, rng);
        const PolyF det = det_poly(f, b, 3 * n);
        for (int s = 0; s < 5; ++s) {
            const FieldElem rho = f.random(rng);
            ASSERT_EQ(evaluate(f, det, rho), det_f(f, evaluate(f, b, rho)));
        }
    }
}

TEST(DetPolyFractionFree, AgreesWithInterpolation)
{
    Rng rng(27);
    const Field f = make_field(10, rng);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const PolyMatrixF b = random_poly_matrix(f, n, 3, rng);
        ASSERT_EQ(det_poly_fraction_free(f, b), det_poly(f, b, 3 * n));
    }
}

TEST(DetPolyFractionFree, WorksOverF2)
{
    const Field g = f2();
    PolyMatrixF diag(2);
    diag(0, 0) = poly({0, 1});
    diag(1, 1) = poly({0, 1});
    EXPECT_EQ(det_poly_fraction_free(g, diag), poly({0, 0, 1}));

    // [[1, r], [r, 1]] -> 1 + r^2
    PolyMatrixF b(2);
    b(0, 0) = b(1, 1) = poly({1});
    b(0, 1) = b(1, 0) = poly({0, 1});
    EXPECT_EQ(det_poly_fraction_free(g, b), poly({1, 0, 1}));

    // zero leading pivot forces a row swap
    PolyMatrixF swap(2);
    swap(0, 1) = poly({1});
    swap(1, 0) = poly({1, 1});
    EXPECT_EQ(det_poly_fraction_free(g, swap), poly({1, 1}));
}
