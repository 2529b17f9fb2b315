#include <set>

#include <gtest/gtest.h>

#include "evencycle/field.hpp"
#include "evencycle/gf2poly.hpp"

using namespace evencycle;

namespace {

// Irreducibility by trial division against every polynomial of degree 1..deg/2.
bool irreducible_by_trial_division(const GF2Poly& p)
{
    const int deg = p.degree();
    for (int k = 1; 2 * k <= deg; ++k) {
        for (std::uint64_t low = 0; low < (std::uint64_t{1} << k); ++low) {
            GF2Poly q = GF2Poly::from_word(low);
            q.set(static_cast<unsigned>(k), true);
            if ((p % q).is_zero())
                return false;
        }
    }
    return true;
}

Field field_from(const char* g2) { return Field(GF2Poly::from_string(g2)); }

}  // namespace

TEST(GF2Poly, NormalizesAndPrints)
{
    EXPECT_EQ(GF2Poly::from_string("0001011").to_string(), "1011");
    EXPECT_EQ(GF2Poly::from_string("0").degree(), -1);
    EXPECT_TRUE(GF2Poly().is_zero());
    EXPECT_EQ((GF2Poly::from_string("11") * GF2Poly::from_string("11")).to_string(), "101");
    EXPECT_THROW(GF2Poly::from_string("12"), UsageError);
}

TEST(GF2Poly, MultiWordArithmetic)
{
    const GF2Poly a = GF2Poly::monomial(100) + GF2Poly::from_word(1);
    const GF2Poly b = GF2Poly::monomial(70) + GF2Poly::monomial(3);
    const GF2Poly prod = a * b;
    EXPECT_EQ(prod.degree(), 170);
    EXPECT_TRUE((prod % a).is_zero());
    EXPECT_EQ(gcd(prod, b), b);
}

TEST(IsIrreducible, Examples)
{
    EXPECT_TRUE(is_irreducible(GF2Poly::from_string("11")));     // x+1
    EXPECT_FALSE(is_irreducible(GF2Poly::from_string("101")));   // (x+1)^2
    EXPECT_TRUE(is_irreducible(GF2Poly::from_string("1011")));   // x^3+x+1
    EXPECT_TRUE(is_irreducible(GF2Poly::from_string("1101")));   // x^3+x^2+1
    EXPECT_TRUE(is_irreducible(GF2Poly::from_string("10")));     // x
}

TEST(IsIrreducible, RejectsConstants)
{
    EXPECT_THROW(is_irreducible(GF2Poly()), UsageError);
    EXPECT_THROW(is_irreducible(GF2Poly::from_word(1)), UsageError);
}

TEST(IsIrreducible, MatchesTrialDivisionExhaustively)
{
    for (unsigned d = 1; d <= 10; ++d) {
        for (std::uint64_t low = 0; low < (std::uint64_t{1} << d); ++low) {
            GF2Poly p = GF2Poly::from_word(low);
            p.set(d, true);
            ASSERT_EQ(is_irreducible(p), irreducible_by_trial_division(p)) << p.to_string();
        }
    }
}

TEST(IsIrreducible, DegreeThreeHasExactlyTwo)
{
    std::set<std::string> found;
    for (std::uint64_t low = 0; low < 8; ++low) {
        GF2Poly p = GF2Poly::from_word(low);
        p.set(3, true);
        if (is_irreducible(p))
            found.insert(p.to_string());
    }
    EXPECT_EQ(found, (std::set<std::string>{"1011", "1101"}));
}

TEST(MakeField, DegreeOneAndThree)
{
    Rng rng(1);
    const Field f1 = make_field(1, rng);
    EXPECT_EQ(f1.modulus().degree(), 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng r(seed);
        const std::string g = make_field(3, r).modulus().to_string();
        EXPECT_TRUE(g == "1011" || g == "1101") << g;
    }
}

TEST(MakeField, DeterministicForSeed)
{
    for (unsigned d : {2u, 8u, 20u, 33u, 64u}) {
        Rng a(99), b(99);
        EXPECT_EQ(make_field(d, a).modulus(), make_field(d, b).modulus());
    }
}

TEST(MakeField, RejectsBadDegree)
{
    Rng rng(0);
    EXPECT_THROW(make_field(0, rng), UsageError);
    EXPECT_THROW(make_field(65, rng), UsageError);
    EXPECT_THROW(Field(GF2Poly::from_string("101")), UsageError);
}

TEST(FieldArith, Examples)
{
    const Field f = field_from("1011");
    EXPECT_EQ(f.mul(f.from_index(0b010), f.from_index(0b100)), f.from_index(0b011));
    EXPECT_EQ(f.inv(f.one()), f.one());
    const FieldElem a = f.from_index(0b110);
    EXPECT_TRUE(f.add(a, a).is_zero());
    EXPECT_THROW(f.inv(f.zero()), DivisionByZero);
    EXPECT_EQ(f.to_string(f.from_index(0b011)), "011");
}

TEST(FieldArith, MatchesPolynomialOracle)
{
    // product via generic GF2Poly multiplication and remainder
    Rng rng(5);
    for (unsigned d : {1u, 2u, 7u, 8u, 31u, 32u, 33u, 63u, 64u}) {
        const Field f = make_field(d, rng);
        for (int t = 0; t < 300; ++t) {
            const FieldElem a = f.random(rng), b = f.random(rng);
            const GF2Poly expected = (GF2Poly::from_word(a.bits) * GF2Poly::from_word(b.bits)) % f.modulus();
            ASSERT_EQ(f.mul(a, b).bits, expected.low_word()) << "d=" << d;
        }
    }
}

TEST(FieldArith, AxiomsOnRandomTriples)
{
    Rng rng(11);
    for (unsigned d : {1u, 2u, 8u, 20u, 64u}) {
        const Field f = make_field(d, rng);
        for (int t = 0; t < 10000; ++t) {
            const FieldElem a = f.random(rng), b = f.random(rng), c = f.random(rng);
            ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            ASSERT_EQ(f.mul(a, b), f.mul(b, a));
            ASSERT_EQ(f.add(a, b), f.add(b, a));
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_TRUE(f.add(a, a).is_zero());
            if (!a.is_zero()) {
                ASSERT_EQ(f.mul(a, f.inv(a)), f.one());
            }
            // no zero divisors
            ASSERT_EQ(f.mul(a, b).is_zero(), a.is_zero() || b.is_zero());
        }
    }
}

TEST(RandomFieldElem, UniformOverTwoElements)
{
    Rng rng(2024);
    const Field f = make_field(1, rng);
    int zeros = 0;
    for (int t = 0; t < 10000; ++t)
        zeros += f.random(rng).is_zero() ? 1 : 0;
    EXPECT_GE(zeros, 4500);
    EXPECT_LE(zeros, 5500);
}

TEST(RandomFieldElem, CoversD8)
{
    Rng rng(3);
    const Field f = make_field(8, rng);
    std::set<std::uint64_t> seen;
    for (int t = 0; t < 10000; ++t)
        seen.insert(f.random(rng).bits);
    EXPECT_GE(seen.size(), 200u);
}

TEST(RandomFieldElem, DeterministicPerSeedAndIndex)
{
    const Field f = field_from("100011011");  // x^8+x^4+x^3+x+1
    Rng a(77), b(77);
    for (int k = 0; k < 50; ++k)
        ASSERT_EQ(f.random(a), f.random(b));
}

TEST(FieldArith, FromIndexRange)
{
    const Field f = field_from("1011");
    EXPECT_EQ(f.from_index(7).bits, 7u);
    EXPECT_THROW(f.from_index(8), UsageError);
}
