#include <gtest/gtest.h>

#include "burau/conjugation.hpp"
#include "burau/errors.hpp"
#include "burau/identities.hpp"
#include "burau/representation.hpp"

using namespace burau;

namespace {

MatRF embed(const MatF2 &m)
{
	return m.map([](const LaurentF2 &p) { return RationalF2(p); });
}

MatRF comm(const MatRF &a, const MatRF &b) { return a.inverse() * b.inverse() * a * b; }

RationalF2 frac(const char *s) { return parse_fraction(s); }

} // namespace

TEST(Mf, DeterminantAndConjugationForSeveralF)
{
	for (const char *f : {"1", "t", "t^2", "1+t", "1/(1+t)"}) {
		const ConjugatorMf mf = build_mf(frac(f));
		EXPECT_EQ(mf.matrix.det(), RationalF2::t_power(2)) << f;
		EXPECT_TRUE(check_eq4(mf)) << f;
	}
}

TEST(Mf, AtOneIsTheConjugatorM)
{
	EXPECT_EQ(build_mf(RationalF2(1)).matrix, conjugator_m());
}

TEST(Mf, ConjugationAgainstDirectMatrixProducts)
{
	const MatRF m = conjugator_m();
	const MatRF x = embed(reference_x_f2());
	const MatRF c = embed(reference_yxy_f2());
	EXPECT_EQ(m * x * m.inverse(), RationalF2::t_power(1) * comm(c, x));
	EXPECT_EQ(m * c * m.inverse(), c);
	EXPECT_EQ(x_matrix_rf(), x);
	EXPECT_EQ(yxy_matrix_rf(), c);
}

TEST(Mf, PerturbedMatrixFails)
{
	MatRF m = conjugator_m();
	std::swap(m(0, 0), m(0, 1));
	EXPECT_FALSE(check_eq4(m));
	MatRF scaled = RationalF2(LaurentF2(1) + LaurentF2::t_power(1)) * conjugator_m();
	EXPECT_TRUE(check_eq4(scaled));
}

TEST(ConjPower, AllSmallIndices)
{
	EXPECT_TRUE(conj_power_check(0, 1));
	EXPECT_TRUE(conj_power_check(1, 2));
	EXPECT_TRUE(conj_power_check(0, 4));
	for (int i = 0; i <= 4; ++i)
		for (int k = 1; i + k <= kDefaultConjDepth; ++k)
			EXPECT_TRUE(conj_power_check(i, k)) << i << ' ' << k;
}

TEST(ConjPower, MatchesIteratedCommutatorOracle)
{
	const MatRF m = conjugator_m();
	const MatRF c = embed(reference_yxy_f2());
	MatRF xi = embed(reference_x_f2());
	for (int i = 1; i <= 4; ++i) {
		xi = comm(c, xi);
		EXPECT_TRUE(proj_eq(m.pow(i) * embed(reference_x_f2()) * m.pow(-i), xi)) << i;
		EXPECT_EQ(family_x_matrix_rf(i), xi) << i;
	}
}

TEST(ConjPower, ArgumentErrors)
{
	EXPECT_THROW(conj_power_check(3, 3), ResourceError);
	EXPECT_NO_THROW(conj_power_check(3, 3, 6));
	EXPECT_THROW(conj_power_check(-1, 1), UsageError);
	EXPECT_THROW(conj_power_check(0, 0), UsageError);
}

TEST(ConjugationStep, ExactForPositiveIndicesProjectiveAtZero)
{
	EXPECT_TRUE(lemma34_check());
	EXPECT_FALSE(conjugation_step_check(0, false));
	EXPECT_TRUE(conjugation_step_check(0, true));
	for (int i = 1; i <= 4; ++i) {
		EXPECT_TRUE(conjugation_step_check(i, false)) << i;
		EXPECT_TRUE(conjugation_step_check(i, true)) << i;
	}
}

TEST(Lamplighter, Windows)
{
	for (int i = 0; i <= 2; ++i)
		for (int w = 0; w <= 2; ++w)
			EXPECT_TRUE(lamplighter_window_check(i, w)) << i << ' ' << w;
	EXPECT_THROW(lamplighter_window_check(6, 1), ResourceError);
	EXPECT_THROW(lamplighter_window_check(0, 5), ResourceError);
}

TEST(StableLetter, EvaluatesWords)
{
	const MatRF m = conjugator_m();
	EXPECT_EQ(eval_with_stable_letter(parse_word("t x t^-1"), m), m * x_matrix_rf() * m.inverse());
	EXPECT_EQ(eval_with_stable_letter(GroupWord(), m), MatRF::identity());
}

TEST(Identities, YxyConjugatesFamilies)
{
	for (int i = 1; i <= 5; ++i) {
		EXPECT_TRUE(yxy_conjugates_b(i)) << i;
		EXPECT_TRUE(b_negative_from_b(i)) << i;
		EXPECT_TRUE(yxy_conjugates_b_negative(i)) << i;
	}
	for (int i = 0; i <= 5; ++i)
		EXPECT_TRUE(yxy_conjugates_x(i)) << i;
}

TEST(Identities, GammaEqualityNegativeControl)
{
	EXPECT_TRUE(gamma_equal(GroupWord::x(4), GroupWord()));
	EXPECT_FALSE(gamma_equal(GroupWord::x(2), GroupWord()));
	EXPECT_TRUE(gamma_identity(family_x(2).pow(4)));
	EXPECT_FALSE(gamma_identity(family_x(2)));
}

TEST(Identities, SquareSubgroupOrders)
{
	for (int j = 0; j <= 4; ++j)
		EXPECT_EQ(x_square_subgroup(j).size(), std::size_t{1} << (j + 1)) << j;
}

TEST(Identities, CommutatorsLieInSquareSubgroupUpToLargerIndex)
{
	for (int i = 0; i <= 3; ++i)
		for (int j = 0; j <= 3; ++j)
			EXPECT_TRUE(commutator_in_x_squares(i, j, std::max(i, j))) << i << ' ' << j;
}

TEST(Identities, SmallerIndexBoundFailsBelowTheDiagonal)
{
	// Bounding by the second index alone is too tight once i > j.
	EXPECT_FALSE(commutator_in_x_squares(1, 0, 0));
	EXPECT_FALSE(commutator_in_x_squares(2, 1, 1));
	EXPECT_TRUE(commutator_in_x_squares(0, 1, 1));
}

TEST(Identities, CommutatorExpansion)
{
	for (int N = 1; N <= 3; ++N)
		for (int i = 0; i < N; ++i)
			EXPECT_TRUE(commutator_expansion(i, N)) << i << ' ' << N;
	EXPECT_THROW(commutator_expansion(2, 2), UsageError);
	EXPECT_THROW(commutator_expansion(-1, 2), UsageError);
}

TEST(Identities, CommutatorCentralPart)
{
	for (int N = 0; N <= 3; ++N)
		for (int i = 0; i <= N; ++i)
			EXPECT_TRUE(commutator_central_part(i, N)) << i << ' ' << N;
}

TEST(Identities, XWordLiftsDepthBound)
{
	EXPECT_EQ(x_word(3), family_x(3));
	EXPECT_NO_THROW(x_word(kDefaultFamilyDepth + 1));
}
