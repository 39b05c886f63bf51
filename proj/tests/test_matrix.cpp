#include <array>
#include <functional>
#include <type_traits>

#include <gtest/gtest.h>

#include "burau/errors.hpp"
#include "burau/serialize.hpp"
#include "support.hpp"

using namespace burau;
using burau::testing::Rng;

namespace {

// Leibniz expansion over the six permutations of {0, 1, 2}.
template <class R> R leibniz_det(const Mat3<R> &m)
{
	static constexpr std::array<std::array<int, 3>, 6> perms{
	    {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
	R d;
	for (std::size_t k = 0; k < perms.size(); ++k) {
		R term = m(0, perms[k][0]) * m(1, perms[k][1]) * m(2, perms[k][2]);
		d = k < 3 ? d + term : d - term;
	}
	return d;
}

template <class R> Mat3<R> random_matrix(Rng &rng, R (*gen)(Rng &))
{
	Mat3<R> m;
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
			m(i, j) = gen(rng);
	return m;
}

LaurentZ small_z(Rng &rng) { return burau::testing::random_laurent_z(rng, 3, 3, 4); }
LaurentF2 small_f2(Rng &rng) { return burau::testing::random_laurent_f2(rng, 3, 3); }
RationalF2 small_rf(Rng &rng) { return burau::testing::random_rational(rng); }

MatF2 random_invertible_f2(Rng &rng)
{
	return reduce_mod2(burau::testing::random_unimodular_z(rng));
}

constexpr auto proj_eq_fn = [](const auto &a, const auto &b) -> decltype(proj_eq(a, b)) { return proj_eq(a, b); };

} // namespace

// Mixing rings is rejected at compile time.
static_assert(std::is_invocable_v<std::multiplies<>, const MatF2 &, const MatF2 &>);
static_assert(!std::is_invocable_v<std::multiplies<>, const MatF2 &, const MatZ &>);
static_assert(!std::is_invocable_v<std::plus<>, const MatF2 &, const MatRF &>);
static_assert(!std::is_invocable_v<std::multiplies<>, const LaurentZ &, const LaurentF2 &>);
static_assert(!std::is_invocable_v<decltype(proj_eq_fn), const MatZ &, const MatF2 &>);

TEST(Mat3, DeterminantMatchesLeibnizOracle)
{
	Rng rng(51);
	for (int k = 0; k < 200; ++k) {
		const auto z = random_matrix<LaurentZ>(rng, small_z);
		ASSERT_EQ(z.det(), leibniz_det(z));
		const auto f = random_matrix<LaurentF2>(rng, small_f2);
		ASSERT_EQ(f.det(), leibniz_det(f));
	}
	for (int k = 0; k < 50; ++k) {
		const auto r = random_matrix<RationalF2>(rng, small_rf);
		ASSERT_EQ(r.det(), leibniz_det(r));
	}
}

TEST(Mat3, DeterminantIsMultiplicative)
{
	Rng rng(52);
	for (int k = 0; k < 200; ++k) {
		const auto a = random_matrix<LaurentZ>(rng, small_z);
		const auto b = random_matrix<LaurentZ>(rng, small_z);
		ASSERT_EQ((a * b).det(), a.det() * b.det());
	}
}

TEST(Mat3, AdjugateTimesMatrixIsDeterminantScalar)
{
	Rng rng(53);
	for (int k = 0; k < 200; ++k) {
		const auto a = random_matrix<LaurentZ>(rng, small_z);
		ASSERT_EQ(a.adjugate() * a, a.det() * MatZ::identity());
		ASSERT_EQ(a * a.adjugate(), a.det() * MatZ::identity());
	}
}

TEST(Mat3, InverseLaws)
{
	Rng rng(54);
	for (int k = 0; k < 200; ++k) {
		const MatZ a = burau::testing::random_unimodular_z(rng);
		const MatZ b = burau::testing::random_unimodular_z(rng);
		ASSERT_EQ(a * a.inverse(), MatZ::identity());
		ASSERT_EQ(a.inverse() * a, MatZ::identity());
		ASSERT_EQ((a * b).inverse(), b.inverse() * a.inverse());
		ASSERT_EQ(a.inverse().inverse(), a);
		ASSERT_EQ(a.pow(-2), a.inverse() * a.inverse());
	}
	for (int k = 0; k < 50; ++k) {
		const auto r = random_matrix<RationalF2>(rng, small_rf);
		if (r.det().is_zero())
			continue;
		ASSERT_EQ(r * r.inverse(), MatRF::identity());
	}
}

TEST(Mat3, SingularInverseThrows)
{
	const MatZ two = LaurentZ(2) * MatZ::identity();
	EXPECT_FALSE(two.is_invertible());
	EXPECT_THROW(two.inverse(), SingularMatrixError);
	const MatF2 zero;
	EXPECT_THROW(zero.inverse(), SingularMatrixError);
	EXPECT_THROW(zero.is_scalar(), SingularMatrixError);
	EXPECT_THROW(proj_canonical(zero), SingularMatrixError);
	MatRF rank_one{{RationalF2(1), RationalF2(1), RationalF2()},
	               {RationalF2(1), RationalF2(1), RationalF2()},
	               {RationalF2(), RationalF2(), RationalF2(1)}};
	EXPECT_THROW(rank_one.inverse(), SingularMatrixError);
}

TEST(Mat3, IsScalar)
{
	EXPECT_TRUE((LaurentF2::t_power(5) * MatF2::identity()).is_scalar());
	EXPECT_TRUE((LaurentZ::monomial(-2, Integer(-1)) * MatZ::identity()).is_scalar());
	MatF2 m = MatF2::identity();
	m(0, 1) = LaurentF2::t_power(1);
	EXPECT_FALSE(m.is_scalar());
}

TEST(ProjMat, CanonicalFormIsInvariantUnderUnitScaling)
{
	Rng rng(55);
	for (int k = 0; k < 200; ++k) {
		const MatF2 a = random_invertible_f2(rng);
		const auto p = proj_canonical(a);
		ASSERT_EQ(proj_canonical(p.representative()), p);
		ASSERT_EQ(proj_canonical(LaurentF2::t_power(burau::testing::uniform(rng, -5, 5)) * a), p);
		const MatZ z = burau::testing::random_unimodular_z(rng);
		ASSERT_EQ(proj_canonical(LaurentZ::monomial(burau::testing::uniform(rng, -3, 3), Integer(-1)) * z),
		          proj_canonical(z));
	}
}

TEST(ProjMat, GroupLaws)
{
	Rng rng(56);
	for (int k = 0; k < 200; ++k) {
		const auto a = proj_canonical(random_invertible_f2(rng));
		const auto b = proj_canonical(random_invertible_f2(rng));
		ASSERT_TRUE((a * a.inverse()).is_identity());
		ASSERT_EQ((a * b).inverse(), b.inverse() * a.inverse());
		ASSERT_EQ(a * b, proj_canonical(a.representative() * b.representative()));
		ASSERT_EQ(a.pow(3), a * a * a);
		ASSERT_EQ(a.pow(-1), a.inverse());
	}
}

TEST(ProjMat, ScalarsCollapseToIdentity)
{
	EXPECT_TRUE(proj_canonical(LaurentF2::t_power(4) * MatF2::identity()).is_identity());
	EXPECT_TRUE(proj_eq(MatZ::identity(), LaurentZ::monomial(3, Integer(-1)) * MatZ::identity()));
	EXPECT_TRUE(proj_canonical(RationalF2(LaurentF2(1) + LaurentF2::t_power(1)) * MatRF::identity()).is_identity());
}

TEST(Serialize, RoundTripsAllRings)
{
	Rng rng(57);
	for (int k = 0; k < 100; ++k) {
		const auto z = random_matrix<LaurentZ>(rng, small_z);
		ASSERT_EQ(deserialize_mat_z(serialize(z)), z);
		const auto f = random_matrix<LaurentF2>(rng, small_f2);
		ASSERT_EQ(deserialize_mat_f2(serialize(f)), f);
		const auto r = random_matrix<RationalF2>(rng, small_rf);
		ASSERT_EQ(deserialize_mat_rf(serialize(r)), r);
	}
	const MatZ big = LaurentZ::monomial(0, Integer("123456789012345678901234567890")) * MatZ::identity();
	EXPECT_EQ(deserialize_mat_z(serialize(big)), big);
}

TEST(Serialize, KnownEncoding)
{
	const LaurentF2 o, t = LaurentF2::t_power(1);
	const MatF2 x{{o, o, t}, {t, o, t}, {o, t, t}};
	EXPECT_EQ(serialize(proj_canonical(x)), "f2:[[[],[],[[0]]],[[[0]],[],[[0]]],[[],[[0]],[[0]]]]");
}

TEST(Serialize, RejectsMismatchedTagsAndGarbage)
{
	const std::string f2 = serialize(MatF2::identity());
	EXPECT_THROW(deserialize_mat_z(f2), ParseError);
	EXPECT_THROW(deserialize_mat_f2("f2:[[1]]"), ParseError);
	EXPECT_THROW(deserialize_mat_f2("f2:not json"), ParseError);
	EXPECT_THROW(deserialize_mat_rf("nothing"), ParseError);
}
