#include "burau/identities.hpp"

#include "burau/representation.hpp"

namespace burau {

namespace {

GroupWord c_pow(long k) { return yxy_word().pow(k); }

} // namespace

GroupWord x_word(int i) { return family_x(i, i); }

bool gamma_equal(const GroupWord &a, const GroupWord &b) { return gamma_eval(a) == gamma_eval(b); }
bool gamma_identity(const GroupWord &w) { return gamma_eval(w).is_identity(); }

bool yxy_conjugates_b(int i)
{
	return gamma_equal(c_pow(1) * family_b(i) * c_pow(-1), family_b(1).inverse() * family_b(i + 1));
}

bool b_negative_from_b(int i)
{
	return gamma_equal(family_b(-i), c_pow(-i) * family_b(i).inverse() * c_pow(i));
}

bool yxy_conjugates_b_negative(int i)
{
	return gamma_equal(c_pow(-1) * family_b(-i) * c_pow(1), family_b(-1).inverse() * family_b(-i - 1));
}

bool yxy_conjugates_x(int i)
{
	return gamma_equal(c_pow(-1) * x_word(i) * c_pow(1), x_word(i) * x_word(i + 1).inverse());
}

FiniteGroupTable x_square_subgroup(int j)
{
	std::vector<ProjF2> gens;
	for (int k = 0; k <= j; ++k)
		gens.push_back(gamma_eval(x_word(k).pow(2)));
	return FiniteGroupTable::closure(gens, std::size_t{1} << 16);
}

bool commutator_in_x_squares(int i, int j, int bound)
{
	return x_square_subgroup(bound).find(gamma_eval(commutator(x_word(i), x_word(j)))).has_value();
}

namespace {

// x_hi^-1 x_{hi-1}^-1 ... x_lo^-1
GroupWord descending_inverses(int hi, int lo)
{
	GroupWord w;
	for (int k = hi; k >= lo; --k)
		w *= x_word(k).inverse();
	return w;
}

} // namespace

bool commutator_expansion(int i, int N)
{
	if (i < 0 || i >= N)
		throw UsageError("commutator_expansion needs 0 <= i < N");
	const GroupWord lhs = commutator(x_word(i), x_word(N + 1));
	const GroupWord rhs = commutator(x_word(i), x_word(N)) * x_word(N).pow(-2) * c_pow(-1) *
	                      descending_inverses(N - 1, i) * x_word(N) * c_pow(1) * x_word(i) * x_word(N + 1);
	return gamma_equal(lhs, rhs);
}

bool commutator_central_part(int i, int N)
{
	if (i < 0 || i > N)
		throw UsageError("commutator_central_part needs 0 <= i <= N");
	const GroupWord lhs = commutator(x_word(i), x_word(N + 1));
	const GroupWord tail = c_pow(-1) * descending_inverses(N, i) * c_pow(1) * x_word(i) * x_word(N + 1);
	return x_square_subgroup(N).find(gamma_eval(lhs * tail.inverse())).has_value();
}

} // namespace burau
