#pragma once

#include <random>
#include <vector>

#include "burau/laurent.hpp"
#include "burau/matrix3.hpp"
#include "burau/rational.hpp"
#include "burau/words.hpp"

namespace burau::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline LaurentZ random_laurent_z(Rng &rng, int max_terms = 5, int span = 6, int coeff = 9)
{
	std::vector<LaurentZ::Term> terms;
	const int n = uniform(rng, 0, max_terms);
	for (int k = 0; k < n; ++k)
		terms.push_back({uniform(rng, -span, span), Integer(uniform(rng, -coeff, coeff))});
	return LaurentZ::from_terms(std::move(terms));
}

inline LaurentF2 random_laurent_f2(Rng &rng, int max_terms = 6, int span = 8)
{
	LaurentF2 p;
	const int n = uniform(rng, 0, max_terms);
	for (int k = 0; k < n; ++k)
		p += LaurentF2::t_power(uniform(rng, -span, span));
	return p;
}

inline PolyF2 random_poly_f2(Rng &rng, int degree = 6)
{
	std::vector<int> exps;
	for (int e = 0; e <= degree; ++e)
		if (uniform(rng, 0, 1))
			exps.push_back(e);
	return PolyF2::from_exponents(exps);
}

inline RationalF2 random_rational(Rng &rng)
{
	PolyF2 den = random_poly_f2(rng, 4);
	if (den.is_zero())
		den = PolyF2::one();
	return RationalF2(random_laurent_f2(rng, 4, 5), den);
}

/// Random word of the given alphabet; letters are not freely reduced.
inline std::vector<Letter> random_letters(Rng &rng, Alphabet a, int length)
{
	std::vector<Letter> out;
	for (int k = 0; k < length; ++k) {
		const int g = a == Alphabet::Braid ? uniform(rng, 1, 3) : uniform(rng, 0, 1);
		out.push_back({g, uniform(rng, 0, 1) ? 1 : -1});
	}
	return out;
}

inline GroupWord random_word(Rng &rng, Alphabet a, int max_length)
{
	const auto letters = random_letters(rng, a, uniform(rng, 0, max_length));
	return GroupWord::free_reduce(a, letters);
}

inline MatZ random_unimodular_z(Rng &rng, int factors = 4)
{
	// Products of elementary matrices and unit diagonals are invertible over Z[t, 1/t].
	MatZ m = MatZ::identity();
	for (int k = 0; k < factors; ++k) {
		MatZ e = MatZ::identity();
		const int i = uniform(rng, 0, 2);
		int j = uniform(rng, 0, 1);
		if (j >= i)
			++j;
		e(i, j) = random_laurent_z(rng, 2, 2, 2);
		const int d = uniform(rng, 0, 2);
		e(d, d) = LaurentZ::monomial(uniform(rng, -2, 2), Integer(uniform(rng, 0, 1) ? 1 : -1));
		m = m * e;
	}
	return m;
}

} // namespace burau::testing
