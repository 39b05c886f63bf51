#include "burau/conjugation.hpp"

#include <vector>

#include "burau/representation.hpp"

namespace burau {

namespace {

RationalF2 poly(std::initializer_list<int> exponents)
{
	LaurentF2 p;
	for (int e : exponents)
		p += LaurentF2::t_power(e);
	return RationalF2(p);
}

const RationalF2 &one_plus_t_sq()
{
	static const RationalF2 d = poly({0, 2});
	return d;
}

} // namespace

ConjugatorMf build_mf(const RationalF2 &f)
{
	const RationalF2 inv_d = one_plus_t_sq().inverse();
	const RationalF2 g = f * poly({0, 2});
	const RationalF2 top = f + poly({0, 1});
	MatRF m{{f, top, top},
	        {poly({3}) * inv_d, poly({1}) * inv_d, poly({3}) * inv_d},
	        {(g + poly({1, 2, 3})) * inv_d, (g + poly({0, 1, 3})) * inv_d, (g + poly({0})) * inv_d}};
	if (m.det() != RationalF2::t_power(2))
		throw ConsistencyError("det M_f = " + m.det().to_string() + ", expected t^2");
	return {f, std::move(m)};
}

MatRF conjugator_m()
{
	const RationalF2 inv_d = one_plus_t_sq().inverse();
	return MatRF{{poly({0}), poly({1}), poly({1})},
	             {poly({3}) * inv_d, poly({1}) * inv_d, poly({3}) * inv_d},
	             {poly({0, 1, 3}) * inv_d, poly({1, 2, 3}) * inv_d, poly({2}) * inv_d}};
}

MatRF x_matrix_rf() { return embed_rational(eval_braid_f2(GroupWord::x())); }
MatRF yxy_matrix_rf() { return embed_rational(eval_braid_f2(yxy_word())); }
MatRF family_x_matrix_rf(int i) { return embed_rational(eval_braid_f2(family_x(i, i))); }

bool check_eq4(const MatRF &m)
{
	if (!m.is_invertible())
		return false;
	const MatRF m_inv = m.inverse();
	const MatRF x = x_matrix_rf();
	const MatRF c = yxy_matrix_rf();
	const MatRF comm = c.inverse() * x.inverse() * c * x;
	return m * x * m_inv == RationalF2::t_power(1) * comm && m * c * m_inv == c;
}

bool conj_power_check(int i, int k, int depth)
{
	if (i < 0 || k < 1)
		throw UsageError("conj_power_check needs i >= 0 and k >= 1");
	if (i + k > depth)
		throw ResourceError("i + k = " + std::to_string(i + k) + " exceeds conjugation depth " + std::to_string(depth));
	const MatRF m = conjugator_m();
	const MatRF lhs = m.pow(k) * family_x_matrix_rf(i) * m.pow(-k);
	return proj_eq(lhs, family_x_matrix_rf(i + k));
}

bool conjugation_step_check(int i, bool projective)
{
	const MatRF m = conjugator_m();
	const MatRF xi = family_x_matrix_rf(i);
	const MatRF c = yxy_matrix_rf();
	const MatRF lhs = m * xi * m.inverse();
	const MatRF rhs = c.inverse() * xi.inverse() * c * xi;
	return projective ? proj_eq(lhs, rhs) : lhs == rhs;
}

bool lemma34_check() { return conjugation_step_check(1, false); }

bool lamplighter_window_check(int i, int window, int depth)
{
	if (i < 0 || window < 0)
		throw UsageError("lamplighter_window_check needs nonnegative arguments");
	if (i > depth)
		throw ResourceError("index " + std::to_string(i) + " exceeds conjugation depth " + std::to_string(depth));
	if (window > 4)
		throw ResourceError("window " + std::to_string(window) + " exceeds 4");
	const MatRF m = conjugator_m();
	const MatRF sq = family_x_matrix_rf(i).pow(2);
	if (!(sq * sq).is_scalar())
		return false;
	std::vector<MatRF> conjugates;
	for (int j = -window; j <= window; ++j)
		conjugates.push_back(m.pow(j) * sq * m.pow(-j));
	for (std::size_t a = 0; a < conjugates.size(); ++a)
		for (std::size_t b = a + 1; b < conjugates.size(); ++b)
			if (!proj_eq(conjugates[a] * conjugates[b], conjugates[b] * conjugates[a]))
				return false;
	return true;
}

MatRF eval_with_stable_letter(const GroupWord &w, const MatRF &stable)
{
	if (w.alphabet() != Alphabet::XYT)
		return embed_rational(eval_braid_f2(w));
	const MatRF x = x_matrix_rf();
	const MatRF y = embed_rational(eval_braid_f2(GroupWord::y()));
	const MatRF images[3] = {x, y, stable};
	const MatRF inverses[3] = {x.inverse(), y.inverse(), stable.inverse()};
	MatRF result = MatRF::identity();
	for (const auto &l : w.letters()) {
		const auto g = static_cast<std::size_t>(l.generator);
		result *= l.sign > 0 ? images[g] : inverses[g];
	}
	return result;
}

} // namespace burau
