#include "burau/representation.hpp"

namespace burau {

namespace {

LaurentZ tz(int e, int c = 1) { return LaurentZ::monomial(e, Integer(c)); }
LaurentF2 tf(int e) { return LaurentF2::t_power(e); }

BurauConvention make_standard()
{
	const LaurentZ zero, one(1);
	BurauConvention c;
	c.sigma[0] = MatZ{{tz(1, -1), one, zero}, {zero, one, zero}, {zero, zero, one}};
	c.sigma[1] = MatZ{{one, zero, zero}, {tz(1), tz(1, -1), one}, {zero, zero, one}};
	c.sigma[2] = MatZ{{one, zero, zero}, {zero, one, zero}, {zero, tz(1), tz(1, -1)}};
	return c;
}

struct GeneratorTables {
	std::array<MatZ, 3> z, z_inv;
	std::array<MatF2, 3> f2, f2_inv;
};

const GeneratorTables &tables()
{
	static const GeneratorTables t = [] {
		GeneratorTables g;
		const auto &conv = BurauConvention::standard();
		for (std::size_t i = 0; i < 3; ++i) {
			g.z[i] = conv.sigma[i];
			g.z_inv[i] = conv.sigma[i].inverse();
			g.f2[i] = reduce_mod2(g.z[i]);
			g.f2_inv[i] = reduce_mod2(g.z_inv[i]);
		}
		return g;
	}();
	return t;
}

template <class M> M eval_with(const GroupWord &w, const std::array<M, 3> &fwd, const std::array<M, 3> &inv)
{
	const GroupWord braid = to_braid(w);
	M result = M::identity();
	for (const auto &l : braid.letters()) {
		const auto idx = static_cast<std::size_t>(l.generator - 1);
		result *= l.sign > 0 ? fwd[idx] : inv[idx];
	}
	return result;
}

} // namespace

const BurauConvention &BurauConvention::standard()
{
	static const BurauConvention c = make_standard();
	return c;
}

std::vector<std::string> BurauConvention::violations() const
{
	std::vector<std::string> bad;
	const MatZ &s1 = sigma[0], &s2 = sigma[1], &s3 = sigma[2];
	if (s1 * s2 * s1 != s2 * s1 * s2)
		bad.emplace_back("s1 s2 s1 = s2 s1 s2");
	if (s2 * s3 * s2 != s3 * s2 * s3)
		bad.emplace_back("s2 s3 s2 = s3 s2 s3");
	if (s1 * s3 != s3 * s1)
		bad.emplace_back("s1 s3 = s3 s1");
	const MatZ x = s1 * s2 * s3;
	if (reduce_mod2(x) != reference_x_f2())
		bad.emplace_back("mod-2 image of x");
	if (reduce_mod2(x * s1) != reference_y_f2())
		bad.emplace_back("mod-2 image of y");
	return bad;
}

MatF2 reference_x_f2()
{
	const LaurentF2 o;
	return MatF2{{o, o, tf(1)}, {tf(1), o, tf(1)}, {o, tf(1), tf(1)}};
}

MatF2 reference_y_f2()
{
	const LaurentF2 o;
	return MatF2{{o, o, tf(1)}, {tf(2), tf(1), tf(1)}, {o, tf(1), tf(1)}};
}

MatF2 reference_yxy_f2()
{
	const LaurentF2 o;
	return MatF2{{tf(4), o, o}, {tf(4), tf(3) + tf(4), tf(4)}, {tf(4), tf(3), o}};
}

MatZ sigma_matrix_z(int i)
{
	if (i < 1 || i > 3)
		throw UsageError("sigma index must be 1, 2 or 3");
	return tables().z[static_cast<std::size_t>(i - 1)];
}

MatF2 sigma_matrix_f2(int i)
{
	if (i < 1 || i > 3)
		throw UsageError("sigma index must be 1, 2 or 3");
	return tables().f2[static_cast<std::size_t>(i - 1)];
}

MatZ eval_braid_z(const GroupWord &w) { return eval_with(w, tables().z, tables().z_inv); }
MatF2 eval_braid_f2(const GroupWord &w) { return eval_with(w, tables().f2, tables().f2_inv); }

ProjF2 gamma_eval(const GroupWord &w) { return proj_canonical(eval_braid_f2(w)); }

bool kernel_mod2(const GroupWord &w) { return eval_braid_f2(w) == MatF2::identity(); }
bool kernel_gamma(const GroupWord &w) { return eval_braid_f2(w).is_scalar(); }

LaurentZ det_of_word_z(const GroupWord &w) { return eval_braid_z(w).det(); }
LaurentF2 det_of_word_f2(const GroupWord &w) { return eval_braid_f2(w).det(); }

} // namespace burau
