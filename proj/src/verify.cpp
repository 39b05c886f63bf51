#include "burau/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "burau/conjugation.hpp"
#include "burau/identities.hpp"
#include "burau/representation.hpp"
#include "burau/serialize.hpp"

namespace burau {

std::string to_string(CheckStatus s)
{
	switch (s) {
	case CheckStatus::Pass:
		return "pass";
	case CheckStatus::Fail:
		return "fail";
	case CheckStatus::Skipped:
		return "skipped";
	}
	return "skipped";
}

void RunConfig::validate() const
{
	if (family_depth < 1 || conj_depth < 1 || stab_n_max < 1 || closure_cap < 1 || kernel_depth < 1)
		throw UsageError("run bounds must be positive");
}

namespace {

struct Outcome {
	CheckStatus status;
	std::string detail;
};

Outcome verdict(bool ok, std::string detail = {})
{
	return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

Outcome skipped(std::string why) { return {CheckStatus::Skipped, std::move(why)}; }

class Context {
public:
	explicit Context(const RunConfig &cfg) : cfg(cfg) {}

	const FiniteGroupTable &stab(int n)
	{
		auto it = tables_.find(n);
		if (it == tables_.end()) {
			FiniteGroupTable g = cfg.cache_dir ? stab7_cached(n, *cfg.cache_dir, cfg.closure_cap)
			                                   : stab7(n, cfg.closure_cap);
			it = tables_.emplace(n, std::move(g)).first;
		}
		return it->second;
	}

	const RunConfig &cfg;

private:
	std::map<int, FiniteGroupTable> tables_;
};

using Runner = std::function<Outcome(Context &)>;

struct Entry {
	std::string id;
	std::string citation;
	Runner run;
};

using W = GroupWord;

LaurentZ tz(int e) { return LaurentZ::t_power(e); }

// Runs `pred` for each index and reports the first failure.
template <class Pred> Outcome for_indices(int lo, int hi, const std::string &name, Pred pred)
{
	for (int i = lo; i <= hi; ++i)
		if (!pred(i))
			return verdict(false, "fails at " + name + " = " + std::to_string(i));
	return verdict(true, name + " = " + std::to_string(lo) + ".." + std::to_string(hi));
}

Outcome relation_outcome(const RelationReport &report)
{
	for (const auto &o : report.outcomes)
		if (!o.holds)
			return verdict(false, std::to_string(report.failures()) + " of " + std::to_string(report.outcomes.size()) +
			                          " relations fail, first: " + o.relation);
	return verdict(true, std::to_string(report.outcomes.size()) + " relations hold");
}

template <class Build> Runner stab_relations(int n, Build build)
{
	return [n, build](Context &ctx) -> Outcome {
		if (n > ctx.cfg.stab_n_max)
			return skipped("n exceeds stab n-max");
		const auto &g = ctx.stab(n);
		const auto rels = build(n);
		return relation_outcome(check_relations(g, stab7_assignment(g, n), rels));
	};
}

Runner stab_runner(int n, std::function<Outcome(const FiniteGroupTable &, int)> f)
{
	return [n, f](Context &ctx) -> Outcome {
		if (n > ctx.cfg.stab_n_max)
			return skipped("n exceeds stab n-max");
		return f(ctx.stab(n), n);
	};
}

std::string order_text(std::size_t got, std::size_t want)
{
	return "order " + std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

Outcome center_check(const FiniteGroupTable &g, int n)
{
	const SubgroupHandle z = center(g);
	const Assignment a = stab7_assignment(g, n);
	std::vector<FiniteGroupTable::Index> gens{g.power(a.at("x"), 2)};
	for (int i = 1; i <= n + 1; ++i)
		gens.push_back(g.power(a.at("b" + std::to_string(i)), 2));
	const SubgroupHandle expected = generated_subgroup(g, gens);
	const auto rank = elementary_abelian_2_rank(z);
	const std::size_t want = std::size_t{1} << (n + 2);
	const bool ok = z.size() == want && rank == n + 2 && z == expected;
	return verdict(ok, "center " + order_text(z.size(), want) + ", elementary abelian rank " +
	                       (rank ? std::to_string(*rank) : "none") +
	                       (z == expected ? ", equals <x^2, b_i^2>" : ", differs from <x^2, b_i^2>"));
}

Outcome exponent_check(const FiniteGroupTable &g, int)
{
	const std::size_t e = exponent(g);
	const SubgroupHandle z = center(g);
	bool squares_central = true;
	for (FiniteGroupTable::Index a = 0; a < g.size(); ++a)
		squares_central = squares_central && z.contains(g.product(a, a));
	return verdict(e == 4 && squares_central,
	               "exponent " + std::to_string(e) + (squares_central ? ", squares central" : ", a square is not central"));
}

Outcome derived_check(const FiniteGroupTable &g, int n)
{
	const SubgroupHandle d = derived_subgroup(g);
	const Assignment a = stab7_assignment(g, n);
	std::vector<FiniteGroupTable::Index> gens;
	for (int i = 1; i <= n + 1; ++i)
		gens.push_back(g.power(a.at("b" + std::to_string(i)), 2));
	const SubgroupHandle expected = generated_subgroup(g, gens);
	const auto rank = elementary_abelian_2_rank(d);
	const std::size_t want = std::size_t{1} << (n + 1);
	const bool ok = d.size() == want && rank == n + 1 && d == expected;
	return verdict(ok, "derived " + order_text(d.size(), want) + ", elementary abelian rank " +
	                       (rank ? std::to_string(*rank) : "none") +
	                       (d == expected ? ", equals <b_i^2>" : ", differs from <b_i^2>"));
}

Outcome class_check(const FiniteGroupTable &g, int)
{
	const auto c = nilpotency_class(g);
	return verdict(c == 2, "class " + (c ? std::to_string(*c) : std::string("none")));
}

Outcome order_check(const FiniteGroupTable &g, int n)
{
	const std::size_t want = std::size_t{1} << (2 * n + 4);
	return verdict(g.size() == want, order_text(g.size(), want));
}

Outcome normal_form_outcome(const FiniteGroupTable &g, int n)
{
	const bool ok = normal_form_check(g, n);
	return verdict(ok, ok ? "bijection onto all " + std::to_string(g.size()) + " elements" : "not a bijection");
}

Runner family_indices(int lo, int hi, const std::string &name, std::function<bool(int)> pred,
                      int RunConfig::*bound = &RunConfig::family_depth)
{
	return [=](Context &ctx) -> Outcome {
		if (hi > ctx.cfg.*bound)
			return skipped("index " + std::to_string(hi) + " exceeds configured depth");
		return for_indices(lo, hi, name, pred);
	};
}

const std::vector<RationalF2> &mf_parameters()
{
	static const std::vector<RationalF2> fs = {parse_fraction("1"), parse_fraction("t"), parse_fraction("t^2"),
	                                           parse_fraction("1+t"), parse_fraction("1/(1+t)")};
	return fs;
}

std::vector<Entry> build_registry()
{
	std::vector<Entry> r;
	auto add = [&r](std::string id, std::string citation, Runner run) {
		r.push_back({std::move(id), std::move(citation), std::move(run)});
	};

	add("golden.matrices", "Appendix A, \"here are the matrix representations\"", [](Context &) {
		const bool x = eval_braid_f2(W::x()) == reference_x_f2();
		const bool y = eval_braid_f2(W::y()) == reference_y_f2();
		const bool c = eval_braid_f2(yxy_word()) == reference_yxy_f2();
		return verdict(x && y && c, "x " + serialize(eval_braid_f2(W::x())) + ", y " +
		                                serialize(eval_braid_f2(W::y())) + ", yxy " +
		                                serialize(eval_braid_f2(yxy_word())));
	});
	add("convention.braid", "Remark after Lemma 3.2, \"x = β₄(σ₁σ₂σ₃)\"", [](Context &) {
		const auto bad = BurauConvention::standard().violations();
		return verdict(bad.empty(), bad.empty() ? "braid relations hold" : "violates " + bad.front());
	});
	add("eq1", "Eq. (1), \"β₄(Δ²) = t⁴I₃\"", [](Context &) {
		const MatZ m = eval_braid_z(parse_word("D^2"));
		return verdict(m == tz(4) * MatZ::identity() && m.is_scalar(), serialize(m));
	});
	add("pres.b4.x4y3", "Section 1, \"1 = x⁴y⁻³ = [x², yxy]\"", [](Context &) {
		const MatZ x4 = eval_braid_z(W::x(4));
		return verdict(x4 == eval_braid_z(W::y(3)), "x^4 " + serialize(x4));
	});
	add("pres.b4.x2yxy", "Section 1, \"1 = x⁴y⁻³ = [x², yxy]\"", [](Context &) {
		const MatZ m = eval_braid_z(commutator(W::x(2), yxy_word()));
		return verdict(m == MatZ::identity(), serialize(m));
	});
	add("pres.q4", "Section 1, \"1 = x⁴ = y³ = [x², yxy]\"", [](Context &) {
		const bool ok = gamma_identity(W::x(4)) && gamma_identity(W::y(3)) &&
		                gamma_identity(commutator(W::x(2), yxy_word()));
		return verdict(ok, "projective images of x^4, y^3, [x^2, yxy]");
	});
	add("eq7", "Eq. (7), \"x⁴ = Δ² = y³\"", [](Context &) {
		const MatF2 x4 = eval_braid_f2(W::x(4));
		const bool ok = x4 == eval_braid_f2(parse_word("D^2")) && x4 == eval_braid_f2(W::y(3));
		return verdict(ok, serialize(x4));
	});
	add("remark.det", "Remark after Lemma 3.2, \"has a nontrivial determinant t³ in B₄,₂\"", [](Context &) {
		const LaurentF2 d = det_of_word_f2(W::x());
		const LaurentF2 scaled = (LaurentF2::t_power(-1) * eval_braid_f2(W::x())).det();
		return verdict(d == LaurentF2::t_power(3) && scaled.is_one(),
		               "det x = " + d.to_string() + ", det t^-1 x = " + scaled.to_string());
	});
	add("cor1.2", "Corollary 1.2 proof, \"Temporarily define δ := txt⁻¹\"", [](Context &) {
		const TelescopeResult t = telescoping_check(4);
		return verdict(t.holds, "rewrites to " + t.rewritten.to_string());
	});
	add("cor1.2.nontrivial", "Corollary 1.2 proof, \"images of determinant 1\"", [](Context &) {
		const MatZ x1 = eval_braid_z(family_x(1));
		const LaurentZ d = x1.det();
		const bool scalar = x1.pow(4).is_scalar();
		return verdict(d.is_one() && !scalar,
		               "det = " + d.to_string() + (scalar ? ", fourth power scalar" : ", fourth power not scalar"));
	});
	for (int i = 0; i <= 4; ++i)
		add("lem2.2.i" + std::to_string(i), "Lemma 2.2, \"1 = xᵢ⁴\"", [i](Context &ctx) -> Outcome {
			if (i > ctx.cfg.kernel_depth || i > ctx.cfg.family_depth)
				return skipped("index exceeds configured depth");
			const W xi = family_x(i, ctx.cfg.family_depth);
			const bool fourth = gamma_identity(xi.pow(4));
			const bool comm = gamma_identity(commutator(xi.pow(2), yxy_word()));
			return verdict(fourth && comm, std::string("x_i^4 ") + (fourth ? "trivial" : "nontrivial") +
			                                   ", [x_i^2, yxy] " + (comm ? "trivial" : "nontrivial"));
		});
	for (int i = 1; i <= 4; ++i) {
		add("lem3.2.kernel.i" + std::to_string(i), "Lemma 3.2, \"1 = xᵢ⁴ = [xᵢ², yxy]\"",
		    [i](Context &ctx) -> Outcome {
			    if (i > ctx.cfg.kernel_depth || i > ctx.cfg.family_depth)
				    return skipped("index exceeds configured depth");
			    return verdict(kernel_mod2(family_x(i, ctx.cfg.family_depth).pow(4)), "x_i^4");
		    });
		add("lem3.2.comm.i" + std::to_string(i), "Lemma 3.2, \"1 = xᵢ⁴ = [xᵢ², yxy]\"",
		    [i](Context &ctx) -> Outcome {
			    if (i > ctx.cfg.kernel_depth || i > ctx.cfg.family_depth)
				    return skipped("index exceeds configured depth");
			    return verdict(kernel_mod2(commutator(family_x(i, ctx.cfg.family_depth).pow(2), yxy_word())),
			                   "[x_i^2, yxy]");
		    });
	}
	add("lem2.3.eq4", "Eq. (4), \"MxM⁻¹ = t[yxy,x]\"", [](Context &) {
		return verdict(check_eq4(conjugator_m()), "M x M^-1 = t [yxy, x], M yxy M^-1 = yxy");
	});
	add("hnn.g0", "Section 1, \"1 = [t, yxy]\"", [](Context &) {
		const MatRF m = conjugator_m();
		const bool fixes = eval_with_stable_letter(commutator(W::t(), yxy_word()), m) == MatRF::identity();
		const bool conj = proj_eq(eval_with_stable_letter(W::t() * W::x() * W::t(-1), m),
		                          eval_with_stable_letter(commutator(yxy_word(), W::x()), m));
		return verdict(fixes && conj, "t -> M: [t, yxy] and t x t^-1 = [yxy, x] projectively");
	});
	add("hnn.g1", "Theorem 1.3 proof, \"tx₁t⁻¹ = [yxy,x₁]\"", [](Context &) {
		const MatRF m = conjugator_m();
		const W x1 = family_x(1);
		const bool fixes = eval_with_stable_letter(commutator(W::t(), yxy_word()), m) == MatRF::identity();
		const bool x4 = eval_with_stable_letter(commutator(W::t(), W::x(4)), m) == MatRF::identity();
		const bool conj = eval_with_stable_letter(W::t() * x1 * W::t(-1), m) ==
		                  eval_with_stable_letter(commutator(yxy_word(), x1), m);
		return verdict(fixes && x4 && conj, "t -> M: [t, yxy], [t, x^4] and t x_1 t^-1 = [yxy, x_1] exactly");
	});
	add("eq5", "Eq. (5), \"t^{j−i} xᵢ t^{i−j} = xⱼ\"", [](Context &ctx) -> Outcome {
		const int depth = ctx.cfg.conj_depth;
		for (int i = 0; i < depth; ++i)
			for (int k = 1; i + k <= depth; ++k)
				if (!conj_power_check(i, k, depth))
					return verdict(false, "fails at (i, k) = (" + std::to_string(i) + ", " + std::to_string(k) + ")");
		return verdict(true, "all i + k <= " + std::to_string(depth));
	});
	add("mf.det", "Remark on M_f, \"det M_f = t²\"", [](Context &) {
		for (const auto &f : mf_parameters())
			if (build_mf(f).matrix.det() != RationalF2::t_power(2))
				return verdict(false, "f = " + f.to_string());
		return verdict(true, "f in {1, t, t^2, 1+t, 1/(1+t)}");
	});
	add("mf.conjugation", "Remark on M_f, \"M_f(yxy)M_f⁻¹ = yxy\"", [](Context &) {
		for (const auto &f : mf_parameters())
			if (!check_eq4(build_mf(f)))
				return verdict(false, "f = " + f.to_string());
		const bool m1 = build_mf(RationalF2(1)).matrix == conjugator_m();
		return verdict(m1, std::string("f in {1, t, t^2, 1+t, 1/(1+t)}") + (m1 ? ", M_1 = M" : ", M_1 differs from M"));
	});
	add("lamplighter", "Remark after Lemma 2.1, \"the subgroup ⟨xᵢ², t⟩ of Gᵢ is isomorphic to L\"",
	    [](Context &ctx) -> Outcome {
		    for (int i = 0; i <= 2; ++i)
			    for (int w = 0; w <= 2; ++w)
				    if (!lamplighter_window_check(i, w, ctx.cfg.conj_depth))
					    return verdict(false, "fails at (i, window) = (" + std::to_string(i) + ", " +
					                              std::to_string(w) + ")");
		    return verdict(true, "i <= 2, window <= 2");
	    });
	add("lem3.4", "Lemma 3.4 proof, \"Mx₁M⁻¹ = [yxy,x₁]\"", [](Context &) {
		const bool exact = lemma34_check();
		const bool x0_exact = conjugation_step_check(0, false);
		const bool x0_proj = conjugation_step_check(0, true);
		return verdict(exact && !x0_exact && x0_proj,
		               std::string("x_1 exact ") + (exact ? "holds" : "fails") + ", x_0 exact " +
		                   (x0_exact ? "holds" : "fails") + ", x_0 projective " + (x0_proj ? "holds" : "fails"));
	});

	for (int n = 0; n <= 3; ++n) {
		const std::string sn = ".n" + std::to_string(n);
		add("stab.order" + sn, "Lemma A.3, \"1 → E_{2^{n+2}} → Stab(7⁽ⁿ⁾) → E_{2^{n+2}} → 1\"",
		    stab_runner(n, order_check));
		add("thmA.1" + sn, "Theorem A.1, \"[x,aᵢ] = [a_{k−1}, a_{i+k}]\"", stab_relations(n, stab_relations_a));
		add("lemA.2" + sn, "Lemma A.2, \"[bᵢ,bⱼ] = bᵢ²b_{j−i}²bⱼ²\"", stab_relations(n, stab_relations_b));
		add("lemA.2.eqs12-14" + sn, "Lemma A.2 proof, \"[x²,bᵢ] = 1\"", stab_relations(n, stab_b_consequences));
		add("lemA.3.claim1" + sn, "Lemma A.3 proof, \"(bᵢb_{N+2}⁻¹)² = b_{N−i+2}²\"",
		    stab_relations(n, stab_center_induction));
		add("lemA.3.center" + sn, "Lemma A.3, \"generated by x², b₁², ⋯, b_{n+1}²\"", stab_runner(n, center_check));
		add("lemA.3.exponent" + sn, "Lemma A.3, \"the exponent of Stab(7⁽ⁿ⁾) is 4\"", stab_runner(n, exponent_check));
		add("thmA.4.derived" + sn, "Theorem A.4, \"generated by b₁², ⋯, b_{n+1}²\"", stab_runner(n, derived_check));
		add("thmA.4.class" + sn, "Theorem A.4, \"nilpotent of class 2\"", stab_runner(n, class_check));
		add("lemA.3.normal-form" + sn, "Lemma A.3 proof, \"g = C(g)x^{i₀}b₁^{i₁}b₂^{i₂}⋯b_{n+1}^{i_{n+1}}\"",
		    stab_runner(n, normal_form_outcome));
	}

	add("thmA.5", "Theorem A.5, \"1 = y³\"", [](Context &) {
		bool ok = gamma_identity(W::y(3)) && gamma_identity(commutator(W::x(2), yxy_word()));
		for (int i = 1; i <= 5 && ok; ++i)
			ok = gamma_identity(family_b(i).pow(4)) &&
			     gamma_equal(commutator(W::x(), family_b(i)), family_b(i).pow(2));
		for (int i = 1; i <= 5 && ok; ++i)
			for (int j = i + 1; j <= 5 && ok; ++j)
				ok = gamma_equal(commutator(family_b(i), family_b(j)),
				                 family_b(i).pow(2) * family_b(j - i).pow(2) * family_b(j).pow(2));
		return verdict(ok, "y^3, [x^2, yxy], b_i^4, [x, b_i], [b_i, b_j] for i, j <= 5");
	});
	add("lemA.6.eq18", "Lemma A.6 proof, \"(yxy)bᵢ(yxy)⁻¹ = b₁⁻¹bᵢ₊₁\"",
	    family_indices(1, 5, "i", yxy_conjugates_b));
	add("lemA.6.relations", "Lemma A.6, \"1 = [x²,yxy] = [bᵢ²,yxy]\"", family_indices(1, 5, "i", [](int i) {
		    return gamma_identity(commutator(family_b(i).pow(2), yxy_word()));
	    }));
	add("lemA.7", "Lemma A.7 proof, \"b_{−i} = (yxy)^{−i}bᵢ⁻¹(yxy)^i\"", family_indices(1, 5, "i", [](int i) {
		    return b_negative_from_b(i) && gamma_identity(family_b(-i).pow(4)) &&
		           gamma_identity(commutator(family_b(-i).pow(2), yxy_word()));
	    }));
	add("claim2.b", "Claim 2 proof, \"(yxy)⁻¹b_{−i}(yxy) = b_{−1}⁻¹b_{−i−1}\"",
	    family_indices(1, 4, "i", yxy_conjugates_b_negative));
	add("claim2.x", "Claim 2 proof, \"(yxy)⁻¹xᵢ(yxy) = xᵢxᵢ₊₁⁻¹\"", family_indices(0, 4, "i", yxy_conjugates_x));
	add("claim3.commutators", "Claim 3, \"[xᵢ,xⱼ] ∈ ⟨x₀²,x₁²,⋯,xⱼ²⟩\"", family_indices(0, 4, "i", [](int i) {
		    for (int j = 0; j <= 4; ++j)
			    if (!commutator_in_x_squares(i, j, std::max(i, j)))
				    return false;
		    return true;
	    }));
	add("claim3.squares", "Claim 3, \"[xᵢ²,xⱼ] = 1\"", family_indices(0, 4, "i", [](int i) {
		    for (int j = 0; j <= 4; ++j)
			    if (!gamma_identity(commutator(x_word(i).pow(2), x_word(j))))
				    return false;
		    return true;
	    }));
	add("claim3.eq19", "Claim 3 proof, Eq. (19), \"[xᵢ,x_{N+1}] = [xᵢ,x_N]x_N⁻²\"",
	    family_indices(1, 3, "N", [](int N) {
		    for (int i = 0; i < N; ++i)
			    if (!commutator_expansion(i, N))
				    return false;
		    return true;
	    }));
	add("claim3.eq20", "Claim 3 proof, Eq. (20), \"there exists an element C_N ∈ ⟨x₀²,x₁²,⋯,x_N²⟩\"",
	    family_indices(0, 3, "N", [](int N) {
		    for (int i = 0; i <= N; ++i)
			    if (!commutator_central_part(i, N))
				    return false;
		    return true;
	    }));
	add("claim3.eq21", "Claim 3 proof, Eq. (21), \"[x_{N+1},xᵢ²] = 1 = [xᵢ²,x_{N+1}²]\"",
	    family_indices(0, 3, "N", [](int N) {
		    const W next = x_word(N + 1);
		    for (int i = 0; i <= N + 1; ++i) {
			    const W sq = x_word(i).pow(2);
			    if (!gamma_identity(commutator(next, sq)) || !gamma_identity(commutator(sq, next.pow(2))))
				    return false;
		    }
		    return true;
	    }));
	add("claim3.eq22", "Claim 3 proof, Eq. (22), \"[x_{N+1}²,xᵢ] = 1\"", family_indices(0, 3, "N", [](int N) {
		    const W sq = x_word(N + 1).pow(2);
		    for (int i = 0; i <= N + 1; ++i)
			    if (!gamma_identity(commutator(sq, x_word(i))))
				    return false;
		    return true;
	    }));
	return r;
}

const std::vector<Entry> &registry()
{
	static const std::vector<Entry> r = build_registry();
	return r;
}

CheckRecord execute(const Entry &e, Context &ctx)
{
	const auto start = std::chrono::steady_clock::now();
	Outcome o = e.run(ctx);
	const auto stop = std::chrono::steady_clock::now();
	CheckRecord rec{e.id, e.citation, o.status, 0.0, std::move(o.detail)};
	if (ctx.cfg.timings)
		rec.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
	return rec;
}

} // namespace

std::vector<CheckInfo> list_checks()
{
	std::vector<CheckInfo> out;
	for (const auto &e : registry())
		out.push_back({e.id, e.citation});
	return out;
}

CheckRecord run_check(const std::string &id, const RunConfig &cfg)
{
	cfg.validate();
	for (const auto &e : registry())
		if (e.id == id) {
			Context ctx(cfg);
			return execute(e, ctx);
		}
	throw UsageError("unknown check id '" + id + "'");
}

std::vector<CheckRecord> run_all(const RunConfig &cfg)
{
	cfg.validate();
	Context ctx(cfg);
	std::vector<CheckRecord> out;
	for (const auto &e : registry())
		out.push_back(execute(e, ctx));
	return out;
}

nlohmann::ordered_json to_json(const CheckRecord &r)
{
	return {{"id", r.id},
	        {"citation", r.citation},
	        {"status", to_string(r.status)},
	        {"elapsed_ms", r.elapsed_ms},
	        {"detail", r.detail}};
}

std::string to_text(const CheckRecord &r)
{
	std::ostringstream out;
	std::string status = to_string(r.status);
	for (auto &c : status)
		c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
	out << status << "  " << r.id << "  [" << r.citation << "]";
	if (!r.detail.empty())
		out << "  " << r.detail;
	out << "  (" << r.elapsed_ms << " ms)";
	return out.str();
}

} // namespace burau
