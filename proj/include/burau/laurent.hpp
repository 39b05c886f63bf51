#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "burau/errors.hpp"

namespace burau {

/// Arbitrary-precision integer coefficients.
using Integer = boost::multiprecision::cpp_int;

/// The field with two elements.
class GF2 {
public:
	constexpr GF2() = default;
	constexpr GF2(int v) : bit_((v & 1) != 0) {}

	constexpr bool is_zero() const { return !bit_; }
	constexpr bool bit() const { return bit_; }

	friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2(a.bit_ != b.bit_); }
	friend constexpr GF2 operator-(GF2 a, GF2 b) { return a + b; }
	friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2(a.bit_ && b.bit_); }
	friend constexpr GF2 operator-(GF2 a) { return a; }
	GF2 &operator+=(GF2 b) { return *this = *this + b; }
	GF2 &operator*=(GF2 b) { return *this = *this * b; }
	friend constexpr bool operator==(GF2, GF2) = default;

private:
	bool bit_ = false;
};

/// Per-coefficient-ring hooks used by LaurentPoly.
template <class C> struct CoeffTraits;

template <> struct CoeffTraits<Integer> {
	static constexpr const char *tag = "int";
	static bool is_zero(const Integer &c) { return c.is_zero(); }
	/// +1 or -1 when c is a unit of the integers.
	static std::optional<int> unit_sign(const Integer &c)
	{
		if (c == 1)
			return 1;
		if (c == -1)
			return -1;
		return std::nullopt;
	}
	static Integer from_sign(int s) { return Integer(s); }
};

template <> struct CoeffTraits<GF2> {
	static constexpr const char *tag = "f2";
	static bool is_zero(GF2 c) { return c.is_zero(); }
	static std::optional<int> unit_sign(GF2 c)
	{
		if (c.is_zero())
			return std::nullopt;
		return 1;
	}
	static GF2 from_sign(int) { return GF2(1); }
};

/// A unit s*t^k of a Laurent polynomial ring.
struct LaurentUnit {
	int exponent = 0;
	int sign = 1;
	friend bool operator==(const LaurentUnit &, const LaurentUnit &) = default;
};

/// Laurent polynomial in t with coefficients in C, stored sparsely as terms
/// sorted by strictly increasing exponent with no zero coefficient.
template <class C> class LaurentPoly {
public:
	using coeff_type = C;

	struct Term {
		int exponent;
		C coefficient;
		friend bool operator==(const Term &, const Term &) = default;
	};

	LaurentPoly() = default;

	/// Constant polynomial.
	LaurentPoly(int c) : LaurentPoly(monomial(0, C(c))) {}

	static LaurentPoly monomial(int exponent, C coefficient = C(1))
	{
		LaurentPoly p;
		if (!CoeffTraits<C>::is_zero(coefficient))
			p.terms_.push_back({exponent, std::move(coefficient)});
		return p;
	}

	static LaurentPoly t_power(int exponent) { return monomial(exponent); }

	/// Builds the canonical form from arbitrary (possibly repeated, unsorted,
	/// zero) terms.
	static LaurentPoly from_terms(std::vector<Term> terms)
	{
		std::sort(terms.begin(), terms.end(),
		          [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
		LaurentPoly p;
		for (auto &term : terms) {
			if (!p.terms_.empty() && p.terms_.back().exponent == term.exponent)
				p.terms_.back().coefficient += term.coefficient;
			else
				p.terms_.push_back(std::move(term));
			if (CoeffTraits<C>::is_zero(p.terms_.back().coefficient))
				p.terms_.pop_back();
		}
		return p;
	}

	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_one() const
	{
		return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coefficient == C(1);
	}
	std::size_t term_count() const { return terms_.size(); }

	/// Lowest exponent; requires a nonzero polynomial.
	int min_exponent() const
	{
		if (terms_.empty())
			throw UsageError("min_exponent of the zero Laurent polynomial");
		return terms_.front().exponent;
	}
	int max_exponent() const
	{
		if (terms_.empty())
			throw UsageError("max_exponent of the zero Laurent polynomial");
		return terms_.back().exponent;
	}

	/// Coefficient of t^exponent (zero when absent).
	C coefficient(int exponent) const
	{
		auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
		                           [](const Term &a, int e) { return a.exponent < e; });
		if (it != terms_.end() && it->exponent == exponent)
			return it->coefficient;
		return C(0);
	}

	/// Returns (k, s) when this equals s*t^k with s a unit of C.
	std::optional<LaurentUnit> as_unit() const
	{
		if (terms_.size() != 1)
			return std::nullopt;
		auto sign = CoeffTraits<C>::unit_sign(terms_[0].coefficient);
		if (!sign)
			return std::nullopt;
		return LaurentUnit{terms_[0].exponent, *sign};
	}

	/// Multiplication by t^k.
	LaurentPoly shifted(int k) const
	{
		LaurentPoly p = *this;
		for (auto &term : p.terms_)
			term.exponent += k;
		return p;
	}

	LaurentPoly operator-() const
	{
		LaurentPoly p = *this;
		for (auto &term : p.terms_)
			term.coefficient = -term.coefficient;
		return p;
	}

	friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b)
	{
		LaurentPoly r;
		r.terms_.reserve(a.terms_.size() + b.terms_.size());
		auto i = a.terms_.begin();
		auto j = b.terms_.begin();
		while (i != a.terms_.end() || j != b.terms_.end()) {
			if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
				r.terms_.push_back(*i++);
			} else if (i == a.terms_.end() || j->exponent < i->exponent) {
				r.terms_.push_back(*j++);
			} else {
				C c = i->coefficient + j->coefficient;
				if (!CoeffTraits<C>::is_zero(c))
					r.terms_.push_back({i->exponent, std::move(c)});
				++i;
				++j;
			}
		}
		return r;
	}

	friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

	friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
	{
		if (a.is_zero() || b.is_zero())
			return {};
		if (a.terms_.size() == 1 || b.terms_.size() == 1) {
			const auto &mono = a.terms_.size() == 1 ? a : b;
			const auto &other = a.terms_.size() == 1 ? b : a;
			LaurentPoly r;
			r.terms_.reserve(other.terms_.size());
			const auto &m = mono.terms_[0];
			for (const auto &term : other.terms_) {
				C c = term.coefficient * m.coefficient;
				if (!CoeffTraits<C>::is_zero(c))
					r.terms_.push_back({term.exponent + m.exponent, std::move(c)});
			}
			return r;
		}
		// Dense accumulator over the exponent span of the product.
		const int lo = a.min_exponent() + b.min_exponent();
		const int hi = a.max_exponent() + b.max_exponent();
		std::vector<C> acc(static_cast<std::size_t>(hi - lo + 1), C(0));
		for (const auto &u : a.terms_)
			for (const auto &v : b.terms_)
				acc[static_cast<std::size_t>(u.exponent + v.exponent - lo)] += u.coefficient * v.coefficient;
		LaurentPoly r;
		for (std::size_t k = 0; k < acc.size(); ++k)
			if (!CoeffTraits<C>::is_zero(acc[k]))
				r.terms_.push_back({lo + static_cast<int>(k), std::move(acc[k])});
		return r;
	}

	LaurentPoly &operator+=(const LaurentPoly &b) { return *this = *this + b; }
	LaurentPoly &operator-=(const LaurentPoly &b) { return *this = *this - b; }
	LaurentPoly &operator*=(const LaurentPoly &b) { return *this = *this * b; }

	LaurentPoly pow(unsigned n) const
	{
		LaurentPoly result(1), base = *this;
		while (n) {
			if (n & 1)
				result *= base;
			base *= base;
			n >>= 1;
		}
		return result;
	}

	friend bool operator==(const LaurentPoly &, const LaurentPoly &) = default;

	/// Human-readable form, highest degree first, e.g. "t^4 + t^3 + 1".
	std::string to_string() const;

private:
	std::vector<Term> terms_;
};

using LaurentZ = LaurentPoly<Integer>;
using LaurentF2 = LaurentPoly<GF2>;

/// Reduces integer coefficients modulo 2.
LaurentF2 reduce_mod2(const LaurentZ &p);

template <class C> std::string LaurentPoly<C>::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		std::string coeff;
		bool negative = false;
		if constexpr (std::is_same_v<C, Integer>) {
			negative = it->coefficient < 0;
			Integer mag = negative ? Integer(-it->coefficient) : it->coefficient;
			coeff = mag.str();
		} else {
			coeff = "1";
		}
		if (out.empty())
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		const int e = it->exponent;
		if (e == 0) {
			out += coeff;
			continue;
		}
		if (coeff != "1")
			out += coeff + "*";
		out += "t";
		if (e != 1)
			out += "^" + std::to_string(e);
	}
	return out;
}

} // namespace burau
