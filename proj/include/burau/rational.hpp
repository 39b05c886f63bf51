#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "burau/laurent.hpp"

namespace burau {

/// Polynomial over F2 in t (nonnegative exponents), packed 64 coefficients
/// per word. No trailing zero words are kept, so the representation is unique.
class PolyF2 {
public:
	PolyF2() = default;

	static PolyF2 one() { return monomial(0); }
	static PolyF2 monomial(int exponent);
	static PolyF2 from_exponents(const std::vector<int> &exponents);

	bool is_zero() const { return words_.empty(); }
	bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
	/// -1 for the zero polynomial.
	int degree() const;
	bool bit(int i) const;
	bool constant_term() const { return !words_.empty() && (words_[0] & 1); }
	/// Largest k with t^k dividing this; requires nonzero.
	int trailing_zeros() const;
	std::vector<int> exponents() const;

	PolyF2 shifted_left(int k) const;
	PolyF2 shifted_right(int k) const;

	friend PolyF2 operator+(const PolyF2 &a, const PolyF2 &b);
	friend PolyF2 operator*(const PolyF2 &a, const PolyF2 &b);
	PolyF2 &operator+=(const PolyF2 &b);
	friend bool operator==(const PolyF2 &, const PolyF2 &) = default;

	/// Quotient and remainder; throws ArithmeticError on division by zero.
	static std::pair<PolyF2, PolyF2> divmod(const PolyF2 &a, const PolyF2 &b);

	LaurentF2 to_laurent(int shift = 0) const;
	std::string to_string() const { return to_laurent().to_string(); }

private:
	void trim();
	void flip(int i);
	std::vector<std::uint64_t> words_;
};

/// Monic gcd (every nonzero F2 polynomial is monic). Throws UsageError when
/// both inputs are zero.
PolyF2 poly_gcd_f2(const PolyF2 &a, const PolyF2 &b);

/// Element of the field F2(t) in canonical form
///     t^shift * num / den
/// where num has nonzero constant term (or is zero), den has constant term 1,
/// and gcd(num, den) = 1. The zero element has shift 0 and den 1.
class RationalF2 {
public:
	RationalF2() : den_(PolyF2::one()) {}
	RationalF2(int c) : RationalF2(LaurentF2(c)) {}
	RationalF2(const LaurentF2 &p);
	/// num / den; throws ArithmeticError when den is zero.
	RationalF2(const LaurentF2 &num, const PolyF2 &den);

	static RationalF2 t_power(int k) { return RationalF2(LaurentF2::t_power(k)); }

	bool is_zero() const { return num_.is_zero(); }
	bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

	/// Laurent-polynomial numerator (the t-power lives here).
	LaurentF2 numerator() const { return num_.to_laurent(shift_); }
	/// Polynomial denominator with constant term 1.
	const PolyF2 &denominator() const { return den_; }
	/// True when the denominator is 1, i.e. the value lies in F2[t, 1/t].
	bool is_laurent() const { return den_.is_one(); }

	RationalF2 inverse() const;

	friend RationalF2 operator+(const RationalF2 &a, const RationalF2 &b);
	friend RationalF2 operator-(const RationalF2 &a, const RationalF2 &b) { return a + b; }
	RationalF2 operator-() const { return *this; }
	friend RationalF2 operator*(const RationalF2 &a, const RationalF2 &b);
	friend RationalF2 operator/(const RationalF2 &a, const RationalF2 &b) { return a * b.inverse(); }
	RationalF2 &operator+=(const RationalF2 &b) { return *this = *this + b; }
	RationalF2 &operator-=(const RationalF2 &b) { return *this = *this + b; }
	RationalF2 &operator*=(const RationalF2 &b) { return *this = *this * b; }

	friend bool operator==(const RationalF2 &, const RationalF2 &) = default;

	std::string to_string() const;

	/// Re-runs canonicalization on the stored triple; used to confirm
	/// idempotence.
	RationalF2 recanonicalized() const;

private:
	static RationalF2 make(int shift, PolyF2 num, PolyF2 den);

	int shift_ = 0;
	PolyF2 num_;
	PolyF2 den_;
};

/// Equality in F2(t).
inline bool rf_eq(const RationalF2 &a, const RationalF2 &b) { return a == b; }

/// Parses the fraction grammar
///     poly ('/' poly)?,  poly := term ('+' term)*,  term := 't^' uint | 't' | '1'
/// Parentheses around either polynomial are accepted.
RationalF2 parse_fraction(std::string_view text);

} // namespace burau
