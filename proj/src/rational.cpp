#include "burau/rational.hpp"

#include <bit>
#include <cctype>

namespace burau {

// ---------------------------------------------------------------------------
// PolyF2

PolyF2 PolyF2::monomial(int exponent)
{
	if (exponent < 0)
		throw UsageError("PolyF2 exponent must be nonnegative");
	PolyF2 p;
	p.flip(exponent);
	return p;
}

PolyF2 PolyF2::from_exponents(const std::vector<int> &exponents)
{
	PolyF2 p;
	for (int e : exponents) {
		if (e < 0)
			throw UsageError("PolyF2 exponent must be nonnegative");
		p.flip(e);
	}
	p.trim();
	return p;
}

void PolyF2::flip(int i)
{
	const auto w = static_cast<std::size_t>(i / 64);
	if (words_.size() <= w)
		words_.resize(w + 1, 0);
	words_[w] ^= std::uint64_t{1} << (i % 64);
}

void PolyF2::trim()
{
	while (!words_.empty() && words_.back() == 0)
		words_.pop_back();
}

int PolyF2::degree() const
{
	if (words_.empty())
		return -1;
	return static_cast<int>(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool PolyF2::bit(int i) const
{
	if (i < 0)
		return false;
	const auto w = static_cast<std::size_t>(i / 64);
	return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

int PolyF2::trailing_zeros() const
{
	for (std::size_t w = 0; w < words_.size(); ++w)
		if (words_[w])
			return static_cast<int>(w) * 64 + std::countr_zero(words_[w]);
	throw UsageError("trailing_zeros of the zero polynomial");
}

std::vector<int> PolyF2::exponents() const
{
	std::vector<int> out;
	for (std::size_t w = 0; w < words_.size(); ++w) {
		std::uint64_t bits = words_[w];
		while (bits) {
			const int b = std::countr_zero(bits);
			out.push_back(static_cast<int>(w) * 64 + b);
			bits &= bits - 1;
		}
	}
	return out;
}

PolyF2 PolyF2::shifted_left(int k) const
{
	if (k < 0)
		return shifted_right(-k);
	if (is_zero() || k == 0)
		return *this;
	const auto whole = static_cast<std::size_t>(k / 64);
	const int part = k % 64;
	PolyF2 r;
	r.words_.assign(words_.size() + whole + 1, 0);
	for (std::size_t i = 0; i < words_.size(); ++i) {
		r.words_[i + whole] ^= words_[i] << part;
		if (part)
			r.words_[i + whole + 1] ^= words_[i] >> (64 - part);
	}
	r.trim();
	return r;
}

PolyF2 PolyF2::shifted_right(int k) const
{
	if (k < 0)
		return shifted_left(-k);
	const auto whole = static_cast<std::size_t>(k / 64);
	const int part = k % 64;
	if (whole >= words_.size())
		return {};
	PolyF2 r;
	r.words_.assign(words_.size() - whole, 0);
	for (std::size_t i = whole; i < words_.size(); ++i) {
		r.words_[i - whole] = words_[i] >> part;
		if (part && i + 1 < words_.size())
			r.words_[i - whole] |= words_[i + 1] << (64 - part);
	}
	r.trim();
	return r;
}

PolyF2 &PolyF2::operator+=(const PolyF2 &b)
{
	if (words_.size() < b.words_.size())
		words_.resize(b.words_.size(), 0);
	for (std::size_t i = 0; i < b.words_.size(); ++i)
		words_[i] ^= b.words_[i];
	trim();
	return *this;
}

PolyF2 operator+(const PolyF2 &a, const PolyF2 &b)
{
	PolyF2 r = a;
	r += b;
	return r;
}

PolyF2 operator*(const PolyF2 &a, const PolyF2 &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	const PolyF2 &small = a.words_.size() <= b.words_.size() ? a : b;
	const PolyF2 &large = a.words_.size() <= b.words_.size() ? b : a;
	PolyF2 r;
	r.words_.assign(a.words_.size() + b.words_.size() + 1, 0);
	for (std::size_t w = 0; w < small.words_.size(); ++w) {
		std::uint64_t bits = small.words_[w];
		while (bits) {
			const int part = std::countr_zero(bits);
			bits &= bits - 1;
			for (std::size_t i = 0; i < large.words_.size(); ++i) {
				r.words_[i + w] ^= large.words_[i] << part;
				if (part)
					r.words_[i + w + 1] ^= large.words_[i] >> (64 - part);
			}
		}
	}
	r.trim();
	return r;
}

std::pair<PolyF2, PolyF2> PolyF2::divmod(const PolyF2 &a, const PolyF2 &b)
{
	if (b.is_zero())
		throw ArithmeticError("polynomial division by zero");
	PolyF2 quotient, rem = a;
	const int db = b.degree();
	while (!rem.is_zero() && rem.degree() >= db) {
		const int shift = rem.degree() - db;
		quotient.flip(shift);
		rem += b.shifted_left(shift);
	}
	quotient.trim();
	return {quotient, rem};
}

LaurentF2 PolyF2::to_laurent(int shift) const
{
	std::vector<LaurentF2::Term> terms;
	for (int e : exponents())
		terms.push_back({e + shift, GF2(1)});
	return LaurentF2::from_terms(std::move(terms));
}

PolyF2 poly_gcd_f2(const PolyF2 &a, const PolyF2 &b)
{
	if (a.is_zero() && b.is_zero())
		throw UsageError("gcd of two zero polynomials");
	PolyF2 u = a, v = b;
	while (!v.is_zero()) {
		PolyF2 r = PolyF2::divmod(u, v).second;
		u = std::move(v);
		v = std::move(r);
	}
	return u;
}

// ---------------------------------------------------------------------------
// RationalF2

namespace {

/// Splits a Laurent polynomial into (t-shift, polynomial with constant term).
std::pair<int, PolyF2> split_laurent(const LaurentF2 &p)
{
	if (p.is_zero())
		return {0, PolyF2{}};
	const int lo = p.min_exponent();
	std::vector<int> exps;
	exps.reserve(p.term_count());
	for (const auto &term : p.terms())
		exps.push_back(term.exponent - lo);
	return {lo, PolyF2::from_exponents(exps)};
}

} // namespace

RationalF2 RationalF2::make(int shift, PolyF2 num, PolyF2 den)
{
	if (den.is_zero())
		throw ArithmeticError("rational function with zero denominator");
	RationalF2 r;
	if (num.is_zero())
		return r;
	const int tn = num.trailing_zeros();
	const int td = den.trailing_zeros();
	num = num.shifted_right(tn);
	den = den.shifted_right(td);
	shift += tn - td;
	if (!den.is_one()) {
		PolyF2 g = poly_gcd_f2(num, den);
		if (!g.is_one()) {
			num = PolyF2::divmod(num, g).first;
			den = PolyF2::divmod(den, g).first;
		}
	}
	r.shift_ = shift;
	r.num_ = std::move(num);
	r.den_ = std::move(den);
	return r;
}

RationalF2::RationalF2(const LaurentF2 &p) : den_(PolyF2::one())
{
	auto [shift, num] = split_laurent(p);
	shift_ = shift;
	num_ = std::move(num);
}

RationalF2::RationalF2(const LaurentF2 &num, const PolyF2 &den)
{
	auto [shift, poly] = split_laurent(num);
	*this = make(shift, std::move(poly), den);
}

RationalF2 RationalF2::inverse() const
{
	if (is_zero())
		throw ArithmeticError("inverse of zero in F2(t)");
	return make(-shift_, den_, num_);
}

RationalF2 RationalF2::recanonicalized() const { return make(shift_, num_, den_); }

RationalF2 operator+(const RationalF2 &a, const RationalF2 &b)
{
	if (a.is_zero())
		return b;
	if (b.is_zero())
		return a;
	const int m = std::min(a.shift_, b.shift_);
	const PolyF2 an = a.num_.shifted_left(a.shift_ - m);
	const PolyF2 bn = b.num_.shifted_left(b.shift_ - m);
	if (a.den_ == b.den_)
		return RationalF2::make(m, an + bn, a.den_);
	return RationalF2::make(m, an * b.den_ + bn * a.den_, a.den_ * b.den_);
}

RationalF2 operator*(const RationalF2 &a, const RationalF2 &b)
{
	if (a.is_zero() || b.is_zero())
		return {};
	if (a.den_.is_one() && b.den_.is_one()) {
		RationalF2 r;
		r.shift_ = a.shift_ + b.shift_;
		r.num_ = a.num_ * b.num_; // product of polynomials with constant term 1
		r.den_ = PolyF2::one();
		return r;
	}
	return RationalF2::make(a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalF2::to_string() const
{
	if (den_.is_one())
		return numerator().to_string();
	return "(" + numerator().to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Fraction grammar

namespace {

class FractionParser {
public:
	explicit FractionParser(std::string_view text) : text_(text) {}

	RationalF2 parse()
	{
		LaurentF2 num = poly();
		skip_space();
		if (pos_ < text_.size() && text_[pos_] == '/') {
			++pos_;
			LaurentF2 den = poly();
			skip_space();
			if (pos_ != text_.size())
				throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
			if (den.is_zero())
				throw ArithmeticError("fraction with zero denominator");
			return RationalF2(num) * RationalF2(den).inverse();
		}
		if (pos_ != text_.size())
			throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
		return RationalF2(num);
	}

private:
	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	LaurentF2 poly()
	{
		skip_space();
		if (pos_ < text_.size() && text_[pos_] == '(') {
			++pos_;
			LaurentF2 p = poly();
			skip_space();
			if (pos_ >= text_.size() || text_[pos_] != ')')
				throw ParseError("expected ')'", pos_);
			++pos_;
			return p;
		}
		LaurentF2 p = term();
		for (;;) {
			skip_space();
			if (pos_ < text_.size() && text_[pos_] == '+') {
				++pos_;
				p += term();
			} else {
				return p;
			}
		}
	}

	LaurentF2 term()
	{
		skip_space();
		if (pos_ >= text_.size())
			throw ParseError("expected a term", pos_);
		if (text_[pos_] == '1') {
			++pos_;
			return LaurentF2(1);
		}
		if (text_[pos_] != 't')
			throw ParseError("expected 't' or '1'", pos_);
		++pos_;
		if (pos_ < text_.size() && text_[pos_] == '^') {
			++pos_;
			const std::size_t start = pos_;
			unsigned value = 0;
			while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
				value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
				if (value > 100000)
					throw ParseError("exponent too large", start);
				++pos_;
			}
			if (pos_ == start)
				throw ParseError("expected an unsigned exponent", pos_);
			return LaurentF2::t_power(static_cast<int>(value));
		}
		return LaurentF2::t_power(1);
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

} // namespace

RationalF2 parse_fraction(std::string_view text) { return FractionParser(text).parse(); }

} // namespace burau
