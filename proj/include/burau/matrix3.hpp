#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string>

#include "burau/errors.hpp"
#include "burau/laurent.hpp"
#include "burau/rational.hpp"

namespace burau {

/// Coefficient-structure hooks needed by Mat3: a ring tag for serialization
/// and inversion of units.
template <class R> struct RingTraits;

template <class C> struct RingTraits<LaurentPoly<C>> {
	static std::string tag() { return CoeffTraits<C>::tag; }
	static std::optional<LaurentPoly<C>> unit_inverse(const LaurentPoly<C> &a)
	{
		auto u = a.as_unit();
		if (!u)
			return std::nullopt;
		return LaurentPoly<C>::monomial(-u->exponent, CoeffTraits<C>::from_sign(u->sign));
	}
};

template <> struct RingTraits<RationalF2> {
	static std::string tag() { return "f2t"; }
	static std::optional<RationalF2> unit_inverse(const RationalF2 &a)
	{
		if (a.is_zero())
			return std::nullopt;
		return a.inverse();
	}
};

/// 3x3 matrix over a commutative ring R, row-major.
template <class R> class Mat3 {
public:
	using ring_type = R;

	Mat3() = default;
	explicit Mat3(const std::array<R, 9> &entries) : e_(entries) {}
	Mat3(std::initializer_list<std::initializer_list<R>> rows)
	{
		if (rows.size() != 3)
			throw UsageError("Mat3 needs three rows");
		std::size_t i = 0;
		for (const auto &row : rows) {
			if (row.size() != 3)
				throw UsageError("Mat3 rows need three entries");
			for (const auto &v : row)
				e_[i++] = v;
		}
	}

	static Mat3 identity() { return scalar(R(1)); }
	static Mat3 scalar(const R &lambda)
	{
		Mat3 m;
		m(0, 0) = m(1, 1) = m(2, 2) = lambda;
		return m;
	}

	R &operator()(int i, int j) { return e_[static_cast<std::size_t>(3 * i + j)]; }
	const R &operator()(int i, int j) const { return e_[static_cast<std::size_t>(3 * i + j)]; }
	const std::array<R, 9> &entries() const { return e_; }

	friend Mat3 operator*(const Mat3 &a, const Mat3 &b)
	{
		Mat3 r;
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) {
				R s = a(i, 0) * b(0, j);
				s += a(i, 1) * b(1, j);
				s += a(i, 2) * b(2, j);
				r(i, j) = std::move(s);
			}
		return r;
	}
	friend Mat3 operator*(const R &lambda, const Mat3 &a)
	{
		Mat3 r;
		for (std::size_t k = 0; k < 9; ++k)
			r.e_[k] = lambda * a.e_[k];
		return r;
	}
	friend Mat3 operator+(const Mat3 &a, const Mat3 &b)
	{
		Mat3 r;
		for (std::size_t k = 0; k < 9; ++k)
			r.e_[k] = a.e_[k] + b.e_[k];
		return r;
	}
	Mat3 &operator*=(const Mat3 &b) { return *this = *this * b; }
	friend bool operator==(const Mat3 &, const Mat3 &) = default;

	/// Cofactor expansion along the first row.
	R det() const
	{
		const Mat3 &a = *this;
		R d = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1));
		d -= a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0));
		d += a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
		return d;
	}

	/// Transposed cofactor matrix; adjugate() * A = det(A) * I.
	Mat3 adjugate() const
	{
		const Mat3 &a = *this;
		Mat3 r;
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j) {
				const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
				const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
				r(i, j) = a(j1, i1) * a(j2, i2) - a(j1, i2) * a(j2, i1);
			}
		return r;
	}

	/// Adjugate divided by the determinant. Throws SingularMatrixError when
	/// the determinant is not a unit of R.
	Mat3 inverse() const
	{
		auto inv_det = RingTraits<R>::unit_inverse(det());
		if (!inv_det)
			throw SingularMatrixError("determinant " + det().to_string() + " is not a unit");
		return *inv_det * adjugate();
	}

	bool is_invertible() const { return RingTraits<R>::unit_inverse(det()).has_value(); }

	Mat3 pow(long n) const
	{
		Mat3 base = n < 0 ? inverse() : *this;
		unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
		Mat3 result = identity();
		while (k) {
			if (k & 1)
				result *= base;
			k >>= 1;
			if (k)
				base *= base;
		}
		return result;
	}

	/// True iff this equals lambda * I for a unit lambda. Throws
	/// SingularMatrixError for non-invertible input.
	bool is_scalar() const
	{
		if (!is_invertible())
			throw SingularMatrixError("is_scalar on a singular matrix");
		for (int i = 0; i < 3; ++i)
			for (int j = 0; j < 3; ++j)
				if (i != j && !(*this)(i, j).is_zero())
					return false;
		return (*this)(0, 0) == (*this)(1, 1) && (*this)(1, 1) == (*this)(2, 2);
	}

	template <class F> auto map(F &&f) const -> Mat3<decltype(f(std::declval<const R &>()))>
	{
		using S = decltype(f(std::declval<const R &>()));
		std::array<S, 9> out;
		for (std::size_t k = 0; k < 9; ++k)
			out[k] = f(e_[k]);
		return Mat3<S>(out);
	}

	std::string to_string() const
	{
		std::string s = "[";
		for (int i = 0; i < 3; ++i) {
			s += i ? ", [" : "[";
			for (int j = 0; j < 3; ++j)
				s += (j ? ", " : "") + (*this)(i, j).to_string();
			s += "]";
		}
		return s + "]";
	}

private:
	std::array<R, 9> e_{};
};

using MatZ = Mat3<LaurentZ>;
using MatF2 = Mat3<LaurentF2>;
using MatRF = Mat3<RationalF2>;

inline MatF2 reduce_mod2(const MatZ &m)
{
	return m.map([](const LaurentZ &p) { return reduce_mod2(p); });
}

inline MatRF embed_rational(const MatF2 &m)
{
	return m.map([](const LaurentF2 &p) { return RationalF2(p); });
}

namespace detail {

template <class C> Mat3<LaurentPoly<C>> normalize_scalar(const Mat3<LaurentPoly<C>> &m)
{
	std::optional<int> lowest;
	for (const auto &p : m.entries())
		if (!p.is_zero())
			lowest = lowest ? std::min(*lowest, p.min_exponent()) : p.min_exponent();
	int sign = 1;
	if constexpr (std::is_same_v<C, Integer>) {
		for (const auto &p : m.entries())
			if (!p.is_zero()) {
				sign = p.terms().front().coefficient < 0 ? -1 : 1;
				break;
			}
	}
	const auto scale = LaurentPoly<C>::monomial(lowest ? -*lowest : 0, C(sign));
	return scale * m;
}

inline MatRF normalize_scalar(const MatRF &m)
{
	for (const auto &v : m.entries())
		if (!v.is_zero())
			return v.is_one() ? m : v.inverse() * m;
	return m;
}

} // namespace detail

template <class R> class ProjMat;
template <class R> ProjMat<R> proj_canonical(const Mat3<R> &a);

/// Element of PGL(3, R) held as its unique canonical representative:
/// over Laurent rings the smallest exponent across entries is 0 (and over the
/// integers the first nonzero entry has positive lowest coefficient); over
/// F2(t) the first nonzero entry in row-major order is 1.
template <class R> class ProjMat {
public:
	const Mat3<R> &representative() const { return rep_; }

	static ProjMat identity() { return ProjMat(Mat3<R>::identity()); }

	friend ProjMat operator*(const ProjMat &a, const ProjMat &b)
	{
		return ProjMat(detail::normalize_scalar(a.rep_ * b.rep_));
	}

	/// The adjugate is a scalar multiple of the inverse, so no division is
	/// needed.
	ProjMat inverse() const { return ProjMat(detail::normalize_scalar(rep_.adjugate())); }

	ProjMat pow(long n) const
	{
		ProjMat base = n < 0 ? inverse() : *this;
		unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
		ProjMat result = identity();
		while (k) {
			if (k & 1)
				result = result * base;
			k >>= 1;
			if (k)
				base = base * base;
		}
		return result;
	}

	bool is_identity() const { return rep_ == Mat3<R>::identity(); }

	friend bool operator==(const ProjMat &, const ProjMat &) = default;

	std::string to_string() const { return rep_.to_string(); }

private:
	explicit ProjMat(Mat3<R> rep) : rep_(std::move(rep)) {}
	friend ProjMat proj_canonical<R>(const Mat3<R> &a);

	Mat3<R> rep_;
};

/// Canonical representative of the scalar orbit of an invertible matrix.
template <class R> ProjMat<R> proj_canonical(const Mat3<R> &a)
{
	if (!a.is_invertible())
		throw SingularMatrixError("projective class of a singular matrix");
	return ProjMat<R>(detail::normalize_scalar(a));
}

/// a = lambda * b for a unit lambda.
template <class R> bool proj_eq(const Mat3<R> &a, const Mat3<R> &b)
{
	return proj_canonical(a) == proj_canonical(b);
}

template <class R> bool is_scalar(const Mat3<R> &a) { return a.is_scalar(); }

using ProjF2 = ProjMat<LaurentF2>;
using ProjRF = ProjMat<RationalF2>;

} // namespace burau
