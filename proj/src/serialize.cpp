#include "burau/serialize.hpp"

#include <limits>

namespace burau {

using nlohmann::json;

json to_json(const LaurentZ &p)
{
	json out = json::array();
	for (const auto &term : p.terms()) {
		const Integer &c = term.coefficient;
		if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
			out.push_back(json::array({term.exponent, static_cast<std::int64_t>(c)}));
		else
			out.push_back(json::array({term.exponent, c.str()}));
	}
	return out;
}

json to_json(const LaurentF2 &p)
{
	json out = json::array();
	for (const auto &term : p.terms())
		out.push_back(json::array({term.exponent}));
	return out;
}

json to_json(const RationalF2 &r)
{
	return json{{"num", to_json(r.numerator())}, {"den", to_json(r.denominator().to_laurent())}};
}

namespace {

int exponent_of(const json &pair)
{
	if (!pair.is_array() || pair.empty() || !pair[0].is_number_integer())
		throw ParseError("malformed Laurent term", 0);
	return pair[0].get<int>();
}

} // namespace

LaurentZ laurent_z_from_json(const json &j)
{
	if (!j.is_array())
		throw ParseError("Laurent polynomial must be an array", 0);
	std::vector<LaurentZ::Term> terms;
	for (const auto &pair : j) {
		if (pair.size() != 2)
			throw ParseError("integer Laurent term needs [exponent, coefficient]", 0);
		Integer c = pair[1].is_string() ? Integer(pair[1].get<std::string>()) : Integer(pair[1].get<std::int64_t>());
		terms.push_back({exponent_of(pair), std::move(c)});
	}
	return LaurentZ::from_terms(std::move(terms));
}

LaurentF2 laurent_f2_from_json(const json &j)
{
	if (!j.is_array())
		throw ParseError("Laurent polynomial must be an array", 0);
	std::vector<LaurentF2::Term> terms;
	for (const auto &pair : j) {
		if (pair.size() != 1)
			throw ParseError("F2 Laurent term needs [exponent]", 0);
		terms.push_back({exponent_of(pair), GF2(1)});
	}
	return LaurentF2::from_terms(std::move(terms));
}

RationalF2 rational_from_json(const json &j)
{
	if (!j.is_object() || !j.contains("num") || !j.contains("den"))
		throw ParseError("rational function needs num and den", 0);
	LaurentF2 den = laurent_f2_from_json(j["den"]);
	if (den.is_zero())
		throw ParseError("zero denominator", 0);
	if (den.min_exponent() < 0)
		throw ParseError("denominator must be a polynomial", 0);
	std::vector<int> exps;
	for (const auto &term : den.terms())
		exps.push_back(term.exponent);
	return RationalF2(laurent_f2_from_json(j["num"]), PolyF2::from_exponents(exps));
}

namespace {

template <class R, class F> Mat3<R> deserialize_with(std::string_view text, F &&entry)
{
	const std::string tag = RingTraits<R>::tag() + ":";
	if (text.substr(0, tag.size()) != tag)
		throw ParseError("expected ring tag '" + tag + "'", 0);
	json rows;
	try {
		rows = json::parse(text.substr(tag.size()));
	} catch (const json::parse_error &e) {
		throw ParseError(std::string("matrix JSON: ") + e.what(), tag.size());
	}
	if (!rows.is_array() || rows.size() != 3)
		throw ParseError("matrix needs three rows", tag.size());
	Mat3<R> m;
	for (int i = 0; i < 3; ++i) {
		if (!rows[i].is_array() || rows[i].size() != 3)
			throw ParseError("matrix row needs three entries", tag.size());
		for (int j = 0; j < 3; ++j)
			m(i, j) = entry(rows[i][j]);
	}
	return m;
}

} // namespace

MatZ deserialize_mat_z(std::string_view text) { return deserialize_with<LaurentZ>(text, laurent_z_from_json); }
MatF2 deserialize_mat_f2(std::string_view text) { return deserialize_with<LaurentF2>(text, laurent_f2_from_json); }
MatRF deserialize_mat_rf(std::string_view text) { return deserialize_with<RationalF2>(text, rational_from_json); }

} // namespace burau
