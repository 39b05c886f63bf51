#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "burau/matrix3.hpp"

namespace burau {

// LaurentPoly: sorted array of [exponent, coefficient] pairs; over F2 the
// coefficient is implied and each pair is [exponent]. Integer coefficients
// outside the int64 range are written as decimal strings.
nlohmann::json to_json(const LaurentZ &p);
nlohmann::json to_json(const LaurentF2 &p);
// RationalF2: {"num": <LaurentF2>, "den": <LaurentF2>}.
nlohmann::json to_json(const RationalF2 &r);

LaurentZ laurent_z_from_json(const nlohmann::json &j);
LaurentF2 laurent_f2_from_json(const nlohmann::json &j);
RationalF2 rational_from_json(const nlohmann::json &j);

/// "<ring-tag>:" followed by the compact JSON of the row-major 3x3 array of
/// entry serializations. Equal matrices give identical bytes.
template <class R> std::string serialize(const Mat3<R> &m)
{
	nlohmann::json rows = nlohmann::json::array();
	for (int i = 0; i < 3; ++i) {
		nlohmann::json row = nlohmann::json::array();
		for (int j = 0; j < 3; ++j)
			row.push_back(to_json(m(i, j)));
		rows.push_back(std::move(row));
	}
	return RingTraits<R>::tag() + ":" + rows.dump();
}

template <class R> std::string serialize(const ProjMat<R> &m) { return serialize(m.representative()); }

/// Inverse of serialize for each ring; throws ParseError on malformed input
/// or a ring-tag mismatch.
MatZ deserialize_mat_z(std::string_view text);
MatF2 deserialize_mat_f2(std::string_view text);
MatRF deserialize_mat_rf(std::string_view text);

} // namespace burau
