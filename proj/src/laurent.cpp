#include "burau/laurent.hpp"

namespace burau {

LaurentF2 reduce_mod2(const LaurentZ &p)
{
	std::vector<LaurentF2::Term> terms;
	terms.reserve(p.term_count());
	for (const auto &term : p.terms())
		if (boost::multiprecision::bit_test(boost::multiprecision::abs(term.coefficient), 0))
			terms.push_back({term.exponent, GF2(1)});
	return LaurentF2::from_terms(std::move(terms));
}

} // namespace burau
