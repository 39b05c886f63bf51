#include <cctype>
#include <string>

#include <gtest/gtest.h>

#include "burau/errors.hpp"
#include "support.hpp"

using namespace burau;
using burau::testing::Rng;

namespace {

// Words as strings over x y t (inverses upper case). Reduction repeatedly
// deletes the first adjacent inverse pair.
std::string naive_reduce(std::string s)
{
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t i = 0; i + 1 < s.size(); ++i)
			if (s[i] != s[i + 1] && std::tolower(s[i]) == std::tolower(s[i + 1])) {
				s.erase(i, 2);
				changed = true;
				break;
			}
	}
	return s;
}

std::string naive_inverse(const std::string &s)
{
	std::string out(s.rbegin(), s.rend());
	for (auto &c : out)
		c = std::islower(c) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c));
	return out;
}

std::string as_string(const GroupWord &w)
{
	static const char names[] = {'x', 'y', 't'};
	std::string out;
	for (const auto &l : w.letters()) {
		const char c = names[l.generator];
		out += l.sign > 0 ? c : static_cast<char>(std::toupper(c));
	}
	return out;
}

std::string naive_delete(std::string s, const std::string &relator)
{
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto &r : {relator, naive_inverse(relator)}) {
			const auto pos = s.find(r);
			if (pos != std::string::npos) {
				s = naive_reduce(s.erase(pos, r.size()));
				changed = true;
			}
		}
	}
	return s;
}

} // namespace

TEST(GroupWord, FreeReductionMatchesNaiveOracle)
{
	Rng rng(61);
	for (int k = 0; k < 500; ++k) {
		const auto letters = burau::testing::random_letters(rng, Alphabet::XYT, 30);
		std::string raw;
		for (const auto &l : letters)
			raw += l.sign > 0 ? "xy"[l.generator] : "XY"[l.generator];
		const GroupWord w = GroupWord::free_reduce(Alphabet::XYT, letters);
		ASSERT_EQ(as_string(w), naive_reduce(raw));
		ASSERT_EQ(GroupWord::free_reduce(Alphabet::XYT, w.letters()), w);
	}
}

TEST(GroupWord, GroupLawsOnRandomWords)
{
	Rng rng(62);
	for (int k = 0; k < 300; ++k) {
		const auto a = burau::testing::random_word(rng, Alphabet::Braid, 12);
		const auto b = burau::testing::random_word(rng, Alphabet::Braid, 12);
		const auto c = burau::testing::random_word(rng, Alphabet::Braid, 12);
		ASSERT_EQ((a * b) * c, a * (b * c));
		ASSERT_TRUE((a * a.inverse()).empty());
		ASSERT_EQ((a * b).inverse(), b.inverse() * a.inverse());
		ASSERT_EQ(a.pow(3), a * a * a);
		ASSERT_EQ(a.pow(-2), a.inverse() * a.inverse());
	}
}

TEST(GroupWord, CommutatorConvention)
{
	EXPECT_EQ(commutator(GroupWord::x(), GroupWord::y()).to_string(), "x^-1 y^-1 x y");
	EXPECT_TRUE(commutator(GroupWord::x(), GroupWord::x(3)).empty());
}

TEST(GroupWord, MixedAlphabetsAreRejected)
{
	EXPECT_THROW(GroupWord::x() * GroupWord::sigma(1), UsageError);
	EXPECT_THROW(GroupWord::sigma(4), UsageError);
	EXPECT_THROW(GroupWord::free_reduce(Alphabet::XYT, std::vector<Letter>{{5, 1}}), UsageError);
}

TEST(GroupWord, ToStringGroupsPowers)
{
	EXPECT_EQ(GroupWord().to_string(), "1");
	EXPECT_EQ((GroupWord::x(2) * GroupWord::y(-3) * GroupWord::x()).to_string(), "x^2 y^-3 x");
	EXPECT_EQ((GroupWord::sigma(1) * GroupWord::sigma(2, -1)).to_string(), "s1 s2^-1");
}

TEST(Substitute, IsAHomomorphism)
{
	Rng rng(63);
	const std::map<int, GroupWord> images{{gen::x, parse_word("s1 s2 s3")}, {gen::y, parse_word("s1 s2 s3 s1")}};
	for (int k = 0; k < 200; ++k) {
		const auto a = burau::testing::random_word(rng, Alphabet::XYT, 10);
		const auto b = burau::testing::random_word(rng, Alphabet::XYT, 10);
		ASSERT_EQ(substitute(a * b, images), substitute(a, images) * substitute(b, images));
		ASSERT_EQ(substitute(a, images), to_braid(a));
	}
	EXPECT_THROW(substitute(GroupWord::t(), images), UsageError);
}

TEST(Families, FirstMembers)
{
	EXPECT_EQ(family_x(0), GroupWord::x());
	EXPECT_EQ(family_x(1).to_string(), "y^-1 x^-1 y^-1 x^-1 y x y x");
	EXPECT_EQ(family_a(0).to_string(), "y x y x y^-1 x^-1 y^-1");
	EXPECT_EQ(family_b(1).to_string(), "x^-1 y x y x y^-1 x^-1 y^-1");
}

TEST(Families, IndexErrors)
{
	EXPECT_THROW(family_b(0), UsageError);
	EXPECT_THROW(family_a(-1), UsageError);
	EXPECT_THROW(family_x(-1), UsageError);
	EXPECT_THROW(family_x(kDefaultFamilyDepth + 1), ResourceError);
	EXPECT_NO_THROW(family_x(kDefaultFamilyDepth + 1, kDefaultFamilyDepth + 1));
}

TEST(Families, CommutatorAndConjugateFormsOfBAgreeAsFreeWords)
{
	for (int i = 1; i <= 8; ++i)
		EXPECT_EQ(family_b(i), family_b_from_a(i)) << i;
}

TEST(Families, NegativeIndexIdentitiesHoldFreely)
{
	EXPECT_EQ(family_b(-1), family_x(1).inverse());
	const GroupWord c = yxy_word();
	for (int i = 1; i <= 6; ++i) {
		EXPECT_EQ(family_b(-i), c.pow(-i) * family_b(i).inverse() * c.pow(i)) << i;
		EXPECT_EQ(c.inverse() * family_b(-i) * c, family_b(-1).inverse() * family_b(-i - 1)) << i;
	}
}

TEST(Families, WordLengthsStayModest)
{
	std::size_t prev = 0;
	for (int i = 0; i <= kDefaultFamilyDepth; ++i) {
		const std::size_t len = family_x(i).length();
		EXPECT_GT(len, prev);
		prev = len;
	}
}

TEST(Telescoping, RewritesToFourthPowerOfCommutator)
{
	const TelescopeResult r = telescoping_check(4);
	EXPECT_TRUE(r.holds);
	EXPECT_EQ(r.target, commutator(yxy_word(), GroupWord::x()).pow(4));
	EXPECT_TRUE(telescoping_identity_holds());
}

TEST(Telescoping, AgreesWithNaiveStringOracle)
{
	// alpha = [yxy, x] t x^-1 t^-1, delta = t x t^-1.
	const std::string c = "YXYXyxyx";
	const std::string alpha = c + "tXT";
	const std::string delta = "txT";
	std::string product;
	std::string dk;
	for (int k = 0; k < 4; ++k) {
		product += dk + alpha + naive_inverse(dk);
		dk += delta;
	}
	const std::string reduced = naive_delete(naive_reduce(product), "xxxx");
	EXPECT_EQ(reduced, naive_reduce(c + c + c + c));
	EXPECT_EQ(as_string(telescoping_check(4).rewritten), reduced);
}

TEST(Telescoping, NeedsTheRelator)
{
	const TelescopeResult r = telescoping_check(4, false);
	EXPECT_FALSE(r.holds);
	EXPECT_TRUE(r.rewritten.contains_generator(gen::t));
}

TEST(RewriteWithRelators, DeletesOccurrencesAndInverses)
{
	const std::vector<GroupWord> rel{GroupWord::x(4)};
	EXPECT_EQ(rewrite_with_relators(parse_word("y x^4 y"), rel), GroupWord::y(2));
	EXPECT_EQ(rewrite_with_relators(parse_word("y x^-5"), rel), parse_word("y x^-1"));
	EXPECT_EQ(rewrite_with_relators(parse_word("x^3 y"), rel), parse_word("x^3 y"));
}

TEST(ParseWord, Grammar)
{
	EXPECT_EQ(parse_word("x y^-1 x^2"), GroupWord::x() * GroupWord::y(-1) * GroupWord::x(2));
	EXPECT_EQ(parse_word("[y x y, x]"), family_x(1));
	EXPECT_EQ(parse_word("(x y)^-2"), (GroupWord::x() * GroupWord::y()).pow(-2));
	EXPECT_EQ(parse_word("D"), delta_word());
	EXPECT_EQ(parse_word("s1 s2^-1 s3"), GroupWord::sigma(1) * GroupWord::sigma(2, -1) * GroupWord::sigma(3));
	EXPECT_EQ(parse_word("t x t^-1"), GroupWord::t() * GroupWord::x() * GroupWord::t(-1));
}

TEST(ParseWord, BraidLettersPromoteTheWord)
{
	const GroupWord w = parse_word("x s1");
	EXPECT_EQ(w.alphabet(), Alphabet::Braid);
	EXPECT_EQ(w, parse_word("s1 s2 s3 s1"));
	EXPECT_EQ(parse_word("[x, s1]"), commutator(parse_word("s1 s2 s3"), GroupWord::sigma(1)));
	EXPECT_THROW(parse_word("t s1"), UsageError);
}

TEST(ParseWord, MalformedInputReportsPosition)
{
	for (const char *bad : {"", "x^", "x^a", "s4", "(x", "[x, y", "[ [ y x y , x ] , 1 ]", "x )", "z"})
		EXPECT_THROW(parse_word(bad), ParseError) << bad;
	try {
		parse_word("x y q");
		FAIL();
	} catch (const ParseError &e) {
		EXPECT_EQ(e.position(), 4u);
	}
}

TEST(ToBraid, MapsXAndY)
{
	EXPECT_EQ(to_braid(GroupWord::x()), parse_word("s1 s2 s3"));
	EXPECT_EQ(to_braid(GroupWord::y()), parse_word("s1 s2 s3 s1"));
	EXPECT_THROW(to_braid(GroupWord::t()), UsageError);
}
