#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burau/errors.hpp"

namespace burau {

/// Generator sets for words. BRAID letters are sigma_1..sigma_3 (ids 1..3);
/// XYT letters are x, y and the formal stable letter t (ids 0, 1, 2).
enum class Alphabet { Braid, XYT };

namespace gen {
inline constexpr int x = 0;
inline constexpr int y = 1;
inline constexpr int t = 2;
} // namespace gen

struct Letter {
	int generator;
	int sign; // +1 or -1
	Letter inverse() const { return {generator, -sign}; }
	friend bool operator==(const Letter &, const Letter &) = default;
};

/// Freely reduced word over one alphabet. The empty word is the identity.
class GroupWord {
public:
	explicit GroupWord(Alphabet alphabet = Alphabet::XYT) : alphabet_(alphabet) {}

	/// Free reduction of an arbitrary letter sequence.
	static GroupWord free_reduce(Alphabet alphabet, std::span<const Letter> letters);

	static GroupWord generator(Alphabet alphabet, int id, int power = 1);
	static GroupWord x(int power = 1) { return generator(Alphabet::XYT, gen::x, power); }
	static GroupWord y(int power = 1) { return generator(Alphabet::XYT, gen::y, power); }
	static GroupWord t(int power = 1) { return generator(Alphabet::XYT, gen::t, power); }
	static GroupWord sigma(int i, int power = 1) { return generator(Alphabet::Braid, i, power); }

	Alphabet alphabet() const { return alphabet_; }
	const std::vector<Letter> &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	bool contains_generator(int id) const;

	GroupWord inverse() const;
	GroupWord pow(long n) const;

	/// Concatenation followed by free reduction at the junction.
	friend GroupWord operator*(const GroupWord &a, const GroupWord &b);
	GroupWord &operator*=(const GroupWord &b) { return *this = *this * b; }
	friend bool operator==(const GroupWord &, const GroupWord &) = default;

	/// Compact text in the word grammar, e.g. "y^-1 x^-1 y x". The empty word
	/// prints as "1".
	std::string to_string() const;

private:
	GroupWord(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(alphabet), letters_(std::move(letters)) {}

	Alphabet alphabet_;
	std::vector<Letter> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
GroupWord commutator(const GroupWord &a, const GroupWord &b);

/// Product of ws[k]^exps[k]; all words must share an alphabet.
GroupWord word_compose(std::span<const GroupWord> ws, std::span<const long> exps);

inline GroupWord word_inverse(const GroupWord &w) { return w.inverse(); }

/// Homomorphic image under generator -> word. Throws UsageError for a
/// generator without an assignment or mixed target alphabets.
GroupWord substitute(const GroupWord &w, const std::map<int, GroupWord> &assignment);

/// Repeatedly deletes contiguous occurrences of any relator or its inverse and
/// freely reduces, until nothing changes. Sound for the presented group, but
/// not a decision procedure.
GroupWord rewrite_with_relators(const GroupWord &w, std::span<const GroupWord> relators);

// Word families in x, y --------------------------------------------------

/// yxy.
GroupWord yxy_word();

/// Delta = s1 s2 s3 s1 s2 s1 (braid alphabet).
GroupWord delta_word();

inline constexpr int kDefaultFamilyDepth = 8;

/// x_0 = x, x_{i+1} = [yxy, x_i]. Throws ResourceError for i > depth_bound.
GroupWord family_x(int i, int depth_bound = kDefaultFamilyDepth);

/// a_i = (yxy)^{i+1} x (yxy)^{-i-1}, i >= 0.
GroupWord family_a(int i);

/// b_i = [x, (yxy)^{-i}] for i >= 1 and b_{-i} = [x, (yxy)^{i}] for i >= 1.
/// Throws UsageError for i = 0.
GroupWord family_b(int i);

/// b_i = x^-1 a_{i-1}, i >= 1 (the conjugate form).
GroupWord family_b_from_a(int i);

/// Image in the braid alphabet under x -> s1 s2 s3, y -> s1 s2 s3 s1.
/// Braid words pass through unchanged. Throws UsageError when t occurs.
GroupWord to_braid(const GroupWord &w);

/// Telescoping identity: with delta = t x t^-1 and
/// alpha = [yxy, x] t x^-1 t^-1, the product of delta^k alpha delta^-k for
/// k = 0..factors-1 rewrites (x^4 deletion plus free reduction) to
/// [yxy, x]^factors.
struct TelescopeResult {
	GroupWord product;   ///< freely reduced product before relator deletion
	GroupWord rewritten; ///< after rewrite_with_relators
	GroupWord target;    ///< [yxy, x]^factors
	bool holds;
};
TelescopeResult telescoping_check(int factors, bool use_x4_relator = true);

/// The four-factor identity alpha (delta alpha delta^-1) ... = [yxy, x]^4.
bool telescoping_identity_holds();

// Word grammar --------------------------------------------------------------

/// Parses
///     word := term+,  term := atom ('^' signed-int)?
///     atom := 's1' | 's2' | 's3' | 'x' | 'y' | 't' | 'D' | '(' word ')' | '[' word ',' word ']'
/// D is Delta = s1 s2 s3 s1 s2 s1 and [u, v] = u^-1 v^-1 u v. Words that use
/// only x, y, t stay in the XYT alphabet; any braid letter moves the whole
/// word to the braid alphabet (x, y substituted; t is then an error).
GroupWord parse_word(std::string_view text);

} // namespace burau
