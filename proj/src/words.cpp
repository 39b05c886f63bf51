#include "burau/words.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

namespace burau {

namespace {

void push_reduced(std::vector<Letter> &stack, const Letter &l)
{
	if (!stack.empty() && stack.back() == l.inverse())
		stack.pop_back();
	else
		stack.push_back(l);
}

bool valid_generator(Alphabet alphabet, int id)
{
	return alphabet == Alphabet::Braid ? (id >= 1 && id <= 3) : (id >= 0 && id <= 2);
}

std::string letter_name(Alphabet alphabet, int id)
{
	if (alphabet == Alphabet::Braid)
		return "s" + std::to_string(id);
	static const char *names[] = {"x", "y", "t"};
	return names[id];
}

void require_same_alphabet(const GroupWord &a, const GroupWord &b)
{
	if (a.alphabet() != b.alphabet())
		throw UsageError("words over different alphabets");
}

} // namespace

GroupWord GroupWord::free_reduce(Alphabet alphabet, std::span<const Letter> letters)
{
	std::vector<Letter> stack;
	stack.reserve(letters.size());
	for (const auto &l : letters) {
		if (!valid_generator(alphabet, l.generator) || (l.sign != 1 && l.sign != -1))
			throw UsageError("letter outside the alphabet");
		push_reduced(stack, l);
	}
	return GroupWord(alphabet, std::move(stack));
}

GroupWord GroupWord::generator(Alphabet alphabet, int id, int power)
{
	if (!valid_generator(alphabet, id))
		throw UsageError("generator id " + std::to_string(id) + " outside the alphabet");
	const Letter l{id, power < 0 ? -1 : 1};
	return GroupWord(alphabet, std::vector<Letter>(static_cast<std::size_t>(std::abs(power)), l));
}

bool GroupWord::contains_generator(int id) const
{
	return std::any_of(letters_.begin(), letters_.end(), [id](const Letter &l) { return l.generator == id; });
}

GroupWord GroupWord::inverse() const
{
	std::vector<Letter> out;
	out.reserve(letters_.size());
	for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
		out.push_back(it->inverse());
	return GroupWord(alphabet_, std::move(out));
}

GroupWord GroupWord::pow(long n) const
{
	const GroupWord base = n < 0 ? inverse() : *this;
	GroupWord result(alphabet_);
	for (long k = 0; k < std::abs(n); ++k)
		result *= base;
	return result;
}

GroupWord operator*(const GroupWord &a, const GroupWord &b)
{
	require_same_alphabet(a, b);
	std::vector<Letter> out = a.letters_;
	out.reserve(a.letters_.size() + b.letters_.size());
	for (const auto &l : b.letters_)
		push_reduced(out, l);
	return GroupWord(a.alphabet_, std::move(out));
}

std::string GroupWord::to_string() const
{
	if (letters_.empty())
		return "1";
	std::string out;
	std::size_t i = 0;
	while (i < letters_.size()) {
		std::size_t j = i;
		while (j < letters_.size() && letters_[j] == letters_[i])
			++j;
		const long power = static_cast<long>(j - i) * letters_[i].sign;
		if (!out.empty())
			out += ' ';
		out += letter_name(alphabet_, letters_[i].generator);
		if (power != 1)
			out += "^" + std::to_string(power);
		i = j;
	}
	return out;
}

GroupWord commutator(const GroupWord &a, const GroupWord &b)
{
	require_same_alphabet(a, b);
	return a.inverse() * b.inverse() * a * b;
}

GroupWord word_compose(std::span<const GroupWord> ws, std::span<const long> exps)
{
	if (ws.size() != exps.size())
		throw UsageError("word_compose needs one exponent per word");
	if (ws.empty())
		return GroupWord();
	GroupWord result(ws[0].alphabet());
	for (std::size_t k = 0; k < ws.size(); ++k)
		result *= ws[k].pow(exps[k]);
	return result;
}

GroupWord substitute(const GroupWord &w, const std::map<int, GroupWord> &assignment)
{
	std::optional<Alphabet> target;
	for (const auto &[id, image] : assignment) {
		if (target && *target != image.alphabet())
			throw UsageError("substitution images use different alphabets");
		target = image.alphabet();
	}
	std::vector<Letter> out;
	for (const auto &l : w.letters()) {
		auto it = assignment.find(l.generator);
		if (it == assignment.end())
			throw UsageError("no substitution for generator " + letter_name(w.alphabet(), l.generator));
		const auto &image = it->second.letters();
		if (l.sign > 0)
			out.insert(out.end(), image.begin(), image.end());
		else
			for (auto r = image.rbegin(); r != image.rend(); ++r)
				out.push_back(r->inverse());
	}
	return GroupWord::free_reduce(target.value_or(w.alphabet()), out);
}

GroupWord rewrite_with_relators(const GroupWord &w, std::span<const GroupWord> relators)
{
	std::vector<std::vector<Letter>> patterns;
	for (const auto &r : relators) {
		require_same_alphabet(w, r);
		if (r.empty())
			continue;
		patterns.push_back(r.letters());
		patterns.push_back(r.inverse().letters());
	}
	GroupWord current = w;
	for (bool changed = true; changed;) {
		changed = false;
		const auto &letters = current.letters();
		for (const auto &pattern : patterns) {
			auto hit = std::search(letters.begin(), letters.end(), pattern.begin(), pattern.end());
			if (hit == letters.end())
				continue;
			std::vector<Letter> rest(letters.begin(), hit);
			rest.insert(rest.end(), hit + static_cast<long>(pattern.size()), letters.end());
			current = GroupWord::free_reduce(current.alphabet(), rest);
			changed = true;
			break;
		}
	}
	return current;
}

GroupWord yxy_word() { return GroupWord::y() * GroupWord::x() * GroupWord::y(); }

GroupWord delta_word()
{
	using W = GroupWord;
	return W::sigma(1) * W::sigma(2) * W::sigma(3) * W::sigma(1) * W::sigma(2) * W::sigma(1);
}

GroupWord family_x(int i, int depth_bound)
{
	if (i < 0)
		throw UsageError("family_x index must be nonnegative");
	if (i > depth_bound)
		throw ResourceError("family_x(" + std::to_string(i) + ") exceeds depth bound " + std::to_string(depth_bound));
	const GroupWord c = yxy_word();
	GroupWord w = GroupWord::x();
	for (int k = 0; k < i; ++k)
		w = commutator(c, w);
	return w;
}

GroupWord family_a(int i)
{
	if (i < 0)
		throw UsageError("family_a index must be nonnegative");
	const GroupWord c = yxy_word();
	return c.pow(i + 1) * GroupWord::x() * c.pow(-(i + 1));
}

GroupWord family_b(int i)
{
	if (i == 0)
		throw UsageError("family_b is undefined at index 0");
	return commutator(GroupWord::x(), yxy_word().pow(-i));
}

GroupWord family_b_from_a(int i)
{
	if (i < 1)
		throw UsageError("family_b_from_a needs i >= 1");
	return GroupWord::x(-1) * family_a(i - 1);
}

GroupWord to_braid(const GroupWord &w)
{
	if (w.alphabet() == Alphabet::Braid)
		return w;
	if (w.contains_generator(gen::t))
		throw UsageError("the stable letter t has no braid image");
	using W = GroupWord;
	const W x = W::sigma(1) * W::sigma(2) * W::sigma(3);
	const W y = x * W::sigma(1);
	return substitute(w, {{gen::x, x}, {gen::y, y}});
}

TelescopeResult telescoping_check(int factors, bool use_x4_relator)
{
	using W = GroupWord;
	const W x1 = commutator(yxy_word(), W::x());
	const W delta = W::t() * W::x() * W::t(-1);
	const W alpha = x1 * W::t() * W::x(-1) * W::t(-1);
	W product;
	for (int k = 0; k < factors; ++k)
		product *= delta.pow(k) * alpha * delta.pow(-k);
	std::vector<W> relators;
	if (use_x4_relator)
		relators.push_back(W::x(4));
	W rewritten = rewrite_with_relators(product, relators);
	W target = x1.pow(factors);
	return {product, rewritten, target, rewritten == target};
}

bool telescoping_identity_holds() { return telescoping_check(4).holds; }

// ---------------------------------------------------------------------------
// Word grammar

namespace {

class WordParser {
public:
	explicit WordParser(std::string_view text) : text_(text) {}

	GroupWord parse()
	{
		GroupWord w = word();
		skip_space();
		if (pos_ != text_.size())
			throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
		return w;
	}

private:
	static GroupWord join(const GroupWord &a, const GroupWord &b)
	{
		if (a.alphabet() == b.alphabet())
			return a * b;
		return to_braid(a) * to_braid(b);
	}

	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	bool at_atom_start()
	{
		skip_space();
		if (pos_ >= text_.size())
			return false;
		const char c = text_[pos_];
		return c == 's' || c == 'x' || c == 'y' || c == 't' || c == 'D' || c == '(' || c == '[';
	}

	GroupWord word()
	{
		if (!at_atom_start())
			throw ParseError(pos_ >= text_.size() ? "expected a word" : "unexpected '" + std::string(1, text_[pos_]) + "'",
			                 pos_);
		GroupWord w = term();
		while (at_atom_start())
			w = join(w, term());
		return w;
	}

	GroupWord term()
	{
		GroupWord a = atom();
		skip_space();
		if (pos_ < text_.size() && text_[pos_] == '^') {
			++pos_;
			skip_space();
			const std::size_t start = pos_;
			int sign = 1;
			if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
				sign = text_[pos_] == '-' ? -1 : 1;
				++pos_;
			}
			long value = 0;
			const std::size_t digits = pos_;
			while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
				value = value * 10 + (text_[pos_] - '0');
				if (value > 1000000)
					throw ParseError("exponent too large", start);
				++pos_;
			}
			if (pos_ == digits)
				throw ParseError("expected an integer exponent", pos_);
			a = a.pow(sign * value);
		}
		return a;
	}

	GroupWord atom()
	{
		skip_space();
		const std::size_t start = pos_;
		const char c = text_[pos_++];
		switch (c) {
		case 'x':
			return GroupWord::x();
		case 'y':
			return GroupWord::y();
		case 't':
			return GroupWord::t();
		case 'D':
			return delta_word();
		case 's': {
			if (pos_ < text_.size() && text_[pos_] >= '1' && text_[pos_] <= '3')
				return GroupWord::sigma(text_[pos_++] - '0');
			throw ParseError("expected s1, s2 or s3", start);
		}
		case '(': {
			GroupWord w = word();
			expect(')');
			return w;
		}
		case '[': {
			GroupWord u = word();
			expect(',');
			GroupWord v = word();
			expect(']');
			if (u.alphabet() != v.alphabet()) {
				u = to_braid(u);
				v = to_braid(v);
			}
			return commutator(u, v);
		}
		default:
			throw ParseError("unexpected '" + std::string(1, c) + "'", start);
		}
	}

	void expect(char c)
	{
		skip_space();
		if (pos_ >= text_.size() || text_[pos_] != c)
			throw ParseError(std::string("expected '") + c + "'", pos_);
		++pos_;
	}

	std::string_view text_;
	std::size_t pos_ = 0;
};

} // namespace

GroupWord parse_word(std::string_view text) { return WordParser(text).parse(); }

} // namespace burau
