#include "burau/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "burau/representation.hpp"
#include "burau/serialize.hpp"

namespace burau {

using Index = FiniteGroupTable::Index;

namespace {

std::vector<ProjF2> make_slots(std::span<const ProjF2> generators)
{
	std::vector<ProjF2> slots;
	slots.reserve(2 * generators.size());
	for (const auto &g : generators) {
		slots.push_back(g);
		slots.push_back(g.inverse());
	}
	return slots;
}

constexpr std::uint16_t kNoSlot = 0xffff;

} // namespace

FiniteGroupTable FiniteGroupTable::closure(std::span<const ProjF2> generators, std::size_t cap)
{
	const std::vector<ProjF2> slots = make_slots(generators);
	std::vector<ProjF2> elements{ProjF2::identity()};
	std::vector<std::string> keys{serialize(elements[0])};
	std::unordered_map<std::string, Index> seen{{keys[0], 0}};
	std::vector<Index> parent{0};
	std::vector<std::uint16_t> parent_slot{kNoSlot};
	std::vector<std::vector<Index>> right_mul(slots.size());

	for (std::size_t i = 0; i < elements.size(); ++i) {
		for (std::size_t s = 0; s < slots.size(); ++s) {
			ProjF2 prod = elements[i] * slots[s];
			std::string key = serialize(prod);
			auto [it, inserted] = seen.try_emplace(key, static_cast<Index>(elements.size()));
			if (inserted) {
				if (elements.size() >= cap)
					throw ResourceError("closure exceeded cap of " + std::to_string(cap) + " elements");
				elements.push_back(std::move(prod));
				keys.push_back(std::move(key));
				parent.push_back(static_cast<Index>(i));
				parent_slot.push_back(static_cast<std::uint16_t>(s));
			}
			right_mul[s].push_back(it->second);
		}
	}

	FiniteGroupTable table;
	table.build_from_tree(std::move(elements), std::move(keys), std::move(parent), std::move(parent_slot),
	                      std::move(right_mul), generators);
	return table;
}

FiniteGroupTable FiniteGroupTable::from_elements(std::vector<ProjF2> elements, std::span<const ProjF2> generators)
{
	const std::vector<ProjF2> slots = make_slots(generators);
	const std::size_t n = elements.size();
	std::vector<std::string> keys(n);
	std::unordered_map<std::string, Index> index;
	for (std::size_t i = 0; i < n; ++i) {
		keys[i] = serialize(elements[i]);
		if (!index.emplace(keys[i], static_cast<Index>(i)).second)
			throw ConsistencyError("duplicate element in stored table");
	}
	auto id = index.find(serialize(ProjF2::identity()));
	if (id == index.end())
		throw ConsistencyError("stored table lacks the identity");

	std::vector<std::vector<Index>> right_mul(slots.size(), std::vector<Index>(n));
	for (std::size_t s = 0; s < slots.size(); ++s)
		for (std::size_t i = 0; i < n; ++i) {
			auto it = index.find(serialize(elements[i] * slots[s]));
			if (it == index.end())
				throw ConsistencyError("stored table is not closed under the generators");
			right_mul[s][i] = it->second;
		}

	// Spanning tree by BFS from the identity over the stored action.
	std::vector<Index> parent(n, 0);
	std::vector<std::uint16_t> parent_slot(n, kNoSlot);
	std::vector<bool> reached(n, false);
	std::deque<Index> queue{id->second};
	reached[id->second] = true;
	parent[id->second] = id->second;
	std::size_t count = 1;
	while (!queue.empty()) {
		const Index i = queue.front();
		queue.pop_front();
		for (std::size_t s = 0; s < slots.size(); ++s) {
			const Index j = right_mul[s][i];
			if (reached[j])
				continue;
			reached[j] = true;
			parent[j] = i;
			parent_slot[j] = static_cast<std::uint16_t>(s);
			queue.push_back(j);
			++count;
		}
	}
	if (count != n)
		throw ConsistencyError("stored table is not generated by the generators");

	FiniteGroupTable table;
	table.build_from_tree(std::move(elements), std::move(keys), std::move(parent), std::move(parent_slot),
	                      std::move(right_mul), generators);
	return table;
}

void FiniteGroupTable::build_from_tree(std::vector<ProjF2> elements, std::vector<std::string> keys,
                                       std::vector<Index> parent, std::vector<std::uint16_t> parent_slot,
                                       std::vector<std::vector<Index>> right_mul,
                                       std::span<const ProjF2> generators)
{
	const std::size_t n = elements.size();
	std::vector<Index> order(n);
	std::iota(order.begin(), order.end(), Index{0});
	std::sort(order.begin(), order.end(), [&](Index a, Index b) { return keys[a] < keys[b]; });
	std::vector<Index> rank(n);
	for (std::size_t k = 0; k < n; ++k)
		rank[order[k]] = static_cast<Index>(k);

	elements_.clear();
	keys_.clear();
	elements_.reserve(n);
	keys_.reserve(n);
	parent_.assign(n, 0);
	parent_slot_.assign(n, kNoSlot);
	right_mul_.assign(right_mul.size(), std::vector<Index>(n));
	for (std::size_t k = 0; k < n; ++k) {
		const Index old = order[k];
		elements_.push_back(std::move(elements[old]));
		keys_.push_back(std::move(keys[old]));
		parent_[k] = rank[parent[old]];
		parent_slot_[k] = parent_slot[old];
		for (std::size_t s = 0; s < right_mul.size(); ++s)
			right_mul_[s][k] = rank[right_mul[s][old]];
	}
	index_.clear();
	index_.reserve(n);
	for (std::size_t k = 0; k < n; ++k)
		index_.emplace(keys_[k], static_cast<Index>(k));

	identity_ = index_.at(serialize(ProjF2::identity()));

	depth_.assign(n, 0);
	// Parents precede children in BFS order; resolve depths by memoized walk.
	std::vector<bool> known(n, false);
	known[identity_] = true;
	for (std::size_t k = 0; k < n; ++k) {
		std::vector<Index> chain;
		Index cur = static_cast<Index>(k);
		while (!known[cur]) {
			chain.push_back(cur);
			cur = parent_[cur];
		}
		for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
			depth_[*it] = static_cast<std::uint16_t>(depth_[parent_[*it]] + 1);
			known[*it] = true;
		}
	}

	generators_.clear();
	for (const auto &g : generators)
		generators_.push_back(index_.at(serialize(g)));

	inverse_.assign(n, 0);
	for (std::size_t k = 0; k < n; ++k) {
		// (s_1 ... s_m)^-1 = s_m^-1 ... s_1^-1
		Index acc = identity_;
		for (Index cur = static_cast<Index>(k); cur != identity_; cur = parent_[cur])
			acc = right_mul_[parent_slot_[cur] ^ 1u][acc];
		inverse_[k] = acc;
	}
}

std::optional<Index> FiniteGroupTable::find(const ProjF2 &m) const
{
	auto it = index_.find(serialize(m));
	if (it == index_.end())
		return std::nullopt;
	return it->second;
}

Index FiniteGroupTable::product(Index a, Index b) const
{
	std::uint16_t path[64];
	std::vector<std::uint16_t> long_path;
	std::uint16_t *slots = path;
	const std::size_t len = depth_[b];
	if (len > 64) {
		long_path.resize(len);
		slots = long_path.data();
	}
	std::size_t k = len;
	for (Index cur = b; cur != identity_; cur = parent_[cur])
		slots[--k] = parent_slot_[cur];
	Index acc = a;
	for (std::size_t i = 0; i < len; ++i)
		acc = right_mul_[slots[i]][acc];
	return acc;
}

Index FiniteGroupTable::power(Index a, long n) const
{
	Index base = n < 0 ? inverse(a) : a;
	Index result = identity_;
	for (unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n); k > 0; k >>= 1) {
		if (k & 1)
			result = product(result, base);
		base = product(base, base);
	}
	return result;
}

Index FiniteGroupTable::commutator(Index a, Index b) const
{
	return product(product(inverse_[a], inverse_[b]), product(a, b));
}

std::size_t FiniteGroupTable::order(Index a) const
{
	std::size_t k = 1;
	for (Index cur = a; cur != identity_; cur = product(cur, a))
		++k;
	return k;
}

// Subgroups ----------------------------------------------------------------

SubgroupHandle::SubgroupHandle(const FiniteGroupTable &parent, std::vector<Index> members)
    : parent_(&parent), members_(std::move(members)), mask_(parent.size(), false)
{
	std::sort(members_.begin(), members_.end());
	members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
	for (Index m : members_) {
		if (m >= parent.size())
			throw UsageError("subgroup member outside the table");
		mask_[m] = true;
	}
}

SubgroupHandle whole_group(const FiniteGroupTable &g)
{
	std::vector<Index> all(g.size());
	std::iota(all.begin(), all.end(), Index{0});
	return SubgroupHandle(g, std::move(all));
}

SubgroupHandle generated_subgroup(const FiniteGroupTable &g, std::span<const Index> gens)
{
	std::vector<Index> uniq(gens.begin(), gens.end());
	std::sort(uniq.begin(), uniq.end());
	uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
	std::erase(uniq, g.identity());

	std::vector<bool> in(g.size(), false);
	std::vector<Index> members{g.identity()};
	in[g.identity()] = true;
	for (std::size_t i = 0; i < members.size(); ++i)
		for (Index s : uniq) {
			const Index p = g.product(members[i], s);
			if (!in[p]) {
				in[p] = true;
				members.push_back(p);
			}
		}
	return SubgroupHandle(g, std::move(members));
}

SubgroupHandle center(const FiniteGroupTable &g)
{
	std::vector<Index> members;
	for (Index z = 0; z < g.size(); ++z) {
		const bool central = std::all_of(g.generators().begin(), g.generators().end(),
		                                 [&](Index s) { return g.product(z, s) == g.product(s, z); });
		if (central)
			members.push_back(z);
	}
	return SubgroupHandle(g, std::move(members));
}

SubgroupHandle commutator_subgroup(const SubgroupHandle &a, const SubgroupHandle &b)
{
	const FiniteGroupTable &g = a.parent();
	if (&g != &b.parent())
		throw UsageError("subgroups of different tables");
	std::vector<bool> seen(g.size(), false);
	std::vector<Index> comms;
	for (Index u : a.members())
		for (Index v : b.members()) {
			const Index c = g.commutator(u, v);
			if (!seen[c]) {
				seen[c] = true;
				comms.push_back(c);
			}
		}
	return generated_subgroup(g, comms);
}

SubgroupHandle derived_subgroup(const FiniteGroupTable &g)
{
	const SubgroupHandle all = whole_group(g);
	return commutator_subgroup(all, all);
}

std::vector<SubgroupHandle> lower_central_series(const FiniteGroupTable &g)
{
	const SubgroupHandle all = whole_group(g);
	std::vector<SubgroupHandle> series{all};
	while (true) {
		SubgroupHandle next = commutator_subgroup(series.back(), all);
		if (next == series.back())
			break;
		series.push_back(std::move(next));
	}
	return series;
}

bool is_abelian(const SubgroupHandle &s)
{
	const FiniteGroupTable &g = s.parent();
	for (Index a : s.members())
		for (Index b : s.members())
			if (b > a && g.product(a, b) != g.product(b, a))
				return false;
	return true;
}

std::size_t exponent(const FiniteGroupTable &g)
{
	std::size_t e = 1;
	for (Index a = 0; a < g.size(); ++a)
		e = std::lcm(e, g.order(a));
	return e;
}

std::optional<int> nilpotency_class(const FiniteGroupTable &g)
{
	const auto series = lower_central_series(g);
	if (!series.back().is_trivial())
		return std::nullopt;
	return static_cast<int>(series.size()) - 1;
}

std::optional<int> elementary_abelian_2_rank(const SubgroupHandle &s)
{
	const FiniteGroupTable &g = s.parent();
	const std::size_t n = s.size();
	if ((n & (n - 1)) != 0 || !is_abelian(s))
		return std::nullopt;
	for (Index a : s.members())
		if (g.product(a, a) != g.identity())
			return std::nullopt;
	int r = 0;
	while ((std::size_t{1} << r) < n)
		++r;
	return r;
}

// Relations ----------------------------------------------------------------

NamedWord::NamedWord(std::string symbol, long power)
{
	if (power != 0)
		factors_.emplace_back(std::move(symbol), power);
}

NamedWord NamedWord::inverse() const
{
	NamedWord out;
	for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
		out.factors_.emplace_back(it->first, -it->second);
	return out;
}

NamedWord NamedWord::pow(long n) const
{
	const NamedWord base = n < 0 ? inverse() : *this;
	NamedWord out;
	for (long k = 0; k < std::abs(n); ++k)
		out = out * base;
	return out;
}

NamedWord operator*(const NamedWord &a, const NamedWord &b)
{
	NamedWord out = a;
	out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
	return out;
}

std::string NamedWord::to_string() const
{
	if (factors_.empty())
		return "1";
	std::string out;
	for (const auto &[sym, e] : factors_) {
		if (!out.empty())
			out += ' ';
		out += sym;
		if (e != 1)
			out += "^" + std::to_string(e);
	}
	return out;
}

NamedWord comm(const NamedWord &a, const NamedWord &b) { return a.inverse() * b.inverse() * a * b; }

bool RelationReport::all_hold() const
{
	return std::all_of(outcomes.begin(), outcomes.end(), [](const RelationOutcome &o) { return o.holds; });
}

std::size_t RelationReport::failures() const
{
	return static_cast<std::size_t>(
	    std::count_if(outcomes.begin(), outcomes.end(), [](const RelationOutcome &o) { return !o.holds; }));
}

Index evaluate(const FiniteGroupTable &g, const Assignment &assignment, const NamedWord &w)
{
	Index acc = g.identity();
	for (const auto &[sym, e] : w.factors()) {
		auto it = assignment.find(sym);
		if (it == assignment.end())
			throw UsageError("symbol '" + sym + "' has no assignment");
		acc = g.product(acc, g.power(it->second, e));
	}
	return acc;
}

ProjF2 evaluate(const std::map<std::string, ProjF2> &assignment, const NamedWord &w)
{
	ProjF2 acc = ProjF2::identity();
	for (const auto &[sym, e] : w.factors()) {
		auto it = assignment.find(sym);
		if (it == assignment.end())
			throw UsageError("symbol '" + sym + "' has no assignment");
		acc = acc * it->second.pow(e);
	}
	return acc;
}

RelationReport check_relations(const FiniteGroupTable &g, const Assignment &assignment,
                               std::span<const Relation> relations)
{
	RelationReport report;
	for (const auto &r : relations)
		report.outcomes.push_back(
		    {r.to_string(), evaluate(g, assignment, r.lhs) == evaluate(g, assignment, r.rhs)});
	return report;
}

// Presentations --------------------------------------------------------------

namespace {

NamedWord x_(long p = 1) { return NamedWord("x", p); }
NamedWord a_(int i, long p = 1) { return NamedWord("a" + std::to_string(i), p); }
NamedWord b_(int i, long p = 1) { return NamedWord("b" + std::to_string(i), p); }
const NamedWord one;

void require_depth(int n)
{
	if (n < 0)
		throw UsageError("stabilizer depth must be nonnegative");
}

} // namespace

std::vector<Relation> stab_relations_a(int n)
{
	require_depth(n);
	std::vector<Relation> rels;
	rels.push_back({x_(4), one});
	for (int i = 0; i <= n; ++i)
		rels.push_back({x_(2), a_(i, 2)});
	for (int i = 0; i <= n; ++i)
		rels.push_back({(x_() * a_(i)).pow(4), one});
	for (int i = 0; i <= n; ++i)
		for (int j = i + 1; j <= n; ++j)
			for (int k = 1; j + k <= n; ++k)
				rels.push_back({comm(a_(i), a_(j)), comm(a_(i + k), a_(j + k))});
	for (int i = 0; i <= n; ++i)
		for (int k = 1; k <= n - i; ++k)
			rels.push_back({comm(x_(), a_(i)), comm(a_(k - 1), a_(i + k))});
	return rels;
}

std::vector<Relation> stab_relations_b(int n)
{
	require_depth(n);
	std::vector<Relation> rels;
	rels.push_back({x_(4), one});
	for (int i = 1; i <= n + 1; ++i)
		rels.push_back({b_(i, 4), one});
	for (int i = 1; i <= n + 1; ++i)
		rels.push_back({comm(x_(), b_(i)), b_(i, 2)});
	for (int i = 1; i <= n + 1; ++i)
		for (int j = i + 1; j <= n + 1; ++j)
			rels.push_back({comm(b_(i), b_(j)), b_(i, 2) * b_(j - i, 2) * b_(j, 2)});
	return rels;
}

std::vector<Relation> stab_b_consequences(int n)
{
	require_depth(n);
	std::vector<Relation> rels;
	for (int i = 1; i <= n + 1; ++i) {
		rels.push_back({x_(-1) * b_(i, -1), b_(i) * x_(-1)});
		rels.push_back({comm(x_(2), b_(i)), one});
		rels.push_back({comm(x_(), b_(i, 2)), one});
	}
	return rels;
}

std::vector<Relation> stab_center_induction(int n)
{
	require_depth(n);
	std::vector<Relation> rels;
	for (int N = 0; N + 2 <= n + 1; ++N)
		for (int i = 1; i <= N + 1; ++i) {
			rels.push_back({(b_(i) * b_(N + 2, -1)).pow(2), b_(N - i + 2, 2)});
			rels.push_back({comm(b_(N - i + 2, 2), b_(N + 2)), one});
			rels.push_back({comm(b_(N + 2, 2), b_(N - i + 2)), one});
		}
	return rels;
}

std::vector<std::pair<std::string, GroupWord>> stab7_generator_words(int n)
{
	require_depth(n);
	std::vector<std::pair<std::string, GroupWord>> out{{"x", GroupWord::x()}};
	for (int i = 0; i <= n; ++i)
		out.emplace_back("a" + std::to_string(i), family_a(i));
	return out;
}

Assignment stab7_assignment(const FiniteGroupTable &g, int n)
{
	require_depth(n);
	Assignment out;
	auto bind = [&](const std::string &name, const GroupWord &w) {
		auto idx = g.find(gamma_eval(w));
		if (!idx)
			throw ConsistencyError(name + " is not an element of the table");
		out[name] = *idx;
	};
	for (const auto &[name, w] : stab7_generator_words(n))
		bind(name, w);
	for (int i = 1; i <= n + 1; ++i)
		bind("b" + std::to_string(i), family_b(i));
	return out;
}

namespace {

std::vector<ProjF2> stab7_generators(int n)
{
	std::vector<ProjF2> gens;
	for (const auto &[name, w] : stab7_generator_words(n))
		gens.push_back(gamma_eval(w));
	return gens;
}

std::string cache_header(int n)
{
	std::ostringstream out;
	out << "stab7 n=" << n << '\n';
	for (const auto &[name, w] : stab7_generator_words(n))
		out << "generator " << name << " = " << w.to_string() << '\n';
	return out.str();
}

} // namespace

FiniteGroupTable stab7(int n, std::size_t cap)
{
	const auto gens = stab7_generators(n);
	return FiniteGroupTable::closure(gens, cap);
}

std::filesystem::path stab7_cache_file(const std::filesystem::path &cache_dir, int n)
{
	return cache_dir / ("stab7_n" + std::to_string(n) + ".txt");
}

void write_stab7_cache(const FiniteGroupTable &g, int n, const std::filesystem::path &file)
{
	if (file.has_parent_path())
		std::filesystem::create_directories(file.parent_path());
	const auto tmp = file.string() + ".tmp";
	{
		std::ofstream out(tmp, std::ios::trunc);
		if (!out)
			throw Error("cannot write cache file " + tmp);
		out << cache_header(n) << "count " << g.size() << '\n';
		for (const auto &k : g.keys())
			out << k << '\n';
		if (!out)
			throw Error("cannot write cache file " + tmp);
	}
	std::filesystem::rename(tmp, file);
}

std::optional<FiniteGroupTable> read_stab7_cache(int n, const std::filesystem::path &file)
{
	std::ifstream in(file);
	if (!in)
		return std::nullopt;
	const std::string expected = cache_header(n);
	std::string header(expected.size(), '\0');
	if (!in.read(header.data(), static_cast<std::streamsize>(header.size())) || header != expected)
		return std::nullopt;
	std::string line;
	std::size_t count = 0;
	if (!std::getline(in, line) || line.rfind("count ", 0) != 0)
		return std::nullopt;
	try {
		count = std::stoull(line.substr(6));
	} catch (const std::exception &) {
		return std::nullopt;
	}
	std::vector<ProjF2> elements;
	elements.reserve(count);
	std::string prev;
	while (std::getline(in, line)) {
		if (line.empty())
			continue;
		if (!prev.empty() && !(prev < line))
			throw ConsistencyError("cache file " + file.string() + " is not in serialization order");
		elements.push_back(proj_canonical(deserialize_mat_f2(line)));
		if (serialize(elements.back()) != line)
			throw ConsistencyError("cache file " + file.string() + " holds a non-canonical matrix");
		prev = std::move(line);
	}
	if (elements.size() != count)
		throw ConsistencyError("cache file " + file.string() + " has a wrong element count");
	const auto gens = stab7_generators(n);
	return FiniteGroupTable::from_elements(std::move(elements), gens);
}

FiniteGroupTable stab7_cached(int n, const std::filesystem::path &cache_dir, std::size_t cap)
{
	const auto file = stab7_cache_file(cache_dir, n);
	if (auto cached = read_stab7_cache(n, file)) {
		if (cached->size() > cap)
			throw ResourceError("cached table exceeds cap of " + std::to_string(cap) + " elements");
		return std::move(*cached);
	}
	FiniteGroupTable g = stab7(n, cap);
	write_stab7_cache(g, n, file);
	return g;
}

// Normal form ----------------------------------------------------------------

bool normal_form_bijection(const FiniteGroupTable &g, std::span<const Index> central, std::span<const Index> transversal)
{
	const SubgroupHandle z = generated_subgroup(g, central);
	const std::size_t k = transversal.size();
	if (k >= 32)
		throw UsageError("transversal too long");
	std::vector<Index> products;
	for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
		Index p = g.identity();
		for (std::size_t j = 0; j < k; ++j)
			if (mask & (1u << j))
				p = g.product(p, transversal[j]);
		products.push_back(p);
	}
	if (z.size() * products.size() != g.size())
		return false;
	std::vector<bool> hit(g.size(), false);
	for (Index c : z.members())
		for (Index p : products) {
			const Index e = g.product(c, p);
			if (hit[e])
				return false;
			hit[e] = true;
		}
	return true;
}

bool normal_form_check(const FiniteGroupTable &g, int n, bool drop_b1_square)
{
	const Assignment a = stab7_assignment(g, n);
	std::vector<Index> central{g.power(a.at("x"), 2)};
	std::vector<Index> transversal{a.at("x")};
	for (int i = 1; i <= n + 1; ++i) {
		const Index b = a.at("b" + std::to_string(i));
		if (!(drop_b1_square && i == 1))
			central.push_back(g.power(b, 2));
		transversal.push_back(b);
	}
	return normal_form_bijection(g, central, transversal);
}

} // namespace burau
