#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "burau/matrix3.hpp"
#include "burau/words.hpp"

namespace burau {

inline constexpr std::size_t kDefaultClosureCap = std::size_t{1} << 20;

/// A finite subgroup of PGL(3, F2[t, 1/t]) enumerated in full.
///
/// Elements are stored in ascending order of their canonical serialization,
/// so two tables with the same element set are identical regardless of how
/// they were generated. Products of arbitrary elements are answered from the
/// right-multiplication action of the generators along a breadth-first
/// spanning tree rooted at the identity, without further matrix arithmetic.
class FiniteGroupTable {
public:
	using Index = std::uint32_t;

	/// Breadth-first closure under right multiplication by the generators and
	/// their inverses. Throws ResourceError once more than `cap` elements
	/// appear.
	static FiniteGroupTable closure(std::span<const ProjF2> generators, std::size_t cap = kDefaultClosureCap);

	/// Rebuilds a table from a stored element list (already in serialization
	/// order). Throws ConsistencyError when the list is not closed or a
	/// generator is missing.
	static FiniteGroupTable from_elements(std::vector<ProjF2> elements, std::span<const ProjF2> generators);

	std::size_t size() const { return elements_.size(); }
	const ProjF2 &element(Index i) const { return elements_[i]; }
	const std::string &key(Index i) const { return keys_[i]; }
	const std::vector<std::string> &keys() const { return keys_; }
	std::optional<Index> find(const ProjF2 &m) const;
	Index identity() const { return identity_; }
	/// Positions of the generators, in the order they were supplied.
	const std::vector<Index> &generators() const { return generators_; }

	Index product(Index a, Index b) const;
	Index inverse(Index a) const { return inverse_[a]; }
	Index power(Index a, long n) const;
	/// a^-1 b^-1 a b.
	Index commutator(Index a, Index b) const;
	std::size_t order(Index a) const;

private:
	FiniteGroupTable() = default;
	void build_from_tree(std::vector<ProjF2> elements, std::vector<std::string> keys, std::vector<Index> parent,
	                     std::vector<std::uint16_t> parent_slot, std::vector<std::vector<Index>> right_mul,
	                     std::span<const ProjF2> generators);

	std::vector<ProjF2> elements_;
	std::vector<std::string> keys_;
	std::unordered_map<std::string, Index> index_;
	std::vector<Index> generators_;
	Index identity_ = 0;
	// right_mul_[s][i] = element i times slot matrix s; slots alternate g, g^-1.
	std::vector<std::vector<Index>> right_mul_;
	std::vector<Index> parent_;
	std::vector<std::uint16_t> parent_slot_;
	std::vector<std::uint16_t> depth_;
	std::vector<Index> inverse_;
};

/// A subgroup of a FiniteGroupTable given by its member positions.
class SubgroupHandle {
public:
	using Index = FiniteGroupTable::Index;

	SubgroupHandle(const FiniteGroupTable &parent, std::vector<Index> members);

	const FiniteGroupTable &parent() const { return *parent_; }
	const std::vector<Index> &members() const { return members_; }
	std::size_t size() const { return members_.size(); }
	bool contains(Index i) const { return i < mask_.size() && mask_[i]; }
	bool is_trivial() const { return members_.size() == 1; }

	friend bool operator==(const SubgroupHandle &a, const SubgroupHandle &b)
	{
		return a.parent_ == b.parent_ && a.members_ == b.members_;
	}

private:
	const FiniteGroupTable *parent_;
	std::vector<Index> members_;
	std::vector<bool> mask_;
};

SubgroupHandle whole_group(const FiniteGroupTable &g);
SubgroupHandle generated_subgroup(const FiniteGroupTable &g, std::span<const FiniteGroupTable::Index> gens);

/// Elements commuting with every generator of the table.
SubgroupHandle center(const FiniteGroupTable &g);
/// Subgroup generated by all commutators [a, b] with a in `a`, b in `b`.
SubgroupHandle commutator_subgroup(const SubgroupHandle &a, const SubgroupHandle &b);
SubgroupHandle derived_subgroup(const FiniteGroupTable &g);
/// G = L_1 > L_2 = [G, G] > L_3 = [L_2, G] > ... up to the first repeat.
std::vector<SubgroupHandle> lower_central_series(const FiniteGroupTable &g);

bool is_abelian(const SubgroupHandle &s);
/// lcm of element orders.
std::size_t exponent(const FiniteGroupTable &g);
/// Length of the lower central series to the trivial group; nullopt when the
/// series stalls above the identity.
std::optional<int> nilpotency_class(const FiniteGroupTable &g);
/// r when the subgroup is abelian of order 2^r with every nonidentity element
/// of order 2.
std::optional<int> elementary_abelian_2_rank(const SubgroupHandle &s);

// Relations ---------------------------------------------------------------

/// Word over named symbols (x, a0, b3, ...), kept unreduced.
class NamedWord {
public:
	NamedWord() = default;
	NamedWord(std::string symbol, long power = 1);

	const std::vector<std::pair<std::string, long>> &factors() const { return factors_; }
	NamedWord inverse() const;
	NamedWord pow(long n) const;
	friend NamedWord operator*(const NamedWord &a, const NamedWord &b);
	std::string to_string() const;

private:
	std::vector<std::pair<std::string, long>> factors_;
};

NamedWord comm(const NamedWord &a, const NamedWord &b);

struct Relation {
	NamedWord lhs;
	NamedWord rhs;
	std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

struct RelationOutcome {
	std::string relation;
	bool holds;
};

struct RelationReport {
	std::vector<RelationOutcome> outcomes;
	bool all_hold() const;
	std::size_t failures() const;
};

using Assignment = std::map<std::string, FiniteGroupTable::Index>;

/// Evaluates both sides of every relation in the table. Throws UsageError on
/// a symbol missing from the assignment.
RelationReport check_relations(const FiniteGroupTable &g, const Assignment &assignment,
                               std::span<const Relation> relations);

FiniteGroupTable::Index evaluate(const FiniteGroupTable &g, const Assignment &assignment, const NamedWord &w);

/// Projective evaluation with symbols bound to matrices.
ProjF2 evaluate(const std::map<std::string, ProjF2> &assignment, const NamedWord &w);

// Presentations of Stab(7^(n)) -------------------------------------------

/// x^4 = 1; x^2 = a_i^2; (x a_i)^4 = 1; [a_i, a_j] = [a_{i+k}, a_{j+k}] for
/// 0 <= i < j, k >= 1, j + k <= n; [x, a_i] = [a_{k-1}, a_{i+k}] for
/// 1 <= k <= n - i.
std::vector<Relation> stab_relations_a(int n);
/// x^4 = b_i^4 = 1; [x, b_i] = b_i^2; [b_i, b_j] = b_i^2 b_{j-i}^2 b_j^2 for
/// 1 <= i < j <= n + 1.
std::vector<Relation> stab_relations_b(int n);
/// x^-1 b_i^-1 = b_i x^-1; [x^2, b_i] = 1; [x, b_i^2] = 1.
std::vector<Relation> stab_b_consequences(int n);
/// For every N with N + 2 <= n + 1 and 1 <= i <= N + 1:
/// (b_i b_{N+2}^-1)^2 = b_{N-i+2}^2, [b_{N-i+2}^2, b_{N+2}] = 1,
/// [b_{N+2}^2, b_{N-i+2}] = 1.
std::vector<Relation> stab_center_induction(int n);

/// Generator words of Stab(7^(n)): x, a_0, ..., a_n.
std::vector<std::pair<std::string, GroupWord>> stab7_generator_words(int n);

/// Binds x, a_0..a_n and b_1..b_{n+1} to their positions in stab7(n).
Assignment stab7_assignment(const FiniteGroupTable &g, int n);

inline constexpr int kDefaultStabDepth = 3;

/// Closure of the projective mod-2 images of x, a_0, ..., a_n.
FiniteGroupTable stab7(int n, std::size_t cap = kDefaultClosureCap);

/// stab7(n) backed by a cache directory: one text file per n holding a header
/// (n, generator words, element count) and the ordered serializations, one
/// per line. A valid file is reloaded; otherwise the table is built and the
/// file (re)written.
FiniteGroupTable stab7_cached(int n, const std::filesystem::path &cache_dir, std::size_t cap = kDefaultClosureCap);

std::filesystem::path stab7_cache_file(const std::filesystem::path &cache_dir, int n);
void write_stab7_cache(const FiniteGroupTable &g, int n, const std::filesystem::path &file);
/// nullopt when the file is absent or its header does not match.
std::optional<FiniteGroupTable> read_stab7_cache(int n, const std::filesystem::path &file);

/// Checks that (z, p) -> z p is a bijection from Z x P onto the table, where
/// Z is generated by `central` and P is the set of products
/// g_1^{e_1} ... g_k^{e_k}, e_j in {0, 1}, over `transversal`.
bool normal_form_bijection(const FiniteGroupTable &g, std::span<const FiniteGroupTable::Index> central,
                           std::span<const FiniteGroupTable::Index> transversal);

/// Normal form g = C(g) x^{i_0} b_1^{i_1} ... b_{n+1}^{i_{n+1}} on stab7(n)
/// with C(g) in <x^2, b_1^2, ..., b_{n+1}^2>. With drop_b1_square the
/// central part omits b_1^2 (a control that must fail).
bool normal_form_check(const FiniteGroupTable &g, int n, bool drop_b1_square = false);

} // namespace burau
