#pragma once

#include "nilgrade/lie_algebra.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilgrade {

using Tuple = std::vector<std::size_t>;

/// A containment condition (p_1, ..., p_n | j): Delta_n D maps
/// F_{p_1} x ... x F_{p_n} into F_{j+1}.
struct DerivCondition
{
	Tuple tuple;
	std::size_t level = 0;

	std::size_t weight() const;
	std::string str() const;

	friend bool operator==(const DerivCondition &, const DerivCondition &) = default;
	// level first, then tuple length, then lexicographic
	friend std::strong_ordering operator<=>(const DerivCondition &a, const DerivCondition &b)
	{
		if (auto c = a.level <=> b.level; c != 0)
			return c;
		if (auto c = a.tuple.size() <=> b.tuple.size(); c != 0)
			return c;
		return a.tuple <=> b.tuple;
	}
};

/// Sorted, duplicate-free set of conditions.
using ConditionSet = std::vector<DerivCondition>;

/// Builds a condition, swapping the last two entries when they are out of
/// order (Delta_n D is alternating in its last two slots). Throws
/// std::invalid_argument when n < 2, an entry is 0, level < 3 or |p| >= level.
DerivCondition make_condition(Tuple tuple, std::size_t level);

ConditionSet normalize(ConditionSet set);

/// Parses "(1,1|3),(1,2|4)"; whitespace-insensitive. Empty input is the empty set.
ConditionSet parse_conditions(std::string_view text);
std::string format_conditions(const ConditionSet &set);

/// All normalized tuples p with 2 <= n < j and |p| < j, ordered by length
/// and then lexicographically.
std::vector<Tuple> enumerate_T(std::size_t j);

/// All (p | j) with 3 <= j <= c and p in enumerate_T(j).
ConditionSet enumerate_S(std::size_t c);

/// {0} ∪ {i/j : 2 <= i < j <= c}, increasing.
std::vector<Rational> candidate_values(std::size_t c);

/// Strongest-level representative in S_c of every condition with |p|/j > r.
ConditionSet r_condition_set(std::size_t c, const Rational &r);

struct GradingOperator
{
	RatMatrix matrix;
	friend bool operator==(const GradingOperator &, const GradingOperator &) = default;
};

class OperatorNotInD : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Delta_n D (x_1..x_n) = D[x_1..x_n] - sum_k [x_1..D x_k..x_n], left iterated brackets.
Vector delta_n(const LieAlgebra &g, const RatMatrix &d, const std::vector<Vector> &xs);

/// The algebra rewritten in its adapted basis, where every F_i is the span of
/// the coordinates of degree >= i.
class AdaptedAlgebra
{
  public:
	explicit AdaptedAlgebra(const LieAlgebra &g);

	const LieAlgebra &original() const { return original_; }
	const Filtration &filtration() const { return filtration_; }
	const AdaptedBasis &basis() const { return basis_; }
	const LieAlgebra &algebra() const { return adapted_; }
	const std::vector<std::size_t> &degrees() const { return basis_.degrees; }
	std::size_t nilpotency_class() const { return filtration_.nilpotency_class(); }
	std::size_t dim() const { return original_.dim(); }

	RatMatrix to_adapted(const RatMatrix &d) const { return inverse_ * d * basis_.change_of_basis; }
	RatMatrix to_original(const RatMatrix &d) const { return basis_.change_of_basis * d * inverse_; }

	/// Whether the operator (original coordinates) lies in D(g).
	bool is_grading_operator(const RatMatrix &d) const;
	void require_grading_operator(const RatMatrix &d) const;

  private:
	LieAlgebra original_;
	Filtration filtration_;
	AdaptedBasis basis_;
	RatMatrix inverse_;
	LieAlgebra adapted_;
};

struct GradingOperatorSpace
{
	GradingOperator base_point;
	std::vector<RatMatrix> free_directions;
	/// (row, column) of each free direction in adapted coordinates.
	std::vector<std::pair<std::size_t, std::size_t>> positions;
};

/// D(g) = base_point + span(free_directions).
GradingOperatorSpace grading_operator_space(const LieAlgebra &g, const Filtration &f, const AdaptedBasis &ab);

/// Solves for a grading operator satisfying every condition in `a` (levels
/// clamped to the nilpotency class). Returns the solution with all free
/// parameters zero, or std::nullopt when none exists.
std::optional<GradingOperator> is_A_derivable(const AdaptedAlgebra &g, const ConditionSet &a);
std::optional<GradingOperator> is_A_derivable(const LieAlgebra &g, const ConditionSet &a);

/// e_D = max over normalized p of |p| / depth(p, D). Throws OperatorNotInD.
Rational e_of_operator(const AdaptedAlgebra &g, const GradingOperator &d);
Rational e_of_operator(const LieAlgebra &g, const GradingOperator &d);

struct EInvariant
{
	Rational e;
	GradingOperator witness;
};

/// Smallest r in candidate_values(c) for which g is [r]-derivable.
EInvariant e_invariant(const AdaptedAlgebra &g);
EInvariant e_invariant(const LieAlgebra &g);

} // namespace nilgrade
