#pragma once

#include "nilgrade/carnot.hpp"

#include <string>
#include <vector>

namespace nilgrade {

enum class Side : unsigned char
{
	left,
	right
};

using Word = std::vector<Side>;

std::string format_word(const Word &w);

struct BchTerm
{
	Word word;
	Rational coefficient;
};

/// Coefficients b_q of log(exp(x) exp(y)) = x + y + sum_q b_q [z_q1, [z_q2, ... z_qn]]
/// for every word q of length 2..max_degree (z_left = x, z_right = y).
///
/// The series is computed in the free associative algebra on two letters and
/// expanded, degree by degree, in a fixed basis of right-nested brackets:
/// words are taken greedily in the order (number of letter changes, words
/// ending in left,right before right,left, lexicographic with left < right).
/// All other words carry coefficient zero.
struct BchTermTable
{
	std::size_t max_degree = 0;
	std::vector<BchTerm> terms; ///< by length, then lexicographic

	const Rational &coefficient(const Word &w) const;
};

inline constexpr std::size_t bch_max_supported_degree = 8;

/// Cached table for 2 <= c <= 8; throws std::out_of_range otherwise.
const BchTermTable &bch_table(std::size_t c);

/// Homogeneous degree-n part of log(exp(x) exp(y)) in the free associative
/// algebra, indexed by word bits (first letter most significant, right = 1).
std::vector<Rational> bch_free_component(std::size_t n);

/// Right-nested bracket of a word expanded in the free associative algebra,
/// same indexing as bch_free_component.
std::vector<Rational> right_nested_expansion(const Word &w);

/// x * y for a nilpotent algebra of class c.
Vector bch_product(const LieAlgebra &g, std::size_t c, std::span<const Rational> x, std::span<const Rational> y);
Vector bch_product(const LieAlgebra &g, const Filtration &f, std::span<const Rational> x, std::span<const Rational> y);

/// Product for the graded bracket; coordinates in the eigenbasis of `ca`.
Vector carnot_product(const CarnotAlgebra &ca, std::span<const Rational> x, std::span<const Rational> y);

/// Inverse in either group law.
Vector group_inverse(std::span<const Rational> x);

/// Compares the group law of an algebra with that of its Carnot-graded
/// companion, both written in the companion's eigenbasis.
class LawComparison
{
  public:
	LawComparison(const LieAlgebra &g, CarnotAlgebra ca);

	const LieAlgebra &original() const { return original_; } ///< original bracket in the eigenbasis
	const CarnotAlgebra &carnot() const { return carnot_; }
	std::size_t nilpotency_class() const { return class_; }

	Vector product(std::span<const Rational> x, std::span<const Rational> y) const;
	Vector carnot_product(std::span<const Rational> x, std::span<const Rational> y) const;
	/// product(x, y) - carnot_product(x, y)
	Vector difference(std::span<const Rational> x, std::span<const Rational> y) const;

  private:
	LieAlgebra original_;
	CarnotAlgebra carnot_;
	std::size_t class_;
};

/// bch_product(g) - carnot_product(ca), coordinates in the eigenbasis of `ca`.
Vector law_difference(const LieAlgebra &g, const CarnotAlgebra &ca, std::span<const Rational> x,
                      std::span<const Rational> y);

/// Difference of the group laws of two brackets on the same space, each
/// truncated at the larger of the two classes.
Vector law_difference(const LieAlgebra &a, const LieAlgebra &b, std::span<const Rational> x,
                      std::span<const Rational> y);

} // namespace nilgrade
