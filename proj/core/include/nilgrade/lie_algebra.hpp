#pragma once

#include "nilgrade/linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilgrade {

/// Error in an algebra definition document. Carries the 1-based line number
/// (0 when not attributable to a line).
class ParseError : public std::runtime_error
{
  public:
	ParseError(std::size_t line, const std::string &msg)
	    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line)
	{
	}
	std::size_t line() const { return line_; }

  private:
	std::size_t line_;
};

class NotNilpotent : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Sparse coordinate list, sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional Lie algebra given by rational structure constants on a
/// fixed basis. Only brackets [e_i, e_j] with i < j are supplied; the other
/// order and the diagonal follow from antisymmetry.
class LieAlgebra
{
  public:
	LieAlgebra() = default;
	/// `brackets` maps (i, j) with i < j to the coordinates of [e_i, e_j].
	LieAlgebra(std::vector<std::string> labels, const std::map<std::pair<std::size_t, std::size_t>, Vector> &brackets);

	static LieAlgebra abelian(std::size_t dim);

	std::size_t dim() const { return labels_.size(); }
	const std::vector<std::string> &labels() const { return labels_; }

	/// Coordinates of [e_i, e_j] as a sparse list.
	const SparseVector &basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
	Vector basis_bracket_dense(std::size_t i, std::size_t j) const;

	/// Nonzero brackets [e_i, e_j], i < j, in (i, j) order.
	std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> nonzero_brackets() const;

	bool is_abelian() const;

	/// Same algebra expressed in the basis formed by the columns of `basis`.
	LieAlgebra change_basis(const RatMatrix &basis, std::vector<std::string> labels) const;

	friend bool operator==(const LieAlgebra &a, const LieAlgebra &b)
	{
		return a.labels_ == b.labels_ && a.table_ == b.table_;
	}

  private:
	std::vector<std::string> labels_;
	std::vector<SparseVector> table_; // dim*dim, antisymmetric
};

/// Parses the line-oriented definition format:
///   dim N
///   basis e1 e2 ... eN        (optional)
///   bracket ei ej = c1 ek + c2 el ...
/// '#' starts a comment. Unlisted brackets are zero.
LieAlgebra parse_algebra(std::string_view text);

/// Serializes into the definition format; `extra_comments` lines are emitted
/// as '#' comments after the header.
std::string format_algebra(const LieAlgebra &g, const std::vector<std::string> &extra_comments = {});

/// Formats a vector as a linear combination of basis labels, e.g. "e3 - 1/2 e5".
std::string format_combination(const std::vector<std::string> &labels, std::span<const Rational> v);

Vector bracket(const LieAlgebra &g, std::span<const Rational> x, std::span<const Rational> y);

/// Left iterated bracket [x_1, [x_2, ..., [x_{n-1}, x_n]...]].
Vector iterated_bracket(const LieAlgebra &g, const std::vector<Vector> &xs);

struct JacobiViolation
{
	std::size_t i, j, k;
	Vector value;
};

/// All basis triples i < j < k with a nonzero Jacobi sum.
std::vector<JacobiViolation> check_jacobi(const LieAlgebra &g);

/// Lower central series F_1 = g ⊇ F_2 = [g, g] ⊇ ... ⊇ F_{c+1} = 0.
class Filtration
{
  public:
	Filtration(std::size_t dim, std::vector<std::vector<Vector>> subspaces);

	std::size_t dim() const { return dim_; }
	std::size_t nilpotency_class() const { return subspaces_.size() - 1; }
	/// Echelon basis of F_k, 1-based; k > class yields the zero space.
	const std::vector<Vector> &term(std::size_t k) const;
	std::size_t term_dim(std::size_t k) const { return term(k).size(); }
	const std::vector<std::vector<Vector>> &subspaces() const { return subspaces_; }
	/// dim F_i / F_{i+1} for i = 1..c.
	std::vector<std::size_t> tau() const;
	/// Largest k with v in F_k; std::nullopt for v = 0.
	std::optional<std::size_t> depth(std::span<const Rational> v) const;

  private:
	std::size_t dim_;
	std::vector<std::vector<Vector>> subspaces_;
	std::vector<Vector> zero_;
};

Filtration lower_central_series(const LieAlgebra &g);

std::string format_tau(const std::vector<std::size_t> &tau);

struct AdaptedBasis
{
	RatMatrix change_of_basis;  ///< columns are the new basis vectors
	std::vector<std::size_t> degrees;
};

/// Basis adapted to the filtration: vectors of degree >= i span F_i. Built
/// from F_c upwards, preferring original basis vectors.
AdaptedBasis adapted_basis(const LieAlgebra &g, const Filtration &f);

} // namespace nilgrade
