#pragma once

#include "nilgrade/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nilgrade {

using Vector = std::vector<Rational>;

/// Thrown when operand shapes do not agree.
class DimensionError : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector subtract(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational &s, std::span<const Rational> v);
/// y += s * x
void axpy(const Rational &s, std::span<const Rational> x, std::span<Rational> y);
std::string format_vector(std::span<const Rational> v);

/// Dense row-major rational matrix.
class RatMatrix
{
  public:
	RatMatrix() = default;
	RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

	static RatMatrix identity(std::size_t n);
	static RatMatrix from_rows(const std::vector<Vector> &rows, std::size_t cols);
	static RatMatrix from_columns(const std::vector<Vector> &columns, std::size_t rows);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
	std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
	Vector column(std::size_t c) const;

	RatMatrix transpose() const;
	Vector apply(std::span<const Rational> v) const;

	friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
	friend RatMatrix operator+(const RatMatrix &a, const RatMatrix &b);
	friend RatMatrix operator-(const RatMatrix &a, const RatMatrix &b);
	friend RatMatrix operator*(const Rational &s, const RatMatrix &m);
	friend bool operator==(const RatMatrix &a, const RatMatrix &b) = default;

	bool is_zero() const;

  private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Rational> data_;
};

struct RrefResult
{
	RatMatrix reduced;
	std::vector<std::size_t> pivot_columns;
	std::size_t rank = 0;
};

/// Reduced row echelon form. Pivot rule: in each column, the first row at or
/// below the current position with a nonzero entry.
RrefResult rref(const RatMatrix &m);

struct AffineSolution
{
	Vector particular;             ///< free variables set to zero
	std::vector<Vector> nullspace_basis;
};

/// Solves a * x = b. Returns std::nullopt when the system is infeasible.
std::optional<AffineSolution> solve_affine(const RatMatrix &a, std::span<const Rational> b);

/// Basis of {x : m * x = 0}, one vector per free column (free entry set to 1).
std::vector<Vector> nullspace(const RatMatrix &m);

/// Inverse of a square matrix; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix &m);

bool subspace_contains(const std::vector<Vector> &basis, std::span<const Rational> v);

/// Rank of the span of a set of vectors.
std::size_t span_rank(const std::vector<Vector> &vectors, std::size_t dim);

/// Echelon (RREF) basis of span(vectors); rows of the reduced matrix.
std::vector<Vector> echelon_basis(const std::vector<Vector> &vectors, std::size_t dim);

/// Depth of v in a decreasing chain F_1 ⊇ F_2 ⊇ ... ⊇ 0, given as
/// filtration_bases[k-1] = basis of F_k. Returns the largest k with v in F_k,
/// or std::nullopt (infinite depth) when v = 0.
std::optional<std::size_t> filtration_depth(const std::vector<std::vector<Vector>> &filtration_bases,
                                            std::span<const Rational> v);

/// Incrementally builds a row echelon basis. Each stored row has a leading 1
/// in a distinct column and zeros in all earlier columns.
class EchelonBuilder
{
  public:
	explicit EchelonBuilder(std::size_t cols) : cols_(cols) {}

	/// Reduces v against the stored rows. Returns true if v was independent
	/// (and has been added).
	bool insert(Vector v);
	/// Reduces v in place against the stored rows.
	void reduce(Vector &v) const;
	bool contains(Vector v) const;

	std::size_t rank() const { return rows_.size(); }
	std::size_t cols() const { return cols_; }
	const std::vector<Vector> &rows() const { return rows_; }
	/// Leading column of the row with the given index.
	std::size_t leading(std::size_t i) const { return leads_[i]; }

  private:
	std::size_t cols_;
	std::vector<Vector> rows_;
	std::vector<std::size_t> leads_;
	std::vector<std::size_t> order_; // row indices sorted by leading column
};

} // namespace nilgrade
