#pragma once

#include "nilgrade/bch.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nilgrade {

/// Guivarch norm data: the degree of each eigenbasis coordinate. Layer norms
/// are coordinate max-norms.
struct GuivarchContext
{
	std::vector<std::size_t> degrees;

	static GuivarchContext from_grading(const LinearGrading &lg) { return {lg.degrees()}; }
	static GuivarchContext from_carnot(const CarnotAlgebra &ca) { return {ca.degrees}; }
};

/// max_i (max |x_j| over layer i)^{1/i}
double guivarch_norm(const GuivarchContext &ctx, std::span<const Rational> x);

/// Multiplies the layer-i component by t^i. Throws std::domain_error for t <= 0.
Vector dilate(const GuivarchContext &ctx, const Rational &t, std::span<const Rational> x);

/// Least-squares slope of log v against log r. Points with r <= 1 or v <= 0
/// are ignored; throws std::invalid_argument with fewer than two left.
double fit_exponent(const std::vector<std::pair<double, double>> &points);

/// 64-bit LCG (Knuth MMIX constants) producing grid coordinates k/16, k in [-16, 16].
class GridSampler
{
  public:
	explicit GridSampler(std::uint64_t seed) : state_(seed) {}

	std::uint64_t next_raw()
	{
		state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
		return state_;
	}
	/// One draw per coordinate.
	Rational next_coordinate();
	Vector next_vector(std::size_t dim);

  private:
	std::uint64_t state_;
};

/// 1, ratio, ratio^2, ..., ratio^steps
std::vector<Rational> geometric_ladder(const Rational &ratio, std::size_t steps);

struct GoodmanSample
{
	std::size_t pair_index;
	std::size_t ladder_index;
	Rational t;
	double r;         ///< max of the Guivarch norms of the two inputs
	double diff_norm; ///< Guivarch norm of the law difference
};

struct GoodmanReport
{
	Rational e_D;
	std::vector<GoodmanSample> samples; ///< ordered by (pair, ladder index)
	double fitted_slope = 0;
	double constant_estimate = 0;
	/// max ratio diff_norm / max(1, r)^e_D over the last quarter of the ladder
	/// divided by the same over the first quarter.
	double constant_ratio = 0;
	bool identically_zero = false;
	std::uint64_t seed = 0;
	std::size_t pairs = 0;
	std::vector<Rational> ladder;
};

/// Samples the law difference between g and its Carnot-graded companion for
/// the grading defined by `d`.
GoodmanReport goodman_check(const LieAlgebra &g, const GradingOperator &d, std::size_t n_pairs,
                            const std::vector<Rational> &t_ladder, std::uint64_t seed);

/// JSON document mirroring the report; rationals verbatim, floats with 12
/// significant digits, all numbers as strings.
std::string to_json(const GoodmanReport &report);

/// Decimal rendering with 12 significant digits.
std::string format_double(double v);

} // namespace nilgrade
