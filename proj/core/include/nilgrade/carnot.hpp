#pragma once

#include "nilgrade/derivability.hpp"

#include <string>
#include <vector>

namespace nilgrade {

/// Compatible linear grading g = v_1 ⊕ ... ⊕ v_c; layers[i-1] is a basis of
/// v_i in original coordinates.
struct LinearGrading
{
	std::vector<std::vector<Vector>> layers;

	std::size_t dim() const;
	/// Columns are the layer bases concatenated in layer order.
	RatMatrix eigenbasis() const;
	/// Degree of each eigenbasis vector.
	std::vector<std::size_t> degrees() const;
};

/// Carnot-graded algebra associated with a grading operator, written in the
/// operator's eigenbasis (layer-major, labels v{i}_{k}).
struct CarnotAlgebra
{
	LieAlgebra algebra;
	std::vector<std::size_t> degrees;
	RatMatrix basis; ///< eigenbasis vectors in original coordinates (columns)
};

/// Layer i is ker(D - i). Throws OperatorNotInD.
LinearGrading grading_from_operator(const AdaptedAlgebra &g, const GradingOperator &d);
LinearGrading grading_from_operator(const LieAlgebra &g, const GradingOperator &d);

CarnotAlgebra carnot_algebra(const AdaptedAlgebra &g, const GradingOperator &d);
CarnotAlgebra carnot_algebra(const LieAlgebra &g, const GradingOperator &d);

/// The original bracket expressed in the same eigenbasis as `ca`.
LieAlgebra in_eigenbasis(const LieAlgebra &g, const CarnotAlgebra &ca);

struct GradingViolation
{
	std::size_t i, j;
	Vector value; ///< [e_i, e_j]
};

struct GradingCheck
{
	bool ok = true;
	std::vector<GradingViolation> violations;
};

/// Checks that [e_i, e_j] lies in the span of basis vectors of degree
/// degrees[i] + degrees[j] for every basis pair.
GradingCheck verify_grading(const LieAlgebra &g, const std::vector<std::size_t> &degrees);

/// Definition text with a "# degrees ..." comment line; parse_algebra reads it back.
std::string format_carnot(const CarnotAlgebra &ca);

/// Reads the "# degrees d1 d2 ..." comment written by format_carnot, if present.
std::optional<std::vector<std::size_t>> parse_degrees_comment(std::string_view text);

} // namespace nilgrade
