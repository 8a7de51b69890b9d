#pragma once

#include "nilgrade/derivability.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilgrade {

/// Facts recorded alongside a catalog entry; the test suites check them
/// against computed values.
struct ExpectedFacts
{
	std::optional<std::size_t> nilpotency_class;
	std::optional<std::string> tau;
	std::optional<Rational> e;
	std::vector<ConditionSet> derivable;
	std::vector<ConditionSet> not_derivable;
	std::optional<std::vector<std::size_t>> positive_grading;
};

struct CatalogEntry
{
	std::string name;
	std::vector<std::string> aliases;
	std::string definition;
	ExpectedFacts expected;
	std::string note;

	LieAlgebra algebra() const { return parse_algebra(definition); }
};

class UnknownAlgebra : public std::invalid_argument
{
  public:
	using std::invalid_argument::invalid_argument;
};

/// Names of the fixed entries, in catalog order.
std::vector<std::string> catalog_names();

/// Looks up a fixed entry by name or alias, or a generated family member:
/// "abelian<N>", "filiform<N>", "central_product_<i>_<j>".
CatalogEntry catalog_get(std::string_view name);

LieAlgebra abelian(std::size_t n);
/// Standard filiform algebra of dimension n: [e_1, e_k] = e_{k+1}.
LieAlgebra filiform(std::size_t n);
/// Basis X, Y_1..Y_{i-1}, U, V_1..V_j with [X,Y_p] = Y_{p+1} (p <= i-2),
/// [X,Y_{i-1}] = V_j, [U,V_q] = V_{q+1}. Requires 2 <= i < j.
LieAlgebra central_product_filiform(std::size_t i, std::size_t j);

} // namespace nilgrade
