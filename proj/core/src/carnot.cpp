#include "nilgrade/carnot.hpp"

#include <sstream>

namespace nilgrade {

std::size_t LinearGrading::dim() const
{
	std::size_t d = 0;
	for (const auto &l : layers)
		d += l.size();
	return d;
}

RatMatrix LinearGrading::eigenbasis() const
{
	std::vector<Vector> cols;
	for (const auto &l : layers)
		cols.insert(cols.end(), l.begin(), l.end());
	return RatMatrix::from_columns(cols, dim());
}

std::vector<std::size_t> LinearGrading::degrees() const
{
	std::vector<std::size_t> d;
	for (std::size_t i = 0; i < layers.size(); ++i)
		d.insert(d.end(), layers[i].size(), i + 1);
	return d;
}

LinearGrading grading_from_operator(const AdaptedAlgebra &g, const GradingOperator &d)
{
	g.require_grading_operator(d.matrix);
	const std::size_t n = g.dim();
	const std::size_t c = g.nilpotency_class();
	LinearGrading lg;
	for (std::size_t i = 1; i <= c; ++i)
	{
		RatMatrix shifted = d.matrix - Rational(static_cast<long>(i)) * RatMatrix::identity(n);
		lg.layers.push_back(nullspace(shifted));
	}
	// cross-check against the filtration: v_i ⊕ ... ⊕ v_c = F_i
	if (lg.dim() != n)
		throw std::logic_error("grading_from_operator: layer dimensions do not add up");
	std::vector<Vector> tail;
	for (std::size_t i = c; i >= 1; --i)
	{
		tail.insert(tail.end(), lg.layers[i - 1].begin(), lg.layers[i - 1].end());
		const auto &fi = g.filtration().term(i);
		if (span_rank(tail, n) != tail.size() || tail.size() != fi.size())
			throw std::logic_error("grading_from_operator: layers are not complementary to the filtration");
		for (const auto &v : tail)
			if (!subspace_contains(fi, v))
				throw std::logic_error("grading_from_operator: layer escapes its filtration term");
	}
	return lg;
}

LinearGrading grading_from_operator(const LieAlgebra &g, const GradingOperator &d)
{
	return grading_from_operator(AdaptedAlgebra(g), d);
}

CarnotAlgebra carnot_algebra(const AdaptedAlgebra &g, const GradingOperator &d)
{
	LinearGrading lg = grading_from_operator(g, d);
	const std::size_t n = g.dim();
	CarnotAlgebra ca;
	ca.basis = lg.eigenbasis();
	ca.degrees = lg.degrees();
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < lg.layers.size(); ++i)
		for (std::size_t k = 0; k < lg.layers[i].size(); ++k)
			labels.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
	LieAlgebra full = g.original().change_basis(ca.basis, labels);
	std::map<std::pair<std::size_t, std::size_t>, Vector> graded;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			Vector v = full.basis_bracket_dense(i, j);
			const std::size_t target = ca.degrees[i] + ca.degrees[j];
			for (std::size_t k = 0; k < n; ++k)
				if (ca.degrees[k] != target)
					v[k] = 0;
			if (!is_zero(v))
				graded[{i, j}] = std::move(v);
		}
	ca.algebra = LieAlgebra(labels, graded);
	if (!check_jacobi(ca.algebra).empty())
		throw std::logic_error("carnot_algebra: graded bracket violates the Jacobi identity");
	return ca;
}

CarnotAlgebra carnot_algebra(const LieAlgebra &g, const GradingOperator &d) { return carnot_algebra(AdaptedAlgebra(g), d); }

LieAlgebra in_eigenbasis(const LieAlgebra &g, const CarnotAlgebra &ca)
{
	return g.change_basis(ca.basis, ca.algebra.labels());
}

GradingCheck verify_grading(const LieAlgebra &g, const std::vector<std::size_t> &degrees)
{
	if (degrees.size() != g.dim())
		throw DimensionError("verify_grading: expected " + std::to_string(g.dim()) + " degrees");
	GradingCheck res;
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t j = i + 1; j < g.dim(); ++j)
		{
			const auto &s = g.basis_bracket(i, j);
			bool bad = false;
			for (const auto &[k, coef] : s)
				if (degrees[k] != degrees[i] + degrees[j])
					bad = true;
			if (bad)
				res.violations.push_back({i, j, g.basis_bracket_dense(i, j)});
		}
	res.ok = res.violations.empty();
	return res;
}

std::string format_carnot(const CarnotAlgebra &ca)
{
	std::string deg = "degrees";
	for (auto d : ca.degrees)
		deg += " " + std::to_string(d);
	return format_algebra(ca.algebra, {deg});
}

std::optional<std::vector<std::size_t>> parse_degrees_comment(std::string_view text)
{
	std::istringstream is{std::string(text)};
	std::string line;
	while (std::getline(is, line))
	{
		std::istringstream ls(line);
		std::string hash, kw;
		if (!(ls >> hash >> kw) || hash != "#" || kw != "degrees")
			continue;
		std::vector<std::size_t> out;
		std::size_t d;
		while (ls >> d)
			out.push_back(d);
		return out;
	}
	return std::nullopt;
}

} // namespace nilgrade
