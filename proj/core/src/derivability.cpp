#include "nilgrade/derivability.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace nilgrade {

std::size_t DerivCondition::weight() const { return std::accumulate(tuple.begin(), tuple.end(), std::size_t{0}); }

std::string DerivCondition::str() const
{
	std::string s = "(";
	for (std::size_t k = 0; k < tuple.size(); ++k)
	{
		if (k)
			s += ',';
		s += std::to_string(tuple[k]);
	}
	return s + "|" + std::to_string(level) + ")";
}

DerivCondition make_condition(Tuple tuple, std::size_t level)
{
	if (tuple.size() < 2)
		throw std::invalid_argument("a condition needs at least two tuple entries");
	if (std::find(tuple.begin(), tuple.end(), 0u) != tuple.end())
		throw std::invalid_argument("tuple entries must be positive");
	if (level < 3)
		throw std::invalid_argument("condition level must be at least 3");
	DerivCondition c{std::move(tuple), level};
	if (c.weight() >= level)
		throw std::invalid_argument("condition " + c.str() + " has |p| >= level");
	auto n = c.tuple.size();
	if (c.tuple[n - 2] > c.tuple[n - 1])
		std::swap(c.tuple[n - 2], c.tuple[n - 1]);
	return c;
}

ConditionSet normalize(ConditionSet set)
{
	std::sort(set.begin(), set.end());
	set.erase(std::unique(set.begin(), set.end()), set.end());
	return set;
}

ConditionSet parse_conditions(std::string_view text)
{
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch)))
			s += ch;
	ConditionSet out;
	std::size_t i = 0;
	auto fail = [&](const std::string &why) {
		throw std::invalid_argument("malformed condition set '" + std::string(text) + "': " + why);
	};
	auto read_int = [&]() {
		std::size_t j = i;
		while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
			++j;
		if (j == i)
			fail("expected an integer at position " + std::to_string(i));
		std::size_t v = std::stoul(s.substr(i, j - i));
		i = j;
		return v;
	};
	while (i < s.size())
	{
		if (!out.empty())
		{
			if (s[i] != ',')
				fail("expected ',' between conditions");
			++i;
		}
		if (i >= s.size() || s[i] != '(')
			fail("expected '('");
		++i;
		Tuple t;
		t.push_back(read_int());
		while (i < s.size() && s[i] == ',')
		{
			++i;
			t.push_back(read_int());
		}
		if (i >= s.size() || s[i] != '|')
			fail("expected '|'");
		++i;
		std::size_t level = read_int();
		if (i >= s.size() || s[i] != ')')
			fail("expected ')'");
		++i;
		try
		{
			out.push_back(make_condition(std::move(t), level));
		}
		catch (const std::invalid_argument &e)
		{
			fail(e.what());
		}
	}
	return normalize(std::move(out));
}

std::string format_conditions(const ConditionSet &set)
{
	std::string s;
	for (std::size_t i = 0; i < set.size(); ++i)
	{
		if (i)
			s += ',';
		s += set[i].str();
	}
	return s;
}

std::vector<Tuple> enumerate_T(std::size_t j)
{
	std::vector<Tuple> out;
	for (std::size_t n = 2; n < j; ++n)
	{
		std::vector<Tuple> of_length;
		Tuple cur;
		std::function<void(std::size_t)> rec = [&](std::size_t sum) {
			if (cur.size() == n)
			{
				if (cur[n - 2] <= cur[n - 1])
					of_length.push_back(cur);
				return;
			}
			std::size_t remaining = n - cur.size() - 1; // entries after this one, each >= 1
			for (std::size_t v = 1; sum + v + remaining < j; ++v)
			{
				cur.push_back(v);
				rec(sum + v);
				cur.pop_back();
			}
		};
		rec(0);
		out.insert(out.end(), of_length.begin(), of_length.end());
	}
	return out;
}

ConditionSet enumerate_S(std::size_t c)
{
	ConditionSet out;
	for (std::size_t j = 3; j <= c; ++j)
		for (auto &t : enumerate_T(j))
			out.push_back({std::move(t), j});
	return normalize(std::move(out));
}

std::vector<Rational> candidate_values(std::size_t c)
{
	std::set<Rational> vals{Rational(0)};
	for (std::size_t j = 3; j <= c; ++j)
		for (std::size_t i = 2; i < j; ++i)
			vals.insert(Rational(static_cast<long>(i), static_cast<long>(j)));
	return {vals.begin(), vals.end()};
}

ConditionSet r_condition_set(std::size_t c, const Rational &r)
{
	if (r.sign() < 0 || r >= Rational(1))
		throw std::invalid_argument("r must lie in [0, 1)");
	ConditionSet out;
	if (c < 3)
		return out;
	for (auto &t : enumerate_T(c))
	{
		std::size_t w = std::accumulate(t.begin(), t.end(), std::size_t{0});
		std::size_t level = c;
		if (!r.is_zero())
		{
			// largest integer j with j < w / r
			Rational bound = Rational(static_cast<long>(w)) / r;
			mpz_class fl = bound.numerator() / bound.denominator(); // floor for positive values
			std::size_t jmax = fl.get_ui();
			if (bound.is_integer())
				--jmax;
			level = std::min(level, jmax);
		}
		if (level <= w || level < 3)
			continue;
		out.push_back({std::move(t), level});
	}
	return normalize(std::move(out));
}

Vector delta_n(const LieAlgebra &g, const RatMatrix &d, const std::vector<Vector> &xs)
{
	if (xs.size() < 2)
		throw std::invalid_argument("delta_n needs at least two arguments");
	if (d.rows() != g.dim() || d.cols() != g.dim())
		throw DimensionError("delta_n: operator must be dim x dim");
	Vector out = d.apply(iterated_bracket(g, xs));
	for (std::size_t k = 0; k < xs.size(); ++k)
	{
		std::vector<Vector> ys = xs;
		ys[k] = d.apply(xs[k]);
		out = subtract(out, iterated_bracket(g, ys));
	}
	return out;
}

namespace {

std::vector<std::string> numbered_labels(std::size_t n, const std::string &prefix)
{
	std::vector<std::string> l;
	for (std::size_t i = 0; i < n; ++i)
		l.push_back(prefix + std::to_string(i + 1));
	return l;
}

} // namespace

AdaptedAlgebra::AdaptedAlgebra(const LieAlgebra &g)
    : original_(g), filtration_(lower_central_series(g)), basis_(adapted_basis(g, filtration_)),
      inverse_(inverse(basis_.change_of_basis)),
      adapted_(g.change_basis(basis_.change_of_basis, numbered_labels(g.dim(), "b")))
{
}

bool AdaptedAlgebra::is_grading_operator(const RatMatrix &d) const
{
	if (d.rows() != dim() || d.cols() != dim())
		return false;
	RatMatrix a = to_adapted(d);
	const auto &deg = degrees();
	for (std::size_t r = 0; r < dim(); ++r)
		for (std::size_t c = 0; c < dim(); ++c)
		{
			if (deg[r] < deg[c] && !a(r, c).is_zero())
				return false;
			if (deg[r] == deg[c])
			{
				Rational expected = r == c ? Rational(static_cast<long>(deg[r])) : Rational(0);
				if (a(r, c) != expected)
					return false;
			}
		}
	return true;
}

void AdaptedAlgebra::require_grading_operator(const RatMatrix &d) const
{
	if (!is_grading_operator(d))
		throw OperatorNotInD("operator does not preserve the lower central series with multiplication by i on "
		                     "F_i/F_{i+1}");
}

GradingOperatorSpace grading_operator_space(const LieAlgebra &g, const Filtration &f, const AdaptedBasis &ab)
{
	const std::size_t n = g.dim();
	(void)f;
	RatMatrix p = ab.change_of_basis;
	RatMatrix pinv = inverse(p);
	RatMatrix d0(n, n);
	for (std::size_t i = 0; i < n; ++i)
		d0(i, i) = static_cast<long>(ab.degrees[i]);
	GradingOperatorSpace space;
	space.base_point.matrix = p * d0 * pinv;
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			if (ab.degrees[a] >= ab.degrees[b] + 1)
			{
				RatMatrix e(n, n);
				e(a, b) = 1;
				space.free_directions.push_back(p * e * pinv);
				space.positions.emplace_back(a, b);
			}
	return space;
}

namespace {

/// Calls fn(tuple, degree_sum) for every tuple of adapted indices with
/// deg(b_k) >= lower[k], degree sum <= max_sum, and distinct last two entries.
void for_each_tuple(const std::vector<std::size_t> &deg, const Tuple &lower, std::size_t max_sum,
                    const std::function<void(const Tuple &, std::size_t)> &fn)
{
	const std::size_t n = lower.size();
	std::vector<std::size_t> suffix_min(n + 1, 0);
	for (std::size_t k = n; k-- > 0;)
		suffix_min[k] = suffix_min[k + 1] + lower[k];
	Tuple cur(n);
	std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t sum) {
		if (k == n)
		{
			if (n >= 2 && cur[n - 2] == cur[n - 1])
				return;
			fn(cur, sum);
			return;
		}
		for (std::size_t b = 0; b < deg.size(); ++b)
		{
			if (deg[b] < lower[k] || sum + deg[b] + suffix_min[k + 1] > max_sum)
				continue;
			cur[k] = b;
			rec(k + 1, sum + deg[b]);
		}
	};
	if (suffix_min[0] <= max_sum)
		rec(0, 0);
}

std::vector<Vector> unit_vectors(const Tuple &t, std::size_t n)
{
	std::vector<Vector> xs;
	for (auto b : t)
		xs.push_back(unit_vector(n, b));
	return xs;
}

} // namespace

std::optional<GradingOperator> is_A_derivable(const AdaptedAlgebra &g, const ConditionSet &a)
{
	const std::size_t n = g.dim();
	const std::size_t c = g.nilpotency_class();
	const auto &deg = g.degrees();
	const LieAlgebra &alg = g.algebra();

	// variable index for adapted position (row, col), deg(row) > deg(col)
	std::vector<std::pair<std::size_t, std::size_t>> vars;
	std::vector<std::vector<long>> var_of(n, std::vector<long>(n, -1));
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t col = 0; col < n; ++col)
			if (deg[r] > deg[col])
			{
				var_of[r][col] = static_cast<long>(vars.size());
				vars.emplace_back(r, col);
			}
	const std::size_t nv = vars.size();
	EchelonBuilder system(nv + 1);
	bool infeasible = false;

	for (const auto &cond : a)
	{
		const std::size_t level = std::min(cond.level, c);
		const std::size_t w = cond.weight();
		if (level <= w)
			continue;
		for_each_tuple(deg, cond.tuple, level - 1, [&](const Tuple &t, std::size_t sum) {
			if (infeasible)
				return;
			// coordinates a with sum < deg(a) <= level carry the constraints
			std::vector<std::size_t> coords;
			for (std::size_t k = 0; k < n; ++k)
				if (deg[k] > sum && deg[k] <= level)
					coords.push_back(k);
			if (coords.empty())
				return;
			std::vector<Vector> rows(n);
			for (auto k : coords)
				rows[k] = Vector(nv + 1);
			auto xs = unit_vectors(t, n);
			Vector wv = iterated_bracket(alg, xs);
			// base point D0 = diag(deg): constant term (deg(a) - sum) w_a moves to the right-hand side
			for (auto k : coords)
				if (!wv[k].is_zero())
					rows[k][nv] = -Rational(static_cast<long>(deg[k]) - static_cast<long>(sum)) * wv[k];
			// E_(r,col) w = w_col e_r
			for (std::size_t col = 0; col < n; ++col)
			{
				if (wv[col].is_zero())
					continue;
				for (auto k : coords)
					if (var_of[k][col] >= 0)
						rows[k][static_cast<std::size_t>(var_of[k][col])] += wv[col];
			}
			// - [x_1 .. E x_k .. x_n] with E x_k = e_r when x_k = e_col
			for (std::size_t slot = 0; slot < t.size(); ++slot)
			{
				const std::size_t col = t[slot];
				for (std::size_t r = 0; r < n; ++r)
				{
					if (var_of[r][col] < 0)
						continue;
					auto ys = xs;
					ys[slot] = unit_vector(n, r);
					Vector u = iterated_bracket(alg, ys);
					const auto v = static_cast<std::size_t>(var_of[r][col]);
					for (auto k : coords)
						if (!u[k].is_zero())
							rows[k][v] -= u[k];
				}
			}
			for (auto k : coords)
			{
				if (is_zero(rows[k]))
					continue;
				if (system.insert(std::move(rows[k])) && system.leading(system.rank() - 1) == nv)
				{
					infeasible = true;
					return;
				}
			}
		});
		if (infeasible)
			return std::nullopt;
	}

	RatMatrix lhs(system.rank(), nv);
	Vector rhs(system.rank());
	for (std::size_t i = 0; i < system.rank(); ++i)
	{
		const Vector &row = system.rows()[i];
		for (std::size_t j = 0; j < nv; ++j)
			lhs(i, j) = row[j];
		rhs[i] = row[nv];
	}
	auto sol = solve_affine(lhs, rhs);
	if (!sol)
		return std::nullopt;
	RatMatrix d(n, n);
	for (std::size_t i = 0; i < n; ++i)
		d(i, i) = static_cast<long>(deg[i]);
	for (std::size_t v = 0; v < nv; ++v)
		d(vars[v].first, vars[v].second) = sol->particular[v];
	return GradingOperator{g.to_original(d)};
}

std::optional<GradingOperator> is_A_derivable(const LieAlgebra &g, const ConditionSet &a)
{
	return is_A_derivable(AdaptedAlgebra(g), a);
}

Rational e_of_operator(const AdaptedAlgebra &g, const GradingOperator &d)
{
	g.require_grading_operator(d.matrix);
	const std::size_t n = g.dim();
	const std::size_t c = g.nilpotency_class();
	const auto &deg = g.degrees();
	RatMatrix da = g.to_adapted(d.matrix);
	Rational e = 0;
	if (c < 3)
		return e;
	auto tuples = enumerate_T(c);
	std::size_t max_len = 0;
	for (const auto &t : tuples)
		max_len = std::max(max_len, t.size());
	for (std::size_t len = 2; len <= max_len; ++len)
	{
		// depth of Delta_n D on each basis tuple of degree sum <= c
		std::vector<std::pair<Tuple, std::size_t>> finite;
		for_each_tuple(deg, Tuple(len, 1), c, [&](const Tuple &t, std::size_t) {
			Vector v = delta_n(g.algebra(), da, unit_vectors(t, n));
			std::size_t depth = 0;
			for (std::size_t k = 0; k < n; ++k)
				if (!v[k].is_zero() && (depth == 0 || deg[k] < depth))
					depth = deg[k];
			if (depth)
				finite.emplace_back(t, depth);
		});
		for (const auto &p : tuples)
		{
			if (p.size() != len)
				continue;
			std::size_t depth = 0;
			for (const auto &[t, dep] : finite)
			{
				bool ok = true;
				for (std::size_t k = 0; k < len && ok; ++k)
					ok = deg[t[k]] >= p[k];
				if (ok && (depth == 0 || dep < depth))
					depth = dep;
			}
			if (depth == 0)
				continue;
			std::size_t w = std::accumulate(p.begin(), p.end(), std::size_t{0});
			Rational ratio(static_cast<long>(w), static_cast<long>(depth));
			if (ratio > e)
				e = ratio;
		}
	}
	return e;
}

Rational e_of_operator(const LieAlgebra &g, const GradingOperator &d) { return e_of_operator(AdaptedAlgebra(g), d); }

EInvariant e_invariant(const AdaptedAlgebra &g)
{
	const std::size_t c = std::max<std::size_t>(g.nilpotency_class(), 2);
	for (const auto &r : candidate_values(c))
	{
		auto witness = is_A_derivable(g, r_condition_set(c, r));
		if (!witness)
			continue;
		Rational check = e_of_operator(g, *witness);
		if (check != r)
			throw std::logic_error("e_invariant: witness has e_D = " + check.str() + " but expected " + r.str());
		return {r, std::move(*witness)};
	}
	throw std::logic_error("e_invariant: no candidate value is feasible");
}

EInvariant e_invariant(const LieAlgebra &g) { return e_invariant(AdaptedAlgebra(g)); }

} // namespace nilgrade
