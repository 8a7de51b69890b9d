#include "nilgrade/catalog.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace nilgrade;
using nilgrade::testing::RationalSource;

namespace {

RatMatrix diagonal(const std::vector<long> &d)
{
	RatMatrix m(d.size(), d.size());
	for (std::size_t i = 0; i < d.size(); ++i)
		m(i, i) = d[i];
	return m;
}

/// e_D straight from the definition: lower-central-series bases, every tuple,
/// no adapted coordinates and no degree-sum pruning.
Rational brute_force_e(const LieAlgebra &g, const RatMatrix &d)
{
	Filtration f = lower_central_series(g);
	const std::size_t c = f.nilpotency_class();
	Rational best(0);
	for (std::size_t j = 3; j <= c + 1; ++j)
		for (const auto &p : enumerate_T(j))
		{
			std::size_t w = 0;
			for (auto x : p)
				w += x;
			if (w != j - 1)
				continue; // visit each tuple once, at |p| + 1
			std::vector<Vector> values;
			std::vector<Vector> xs(p.size());
			std::function<void(std::size_t)> rec = [&](std::size_t k) {
				if (k == p.size())
				{
					values.push_back(delta_n(g, d, xs));
					return;
				}
				for (const auto &b : f.term(p[k]))
				{
					xs[k] = b;
					rec(k + 1);
				}
			};
			rec(0);
			std::size_t depth = std::numeric_limits<std::size_t>::max();
			for (const auto &v : values)
				if (auto dv = f.depth(v))
					depth = std::min(depth, *dv);
			if (depth <= c)
				best = std::max(best, Rational(static_cast<long>(w), static_cast<long>(depth)));
		}
	return best;
}

bool is_derivation(const LieAlgebra &g, const RatMatrix &d)
{
	for (std::size_t i = 0; i < g.dim(); ++i)
		for (std::size_t j = i + 1; j < g.dim(); ++j)
			if (!is_zero(delta_n(g, d, {unit_vector(g.dim(), i), unit_vector(g.dim(), j)})))
				return false;
	return true;
}

} // namespace

TEST(Enumerate, TSets)
{
	using V = std::vector<Tuple>;
	EXPECT_EQ(enumerate_T(3), (V{{1, 1}}));
	EXPECT_EQ(enumerate_T(4), (V{{1, 1}, {1, 2}, {1, 1, 1}}));
	EXPECT_EQ(enumerate_T(5), (V{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
	EXPECT_TRUE(enumerate_T(2).empty());
}

TEST(Enumerate, SSets)
{
	EXPECT_TRUE(enumerate_S(2).empty());
	EXPECT_EQ(format_conditions(enumerate_S(3)), "(1,1|3)");
	EXPECT_EQ(format_conditions(enumerate_S(4)), "(1,1|3),(1,1|4),(1,2|4),(1,1,1|4)");
}

TEST(Enumerate, CandidateValues)
{
	auto str = [](const std::vector<Rational> &v) {
		std::string s;
		for (const auto &x : v)
			s += x.str() + " ";
		return s;
	};
	EXPECT_EQ(str(candidate_values(2)), "0 ");
	EXPECT_EQ(str(candidate_values(4)), "0 1/2 2/3 3/4 ");
	EXPECT_EQ(str(candidate_values(5)), "0 2/5 1/2 3/5 2/3 3/4 4/5 ");
}

TEST(Conditions, Normalization)
{
	auto c = make_condition({2, 1}, 4);
	EXPECT_EQ(c.str(), "(1,2|4)");
	EXPECT_EQ(make_condition({2, 1, 1}, 5).str(), "(2,1,1|5)");
	EXPECT_EQ(make_condition({1, 2, 1}, 5).str(), "(1,1,2|5)");
	EXPECT_THROW(make_condition({1}, 3), std::invalid_argument);
	EXPECT_THROW(make_condition({1, 1}, 2), std::invalid_argument);
	EXPECT_THROW(make_condition({1, 2}, 3), std::invalid_argument);
	EXPECT_THROW(make_condition({0, 2}, 4), std::invalid_argument);
}

TEST(Conditions, ParseAndFormat)
{
	auto s = parse_conditions(" (1,2|4) , (1,1|3),(2,1|4)");
	EXPECT_EQ(format_conditions(s), "(1,1|3),(1,2|4)");
	EXPECT_TRUE(parse_conditions("").empty());
	EXPECT_THROW(parse_conditions("(1,1|3"), std::invalid_argument);
	EXPECT_THROW(parse_conditions("(1,x|3)"), std::invalid_argument);
	EXPECT_THROW(parse_conditions("(1,1)"), std::invalid_argument);
}

TEST(Conditions, RSets)
{
	EXPECT_EQ(format_conditions(r_condition_set(4, 0)), "(1,1|4),(1,2|4),(1,1,1|4)");
	EXPECT_EQ(format_conditions(r_condition_set(4, Rational(1, 2))), "(1,1|3),(1,2|4),(1,1,1|4)");
	EXPECT_TRUE(r_condition_set(4, Rational(3, 4)).empty());
	EXPECT_EQ(format_conditions(r_condition_set(3, 0)), "(1,1|3)");
	EXPECT_TRUE(r_condition_set(2, 0).empty());
	EXPECT_THROW(r_condition_set(4, 1), std::invalid_argument);
}

TEST(Delta, KnownValue)
{
	auto g = catalog_get("g6_11").algebra();
	Vector v = delta_n(g, diagonal({1, 1, 1, 2, 3, 4}), {unit_vector(6, 1), unit_vector(6, 2)});
	EXPECT_EQ(v, scale(2, unit_vector(6, 5)));
}

TEST(Delta, LinearInOperatorAndAlternatingInLastSlots)
{
	RationalSource rs(7);
	for (const char *name : {"g6_13", "g7_1_2i1", "counterexample11"})
	{
		auto g = catalog_get(name).algebra();
		const std::size_t n = g.dim();
		for (int trial = 0; trial < 10; ++trial)
		{
			RatMatrix d1(n, n), d2(n, n);
			for (std::size_t r = 0; r < n; ++r)
				for (std::size_t c = 0; c < n; ++c)
				{
					d1(r, c) = rs.scalar(2, 2);
					d2(r, c) = rs.scalar(2, 2);
				}
			for (std::size_t len = 2; len <= 4; ++len)
			{
				std::vector<Vector> xs;
				for (std::size_t k = 0; k < len; ++k)
					xs.push_back(rs.vector(n, 2, 2));
				EXPECT_EQ(delta_n(g, d1 + d2, xs), add(delta_n(g, d1, xs), delta_n(g, d2, xs)));
				auto swapped = xs;
				std::swap(swapped[len - 2], swapped[len - 1]);
				EXPECT_EQ(delta_n(g, d1, swapped), scale(-1, delta_n(g, d1, xs)));
			}
		}
	}
}

TEST(OperatorSpace, Counts)
{
	{
		auto g = abelian(2);
		AdaptedAlgebra a(g);
		auto s = grading_operator_space(g, a.filtration(), a.basis());
		EXPECT_EQ(s.base_point.matrix, RatMatrix::identity(2));
		EXPECT_TRUE(s.free_directions.empty());
	}
	{
		auto g = catalog_get("heisenberg").algebra();
		AdaptedAlgebra a(g);
		auto s = grading_operator_space(g, a.filtration(), a.basis());
		EXPECT_EQ(s.base_point.matrix, diagonal({1, 1, 2}));
		EXPECT_EQ(s.free_directions.size(), 2u);
	}
	{
		auto g = catalog_get("g6_11").algebra();
		AdaptedAlgebra a(g);
		auto s = grading_operator_space(g, a.filtration(), a.basis());
		EXPECT_EQ(s.free_directions.size(), 12u);
		for (const auto &dir : s.free_directions)
			EXPECT_TRUE(a.is_grading_operator(s.base_point.matrix + Rational(5, 3) * dir));
	}
}

TEST(OperatorSpace, Membership)
{
	auto g = catalog_get("g5_5").algebra();
	AdaptedAlgebra a(g);
	EXPECT_TRUE(a.is_grading_operator(diagonal({1, 1, 2, 3, 4})));
	EXPECT_FALSE(a.is_grading_operator(diagonal({1, 1, 2, 3, 5})));
	RatMatrix lowering = diagonal({1, 1, 2, 3, 4});
	lowering(0, 2) = 1; // sends e3 (depth 2) to a depth-1 vector
	EXPECT_FALSE(a.is_grading_operator(lowering));
	EXPECT_THROW(e_of_operator(a, GradingOperator{lowering}), OperatorNotInD);
}

TEST(Derivability, CarnotAlgebrasAdmitDerivations)
{
	for (const char *name : {"heisenberg", "filiform4", "filiform5", "filiform6", "abelian3"})
	{
		auto g = catalog_get(name).algebra();
		AdaptedAlgebra a(g);
		auto w = is_A_derivable(a, enumerate_S(a.nilpotency_class()));
		ASSERT_TRUE(w) << name;
		EXPECT_TRUE(is_derivation(g, w->matrix)) << name;
		EXPECT_EQ(e_of_operator(a, *w), Rational(0)) << name;
	}
}

TEST(Derivability, KnownDecisions)
{
	auto ce = catalog_get("counterexample11").algebra();
	EXPECT_TRUE(is_A_derivable(ce, parse_conditions("(1,1|3)")));
	EXPECT_TRUE(is_A_derivable(ce, parse_conditions("(1,2|4)")));
	EXPECT_FALSE(is_A_derivable(ce, parse_conditions("(1,1|3),(1,2|4)")));
	EXPECT_FALSE(is_A_derivable(ce, parse_conditions("(1,1,1|4)")));

	auto g = catalog_get("g7_1_2i1").algebra();
	EXPECT_TRUE(is_A_derivable(g, parse_conditions("(1,2|4)")));
	EXPECT_FALSE(is_A_derivable(g, parse_conditions("(1,1,1|4)")));
}

TEST(Derivability, EmptySetAlwaysFeasible)
{
	auto g = catalog_get("g6_20").algebra();
	AdaptedAlgebra a(g);
	auto w = is_A_derivable(a, {});
	ASSERT_TRUE(w);
	EXPECT_TRUE(a.is_grading_operator(w->matrix));
}

TEST(Derivability, LevelsAboveClassAreClamped)
{
	// (1,1|9) on a class-3 algebra means the same as (1,1|3)
	auto g = catalog_get("g6_2").algebra();
	EXPECT_FALSE(is_A_derivable(g, parse_conditions("(1,1|9)")));
	EXPECT_TRUE(is_A_derivable(catalog_get("filiform4").algebra(), parse_conditions("(1,1|9)")));
}

TEST(Derivability, WitnessesSatisfyTheirConditions)
{
	for (const auto &name : catalog_names())
	{
		auto g = catalog_get(name).algebra();
		AdaptedAlgebra a(g);
		const std::size_t c = a.nilpotency_class();
		if (c < 3)
			continue;
		for (const auto &r : candidate_values(c))
		{
			auto set = r_condition_set(c, r);
			auto w = is_A_derivable(a, set);
			if (!w)
				continue;
			ASSERT_TRUE(a.is_grading_operator(w->matrix)) << name;
			EXPECT_LE(e_of_operator(a, *w), r) << name << " r=" << r.str();
		}
	}
}

TEST(EOperator, DiagonalOperatorOnG611)
{
	auto g = catalog_get("g6_11").algebra();
	EXPECT_EQ(e_of_operator(g, GradingOperator{diagonal({1, 1, 1, 2, 3, 4})}), Rational(1, 2));
}

TEST(EOperator, DiagonalOperatorOnG708)
{
	// Degrees 1,1,1,2,3,4,5. [e2,[e2,[e1,e2]]] = e7 sits in degree 5 while the
	// inputs have total degree 4, so the (1,1,1,1) term has depth 5.
	auto g = catalog_get("g7_0_8").algebra();
	GradingOperator d{diagonal({1, 1, 1, 2, 3, 4, 5})};
	EXPECT_EQ(e_of_operator(g, d), Rational(4, 5));
	Vector v = delta_n(g, d.matrix, {unit_vector(7, 1), unit_vector(7, 1), unit_vector(7, 0), unit_vector(7, 1)});
	EXPECT_EQ(v, unit_vector(7, 6));
}

TEST(EOperator, AgreesWithBruteForce)
{
	for (const auto &name : catalog_names())
	{
		auto g = catalog_get(name).algebra();
		AdaptedAlgebra a(g);
		auto base = grading_operator_space(g, a.filtration(), a.basis());
		EXPECT_EQ(e_of_operator(a, base.base_point), brute_force_e(g, base.base_point.matrix)) << name;
		auto w = e_invariant(a).witness;
		EXPECT_EQ(e_of_operator(a, w), brute_force_e(g, w.matrix)) << name;
		// a perturbed operator exercises the off-diagonal part
		RatMatrix d = base.base_point.matrix;
		for (std::size_t k = 0; k < base.free_directions.size(); k += 3)
			d = d + Rational(static_cast<long>(k % 5) - 2, 3) * base.free_directions[k];
		EXPECT_EQ(e_of_operator(a, GradingOperator{d}), brute_force_e(g, d)) << name;
	}
}

TEST(EOperator, ContainmentInFPlusOne)
{
	// every grading operator maps F_p1 x ... x F_pn into F_{|p|+1}
	RationalSource rs(11);
	for (const char *name : {"g6_12", "g6_19", "counterexample11"})
	{
		auto g = catalog_get(name).algebra();
		AdaptedAlgebra a(g);
		auto s = grading_operator_space(g, a.filtration(), a.basis());
		RatMatrix d = s.base_point.matrix;
		for (const auto &dir : s.free_directions)
			d = d + rs.scalar(3, 2) * dir;
		const auto &f = a.filtration();
		for (std::size_t j = 3; j <= a.nilpotency_class() + 1; ++j)
			for (const auto &p : enumerate_T(j))
			{
				std::vector<Vector> xs;
				std::size_t w = 0;
				for (auto pk : p)
				{
					Vector v = zero_vector(g.dim());
					for (const auto &b : f.term(pk))
						axpy(rs.scalar(), b, v);
					xs.push_back(v);
					w += pk;
				}
				auto dv = f.depth(delta_n(g, d, xs));
				if (dv)
				{
					EXPECT_GE(*dv, w + 1) << name;
				}
			}
	}
}

TEST(EInvariant, TableValues)
{
	const std::vector<std::pair<const char *, Rational>> rows{
	    {"g5_5", Rational(3, 4)},  {"g6_11", Rational(1, 2)}, {"g6_12", Rational(3, 4)}, {"g6_13", Rational(3, 4)},
	    {"g6_17", Rational(3, 5)}, {"g6_19", Rational(4, 5)}, {"g6_20", Rational(4, 5)}, {"g6_2", Rational(2, 3)},
	    {"heisenberg", Rational(0)}, {"filiform5", Rational(0)}};
	for (const auto &[name, e] : rows)
	{
		auto r = e_invariant(catalog_get(name).algebra());
		EXPECT_EQ(r.e, e) << name;
	}
}

TEST(EInvariant, G708)
{
	// e_g >= 3/4 from the g6_12 quotient; the (1,1,1,1|5) obstruction raises it to 4/5
	auto g = catalog_get("g7_0_8").algebra();
	EXPECT_EQ(e_invariant(g).e, Rational(4, 5));
	EXPECT_FALSE(is_A_derivable(g, parse_conditions("(1,1,1,1|5)")));
	EXPECT_FALSE(is_A_derivable(g, r_condition_set(5, Rational(3, 4))));
}

TEST(EInvariant, AbelianFactorDoesNotChangeE)
{
	// g5_5 x Q
	auto g = parse_algebra("dim 6\n"
	                       "bracket e1 e2 = e3\nbracket e1 e3 = e4\nbracket e1 e4 = e5\nbracket e2 e3 = e5\n");
	EXPECT_EQ(e_invariant(g).e, Rational(3, 4));
}

TEST(EInvariant, MonotoneOverCandidates)
{
	for (const auto &name : catalog_names())
	{
		AdaptedAlgebra a(catalog_get(name).algebra());
		const std::size_t c = std::max<std::size_t>(a.nilpotency_class(), 2);
		bool seen = false;
		for (const auto &r : candidate_values(c))
		{
			bool feasible = is_A_derivable(a, r_condition_set(c, r)).has_value();
			EXPECT_TRUE(feasible || !seen) << name << " r=" << r.str();
			seen = seen || feasible;
		}
		EXPECT_TRUE(seen) << name;
	}
}

TEST(EInvariant, CentralProducts)
{
	for (std::size_t j = 3; j <= 6; ++j)
		for (std::size_t i = 2; i < j; ++i)
		{
			auto g = central_product_filiform(i, j);
			EXPECT_EQ(lower_central_series(g).nilpotency_class(), j);
			EXPECT_EQ(e_invariant(g).e, Rational(static_cast<long>(i), static_cast<long>(j))) << i << "," << j;
		}
	EXPECT_THROW(central_product_filiform(3, 3), std::invalid_argument);
	EXPECT_THROW(central_product_filiform(1, 3), std::invalid_argument);
}

TEST(EInvariant, RejectsNonNilpotent)
{
	auto g = parse_algebra("dim 2\nbasis x y\nbracket x y = y\n");
	EXPECT_THROW(e_invariant(g), NotNilpotent);
}

TEST(FiliformFamily, OffDiagonalOperators)
{
	// D_x: e1 -> e1, e2 -> e2 + x e3 + e4, e3 -> 2 e3 + x e4, e4 -> 3 e4, e5 -> 4 e5.
	auto g = filiform(5);
	AdaptedAlgebra a(g);
	for (const Rational &x : {Rational(0), Rational(1), Rational(2), Rational(-1, 3)})
	{
		RatMatrix d = diagonal({1, 1, 2, 3, 4});
		d(2, 1) = x;
		d(3, 1) = 1;
		d(3, 2) = x;
		ASSERT_TRUE(a.is_grading_operator(d));
		Vector e2p{0, 1, -x, (x * x - 1) / Rational(2), 0};
		EXPECT_EQ(d.apply(e2p), e2p);
		auto lg = grading_from_operator(a, GradingOperator{d});
		ASSERT_EQ(lg.layers[0].size(), 2u);
		EXPECT_TRUE(subspace_contains(lg.layers[0], e2p));
		EXPECT_EQ(delta_n(g, d, {unit_vector(5, 0), e2p}), scale(x * x - 1, unit_vector(5, 4)));
	}
}
