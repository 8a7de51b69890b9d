#include "nilgrade/catalog.hpp"

#include <gtest/gtest.h>

using namespace nilgrade;

TEST(Parse, BasicDefinition)
{
	auto g = parse_algebra("# Heisenberg\n"
	                       "dim 3\n"
	                       "bracket e1 e2 = e3\n");
	EXPECT_EQ(g.dim(), 3u);
	EXPECT_EQ(g.basis_bracket_dense(0, 1), (Vector{0, 0, 1}));
	EXPECT_EQ(g.basis_bracket_dense(1, 0), (Vector{0, 0, -1}));
	EXPECT_TRUE(check_jacobi(g).empty());
}

TEST(Parse, ReversedPairIsNegated)
{
	auto g = parse_algebra("dim 3\nbracket e2 e1 = 1/2 e3\n");
	EXPECT_EQ(g.basis_bracket_dense(0, 1), (Vector{0, 0, Rational(-1, 2)}));
}

TEST(Parse, LinearCombinations)
{
	auto g = parse_algebra("dim 4\nbasis a b c d\nbracket a b = 2 c - 1/3 d\nbracket a c = -d\n");
	EXPECT_EQ(g.basis_bracket_dense(0, 1), (Vector{0, 0, 2, Rational(-1, 3)}));
	EXPECT_EQ(g.basis_bracket_dense(0, 2), (Vector{0, 0, 0, -1}));
}

TEST(Parse, Errors)
{
	EXPECT_THROW(parse_algebra("dim 3\nbracket e1 e2 = e9\n"), ParseError);
	EXPECT_THROW(parse_algebra("dim 3\nbracket e1 e1 = e3\n"), ParseError);
	EXPECT_THROW(parse_algebra("dim 3\nbracket e1 e2 = e3\nbracket e2 e1 = e3\n"), ParseError);
	EXPECT_THROW(parse_algebra("dim 3\nbracket e1 e2 = 1/0 e3\n"), ParseError);
	EXPECT_THROW(parse_algebra("dim 3\nfrobnicate\n"), ParseError);
	EXPECT_THROW(parse_algebra("bracket e1 e2 = e3\n"), ParseError);
	EXPECT_THROW(parse_algebra("dim 2\nbasis x\n"), ParseError);
}

TEST(Parse, ErrorsCarryLineNumbers)
{
	try
	{
		parse_algebra("dim 2\n\nbracket e1 e2 = q\n");
		FAIL();
	}
	catch (const ParseError &e)
	{
		EXPECT_EQ(e.line(), 3u);
	}
}

TEST(Parse, FormatRoundTrip)
{
	for (const auto &name : catalog_names())
	{
		auto g = catalog_get(name).algebra();
		EXPECT_EQ(parse_algebra(format_algebra(g)), g) << name;
	}
}

TEST(Jacobi, DetectsViolation)
{
	// [e1,[e2,e3]] + cyclic = [e1,e4] = e5 != 0
	auto g = parse_algebra("dim 5\nbracket e2 e3 = e4\nbracket e1 e4 = e5\n");
	auto v = check_jacobi(g);
	ASSERT_EQ(v.size(), 1u);
	EXPECT_EQ(v[0].value, (Vector{0, 0, 0, 0, 1}));
}

TEST(LowerCentralSeries, Filiform)
{
	auto f = lower_central_series(filiform(5));
	EXPECT_EQ(f.nilpotency_class(), 4u);
	EXPECT_EQ(f.tau(), (std::vector<std::size_t>{2, 1, 1, 1}));
	EXPECT_EQ(format_tau(f.tau()), "2111");
	EXPECT_EQ(f.term_dim(1), 5u);
	EXPECT_EQ(f.term_dim(4), 1u);
	EXPECT_EQ(f.term_dim(5), 0u);
	EXPECT_EQ(f.depth(Vector{0, 0, 1, 0, 7}), 2u);
}

TEST(LowerCentralSeries, Abelian)
{
	auto f = lower_central_series(abelian(4));
	EXPECT_EQ(f.nilpotency_class(), 1u);
	EXPECT_EQ(format_tau(f.tau()), "4");
}

TEST(LowerCentralSeries, RejectsNonNilpotent)
{
	// [x, y] = y generates a non-nilpotent 2-dimensional algebra
	auto g = parse_algebra("dim 2\nbasis x y\nbracket x y = y\n");
	EXPECT_THROW(lower_central_series(g), NotNilpotent);
}

TEST(AdaptedBasis, RespectsFiltration)
{
	for (const auto &name : catalog_names())
	{
		auto g = catalog_get(name).algebra();
		auto f = lower_central_series(g);
		auto ab = adapted_basis(g, f);
		for (std::size_t k = 0; k < g.dim(); ++k)
			EXPECT_EQ(f.depth(ab.change_of_basis.column(k)), ab.degrees[k]) << name;
		EXPECT_TRUE(std::is_sorted(ab.degrees.begin(), ab.degrees.end()));
		EXPECT_EQ(rref(ab.change_of_basis).rank, g.dim());
	}
}

TEST(ChangeBasis, PreservesBracket)
{
	auto g = catalog_get("g6_13").algebra();
	auto p = RatMatrix::from_rows({{1, 0, 0, 0, 0, 0},
	                               {1, 1, 0, 0, 0, 0},
	                               {0, 2, 1, 0, 0, 0},
	                               {0, 0, 0, 1, 0, 0},
	                               {0, 0, 0, Rational(1, 2), 1, 0},
	                               {3, 0, 0, 0, 0, 1}},
	                              6);
	auto h = g.change_basis(p, g.labels());
	EXPECT_TRUE(check_jacobi(h).empty());
	// [P u, P v] = P [u, v]_h
	for (std::size_t i = 0; i < 6; ++i)
		for (std::size_t j = 0; j < 6; ++j)
			EXPECT_EQ(bracket(g, p.column(i), p.column(j)), p.apply(h.basis_bracket_dense(i, j)));
}
