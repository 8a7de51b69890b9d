#include "nilgrade/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace nilgrade {

namespace {

ConditionSet conds(std::string_view s) { return parse_conditions(s); }

std::vector<CatalogEntry> build_catalog()
{
	std::vector<CatalogEntry> c;

	c.push_back({"abelian3", {}, format_algebra(abelian(3)), {1, "3", Rational(0), {}, {}, {}}, "abelian"});
	c.push_back({"heisenberg",
	             {"h3"},
	             "dim 3\n"
	             "bracket e1 e2 = e3\n",
	             {2, "21", Rational(0), {}, {}, {}},
	             "Carnot"});
	for (std::size_t n : {4u, 5u, 6u})
	{
		std::string tau = "2" + std::string(n - 2, '1');
		c.push_back({"filiform" + std::to_string(n), {}, format_algebra(filiform(n)),
		             {n - 1, tau, Rational(0), {}, {}, {}}, "standard filiform, Carnot"});
	}
	c.push_back({"g5_5",
	             {"g5,5", "L6,7"},
	             "dim 5\n"
	             "bracket e1 e2 = e3\n"
	             "bracket e1 e3 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e2 e3 = e5\n",
	             {4, "2111", Rational(3, 4), {}, {conds("(1,2|4)")}, {}},
	             "the two nomenclature labels disagree on dimension; both kept as unverified aliases"});
	c.push_back({"g6_11",
	             {"g6,11", "L6,12"},
	             "dim 6\n"
	             "bracket e1 e2 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e3 = e6\n",
	             {4, "3111", Rational(1, 2), {}, {conds("(1,1|4)")}, {}},
	             ""});
	c.push_back({"g6_12",
	             {"g6,12", "L6,11"},
	             "dim 6\n"
	             "bracket e1 e2 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e3 = e6\n"
	             "bracket e2 e4 = e6\n",
	             {4, "3111", Rational(3, 4), {}, {conds("(1,2|4)")}, {}},
	             ""});
	c.push_back({"g6_13",
	             {"g6,13", "L6,13"},
	             "dim 6\n"
	             "bracket e1 e2 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e3 = e5\n"
	             "bracket e4 e3 = e6\n",
	             {4, "3111", Rational(3, 4), {}, {conds("(1,2|4)")}, {}},
	             ""});
	c.push_back({"g6_17",
	             {"g6,17", "L6,17"},
	             "dim 6\n"
	             "bracket e1 e2 = e3\n"
	             "bracket e1 e3 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e3 = e6\n",
	             {5, "21111", Rational(3, 5), {}, {conds("(1,2|5)")}, {}},
	             ""});
	c.push_back({"g6_19",
	             {"g6,19", "L6,15"},
	             "dim 6\n"
	             "bracket e1 e2 = e3\n"
	             "bracket e1 e3 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e3 = e5\n"
	             "bracket e2 e4 = e6\n",
	             {5, "21111", Rational(4, 5), {}, {conds("(1,3|5)")}, {}},
	             ""});
	c.push_back({"g6_20",
	             {"g6,20", "L6,14"},
	             "dim 6\n"
	             "bracket e1 e2 = e3\n"
	             "bracket e1 e3 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e2 e5 = e6\n"
	             "bracket e2 e3 = e5\n"
	             "bracket e4 e3 = e6\n",
	             {5, "21111", Rational(4, 5), {conds("(1,3|5)")}, {conds("(1,1,2|5)"), conds("(1,1,1,1|5)")}, {}},
	             "(1,3|5) holds already for the diagonal adapted operator; the obstruction sits in (1,1,2|5)"});
	c.push_back({"g6_2",
	             {"g6,2", "L6,10"},
	             "dim 6\n"
	             "bracket e1 e2 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e3 e4 = e6\n",
	             {3, "411", Rational(2, 3), {}, {conds("(1,1|3)")}, {}},
	             "central product of 4- and 3-dimensional filiform algebras"});
	c.push_back({"g7_1_2i1",
	             {"g7,1,2(i1)"},
	             "dim 7\n"
	             "bracket e1 e2 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e2 e4 = e6\n"
	             "bracket e1 e5 = e7\n"
	             "bracket e2 e6 = e7\n"
	             "bracket e1 e3 = e6\n"
	             "bracket e2 e3 = e5\n",
	             {4, "3121", Rational(3, 4), {conds("(1,2|4)")}, {conds("(1,1,1|4)")}, {}},
	             "nomenclature parameter (i1) kept as an alias note only"});
	c.push_back({"counterexample11",
	             {"ce11"},
	             "dim 11\n"
	             "basis a1 a2 b1 b2 c1 c2 c3 d1 d2 e1 e2\n"
	             "bracket a1 a2 = b2\n"
	             "bracket a1 b1 = c1\n"
	             "bracket b1 a2 = c2\n"
	             "bracket a1 b2 = c3\n"
	             "bracket a1 c1 = d1\n"
	             "bracket a1 c2 = d2\n"
	             "bracket b1 b2 = d2\n"
	             "bracket b1 c1 = e1\n"
	             "bracket b2 c1 = e1\n"
	             "bracket a1 d1 = e1\n"
	             "bracket d1 a2 = e1\n"
	             "bracket a1 d2 = e2\n"
	             "bracket b1 c3 = e1 + e2\n",
	             {4,
	              "3332",
	              std::nullopt,
	              {conds("(1,1|3)"), conds("(1,2|4)")},
	              {conds("(1,1|3),(1,2|4)"), conds("(1,1,1|4)")},
	              {}},
	             "derivable for each of two conditions separately but not jointly"});
	c.push_back({"g7_0_8",
	             {"g7,0,8"},
	             "dim 7\n"
	             "bracket e1 e2 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e6 = e7\n"
	             "bracket e5 e4 = e7\n"
	             "bracket e1 e3 = e7\n"
	             "bracket e2 e3 = e6\n"
	             "bracket e2 e4 = e6\n",
	             {5, "31111", Rational(4, 5), {}, {conds("(1,1,1,1|5)")}, {}},
	             "characteristically nilpotent; [e2,[e2,[e1,e2]]] = e7 forces a (1,1,1,1|5) failure for every grading operator"});
	c.push_back({"g7_1_21",
	             {"g7,1,21"},
	             "dim 7\n"
	             "bracket e1 e2 = e4\n"
	             "bracket e1 e4 = e5\n"
	             "bracket e1 e5 = e6\n"
	             "bracket e2 e6 = e7\n"
	             "bracket e5 e4 = e7\n"
	             "bracket e2 e3 = e6\n"
	             "bracket e2 e4 = e6\n",
	             {std::nullopt, std::nullopt, std::nullopt, {}, {}, std::vector<std::size_t>{1, 2, 3, 3, 4, 5, 7}},
	             "same brackets as g7_0_8 without [e1,e3]; positively graded with e7 in degree 7, since [e2,e6] and [e5,e4] both land on e7"});
	return c;
}

const std::vector<CatalogEntry> &catalog()
{
	static const std::vector<CatalogEntry> entries = build_catalog();
	return entries;
}

std::optional<std::size_t> parse_suffix_number(std::string_view s)
{
	if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
		return std::nullopt;
	return std::stoul(std::string(s));
}

} // namespace

std::vector<std::string> catalog_names()
{
	std::vector<std::string> names;
	for (const auto &e : catalog())
		names.push_back(e.name);
	return names;
}

CatalogEntry catalog_get(std::string_view name)
{
	for (const auto &e : catalog())
	{
		if (e.name == name || std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end())
			return e;
	}
	auto starts = [&](std::string_view prefix) { return name.substr(0, prefix.size()) == prefix; };
	if (starts("abelian"))
		if (auto n = parse_suffix_number(name.substr(7)); n && *n >= 1)
			return {std::string(name), {}, format_algebra(abelian(*n)), {1, std::to_string(*n), Rational(0), {}, {}, {}}, "abelian"};
	if (starts("filiform"))
		if (auto n = parse_suffix_number(name.substr(8)); n && *n >= 3)
			return {std::string(name), {}, format_algebra(filiform(*n)), {*n - 1, std::nullopt, Rational(0), {}, {}, {}},
			        "standard filiform"};
	if (starts("central_product_"))
	{
		auto rest = name.substr(16);
		auto us = rest.find('_');
		if (us != std::string_view::npos)
		{
			auto i = parse_suffix_number(rest.substr(0, us));
			auto j = parse_suffix_number(rest.substr(us + 1));
			if (i && j && *i >= 2 && *j > *i)
				return {std::string(name),
				        {},
				        format_algebra(central_product_filiform(*i, *j)),
				        {*j, std::nullopt, Rational(static_cast<long>(*i), static_cast<long>(*j)), {}, {}, {}},
				        "central product of two standard filiform algebras"};
		}
	}
	throw UnknownAlgebra("unknown catalog algebra '" + std::string(name) + "'");
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra::abelian(n); }

LieAlgebra filiform(std::size_t n)
{
	if (n < 2)
		throw std::invalid_argument("filiform algebra needs dimension >= 2");
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < n; ++i)
		labels.push_back("e" + std::to_string(i + 1));
	std::map<std::pair<std::size_t, std::size_t>, Vector> br;
	for (std::size_t k = 1; k + 1 < n; ++k)
		br[{0, k}] = unit_vector(n, k + 1);
	return LieAlgebra(labels, br);
}

LieAlgebra central_product_filiform(std::size_t i, std::size_t j)
{
	if (i < 2 || j <= i)
		throw std::invalid_argument("central_product_filiform requires 2 <= i < j");
	const std::size_t n = i + j + 1;
	// indices: X = 0, Y_p = p (1..i-1), U = i, V_q = i + q (1..j)
	auto Y = [](std::size_t p) { return p; };
	const std::size_t X = 0, U = i;
	auto V = [i](std::size_t q) { return i + q; };
	std::vector<std::string> labels{"X"};
	for (std::size_t p = 1; p < i; ++p)
		labels.push_back("Y" + std::to_string(p));
	labels.push_back("U");
	for (std::size_t q = 1; q <= j; ++q)
		labels.push_back("V" + std::to_string(q));
	std::map<std::pair<std::size_t, std::size_t>, Vector> br;
	for (std::size_t p = 1; p + 2 <= i; ++p)
		br[{X, Y(p)}] = unit_vector(n, Y(p + 1));
	br[{X, Y(i - 1)}] = unit_vector(n, V(j));
	for (std::size_t q = 1; q < j; ++q)
		br[{U, V(q)}] = unit_vector(n, V(q + 1));
	return LieAlgebra(labels, br);
}

} // namespace nilgrade
