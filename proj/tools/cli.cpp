#include "cli.hpp"

#include "nilgrade/catalog.hpp"
#include "nilgrade/goodman.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace nilgrade::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for bad user input that passed CLI11 validation (coordinates, files).
struct InputError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Source
{
	std::string spec;
	LieAlgebra algebra;
};

Source load_source(const std::string &spec)
{
	static constexpr std::string_view prefix = "catalog:";
	if (spec.rfind(prefix, 0) == 0)
		return {spec, catalog_get(spec.substr(prefix.size())).algebra()};
	std::ifstream in(spec);
	if (!in)
		throw InputError("cannot open '" + spec + "'");
	std::stringstream buf;
	buf << in.rdbuf();
	return {spec, parse_algebra(buf.str())};
}

std::vector<std::string> split_commas(const std::string &text)
{
	std::vector<std::string> parts;
	std::string cur;
	for (char ch : text)
	{
		if (ch == ',')
		{
			parts.push_back(cur);
			cur.clear();
		}
		else if (!std::isspace(static_cast<unsigned char>(ch)))
			cur += ch;
	}
	parts.push_back(cur);
	return parts;
}

Vector parse_coordinates(const std::string &text, std::size_t dim, const char *what)
{
	Vector v;
	for (const auto &p : split_commas(text))
		v.push_back(Rational::parse(p));
	if (v.size() != dim)
		throw InputError(std::string(what) + ": expected " + std::to_string(dim) + " coordinates, got " +
		                 std::to_string(v.size()));
	return v;
}

std::vector<std::size_t> parse_degrees(const std::string &text, std::size_t dim)
{
	std::vector<std::size_t> out;
	for (const auto &p : split_commas(text))
	{
		Rational r = Rational::parse(p);
		if (!r.is_integer() || r.sign() <= 0)
			throw InputError("degrees must be positive integers, got '" + p + "'");
		out.push_back(r.numerator().get_ui());
	}
	if (out.size() != dim)
		throw InputError("--degrees: expected " + std::to_string(dim) + " entries, got " + std::to_string(out.size()));
	return out;
}

json strings(std::span<const Rational> v)
{
	json a = json::array();
	for (const auto &x : v)
		a.push_back(x.str());
	return a;
}

json size_strings(const std::vector<std::size_t> &v)
{
	json a = json::array();
	for (auto x : v)
		a.push_back(std::to_string(x));
	return a;
}

/// Layer index of each original basis vector: the largest i with e_k in F_i.
std::vector<std::size_t> basis_layers(const LieAlgebra &g, const Filtration &f)
{
	std::vector<std::size_t> out;
	for (std::size_t k = 0; k < g.dim(); ++k)
		out.push_back(f.depth(unit_vector(g.dim(), k)).value_or(0));
	return out;
}

void print_matrix(std::ostream &out, const LieAlgebra &g, const Filtration &f, const RatMatrix &m)
{
	auto layers = basis_layers(g, f);
	std::size_t width = 0;
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			width = std::max(width, m(r, c).str().size());
	std::size_t label_width = 0;
	for (const auto &l : g.labels())
		label_width = std::max(label_width, l.size());
	for (std::size_t r = 0; r < m.rows(); ++r)
	{
		std::string label = g.labels()[r];
		out << "  " << label << std::string(label_width - label.size(), ' ') << " [F" << layers[r] << "] ";
		for (std::size_t c = 0; c < m.cols(); ++c)
		{
			std::string s = m(r, c).str();
			out << ' ' << std::string(width - s.size(), ' ') << s;
		}
		out << '\n';
	}
}

json matrix_json(const RatMatrix &m)
{
	json rows = json::array();
	for (std::size_t r = 0; r < m.rows(); ++r)
		rows.push_back(strings(m.row(r)));
	return rows;
}

GradingOperator choose_operator(const AdaptedAlgebra &a, const std::string &mode)
{
	if (mode == "base")
		return grading_operator_space(a.original(), a.filtration(), a.basis()).base_point;
	return e_invariant(a).witness;
}

struct Options
{
	bool json = false;
	std::string source;
	std::string cond;
	std::string op = "auto";
	std::string x, y;
	bool carnot = false;
	std::size_t samples = 200;
	std::size_t tmax = 20;
	std::uint64_t seed = 1;
	std::string degrees;
	std::string name;
};

int cmd_check(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	const LieAlgebra &g = src.algebra;
	auto violations = check_jacobi(g);
	json j;
	j["command"] = "check";
	j["source"] = src.spec;
	j["dim"] = std::to_string(g.dim());
	j["jacobi_ok"] = violations.empty();
	json vj = json::array();
	for (const auto &v : violations)
		vj.push_back({{"i", g.labels()[v.i]},
		              {"j", g.labels()[v.j]},
		              {"k", g.labels()[v.k]},
		              {"value", format_combination(g.labels(), v.value)}});
	j["jacobi_violations"] = vj;
	int code = violations.empty() ? ok : negative;
	std::optional<Filtration> f;
	if (violations.empty())
	{
		try
		{
			f = lower_central_series(g);
		}
		catch (const NotNilpotent &)
		{
			code = negative;
		}
	}
	j["nilpotent"] = f.has_value();
	if (f)
	{
		j["class"] = std::to_string(f->nilpotency_class());
		j["tau"] = format_tau(f->tau());
	}
	if (o.json)
	{
		out << j.dump(2) << '\n';
		return code;
	}
	out << "dim = " << g.dim() << '\n';
	if (violations.empty())
		out << "jacobi = ok\n";
	else
	{
		out << "jacobi = " << violations.size() << " violation(s)\n";
		for (const auto &v : violations)
			out << "  (" << g.labels()[v.i] << ", " << g.labels()[v.j] << ", " << g.labels()[v.k]
			    << "): " << format_combination(g.labels(), v.value) << '\n';
	}
	if (f)
		out << "class = " << f->nilpotency_class() << "\ntau = " << format_tau(f->tau()) << '\n';
	else if (violations.empty())
		out << "not nilpotent\n";
	return code;
}

int cmd_e(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	AdaptedAlgebra a(src.algebra);
	EInvariant ei = e_invariant(a);
	if (o.json)
	{
		json j;
		j["command"] = "e";
		j["source"] = src.spec;
		j["class"] = std::to_string(a.nilpotency_class());
		j["tau"] = format_tau(a.filtration().tau());
		j["e"] = ei.e.str();
		j["witness"] = matrix_json(ei.witness.matrix);
		j["witness_layers"] = size_strings(basis_layers(src.algebra, a.filtration()));
		out << j.dump(2) << '\n';
		return ok;
	}
	out << "e = " << ei.e.str() << '\n';
	out << "class = " << a.nilpotency_class() << "\ntau = " << format_tau(a.filtration().tau()) << '\n';
	out << "witness (rows in the input basis):\n";
	print_matrix(out, src.algebra, a.filtration(), ei.witness.matrix);
	return ok;
}

int cmd_derivable(const Options &o, std::ostream &out)
{
	ConditionSet set;
	try
	{
		set = parse_conditions(o.cond);
	}
	catch (const std::invalid_argument &e)
	{
		throw InputError(std::string("--cond: ") + e.what());
	}
	Source src = load_source(o.source);
	AdaptedAlgebra a(src.algebra);
	auto w = is_A_derivable(a, set);
	if (o.json)
	{
		json j;
		j["command"] = "derivable";
		j["source"] = src.spec;
		j["conditions"] = format_conditions(set);
		j["derivable"] = w.has_value();
		if (w)
		{
			j["witness"] = matrix_json(w->matrix);
			j["witness_layers"] = size_strings(basis_layers(src.algebra, a.filtration()));
		}
		out << j.dump(2) << '\n';
	}
	else if (w)
	{
		out << "Derivable for " << format_conditions(set) << "\nwitness (rows in the input basis):\n";
		print_matrix(out, src.algebra, a.filtration(), w->matrix);
	}
	else
		out << "NotDerivable for " << format_conditions(set) << '\n';
	return w ? ok : negative;
}

int cmd_carnot(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	AdaptedAlgebra a(src.algebra);
	GradingOperator d = choose_operator(a, o.op);
	CarnotAlgebra ca = carnot_algebra(a, d);
	if (o.json)
	{
		json j;
		j["command"] = "carnot";
		j["source"] = src.spec;
		j["operator"] = o.op;
		j["e_D"] = e_of_operator(a, d).str();
		j["degrees"] = size_strings(ca.degrees);
		j["eigenbasis"] = matrix_json(ca.basis.transpose());
		j["definition"] = format_carnot(ca);
		out << j.dump(2) << '\n';
		return ok;
	}
	out << format_carnot(ca);
	return ok;
}

int cmd_bch(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	const std::size_t n = src.algebra.dim();
	Vector x = parse_coordinates(o.x, n, "--x");
	Vector y = parse_coordinates(o.y, n, "--y");
	Vector p;
	if (o.carnot)
	{
		AdaptedAlgebra a(src.algebra);
		p = carnot_product(carnot_algebra(a, choose_operator(a, o.op)), x, y);
	}
	else
		p = bch_product(src.algebra, lower_central_series(src.algebra), x, y);
	if (o.json)
	{
		json j;
		j["command"] = "bch";
		j["source"] = src.spec;
		j["law"] = o.carnot ? "carnot" : "original";
		j["product"] = strings(p);
		out << j.dump(2) << '\n';
	}
	else
		out << format_vector(p) << '\n';
	return ok;
}

int cmd_diff(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	const std::size_t n = src.algebra.dim();
	Vector x = parse_coordinates(o.x, n, "--x");
	Vector y = parse_coordinates(o.y, n, "--y");
	AdaptedAlgebra a(src.algebra);
	CarnotAlgebra ca = carnot_algebra(a, choose_operator(a, o.op));
	Vector d = law_difference(src.algebra, ca, x, y);
	if (o.json)
	{
		json j;
		j["command"] = "diff";
		j["source"] = src.spec;
		j["operator"] = o.op;
		j["basis"] = ca.algebra.labels();
		j["difference"] = strings(d);
		out << j.dump(2) << '\n';
	}
	else
		out << format_vector(d) << '\n';
	return ok;
}

int cmd_goodman(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	AdaptedAlgebra a(src.algebra);
	GradingOperator d = choose_operator(a, o.op);
	GoodmanReport rep = goodman_check(src.algebra, d, o.samples, geometric_ladder(Rational(2), o.tmax), o.seed);
	if (o.json)
	{
		out << to_json(rep) << '\n';
		return ok;
	}
	out << "e_D = " << rep.e_D.str() << '\n'
	    << "pairs = " << rep.pairs << ", ladder = 2^0..2^" << o.tmax << ", seed = " << rep.seed << '\n'
	    << "identically_zero = " << (rep.identically_zero ? "true" : "false") << '\n'
	    << "fitted_slope = " << format_double(rep.fitted_slope) << '\n'
	    << "constant_estimate = " << format_double(rep.constant_estimate) << '\n'
	    << "constant_ratio = " << format_double(rep.constant_ratio) << '\n';
	return ok;
}

int cmd_grading(const Options &o, std::ostream &out)
{
	Source src = load_source(o.source);
	const LieAlgebra &g = src.algebra;
	auto degrees = parse_degrees(o.degrees, g.dim());
	GradingCheck chk = verify_grading(g, degrees);
	if (o.json)
	{
		json j;
		j["command"] = "grading";
		j["source"] = src.spec;
		j["degrees"] = size_strings(degrees);
		j["ok"] = chk.ok;
		json vj = json::array();
		for (const auto &v : chk.violations)
			vj.push_back({{"i", g.labels()[v.i]}, {"j", g.labels()[v.j]}, {"value", format_combination(g.labels(), v.value)}});
		j["violations"] = vj;
		out << j.dump(2) << '\n';
	}
	else
	{
		out << (chk.ok ? "true" : "false") << '\n';
		for (const auto &v : chk.violations)
			out << "  [" << g.labels()[v.i] << ", " << g.labels()[v.j] << "] = " << format_combination(g.labels(), v.value)
			    << " (expected degree " << degrees[v.i] + degrees[v.j] << ")\n";
	}
	return chk.ok ? ok : negative;
}

json facts_json(const ExpectedFacts &f)
{
	json j = json::object();
	if (f.nilpotency_class)
		j["class"] = std::to_string(*f.nilpotency_class);
	if (f.tau)
		j["tau"] = *f.tau;
	if (f.e)
		j["e"] = f.e->str();
	json d = json::array(), nd = json::array();
	for (const auto &s : f.derivable)
		d.push_back(format_conditions(s));
	for (const auto &s : f.not_derivable)
		nd.push_back(format_conditions(s));
	j["derivable"] = d;
	j["not_derivable"] = nd;
	if (f.positive_grading)
		j["positive_grading"] = size_strings(*f.positive_grading);
	return j;
}

int cmd_catalog_list(const Options &o, std::ostream &out)
{
	if (o.json)
	{
		json a = json::array();
		for (const auto &name : catalog_names())
		{
			auto e = catalog_get(name);
			a.push_back({{"name", e.name}, {"aliases", e.aliases}});
		}
		out << a.dump(2) << '\n';
		return ok;
	}
	for (const auto &name : catalog_names())
	{
		auto e = catalog_get(name);
		out << e.name;
		if (!e.aliases.empty())
		{
			out << "  (";
			for (std::size_t k = 0; k < e.aliases.size(); ++k)
				out << (k ? ", " : "") << e.aliases[k];
			out << ')';
		}
		out << '\n';
	}
	out << "families: abelian<n>, filiform<n>, central_product_<i>_<j>\n";
	return ok;
}

int cmd_catalog_show(const Options &o, std::ostream &out)
{
	CatalogEntry e = catalog_get(o.name);
	if (o.json)
	{
		json j;
		j["name"] = e.name;
		j["aliases"] = e.aliases;
		j["definition"] = e.definition;
		j["expected"] = facts_json(e.expected);
		j["note"] = e.note;
		out << j.dump(2) << '\n';
		return ok;
	}
	out << "# " << e.name;
	for (const auto &a : e.aliases)
		out << ", " << a;
	out << '\n';
	if (!e.note.empty())
		out << "# " << e.note << '\n';
	const auto &f = e.expected;
	if (f.nilpotency_class)
		out << "# class " << *f.nilpotency_class << '\n';
	if (f.tau)
		out << "# tau " << *f.tau << '\n';
	if (f.e)
		out << "# e " << f.e->str() << '\n';
	for (const auto &s : f.derivable)
		out << "# derivable " << format_conditions(s) << '\n';
	for (const auto &s : f.not_derivable)
		out << "# not derivable " << format_conditions(s) << '\n';
	out << e.definition;
	return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Grading operators, e-invariants and group laws of nilpotent Lie algebras", "nilgrade"};
	app.require_subcommand(1);
	Options o;
	app.add_flag("--json", o.json, "Emit a single JSON document");

	const std::string src_help = "Algebra file, or catalog:<name>";
	auto add_source = [&](CLI::App *sub) { sub->add_option("source", o.source, src_help)->required(); };
	auto add_operator = [&](CLI::App *sub) {
		sub->add_option("--operator", o.op, "Grading operator: auto (e-invariant witness) or base (diagonal in an adapted basis)")
		    ->check(CLI::IsMember({"auto", "base"}));
	};

	auto *check = app.add_subcommand("check", "Jacobi identity, nilpotency class and tau");
	add_source(check);
	auto *e = app.add_subcommand("e", "e-invariant with a witness grading operator");
	add_source(e);
	auto *derivable = app.add_subcommand("derivable", "Decide A-derivability");
	add_source(derivable);
	derivable->add_option("--cond", o.cond, "Condition set, e.g. \"(1,1|3),(1,2|4)\"")->required();
	auto *carnot = app.add_subcommand("carnot", "Print the associated Carnot-graded algebra");
	add_source(carnot);
	add_operator(carnot);
	auto *bch = app.add_subcommand("bch", "Group product x*y");
	add_source(bch);
	bch->add_option("--x", o.x, "Comma-separated coordinates")->required();
	bch->add_option("--y", o.y, "Comma-separated coordinates")->required();
	bch->add_flag("--carnot", o.carnot, "Use the Carnot-graded law (coordinates in its eigenbasis)");
	add_operator(bch);
	auto *diff = app.add_subcommand("diff", "Difference of the original and Carnot-graded laws, in the eigenbasis");
	add_source(diff);
	diff->add_option("--x", o.x, "Comma-separated coordinates")->required();
	diff->add_option("--y", o.y, "Comma-separated coordinates")->required();
	add_operator(diff);
	auto *goodman = app.add_subcommand("goodman", "Sample the law difference along dilations");
	add_source(goodman);
	goodman->add_option("--samples", o.samples, "Number of base pairs")->capture_default_str()->check(CLI::PositiveNumber);
	goodman->add_option("--tmax", o.tmax, "Ladder 2^0..2^tmax")->capture_default_str()->check(CLI::Range(2, 60));
	goodman->add_option("--seed", o.seed, "Sampler seed")->capture_default_str();
	add_operator(goodman);
	auto *grading = app.add_subcommand("grading", "Check that given degrees define a Lie algebra grading");
	add_source(grading);
	grading->add_option("--degrees", o.degrees, "Comma-separated degrees, one per basis vector")->required();
	auto *catalog = app.add_subcommand("catalog", "Built-in algebras");
	catalog->require_subcommand(1);
	auto *list = catalog->add_subcommand("list", "List entries");
	auto *show = catalog->add_subcommand("show", "Show one entry");
	show->add_option("name", o.name)->required();

	std::vector<std::string> argv_store{"nilgrade"};
	argv_store.insert(argv_store.end(), args.begin(), args.end());
	std::vector<const char *> argv;
	for (const auto &s : argv_store)
		argv.push_back(s.c_str());
	try
	{
		app.parse(static_cast<int>(argv.size()), argv.data());
	}
	catch (const CLI::CallForHelp &)
	{
		out << app.help();
		return ok;
	}
	catch (const CLI::ParseError &ex)
	{
		err << "error: " << ex.what() << '\n';
		return usage;
	}

	try
	{
		if (check->parsed())
			return cmd_check(o, out);
		if (e->parsed())
			return cmd_e(o, out);
		if (derivable->parsed())
			return cmd_derivable(o, out);
		if (carnot->parsed())
			return cmd_carnot(o, out);
		if (bch->parsed())
			return cmd_bch(o, out);
		if (diff->parsed())
			return cmd_diff(o, out);
		if (goodman->parsed())
			return cmd_goodman(o, out);
		if (grading->parsed())
			return cmd_grading(o, out);
		if (list->parsed())
			return cmd_catalog_list(o, out);
		if (show->parsed())
			return cmd_catalog_show(o, out);
	}
	catch (const ParseError &ex)
	{
		err << "parse error: " << ex.what() << '\n';
		return usage;
	}
	catch (const NotNilpotent &ex)
	{
		err << "error: " << ex.what() << '\n';
		return usage;
	}
	catch (const std::invalid_argument &ex) // UnknownAlgebra, malformed rationals
	{
		err << "error: " << ex.what() << '\n';
		return usage;
	}
	catch (const InputError &ex)
	{
		err << "error: " << ex.what() << '\n';
		return usage;
	}
	catch (const std::exception &ex)
	{
		err << "internal error: " << ex.what() << '\n';
		return usage;
	}
	err << "error: no command\n";
	return usage;
}

} // namespace nilgrade::cli
