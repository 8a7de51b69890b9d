#include "nilgrade/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

namespace nilgrade {

namespace {

SparseVector to_sparse(std::span<const Rational> v)
{
	SparseVector s;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			s.emplace_back(i, v[i]);
	return s;
}

SparseVector negated(const SparseVector &s)
{
	SparseVector r = s;
	for (auto &[i, c] : r)
		c = -c;
	return r;
}

} // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       const std::map<std::pair<std::size_t, std::size_t>, Vector> &brackets)
    : labels_(std::move(labels)), table_(labels_.size() * labels_.size())
{
	const std::size_t n = dim();
	for (const auto &[key, value] : brackets)
	{
		auto [i, j] = key;
		if (i >= j || j >= n)
			throw std::invalid_argument("bracket key must satisfy i < j < dim");
		if (value.size() != n)
			throw DimensionError("bracket value has wrong length");
		table_[i * n + j] = to_sparse(value);
		table_[j * n + i] = negated(table_[i * n + j]);
	}
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
	std::vector<std::string> labels;
	for (std::size_t i = 0; i < dim; ++i)
		labels.push_back("e" + std::to_string(i + 1));
	return LieAlgebra(std::move(labels), {});
}

Vector LieAlgebra::basis_bracket_dense(std::size_t i, std::size_t j) const
{
	Vector v(dim());
	for (const auto &[k, c] : basis_bracket(i, j))
		v[k] = c;
	return v;
}

std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> LieAlgebra::nonzero_brackets() const
{
	std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> out;
	for (std::size_t i = 0; i < dim(); ++i)
		for (std::size_t j = i + 1; j < dim(); ++j)
			if (!basis_bracket(i, j).empty())
				out.push_back({{i, j}, basis_bracket_dense(i, j)});
	return out;
}

bool LieAlgebra::is_abelian() const
{
	return std::all_of(table_.begin(), table_.end(), [](const SparseVector &s) { return s.empty(); });
}

LieAlgebra LieAlgebra::change_basis(const RatMatrix &basis, std::vector<std::string> labels) const
{
	const std::size_t n = dim();
	if (basis.rows() != n || basis.cols() != n || labels.size() != n)
		throw DimensionError("change_basis: basis must be dim x dim with dim labels");
	RatMatrix inv = inverse(basis);
	std::vector<Vector> cols;
	for (std::size_t i = 0; i < n; ++i)
		cols.push_back(basis.column(i));
	std::map<std::pair<std::size_t, std::size_t>, Vector> br;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
		{
			Vector v = inv.apply(bracket(*this, cols[i], cols[j]));
			if (!is_zero(v))
				br[{i, j}] = std::move(v);
		}
	return LieAlgebra(std::move(labels), br);
}

namespace {

enum class TokKind { plus, minus, star, equals, number, label };

struct Token
{
	TokKind kind;
	std::string text;
};

bool is_label_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_label_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.'; }

std::vector<Token> tokenize(std::string_view s, std::size_t line)
{
	std::vector<Token> out;
	std::size_t i = 0;
	while (i < s.size())
	{
		char ch = s[i];
		if (std::isspace(static_cast<unsigned char>(ch)))
		{
			++i;
			continue;
		}
		if (ch == '+' || ch == '-' || ch == '*' || ch == '=')
		{
			TokKind k = ch == '+' ? TokKind::plus : ch == '-' ? TokKind::minus : ch == '*' ? TokKind::star : TokKind::equals;
			out.push_back({k, std::string(1, ch)});
			++i;
			continue;
		}
		if (std::isdigit(static_cast<unsigned char>(ch)))
		{
			std::size_t j = i;
			while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
				++j;
			if (j < s.size() && s[j] == '/')
			{
				++j;
				std::size_t k = j;
				while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
					++j;
				if (k == j)
					throw ParseError(line, "malformed rational '" + std::string(s.substr(i, j - i)) + "'");
			}
			out.push_back({TokKind::number, std::string(s.substr(i, j - i))});
			i = j;
			continue;
		}
		if (is_label_start(ch))
		{
			std::size_t j = i;
			while (j < s.size() && is_label_char(s[j]))
				++j;
			out.push_back({TokKind::label, std::string(s.substr(i, j - i))});
			i = j;
			continue;
		}
		throw ParseError(line, std::string("unexpected character '") + ch + "'");
	}
	return out;
}

std::vector<std::string> split_words(std::string_view s)
{
	std::istringstream is{std::string(s)};
	std::vector<std::string> w;
	std::string t;
	while (is >> t)
		w.push_back(t);
	return w;
}

bool valid_label(const std::string &s)
{
	if (s.empty() || !is_label_start(s[0]))
		return false;
	return std::all_of(s.begin(), s.end(), is_label_char);
}

} // namespace

LieAlgebra parse_algebra(std::string_view text)
{
	std::optional<std::size_t> dim;
	std::vector<std::string> labels;
	bool basis_declared = false;
	bool any_bracket = false;
	std::unordered_map<std::string, std::size_t> index;
	std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;
	std::set<std::pair<std::size_t, std::size_t>> declared;

	auto ensure_labels = [&](std::size_t line) {
		if (!dim)
			throw ParseError(line, "'dim' must be declared first");
		if (labels.empty())
		{
			for (std::size_t i = 0; i < *dim; ++i)
				labels.push_back("e" + std::to_string(i + 1));
			for (std::size_t i = 0; i < *dim; ++i)
				index[labels[i]] = i;
		}
	};
	auto lookup = [&](const std::string &name, std::size_t line) {
		auto it = index.find(name);
		if (it == index.end())
			throw ParseError(line, "unknown basis label '" + name + "'");
		return it->second;
	};

	std::size_t line_no = 0;
	std::size_t pos = 0;
	while (pos <= text.size())
	{
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos)
			end = text.size();
		std::string_view line = text.substr(pos, end - pos);
		pos = end + 1;
		++line_no;
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		auto words = split_words(line);
		if (words.empty())
			continue;
		const std::string &kw = words[0];
		if (kw == "dim")
		{
			if (dim)
				throw ParseError(line_no, "duplicate 'dim' declaration");
			if (words.size() != 2)
				throw ParseError(line_no, "expected 'dim N'");
			const std::string &n = words[1];
			if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
				throw ParseError(line_no, "malformed dimension '" + n + "'");
			dim = std::stoul(n);
			if (*dim == 0)
				throw ParseError(line_no, "dimension must be positive");
		}
		else if (kw == "basis")
		{
			if (!dim)
				throw ParseError(line_no, "'dim' must be declared before 'basis'");
			if (basis_declared || any_bracket)
				throw ParseError(line_no, "'basis' must appear once, before any bracket");
			if (words.size() - 1 != *dim)
				throw ParseError(line_no, "basis lists " + std::to_string(words.size() - 1) + " labels, expected " +
				                              std::to_string(*dim));
			labels.assign(words.begin() + 1, words.end());
			for (std::size_t i = 0; i < labels.size(); ++i)
			{
				if (!valid_label(labels[i]))
					throw ParseError(line_no, "invalid basis label '" + labels[i] + "'");
				if (!index.emplace(labels[i], i).second)
					throw ParseError(line_no, "duplicate basis label '" + labels[i] + "'");
			}
			basis_declared = true;
		}
		else if (kw == "bracket")
		{
			ensure_labels(line_no);
			any_bracket = true;
			auto body = line.substr(line.find("bracket") + 7);
			auto toks = tokenize(body, line_no);
			if (toks.size() < 4 || toks[0].kind != TokKind::label || toks[1].kind != TokKind::label ||
			    toks[2].kind != TokKind::equals)
				throw ParseError(line_no, "expected 'bracket X Y = ...'");
			std::size_t a = lookup(toks[0].text, line_no);
			std::size_t b = lookup(toks[1].text, line_no);
			if (a == b)
				throw ParseError(line_no, "bracket of a basis vector with itself is always zero");
			auto key = std::minmax(a, b);
			if (!declared.insert(key).second)
				throw ParseError(line_no, "bracket of '" + labels[key.first] + "' and '" + labels[key.second] +
				                              "' declared more than once");
			Vector value(*dim);
			std::size_t t = 3;
			bool first = true;
			while (t < toks.size())
			{
				int sign = 1;
				bool had_sign = false;
				while (t < toks.size() && (toks[t].kind == TokKind::plus || toks[t].kind == TokKind::minus))
				{
					if (toks[t].kind == TokKind::minus)
						sign = -sign;
					had_sign = true;
					++t;
				}
				if (!first && !had_sign)
					throw ParseError(line_no, "expected '+' or '-' between terms");
				first = false;
				Rational coef = 1;
				bool had_coef = false;
				if (t < toks.size() && toks[t].kind == TokKind::number)
				{
					try
					{
						coef = Rational::parse(toks[t].text);
					}
					catch (const std::exception &e)
					{
						throw ParseError(line_no, e.what());
					}
					had_coef = true;
					++t;
					if (t < toks.size() && toks[t].kind == TokKind::star)
						++t;
				}
				if (t < toks.size() && toks[t].kind == TokKind::label)
				{
					std::size_t k = lookup(toks[t].text, line_no);
					value[k] += sign * coef;
					++t;
				}
				else if (had_coef && coef.is_zero())
				{
					// explicit zero term
				}
				else
				{
					throw ParseError(line_no, "expected a basis label in bracket value");
				}
			}
			if (a > b)
				value = scale(-1, value);
			if (!is_zero(value))
				brackets[key] = std::move(value);
		}
		else
		{
			throw ParseError(line_no, "unknown keyword '" + kw + "'");
		}
	}
	if (!dim)
		throw ParseError(0, "missing 'dim' declaration");
	ensure_labels(0);
	return LieAlgebra(std::move(labels), brackets);
}

std::string format_combination(const std::vector<std::string> &labels, std::span<const Rational> v)
{
	std::string out;
	for (std::size_t k = 0; k < v.size(); ++k)
	{
		if (v[k].is_zero())
			continue;
		Rational c = v[k];
		bool neg = c.sign() < 0;
		if (neg)
			c = -c;
		if (out.empty())
			out += neg ? "-" : "";
		else
			out += neg ? " - " : " + ";
		if (c != Rational(1))
			out += c.str() + " ";
		out += labels[k];
	}
	return out.empty() ? "0" : out;
}

std::string format_algebra(const LieAlgebra &g, const std::vector<std::string> &extra_comments)
{
	std::string out = "dim " + std::to_string(g.dim()) + "\n";
	out += "basis";
	for (const auto &l : g.labels())
		out += " " + l;
	out += "\n";
	for (const auto &c : extra_comments)
		out += "# " + c + "\n";
	for (const auto &[key, value] : g.nonzero_brackets())
		out += "bracket " + g.labels()[key.first] + " " + g.labels()[key.second] + " = " +
		       format_combination(g.labels(), value) + "\n";
	return out;
}

Vector bracket(const LieAlgebra &g, std::span<const Rational> x, std::span<const Rational> y)
{
	const std::size_t n = g.dim();
	if (x.size() != n || y.size() != n)
		throw DimensionError("bracket: vectors must have length " + std::to_string(n));
	Vector out(n);
	Rational xy;
	for (std::size_t i = 0; i < n; ++i)
	{
		if (x[i].is_zero())
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (y[j].is_zero() || i == j)
				continue;
			const SparseVector &s = g.basis_bracket(i, j);
			if (s.empty())
				continue;
			xy = x[i] * y[j];
			for (const auto &[k, c] : s)
				out[k].add_product(xy, c);
		}
	}
	return out;
}

Vector iterated_bracket(const LieAlgebra &g, const std::vector<Vector> &xs)
{
	if (xs.empty())
		throw std::invalid_argument("iterated_bracket needs at least one vector");
	for (const auto &x : xs)
		if (x.size() != g.dim())
			throw DimensionError("iterated_bracket: vectors must have length " + std::to_string(g.dim()));
	Vector acc = xs.back();
	for (std::size_t k = xs.size() - 1; k-- > 0;)
	{
		if (is_zero(acc))
			break;
		acc = bracket(g, xs[k], acc);
	}
	return acc;
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra &g)
{
	const std::size_t n = g.dim();
	std::vector<JacobiViolation> out;
	std::vector<Vector> basis;
	for (std::size_t i = 0; i < n; ++i)
		basis.push_back(unit_vector(n, i));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k)
			{
				Vector s = bracket(g, basis[i], g.basis_bracket_dense(j, k));
				Vector t = bracket(g, basis[j], g.basis_bracket_dense(k, i));
				Vector u = bracket(g, basis[k], g.basis_bracket_dense(i, j));
				Vector sum = add(add(s, t), u);
				if (!is_zero(sum))
					out.push_back({i, j, k, std::move(sum)});
			}
	return out;
}

Filtration::Filtration(std::size_t dim, std::vector<std::vector<Vector>> subspaces)
    : dim_(dim), subspaces_(std::move(subspaces))
{
	if (subspaces_.empty() || !subspaces_.back().empty())
		throw std::invalid_argument("filtration must end with the zero space");
}

const std::vector<Vector> &Filtration::term(std::size_t k) const
{
	if (k == 0)
		throw std::out_of_range("filtration terms are 1-based");
	if (k > subspaces_.size())
		return zero_;
	return subspaces_[k - 1];
}

std::vector<std::size_t> Filtration::tau() const
{
	std::vector<std::size_t> t;
	for (std::size_t i = 1; i <= nilpotency_class(); ++i)
		t.push_back(term_dim(i) - term_dim(i + 1));
	return t;
}

std::optional<std::size_t> Filtration::depth(std::span<const Rational> v) const
{
	return filtration_depth(subspaces_, v);
}

Filtration lower_central_series(const LieAlgebra &g)
{
	const std::size_t n = g.dim();
	std::vector<std::vector<Vector>> terms;
	std::vector<Vector> current;
	for (std::size_t i = 0; i < n; ++i)
		current.push_back(unit_vector(n, i));
	terms.push_back(current);
	while (!current.empty())
	{
		if (terms.size() > n)
			throw NotNilpotent("lower central series does not reach zero within dim steps");
		std::vector<Vector> gens;
		for (std::size_t i = 0; i < n; ++i)
			for (const auto &v : current)
			{
				Vector w = bracket(g, unit_vector(n, i), v);
				if (!is_zero(w))
					gens.push_back(std::move(w));
			}
		std::vector<Vector> next = echelon_basis(gens, n);
		if (next.size() == current.size())
			throw NotNilpotent("lower central series stabilizes at a nonzero term of dimension " +
			                   std::to_string(next.size()));
		terms.push_back(next);
		current = std::move(next);
	}
	return Filtration(n, std::move(terms));
}

std::string format_tau(const std::vector<std::size_t> &tau)
{
	std::string s;
	bool wide = std::any_of(tau.begin(), tau.end(), [](std::size_t t) { return t > 9; });
	for (std::size_t i = 0; i < tau.size(); ++i)
	{
		if (wide && i)
			s += ',';
		s += std::to_string(tau[i]);
	}
	return s;
}

AdaptedBasis adapted_basis(const LieAlgebra &g, const Filtration &f)
{
	const std::size_t n = g.dim();
	const std::size_t c = f.nilpotency_class();
	EchelonBuilder span(n);
	// chosen[i] holds the vectors added at degree i (1-based)
	std::vector<std::vector<Vector>> chosen(c + 1);
	for (std::size_t deg = c; deg >= 1; --deg)
	{
		const auto &target = f.term(deg);
		std::size_t needed = target.size() - f.term_dim(deg + 1);
		for (std::size_t k = 0; k < n && needed > 0; ++k)
		{
			Vector e = unit_vector(n, k);
			if (!subspace_contains(target, e))
				continue;
			if (span.insert(e))
			{
				chosen[deg].push_back(std::move(e));
				--needed;
			}
		}
		for (std::size_t k = 0; k < target.size() && needed > 0; ++k)
		{
			if (span.insert(target[k]))
			{
				chosen[deg].push_back(target[k]);
				--needed;
			}
		}
		if (needed != 0)
			throw std::logic_error("adapted_basis: could not complete the filtration basis");
	}
	AdaptedBasis ab;
	std::vector<Vector> cols;
	for (std::size_t deg = 1; deg <= c; ++deg)
		for (auto &v : chosen[deg])
		{
			cols.push_back(std::move(v));
			ab.degrees.push_back(deg);
		}
	ab.change_of_basis = RatMatrix::from_columns(cols, n);
	return ab;
}

} // namespace nilgrade
