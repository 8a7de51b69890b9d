#include "nilgrade/bch.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace nilgrade {

std::string format_word(const Word &w)
{
	std::string s;
	for (Side l : w)
		s += l == Side::left ? 'L' : 'R';
	return s;
}

namespace {

std::size_t word_index(const Word &w)
{
	std::size_t idx = 0;
	for (Side l : w)
		idx = (idx << 1) | (l == Side::right ? 1u : 0u);
	return idx;
}

Word word_from_index(std::size_t idx, std::size_t n)
{
	Word w(n);
	for (std::size_t k = 0; k < n; ++k)
		w[k] = ((idx >> (n - 1 - k)) & 1u) ? Side::right : Side::left;
	return w;
}

/// Truncated element of the free associative algebra: parts[d] has 2^d entries.
struct FreeSeries
{
	std::vector<std::vector<Rational>> parts;

	explicit FreeSeries(std::size_t max_degree) : parts(max_degree + 1)
	{
		for (std::size_t d = 0; d <= max_degree; ++d)
			parts[d].assign(std::size_t{1} << d, Rational(0));
	}
	std::size_t max_degree() const { return parts.size() - 1; }
};

FreeSeries multiply(const FreeSeries &a, const FreeSeries &b)
{
	const std::size_t m = a.max_degree();
	FreeSeries out(m);
	for (std::size_t d1 = 0; d1 <= m; ++d1)
		for (std::size_t d2 = 0; d1 + d2 <= m; ++d2)
		{
			const auto &pa = a.parts[d1];
			const auto &pb = b.parts[d2];
			auto &po = out.parts[d1 + d2];
			for (std::size_t i = 0; i < pa.size(); ++i)
			{
				if (pa[i].is_zero())
					continue;
				for (std::size_t j = 0; j < pb.size(); ++j)
					if (!pb[j].is_zero())
						po[(i << d2) | j].add_product(pa[i], pb[j]);
			}
		}
	return out;
}

FreeSeries log_exp_exp(std::size_t m)
{
	// Z = exp(x) exp(y) - 1 = sum_{a+b>=1} x^a y^b / (a! b!)
	FreeSeries z(m);
	std::vector<Rational> inv_fact(m + 1);
	inv_fact[0] = 1;
	for (std::size_t k = 1; k <= m; ++k)
		inv_fact[k] = inv_fact[k - 1] / Rational(static_cast<long>(k));
	for (std::size_t d = 1; d <= m; ++d)
		for (std::size_t b = 0; b <= d; ++b)
			z.parts[d][(std::size_t{1} << b) - 1] = inv_fact[d - b] * inv_fact[b];
	// log(1 + Z) = sum_k (-1)^{k+1} Z^k / k
	FreeSeries result(m);
	FreeSeries power = z;
	for (std::size_t k = 1; k <= m; ++k)
	{
		Rational coef(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
		for (std::size_t d = 0; d <= m; ++d)
			for (std::size_t i = 0; i < power.parts[d].size(); ++i)
				result.parts[d][i].add_product(coef, power.parts[d][i]);
		power = multiply(power, z);
	}
	return result;
}

std::size_t letter_changes(const Word &w)
{
	std::size_t c = 0;
	for (std::size_t k = 1; k < w.size(); ++k)
		c += w[k] != w[k - 1];
	return c;
}

/// Coefficients of the degree-n part in the right-nested basis, indexed by word bits.
std::vector<Rational> compute_degree_coefficients(std::size_t n)
{
	const std::size_t size = std::size_t{1} << n;
	std::vector<Rational> target = bch_free_component(n);

	std::vector<Word> candidates;
	for (std::size_t idx = 0; idx < size; ++idx)
	{
		Word w = word_from_index(idx, n);
		if (w[n - 2] != w[n - 1])
			candidates.push_back(std::move(w));
	}
	std::stable_sort(candidates.begin(), candidates.end(), [](const Word &a, const Word &b) {
		auto key = [](const Word &w) {
			bool ends_rl = w[w.size() - 2] == Side::right;
			return std::make_tuple(letter_changes(w), ends_rl ? 1 : 0, word_index(w));
		};
		return key(a) < key(b);
	});

	EchelonBuilder span(size);
	std::vector<Word> basis;
	std::vector<Vector> columns;
	for (const auto &w : candidates)
	{
		Vector e = right_nested_expansion(w);
		if (span.insert(e))
		{
			basis.push_back(w);
			columns.push_back(std::move(e));
		}
	}
	auto sol = solve_affine(RatMatrix::from_columns(columns, size), target);
	if (!sol || !sol->nullspace_basis.empty())
		throw std::logic_error("BCH component is not uniquely expressible in the bracket basis");

	std::vector<Rational> coef(size);
	for (std::size_t k = 0; k < basis.size(); ++k)
		coef[word_index(basis[k])] = sol->particular[k];
	return coef;
}

const std::vector<Rational> &degree_coefficients(std::size_t n)
{
	static std::array<std::once_flag, bch_max_supported_degree + 1> flags;
	static std::array<std::vector<Rational>, bch_max_supported_degree + 1> cache;
	std::call_once(flags[n], [n] { cache[n] = compute_degree_coefficients(n); });
	return cache[n];
}

} // namespace

std::vector<Rational> bch_free_component(std::size_t n)
{
	if (n < 1 || n > bch_max_supported_degree)
		throw std::out_of_range("BCH degree out of supported range");
	return log_exp_exp(n).parts[n];
}

std::vector<Rational> right_nested_expansion(const Word &w)
{
	if (w.empty())
		throw std::invalid_argument("empty word");
	const std::size_t n = w.size();
	std::vector<Rational> cur(2);
	cur[w[n - 1] == Side::right ? 1 : 0] = 1;
	for (std::size_t k = n - 1; k-- > 0;)
	{
		const std::size_t m = n - 1 - k; // degree of cur
		const std::size_t a = w[k] == Side::right ? 1 : 0;
		std::vector<Rational> next(std::size_t{1} << (m + 1));
		for (std::size_t i = 0; i < cur.size(); ++i)
		{
			if (cur[i].is_zero())
				continue;
			next[(a << m) | i] += cur[i];
			next[(i << 1) | a] -= cur[i];
		}
		cur = std::move(next);
	}
	return cur;
}

const Rational &BchTermTable::coefficient(const Word &w) const
{
	for (const auto &t : terms)
		if (t.word == w)
			return t.coefficient;
	throw std::out_of_range("word " + format_word(w) + " not in BCH table");
}

const BchTermTable &bch_table(std::size_t c)
{
	if (c < 2 || c > bch_max_supported_degree)
		throw std::out_of_range("BCH truncation degree must lie in [2, " + std::to_string(bch_max_supported_degree) +
		                        "], got " + std::to_string(c));
	static std::array<std::once_flag, bch_max_supported_degree + 1> flags;
	static std::array<BchTermTable, bch_max_supported_degree + 1> tables;
	std::call_once(flags[c], [c] {
		BchTermTable t;
		t.max_degree = c;
		for (std::size_t n = 2; n <= c; ++n)
		{
			const auto &coef = degree_coefficients(n);
			for (std::size_t idx = 0; idx < coef.size(); ++idx)
				t.terms.push_back({word_from_index(idx, n), coef[idx]});
		}
		tables[c] = std::move(t);
	});
	return tables[c];
}

Vector bch_product(const LieAlgebra &g, std::size_t c, std::span<const Rational> x, std::span<const Rational> y)
{
	if (x.size() != g.dim() || y.size() != g.dim())
		throw DimensionError("bch_product: coordinates must have length " + std::to_string(g.dim()));
	Vector out = add(x, y);
	if (c < 2)
		return out;
	const Vector xv(x.begin(), x.end());
	const Vector yv(y.begin(), y.end());
	for (const auto &term : bch_table(c).terms)
	{
		if (term.coefficient.is_zero())
			continue;
		std::vector<Vector> args;
		args.reserve(term.word.size());
		for (Side s : term.word)
			args.push_back(s == Side::left ? xv : yv);
		axpy(term.coefficient, iterated_bracket(g, args), out);
	}
	return out;
}

Vector bch_product(const LieAlgebra &g, const Filtration &f, std::span<const Rational> x, std::span<const Rational> y)
{
	return bch_product(g, f.nilpotency_class(), x, y);
}

Vector carnot_product(const CarnotAlgebra &ca, std::span<const Rational> x, std::span<const Rational> y)
{
	std::size_t c = ca.degrees.empty() ? 1 : *std::max_element(ca.degrees.begin(), ca.degrees.end());
	return bch_product(ca.algebra, c, x, y);
}

Vector group_inverse(std::span<const Rational> x) { return scale(-1, x); }

LawComparison::LawComparison(const LieAlgebra &g, CarnotAlgebra ca)
    : original_(in_eigenbasis(g, ca)), carnot_(std::move(ca)),
      class_(carnot_.degrees.empty() ? 1 : *std::max_element(carnot_.degrees.begin(), carnot_.degrees.end()))
{
}

Vector LawComparison::product(std::span<const Rational> x, std::span<const Rational> y) const
{
	return bch_product(original_, class_, x, y);
}

Vector LawComparison::carnot_product(std::span<const Rational> x, std::span<const Rational> y) const
{
	return bch_product(carnot_.algebra, class_, x, y);
}

Vector LawComparison::difference(std::span<const Rational> x, std::span<const Rational> y) const
{
	return subtract(product(x, y), carnot_product(x, y));
}

Vector law_difference(const LieAlgebra &g, const CarnotAlgebra &ca, std::span<const Rational> x,
                      std::span<const Rational> y)
{
	return LawComparison(g, ca).difference(x, y);
}

Vector law_difference(const LieAlgebra &a, const LieAlgebra &b, std::span<const Rational> x,
                      std::span<const Rational> y)
{
	if (a.dim() != b.dim())
		throw DimensionError("law_difference: algebras have different dimensions");
	std::size_t c = std::max(lower_central_series(a).nilpotency_class(), lower_central_series(b).nilpotency_class());
	return subtract(bch_product(a, c, x, y), bch_product(b, c, x, y));
}

} // namespace nilgrade
