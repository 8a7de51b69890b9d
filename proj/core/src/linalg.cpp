#include "nilgrade/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nilgrade {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n);
	v.at(i) = 1;
	return v;
}

bool is_zero(std::span<const Rational> v)
{
	return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x.is_zero(); });
}

static void require_same(std::size_t a, std::size_t b, const char *what)
{
	if (a != b)
		throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
		                     std::to_string(b) + ")");
}

Vector add(std::span<const Rational> a, std::span<const Rational> b)
{
	require_same(a.size(), b.size(), "add");
	Vector r(a.begin(), a.end());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] += b[i];
	return r;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b)
{
	require_same(a.size(), b.size(), "subtract");
	Vector r(a.begin(), a.end());
	for (std::size_t i = 0; i < r.size(); ++i)
		r[i] -= b[i];
	return r;
}

Vector scale(const Rational &s, std::span<const Rational> v)
{
	Vector r(v.size());
	if (s.is_zero())
		return r;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (!v[i].is_zero())
			r[i] = s * v[i];
	return r;
}

void axpy(const Rational &s, std::span<const Rational> x, std::span<Rational> y)
{
	require_same(x.size(), y.size(), "axpy");
	if (s.is_zero())
		return;
	for (std::size_t i = 0; i < x.size(); ++i)
		y[i].add_product(s, x[i]);
}

std::string format_vector(std::span<const Rational> v)
{
	std::string out;
	for (std::size_t i = 0; i < v.size(); ++i)
	{
		if (i)
			out += ',';
		out += v[i].str();
	}
	return out;
}

RatMatrix RatMatrix::identity(std::size_t n)
{
	RatMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vector> &rows, std::size_t cols)
{
	RatMatrix m(rows.size(), cols);
	for (std::size_t r = 0; r < rows.size(); ++r)
	{
		require_same(rows[r].size(), cols, "from_rows");
		std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
	}
	return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vector> &columns, std::size_t rows)
{
	RatMatrix m(rows, columns.size());
	for (std::size_t c = 0; c < columns.size(); ++c)
	{
		require_same(columns[c].size(), rows, "from_columns");
		for (std::size_t r = 0; r < rows; ++r)
			m(r, c) = columns[c][r];
	}
	return m;
}

Vector RatMatrix::column(std::size_t c) const
{
	Vector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

RatMatrix RatMatrix::transpose() const
{
	RatMatrix t(cols_, rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			t(c, r) = (*this)(r, c);
	return t;
}

Vector RatMatrix::apply(std::span<const Rational> v) const
{
	require_same(v.size(), cols_, "apply");
	Vector out(rows_);
	for (std::size_t c = 0; c < cols_; ++c)
	{
		if (v[c].is_zero())
			continue;
		for (std::size_t r = 0; r < rows_; ++r)
			out[r].add_product((*this)(r, c), v[c]);
	}
	return out;
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b)
{
	require_same(a.cols_, b.rows_, "matrix product");
	RatMatrix out(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			const Rational &aik = a(i, k);
			if (aik.is_zero())
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				out(i, j).add_product(aik, b(k, j));
		}
	return out;
}

RatMatrix operator+(const RatMatrix &a, const RatMatrix &b)
{
	require_same(a.rows_, b.rows_, "matrix sum");
	require_same(a.cols_, b.cols_, "matrix sum");
	RatMatrix out = a;
	for (std::size_t i = 0; i < out.data_.size(); ++i)
		out.data_[i] += b.data_[i];
	return out;
}

RatMatrix operator-(const RatMatrix &a, const RatMatrix &b)
{
	require_same(a.rows_, b.rows_, "matrix difference");
	require_same(a.cols_, b.cols_, "matrix difference");
	RatMatrix out = a;
	for (std::size_t i = 0; i < out.data_.size(); ++i)
		out.data_[i] -= b.data_[i];
	return out;
}

RatMatrix operator*(const Rational &s, const RatMatrix &m)
{
	RatMatrix out = m;
	for (auto &x : out.data_)
		x *= s;
	return out;
}

bool RatMatrix::is_zero() const { return nilgrade::is_zero(data_); }

RrefResult rref(const RatMatrix &m)
{
	RrefResult res{m, {}, 0};
	RatMatrix &a = res.reduced;
	std::size_t row = 0;
	for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col)
	{
		std::size_t pivot = row;
		while (pivot < a.rows() && a(pivot, col).is_zero())
			++pivot;
		if (pivot == a.rows())
			continue;
		if (pivot != row)
			for (std::size_t c = 0; c < a.cols(); ++c)
				std::swap(a(pivot, c), a(row, c));
		Rational inv = Rational(1) / a(row, col);
		for (std::size_t c = col; c < a.cols(); ++c)
			a(row, c) *= inv;
		for (std::size_t r = 0; r < a.rows(); ++r)
		{
			if (r == row || a(r, col).is_zero())
				continue;
			Rational f = -a(r, col);
			for (std::size_t c = col; c < a.cols(); ++c)
				a(r, c).add_product(f, a(row, c));
		}
		res.pivot_columns.push_back(col);
		++row;
	}
	res.rank = res.pivot_columns.size();
	return res;
}

std::optional<AffineSolution> solve_affine(const RatMatrix &a, std::span<const Rational> b)
{
	if (a.rows() != b.size())
		throw DimensionError("solve_affine: matrix has " + std::to_string(a.rows()) + " rows but right-hand side has " +
		                     std::to_string(b.size()) + " entries");
	const std::size_t n = a.cols();
	RatMatrix aug(a.rows(), n + 1);
	for (std::size_t r = 0; r < a.rows(); ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = a(r, c);
		aug(r, n) = b[r];
	}
	RrefResult red = rref(aug);
	if (!red.pivot_columns.empty() && red.pivot_columns.back() == n)
		return std::nullopt;

	AffineSolution sol;
	sol.particular = zero_vector(n);
	std::vector<bool> is_pivot(n, false);
	for (std::size_t i = 0; i < red.rank; ++i)
	{
		std::size_t pc = red.pivot_columns[i];
		is_pivot[pc] = true;
		sol.particular[pc] = red.reduced(i, n);
	}
	for (std::size_t f = 0; f < n; ++f)
	{
		if (is_pivot[f])
			continue;
		Vector v = zero_vector(n);
		v[f] = 1;
		for (std::size_t i = 0; i < red.rank; ++i)
			v[red.pivot_columns[i]] = -red.reduced(i, f);
		sol.nullspace_basis.push_back(std::move(v));
	}
	return sol;
}

std::vector<Vector> nullspace(const RatMatrix &m)
{
	auto sol = solve_affine(m, zero_vector(m.rows()));
	return sol->nullspace_basis;
}

RatMatrix inverse(const RatMatrix &m)
{
	if (m.rows() != m.cols())
		throw DimensionError("inverse of a non-square matrix");
	const std::size_t n = m.rows();
	RatMatrix aug(n, 2 * n);
	for (std::size_t r = 0; r < n; ++r)
	{
		for (std::size_t c = 0; c < n; ++c)
			aug(r, c) = m(r, c);
		aug(r, n + r) = 1;
	}
	RrefResult red = rref(aug);
	if (red.rank < n || red.pivot_columns[n - 1] != n - 1)
		throw std::domain_error("inverse of a singular matrix");
	RatMatrix inv(n, n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			inv(r, c) = red.reduced(r, n + c);
	return inv;
}

bool subspace_contains(const std::vector<Vector> &basis, std::span<const Rational> v)
{
	EchelonBuilder eb(v.size());
	for (const auto &b : basis)
	{
		require_same(b.size(), v.size(), "subspace_contains");
		eb.insert(b);
	}
	return eb.contains(Vector(v.begin(), v.end()));
}

std::size_t span_rank(const std::vector<Vector> &vectors, std::size_t dim)
{
	EchelonBuilder eb(dim);
	for (const auto &v : vectors)
		eb.insert(v);
	return eb.rank();
}

std::vector<Vector> echelon_basis(const std::vector<Vector> &vectors, std::size_t dim)
{
	if (vectors.empty())
		return {};
	RrefResult red = rref(RatMatrix::from_rows(vectors, dim));
	std::vector<Vector> out;
	for (std::size_t r = 0; r < red.rank; ++r)
	{
		auto row = red.reduced.row(r);
		out.emplace_back(row.begin(), row.end());
	}
	return out;
}

std::optional<std::size_t> filtration_depth(const std::vector<std::vector<Vector>> &filtration_bases,
                                            std::span<const Rational> v)
{
	if (is_zero(v))
		return std::nullopt;
	std::size_t depth = 0;
	for (std::size_t k = 0; k < filtration_bases.size(); ++k)
	{
		if (!subspace_contains(filtration_bases[k], v))
			break;
		depth = k + 1;
	}
	return depth;
}

void EchelonBuilder::reduce(Vector &v) const
{
	if (v.size() != cols_)
		throw DimensionError("EchelonBuilder: vector has wrong length");
	for (std::size_t idx : order_)
	{
		const std::size_t lead = leads_[idx];
		if (v[lead].is_zero())
			continue;
		Rational f = -v[lead];
		const Vector &row = rows_[idx];
		for (std::size_t c = lead; c < cols_; ++c)
			v[c].add_product(f, row[c]);
	}
}

bool EchelonBuilder::insert(Vector v)
{
	reduce(v);
	auto it = std::find_if(v.begin(), v.end(), [](const Rational &x) { return !x.is_zero(); });
	if (it == v.end())
		return false;
	std::size_t lead = static_cast<std::size_t>(it - v.begin());
	Rational inv = Rational(1) / v[lead];
	for (std::size_t c = lead; c < cols_; ++c)
		v[c] *= inv;
	rows_.push_back(std::move(v));
	leads_.push_back(lead);
	auto pos = std::lower_bound(order_.begin(), order_.end(), lead,
	                            [this](std::size_t idx, std::size_t l) { return leads_[idx] < l; });
	order_.insert(pos, rows_.size() - 1);
	return true;
}

bool EchelonBuilder::contains(Vector v) const
{
	reduce(v);
	return nilgrade::is_zero(v);
}

} // namespace nilgrade
