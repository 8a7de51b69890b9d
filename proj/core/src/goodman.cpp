#include "nilgrade/goodman.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace nilgrade {

double guivarch_norm(const GuivarchContext &ctx, std::span<const Rational> x)
{
	if (x.size() != ctx.degrees.size())
		throw DimensionError("guivarch_norm: wrong vector length");
	std::size_t max_deg = 0;
	for (auto d : ctx.degrees)
		max_deg = std::max(max_deg, d);
	std::vector<Rational> layer_max(max_deg + 1);
	for (std::size_t k = 0; k < x.size(); ++k)
	{
		Rational a = x[k].abs();
		if (a > layer_max[ctx.degrees[k]])
			layer_max[ctx.degrees[k]] = a;
	}
	double norm = 0;
	for (std::size_t i = 1; i <= max_deg; ++i)
	{
		if (layer_max[i].is_zero())
			continue;
		double v = std::pow(layer_max[i].to_double(), 1.0 / static_cast<double>(i));
		norm = std::max(norm, v);
	}
	return norm;
}

Vector dilate(const GuivarchContext &ctx, const Rational &t, std::span<const Rational> x)
{
	if (t.sign() <= 0)
		throw std::domain_error("dilation factor must be positive");
	if (x.size() != ctx.degrees.size())
		throw DimensionError("dilate: wrong vector length");
	Vector out(x.begin(), x.end());
	for (std::size_t k = 0; k < out.size(); ++k)
		if (!out[k].is_zero())
			out[k] *= t.pow(static_cast<unsigned>(ctx.degrees[k]));
	return out;
}

double fit_exponent(const std::vector<std::pair<double, double>> &points)
{
	std::vector<std::pair<double, double>> logs;
	for (const auto &[r, v] : points)
		if (r > 1 && v > 0)
			logs.emplace_back(std::log(r), std::log(v));
	if (logs.size() < 2)
		throw std::invalid_argument("fit_exponent needs at least two points with r > 1 and v > 0");
	double mx = 0, my = 0;
	for (const auto &[x, y] : logs)
	{
		mx += x;
		my += y;
	}
	mx /= static_cast<double>(logs.size());
	my /= static_cast<double>(logs.size());
	double sxx = 0, sxy = 0;
	for (const auto &[x, y] : logs)
	{
		sxx += (x - mx) * (x - mx);
		sxy += (x - mx) * (y - my);
	}
	if (sxx == 0)
		throw std::invalid_argument("fit_exponent: all r values coincide");
	return sxy / sxx;
}

Rational GridSampler::next_coordinate()
{
	long k = static_cast<long>((next_raw() >> 33) % 33) - 16;
	return Rational(k, 16);
}

Vector GridSampler::next_vector(std::size_t dim)
{
	Vector v(dim);
	for (auto &x : v)
		x = next_coordinate();
	return v;
}

std::vector<Rational> geometric_ladder(const Rational &ratio, std::size_t steps)
{
	std::vector<Rational> out;
	Rational t = 1;
	for (std::size_t i = 0; i <= steps; ++i)
	{
		out.push_back(t);
		t *= ratio;
	}
	return out;
}

GoodmanReport goodman_check(const LieAlgebra &g, const GradingOperator &d, std::size_t n_pairs,
                            const std::vector<Rational> &t_ladder, std::uint64_t seed)
{
	AdaptedAlgebra adapted(g);
	GoodmanReport rep;
	rep.e_D = e_of_operator(adapted, d);
	rep.seed = seed;
	rep.pairs = n_pairs;
	rep.ladder = t_ladder;
	LawComparison laws(g, carnot_algebra(adapted, d));
	GuivarchContext ctx = GuivarchContext::from_carnot(laws.carnot());
	const double e = rep.e_D.to_double();

	GridSampler sampler(seed);
	const std::size_t L = t_ladder.size();
	const std::size_t seg = (L + 3) / 4;
	double first_max = 0, last_max = 0;
	std::vector<std::pair<double, double>> points;
	for (std::size_t p = 0; p < n_pairs; ++p)
	{
		Vector z1 = sampler.next_vector(g.dim());
		Vector z2 = sampler.next_vector(g.dim());
		for (std::size_t li = 0; li < L; ++li)
		{
			Vector a = dilate(ctx, t_ladder[li], z1);
			Vector b = dilate(ctx, t_ladder[li], z2);
			double r = std::max(guivarch_norm(ctx, a), guivarch_norm(ctx, b));
			double dn = guivarch_norm(ctx, laws.difference(a, b));
			rep.samples.push_back({p, li, t_ladder[li], r, dn});
			double ratio = dn / std::pow(std::max(1.0, r), e);
			rep.constant_estimate = std::max(rep.constant_estimate, ratio);
			if (li < seg)
				first_max = std::max(first_max, ratio);
			if (li + seg >= L)
				last_max = std::max(last_max, ratio);
			if (dn > 0)
				points.emplace_back(r, dn);
		}
	}
	rep.identically_zero = points.empty();
	if (rep.identically_zero)
	{
		rep.fitted_slope = 0;
		rep.constant_ratio = 0;
		return rep;
	}
	rep.fitted_slope = fit_exponent(points);
	if (last_max == 0)
		rep.constant_ratio = 0;
	else if (first_max == 0)
		rep.constant_ratio = std::numeric_limits<double>::infinity();
	else
		rep.constant_ratio = last_max / first_max;
	return rep;
}

std::string format_double(double v)
{
	if (std::isinf(v))
		return v > 0 ? "inf" : "-inf";
	std::ostringstream os;
	os << std::setprecision(12) << v;
	return os.str();
}

std::string to_json(const GoodmanReport &report)
{
	nlohmann::ordered_json j;
	j["e_D"] = report.e_D.str();
	j["seed"] = std::to_string(report.seed);
	j["pairs"] = std::to_string(report.pairs);
	auto ladder = nlohmann::ordered_json::array();
	for (const auto &t : report.ladder)
		ladder.push_back(t.str());
	j["ladder"] = ladder;
	j["identically_zero"] = report.identically_zero;
	j["fitted_slope"] = format_double(report.fitted_slope);
	j["constant_estimate"] = format_double(report.constant_estimate);
	j["constant_ratio"] = format_double(report.constant_ratio);
	auto samples = nlohmann::ordered_json::array();
	for (const auto &s : report.samples)
		samples.push_back({{"pair", std::to_string(s.pair_index)},
		                   {"ladder_index", std::to_string(s.ladder_index)},
		                   {"t", s.t.str()},
		                   {"r", format_double(s.r)},
		                   {"diff_norm", format_double(s.diff_norm)}});
	j["samples"] = samples;
	return j.dump(2);
}

} // namespace nilgrade
