#include "nilgrade/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nilgrade {

Rational::Rational(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("rational with zero denominator");
	v_ = mpq_class(num, den);
	v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char ch : s)
		if (!std::isdigit(static_cast<unsigned char>(ch)))
			return false;
	return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
	std::string_view s = text;
	bool negative = false;
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
	{
		negative = s.front() == '-';
		s.remove_prefix(1);
	}
	auto slash = s.find('/');
	std::string_view num = s.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
	mpz_class n(std::string(num), 10);
	mpz_class d(std::string(den), 10);
	if (d == 0)
		throw std::invalid_argument("rational literal with zero denominator '" + std::string(text) + "'");
	if (negative)
		n = -n;
	return Rational(mpq_class(n, d));
}

std::string Rational::str() const
{
	if (v_.get_den() == 1)
		return v_.get_num().get_str();
	return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned exponent) const
{
	mpz_class n, d;
	mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
	mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
	return Rational(mpq_class(n, d));
}

Rational &Rational::operator/=(const Rational &o)
{
	if (o.is_zero())
		throw std::domain_error("rational division by zero");
	v_ /= o.v_;
	return *this;
}

void Rational::add_product(const Rational &a, const Rational &b)
{
	if (a.is_zero() || b.is_zero())
		return;
	mpq_class t;
	mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
	mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), t.get_mpq_t());
}

} // namespace nilgrade
