#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace nilgrade {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational
{
  public:
	Rational() = default;
	Rational(long v) : v_(v) {}
	Rational(int v) : v_(static_cast<long>(v)) {}
	Rational(long num, long den);
	explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

	/// Parses "p", "-p", "p/q" (q > 0 after sign handling). Throws
	/// std::invalid_argument on malformed input or zero denominator.
	static Rational parse(std::string_view text);

	bool is_zero() const { return sgn(v_) == 0; }
	int sign() const { return sgn(v_); }
	bool is_integer() const { return v_.get_den() == 1; }

	mpz_class numerator() const { return v_.get_num(); }
	mpz_class denominator() const { return v_.get_den(); }

	double to_double() const { return v_.get_d(); }
	std::string str() const;

	Rational abs() const { return Rational(mpq_class(::abs(v_))); }
	Rational pow(unsigned exponent) const;

	Rational &operator+=(const Rational &o)
	{
		v_ += o.v_;
		return *this;
	}
	Rational &operator-=(const Rational &o)
	{
		v_ -= o.v_;
		return *this;
	}
	Rational &operator*=(const Rational &o)
	{
		v_ *= o.v_;
		return *this;
	}
	Rational &operator/=(const Rational &o);

	friend Rational operator+(Rational a, const Rational &b) { return a += b; }
	friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
	friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
	friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
	friend Rational operator-(const Rational &a) { return Rational(mpq_class(-a.v_)); }

	friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
	friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
	{
		int c = cmp(a.v_, b.v_);
		return c < 0 ? std::strong_ordering::less
		             : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
	}

	friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

	const mpq_class &raw() const { return v_; }

	/// this += a * b without temporaries.
	void add_product(const Rational &a, const Rational &b);

  private:
	mpq_class v_;
};

} // namespace nilgrade
