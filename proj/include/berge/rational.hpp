#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace berge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

BigInt binomial(long long n, long long r);
BigInt factorial(int k);
BigInt floor_div(const Rational& q);
std::string to_string(const Rational& q);

} // namespace berge
