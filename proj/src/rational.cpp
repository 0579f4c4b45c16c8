#include "berge/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace berge {

BigInt binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt out = 1;
    for (long long i = 1; i <= r; ++i) {
        out *= (n - r + i);
        out /= i;
    }
    return out;
}

BigInt factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

BigInt floor_div(const Rational& q) {
    BigInt n = q.numerator(), d = q.denominator();
    BigInt t = n / d;
    if (n % d != 0 && ((n < 0) != (d < 0))) --t;
    return t;
}

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << q.numerator();
    if (q.denominator() != 1) out << "/" << q.denominator();
    return out.str();
}

} // namespace berge
