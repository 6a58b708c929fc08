#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace charnum {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Domain errors: violated preconditions on mathematical inputs.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an independent recomputation disagrees with a stored result.
class integrity_error : public error {
public:
    using error::error;
};

inline std::string to_decimal(const integer& v) { return v.str(); }

inline integer from_decimal(const std::string& s)
{
    if (s.empty())
        throw error("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw error("malformed integer literal '" + s + "'");
    for (std::size_t k = i; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9')
            throw error("malformed integer literal '" + s + "'");
    integer v(s[0] == '+' ? s.substr(1) : s);
    return v;
}

inline integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Residue in [0, |m|).
inline integer floor_mod(const integer& a, const integer& m)
{
    integer am = abs(m);
    integer r = a % am;
    if (r < 0)
        r += am;
    return r;
}

} // namespace charnum
