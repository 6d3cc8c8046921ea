#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace codp {

using Rational = mpq_class;
using Integer = mpz_class;

/// Malformed user input: bad presets, dangling endpoints, unparsable JSON.
class InputError : public std::runtime_error
{
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not be completed as requested (bound exceeded,
/// unsupported regime, failed normalization).
class ComputationError : public std::runtime_error
{
public:
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

inline Rational parse_rational(const std::string& text)
{
    Rational value;
    std::string trimmed;
    for (char c : text)
        if (c != ' ')
            trimmed.push_back(c);
    if (trimmed.empty() || value.set_str(trimmed, 10) != 0)
        throw InputError("not a rational number: '" + text + "'");
    if (value.get_den() == 0)
        throw InputError("zero denominator: '" + text + "'");
    value.canonicalize();
    return value;
}

inline std::string to_string(const Rational& value)
{
    return value.get_str();
}

inline bool is_zero(const Rational& value)
{
    return sgn(value) == 0;
}

inline int sign_power(long long exponent)
{
    return (exponent % 2 == 0) ? 1 : -1;
}

} // namespace codp
