#pragma once

#include "cmfix/rational.hpp"

#include <cstdint>
#include <random>

namespace testing_support {

inline constexpr std::uint64_t seed = 20240917;

inline cmfix::Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 6)
{
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return cmfix::make_rational(num(rng), den(rng));
}

inline cmfix::Rational random_nonzero_rational(std::mt19937_64& rng)
{
    cmfix::Rational r;
    do {
        r = random_rational(rng);
    } while (cmfix::is_zero(r));
    return r;
}

} // namespace testing_support
