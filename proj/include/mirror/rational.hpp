#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mirror {

/// Exact rational, always canonical (reduced, positive denominator).
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q" with q >= 1, including integers ("2875/1").
std::string to_string(const Rat& r);

/// Accepts "p/q" or "p". Throws DomainError on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

}  // namespace mirror
