#include "mirror/rational.hpp"

#include "mirror/error.hpp"

namespace mirror {

std::string to_string(const Rat& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    BigInt num;
    BigInt den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(s);
        } else {
            num = BigInt(s.substr(0, slash));
            den = BigInt(s.substr(slash + 1));
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational '" + s + "'");
    }
    if (den == 0)
        throw DomainError("zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace mirror
