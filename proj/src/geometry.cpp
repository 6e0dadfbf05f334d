#include "mirror/geometry.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "mirror/error.hpp"

namespace mirror {

int GeometrySpec::dimension() const
{
    return std::accumulate(factors.begin(), factors.end(), 0);
}

int GeometrySpec::convex_rank() const
{
    int r = 0;
    for (const auto& b : bundles)
        r += b.kind == BundleKind::convex;
    return r;
}

int GeometrySpec::concave_rank() const
{
    return static_cast<int>(bundles.size()) - convex_rank();
}

namespace {

std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> words;
    std::istringstream is{std::string(line)};
    std::string w;
    while (is >> w)
        words.push_back(w);
    return words;
}

long parse_integer(const std::string& word, int line)
{
    long v = 0;
    const char* first = word.data();
    const char* last = word.data() + word.size();
    if (!word.empty() && word[0] == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError(line, "'" + word + "' is not an integer");
    return v;
}

}  // namespace

GeometrySpec parse_spec(std::string_view text)
{
    GeometrySpec spec;
    std::vector<int> bundle_lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    bool have_name = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        const auto words = split_words(line);
        if (words.empty())
            continue;
        const std::string& directive = words[0];
        if (directive == "space") {
            if (words.size() != 2)
                throw ParseError(lineno, "expected `space <n>`");
            const long n = parse_integer(words[1], lineno);
            if (n < 1)
                throw ParseError(lineno, "projective dimension must be >= 1");
            spec.factors.push_back(static_cast<int>(n));
        } else if (directive == "bundle") {
            if (words.size() < 3)
                throw ParseError(lineno, "expected `bundle convex|concave <d1> ... <dm>`");
            LineBundleSpec b;
            if (words[1] == "convex")
                b.kind = BundleKind::convex;
            else if (words[1] == "concave")
                b.kind = BundleKind::concave;
            else
                throw ParseError(lineno, "bundle kind must be convex or concave, got '" + words[1] + "'");
            bool nonzero = false;
            for (std::size_t i = 2; i < words.size(); ++i) {
                const long v = parse_integer(words[i], lineno);
                if (v < 0)
                    throw ParseError(lineno, words[1] + " bundle degrees are entered as magnitudes >= 0, got " +
                                                 std::to_string(v));
                nonzero |= v != 0;
                b.multidegree.push_back(b.kind == BundleKind::concave ? -v : v);
            }
            if (b.kind == BundleKind::concave && !nonzero)
                throw ParseError(lineno, "concave bundle with all-zero degrees");
            spec.bundles.push_back(std::move(b));
            bundle_lines.push_back(lineno);
        } else if (directive == "name") {
            if (have_name)
                throw ParseError(lineno, "duplicate `name`");
            const auto pos = line.find("name") + 4;
            std::string rest = line.substr(pos);
            const auto b = rest.find_first_not_of(" \t");
            const auto e = rest.find_last_not_of(" \t\r");
            spec.name = b == std::string::npos ? "" : rest.substr(b, e - b + 1);
            have_name = true;
        } else {
            throw ParseError(lineno, "unknown directive '" + directive + "'");
        }
    }
    if (spec.factors.empty() && spec.bundles.empty())
        throw ParseError(lineno, "empty spec");
    if (spec.factors.empty())
        throw ParseError(lineno, "no `space` lines");
    for (std::size_t i = 0; i < spec.bundles.size(); ++i)
        if (spec.bundles[i].multidegree.size() != spec.factors.size())
            throw ParseError(bundle_lines[i], "bundle has " + std::to_string(spec.bundles[i].multidegree.size()) +
                                                  " degrees but there are " + std::to_string(spec.factors.size()) +
                                                  " `space` lines");
    return spec;
}

GeometrySpec load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_spec(os.str());
}

std::string serialize(const GeometrySpec& spec)
{
    std::ostringstream os;
    if (!spec.name.empty())
        os << "name " << spec.name << "\n";
    for (int n : spec.factors)
        os << "space " << n << "\n";
    for (const auto& b : spec.bundles) {
        os << "bundle " << (b.kind == BundleKind::convex ? "convex" : "concave");
        for (long v : b.multidegree)
            os << " " << (b.kind == BundleKind::concave ? -v : v);
        os << "\n";
    }
    return os.str();
}

ValidatedSpec validate(const GeometrySpec& spec)
{
    const std::size_t m = spec.factors.size();
    if (m == 0)
        throw ValidationError(-1, "no projective factors");
    for (std::size_t i = 0; i < spec.bundles.size(); ++i) {
        const auto& b = spec.bundles[i];
        if (b.multidegree.size() != m)
            throw ValidationError(-1, "bundle " + std::to_string(i + 1) + " has wrong arity");
        bool nonzero = false;
        for (std::size_t k = 0; k < m; ++k) {
            const long v = b.multidegree[k];
            nonzero |= v != 0;
            if (b.kind == BundleKind::convex && v < 0)
                throw ValidationError(static_cast<int>(k), "convex bundle with a negative degree");
            if (b.kind == BundleKind::concave && v > 0)
                throw ValidationError(static_cast<int>(k), "concave bundle with a positive degree");
        }
        if (b.kind == BundleKind::concave && !nonzero)
            throw ValidationError(-1, "concave bundle with all-zero degrees");
    }
    for (std::size_t k = 0; k < m; ++k) {
        long total = 0;
        for (const auto& b : spec.bundles)
            total += b.kind == BundleKind::convex ? b.multidegree[k] : -b.multidegree[k];
        if (total != spec.factors[k] + 1)
            throw ValidationError(static_cast<int>(k),
                                  "c1(V+) - c1(V-) != c1(X) on factor " + std::to_string(k + 1) + ": " +
                                      std::to_string(total) + " vs " + std::to_string(spec.factors[k] + 1));
    }
    const int s = spec.convex_rank() - spec.concave_rank() - (spec.dimension() - 3);
    if (s < 0)
        throw ValidationError(-1, "rk V+ - rk V- - (n - 3) = " + std::to_string(s) + " < 0");
    return ValidatedSpec{spec, s, CohShape::make(spec.factors)};
}

long pairing(const LineBundleSpec& bundle, const Degree& d)
{
    if (bundle.multidegree.size() != d.size())
        throw ShapeError("pairing: arity mismatch");
    long r = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        r += bundle.multidegree[i] * d[i];
    return r;
}

CohClass c1_X(const GeometrySpec& spec, const ShapePtr& shape)
{
    std::vector<long> coeffs;
    for (int n : spec.factors)
        coeffs.push_back(n + 1);
    return CohClass::linear(shape, coeffs);
}

CohClass c1(const LineBundleSpec& bundle, const ShapePtr& shape)
{
    return CohClass::linear(shape, bundle.multidegree);
}

}  // namespace mirror
