#include "cmfix/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cmfix {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::vector<std::string_view> split_commas(std::string_view text)
{
    std::vector<std::string_view> out;
    if (text.empty()) {
        return out;
    }
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(',', start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    if (num.front() == '+') {
        num.remove_prefix(1);
    }
    Integer p{std::string(num), 10};
    Integer q{std::string(den), 10};
    if (q == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r{p, q};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    for (auto piece : split_commas(text)) {
        out.push_back(parse_rational(piece));
    }
    return out;
}

std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    std::vector<std::int64_t> out;
    for (auto piece : split_commas(text)) {
        std::int64_t v = 0;
        const char* first = piece.data();
        const char* last = piece.data() + piece.size();
        if (!piece.empty() && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last) {
            throw std::invalid_argument("not an integer: '" + std::string(piece) + "'");
        }
        out.push_back(v);
    }
    return out;
}

} // namespace cmfix
