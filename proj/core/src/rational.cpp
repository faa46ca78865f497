#include <trigonal/rational.hpp>

#include <cctype>

#include <trigonal/errors.hpp>

namespace trigonal
{

rational make_rational(const integer &num, const integer &den)
{
    if (den == 0) {
        throw usage_error("rational with zero denominator");
    }
    rational q(num, den);
    q.canonicalize();
    return q;
}

namespace
{

bool all_digits(std::string_view s)
{
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

} // namespace

rational parse_rational(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const auto num_s = text.substr(0, slash);
    const auto den_s = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num_s) || !all_digits(den_s)) {
        throw usage_error("malformed rational '" + std::string(text) + "'");
    }
    integer num(std::string(num_s), 10);
    integer den(std::string(den_s), 10);
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

std::string to_string(const rational &q)
{
    return q.get_str(10);
}

double to_double_approx(const rational &q)
{
    return q.get_d();
}

} // namespace trigonal
