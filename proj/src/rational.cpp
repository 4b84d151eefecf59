#include "rational.hpp"

#include <algorithm>

#include "errors.hpp"

namespace unionvals {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!num.empty() && num.front() == '-') num.remove_prefix(1);
    if (!all_digits(num)) {
        fail(Errc::ValidationError, "bad rational literal \"" + std::string(text) +
                                        "\": expected p, -p or p/q");
    }
    Integer numerator(std::string(text.substr(0, slash)));
    if (slash == std::string_view::npos) return Rational(numerator);

    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den) || den.find('/') != std::string_view::npos) {
        fail(Errc::ValidationError, "bad rational literal \"" + std::string(text) +
                                        "\": denominator must be a positive integer");
    }
    Integer denominator{std::string(den)};
    if (denominator == 0) {
        fail(Errc::ValidationError,
             "bad rational literal \"" + std::string(text) + "\": denominator is zero");
    }
    return Rational(numerator, denominator);
}

std::string to_string(const Rational& value) {
    return value.str();
}

} // namespace unionvals
