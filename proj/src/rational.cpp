#include "fairdiv/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace fairdiv {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InputError("malformed rational \"" + original + "\"");
    }
    Integer q(std::string(den), 10);
    if (q == 0) {
      throw InputError("zero denominator in \"" + original + "\"");
    }
    value = Rational(Integer(std::string(num), 10), q);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw InputError("malformed decimal \"" + original + "\"");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!all_digits(text)) {
      throw InputError("malformed rational \"" + original + "\"");
    }
    value = Rational(Integer(std::string(text), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  return canonical(value).get_str(10);
}

}  // namespace fairdiv
