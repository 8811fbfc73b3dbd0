#include "pretzel/slopes.hpp"

#include <stdexcept>

namespace pretzel {

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.q_ != b.q_) return a.q_ < b.q_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.p_ != b.p_) return a.p_ < b.p_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Slope make_slope(const Integer& p, const Integer& q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is not a peripheral class");
  if (q == 0) return Slope(1, 0);
  Integer g = gcd(abs(p), abs(q));
  Integer rp = p / g;
  Integer rq = q / g;
  if (rq < 0) {
    rp = -rp;
    rq = -rq;
  }
  return Slope(std::move(rp), std::move(rq));
}

Integer distance(const Slope& a, const Slope& b) {
  return abs(a.p() * b.q() - a.q() * b.p());
}

std::string to_string(const Slope& s) { return s.p().str() + "/" + s.q().str(); }

namespace {

Integer parse_component(const std::string& text, const std::string& whole) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("malformed slope '" + whole + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed slope '" + whole + "'");
    }
  }
  Integer value(text.substr(start));
  return start == 1 ? Integer(-value) : value;
}

}  // namespace

Slope parse_slope(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_slope(parse_component(text, text), 1);
  return make_slope(parse_component(text.substr(0, slash), text),
                    parse_component(text.substr(slash + 1), text));
}

}  // namespace pretzel
