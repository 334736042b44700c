#include "teich/slope.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "teich/errors.hpp"

namespace teich {

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw ValidationError("slope 0/0 is not a curve");
  if (q == 0) return Slope{1, 0};
  if (q < 0) {
    p = -p;
    q = -q;
  }
  std::int64_t g = std::gcd(p < 0 ? -p : p, q);
  return Slope{p / g, q / g};
}

double Slope::value() const {
  if (q == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(p) / static_cast<double>(q);
}

std::string Slope::str() const { return std::to_string(p) + "/" + std::to_string(q); }

Slope Slope::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    // bare integer shorthand "n" == n/1
    std::size_t used = 0;
    std::int64_t p = std::stoll(text, &used);
    if (used != text.size()) throw ValidationError("bad slope: " + text);
    return make(p, 1);
  }
  std::size_t used = 0;
  std::int64_t p = std::stoll(text.substr(0, slash), &used);
  if (used != slash) throw ValidationError("bad slope: " + text);
  std::int64_t q = std::stoll(text.substr(slash + 1), &used);
  if (used != text.size() - slash - 1) throw ValidationError("bad slope: " + text);
  return make(p, q);
}

std::int64_t intersection(const Slope& a, const Slope& b) {
  __int128 d = static_cast<__int128>(a.p) * b.q - static_cast<__int128>(a.q) * b.p;
  if (d < 0) d = -d;
  const __int128 cap = std::numeric_limits<std::int64_t>::max();
  return d > cap ? std::numeric_limits<std::int64_t>::max() : static_cast<std::int64_t>(d);
}

bool value_less(const Slope& a, const Slope& b) {
  if (a == b) return false;
  if (a.is_infinity()) return false;
  if (b.is_infinity()) return true;
  return static_cast<__int128>(a.p) * b.q < static_cast<__int128>(b.p) * a.q;
}

bool lex_qp_less(const Slope& a, const Slope& b) {
  if (a.q != b.q) return a.q < b.q;
  return a.p < b.p;
}

}  // namespace teich
