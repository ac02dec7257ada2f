#include "scq/rat.hpp"

namespace scq {

Rat parse_rat(const std::string& s) {
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    std::size_t pn = 0, pd = 0;
    std::int64_t n = std::stoll(s.substr(0, slash), &pn);
    std::int64_t d = std::stoll(s.substr(slash + 1), &pd);
    if (pn != slash || pd != s.size() - slash - 1)
      throw std::invalid_argument("trailing characters");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

}  // namespace scq
