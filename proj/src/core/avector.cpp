#include "core/avector.hpp"

#include <vector>

namespace gl3tf {

AVector parse_avector(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("expected three comma-separated rationals: '" + s + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

}  // namespace gl3tf
