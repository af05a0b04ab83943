#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gl3tf {

using Rat = mpq_class;

// Parses "p/q" or "p" (base 10).  Throws std::invalid_argument on garbage or
// zero denominator.
inline Rat parse_rational(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace gl3tf
