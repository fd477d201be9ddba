#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dpcoh {

using Int = mpz_class;
using Rat = mpq_class;

// Accepts "p", "-p", "p/q" with optional whitespace; throws std::invalid_argument
// on malformed input or a zero denominator.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& r);

}  // namespace dpcoh
