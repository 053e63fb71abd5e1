#ifndef CHARP_PARSE_HPP
#define CHARP_PARSE_HPP

#include <string>

#include "charp/polynomial.hpp"

namespace charp {

// Polynomial text grammar shared by files, the CLI, and tests:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := NUMBER | IDENT ['^' NUMBER]
// Variables are identifiers known to the ring; coefficients are decimal
// integers reduced mod p. Example: "x22*x33 - x23*x32".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

} // namespace charp

#endif
