#include "rgvss/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rgvss {

std::string_view to_string(StackOp op) { return op == StackOp::kOr ? "or" : "xor"; }

StackOp parse_stack_op(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "or") return StackOp::kOr;
  if (lower == "xor") return StackOp::kXor;
  throw ParameterError("unknown stacking operation '" + std::string(text) + "' (want or|xor)");
}

SchemeParams SchemeParams::make(int k, int n) {
  SchemeParams p{k, n};
  p.validate();
  return p;
}

void SchemeParams::validate() const {
  if (k < 2 || k > n) {
    throw ParameterError("scheme " + str() + " invalid: need 2 <= k <= n");
  }
}

std::string SchemeParams::str() const {
  return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

void TransmissionSpec::validate() const {
  scheme.validate();
  if (t < 1 || t > scheme.n) {
    throw ParameterError("t = " + std::to_string(t) + " out of range 1.." +
                         std::to_string(scheme.n) + " for scheme " + scheme.str());
  }
}

}  // namespace rgvss
