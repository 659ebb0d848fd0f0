// Classify every built-in model and compute the invariant its class calls for.

#include <iostream>

#include "tenfold/builtin.hpp"
#include "tenfold/invariants.hpp"

int main() {
  using namespace tenfold;
  for (const auto& name : builtin::names()) {
    const auto b = builtin::make(name);
    const int d = b.model.dim();
    const auto cls = classify(b.model, b.symmetries, KGrid(d, default_points(d)));
    const auto out = invariant_for(b.model, cls, d);
    std::cout << name << ": " << cls.az.label << " d=" << d << " group=" << out.expected;
    if (out.result) std::cout << " " << to_string(out.result->kind) << "=" << out.result->value;
    std::cout << "\n";
  }
}
