// Charge pumped by one Rice-Mele cycle, read off as the Chern number on the (k, theta) torus.

#include <iostream>

#include "tenfold/builtin.hpp"
#include "tenfold/suspension.hpp"

int main(int argc, char** argv) {
  using namespace tenfold;
  const double dv = argc > 1 ? std::stod(argv[1]) : 0.5;
  const double delta = argc > 2 ? std::stod(argv[2]) : 0.5;
  const auto fam = family_from_function(KGrid(1, 101), 100, [&](double k, double theta) {
    return eval(builtin::rice_mele(1.0, dv, delta, theta), {k});
  });
  const auto pump = pump_chern(fam);
  std::cout << "dv=" << dv << " delta=" << delta << " min_gap=" << fam.min_gap
            << " pumped_charge=" << pump.value << " residual=" << pump.residual << "\n";
}
