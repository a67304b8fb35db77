// Minimum-BLYM MSFA on levels {5, 6} of B_8, then the members of one optimum.

#include <iostream>

#include "flatchain/flatchain.hpp"

int main() {
  using namespace flatchain;
  const int n = 8;
  const int k = 6;
  const auto rep = optimal_msfa(n, k, WeightSpec::blym(n, k));
  std::cout << "minimum BLYM " << to_string(rep.min_weight) << " attained by " << rep.optima.size() << " MSFA\n";
  for (const auto& o : rep.optima) {
    std::cout << "  cascade " << o.cascade.to_string() << "  |A|=" << o.m << "  |B|=" << o.size_b << "\n";
  }
  const Fsfa f = make_fsfa(n, k, rep.optima[rep.canonical].m);
  std::cout << "A =";
  for (const auto& s : f.members_a()) std::cout << ' ' << s.to_string();
  std::cout << "\n|B| = " << f.members_b().size() << ", BLYM " << to_string(blym(f.members())) << "\n";
}
