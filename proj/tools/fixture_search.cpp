// Rebuilds the order-8 fixture: the first gyrogroup transversal of the
// subgroup <(1 3)> in D8 × C2, acting on six points.
#include <iostream>

#include "gyro/io.hpp"
#include "gyro/transversal.hpp"

int main() {
  using namespace gyro;
  const auto group = generated_group(
      {from_cycles({{0, 1, 2, 3}}, 6), from_cycles({{1, 3}}, 6), from_cycles({{4, 5}}, 6)}, 6);
  const auto subgroup = generated_group({from_cycles({{1, 3}}, 6)}, 6);
  const auto table = transversal_gyrogroup(group, subgroup);
  if (!table) {
    std::cerr << "no transversal yields a gyrogroup with a nonidentity gyration\n";
    return 1;
  }
  std::cout << table_to_json(*table).dump() << '\n';
  return 0;
}
