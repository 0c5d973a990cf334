// Writes every bundled fixture (tables, certificates, chains, bases) into
// the directory given as the only argument.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gyro/axioms.hpp"
#include "gyro/io.hpp"
#include "gyro/transversal.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Objects one key per line; arrays of arrays one row per line.
std::string layout(const json& doc) {
  std::string s = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : doc.items()) {
    s += "  " + json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      s += "[\n";
      for (std::size_t r = 0; r < value.size(); ++r) s += "    " + value[r].dump() + (r + 1 < value.size() ? ",\n" : "\n");
      s += "  ]";
    } else {
      s += value.dump();
    }
    s += ++i < doc.size() ? ",\n" : "\n";
  }
  return s + "}\n";
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

gyro::CayleyGyro table_fixture(const fs::path& dir, const std::string& name, const gyro::CayleyTable& t) {
  const auto g = gyro::CayleyGyro::from_table(t);
  write(dir / (name + ".json"), layout(gyro::table_emit(g)));
  write(dir / "certificates" / (name + ".json"), gyro::check_axioms(g, gyro::Strategy::exhaustive()).to_json().dump(2) + "\n");
  return g;
}

json finite_chain(const std::string& model, const std::vector<json>& sets) {
  return {{"model", model}, {"kind", "finite"}, {"sets", sets}};
}

gyro::CayleyTable gyro8_table() {
  using namespace gyro;
  const auto group = generated_group(
      {from_cycles({{0, 1, 2, 3}}, 6), from_cycles({{1, 3}}, 6), from_cycles({{4, 5}}, 6)}, 6);
  const auto subgroup = generated_group({from_cycles({{1, 3}}, 6)}, 6);
  auto t = transversal_gyrogroup(group, subgroup);
  if (!t) throw std::runtime_error("transversal search found nothing");
  return *t;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gyro;
  if (argc != 2) {
    std::cerr << "usage: make_fixtures DIR\n";
    return 2;
  }
  const fs::path dir = argv[1];
  try {
    fs::create_directories(dir / "certificates");

    table_fixture(dir, "z4", cyclic_table(4));
    table_fixture(dir, "z6", cyclic_table(6));
    table_fixture(dir, "z8", cyclic_table(8));
    const auto z2 = CayleyGyro::from_table(cyclic_table(2));
    table_fixture(dir, "klein4", with_identity_gyrations(direct_product(z2, z2)));
    table_fixture(dir, "s3", permutation_group_table(generated_group({{1, 0, 2}, {1, 2, 0}}, 3)));
    const auto g8 = table_fixture(dir, "gyro8", gyro8_table());
    table_fixture(dir, "gyro16", direct_product(g8, z2));

    write(dir / "mobius.json", layout({{"kind", "mobius"}}));
    write(dir / "einstein.json", layout({{"kind", "einstein"}, {"c", "1"}}));

    write(dir / "z8_chain.json", layout(finite_chain("z8.json", {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 7}, {0}})));
    write(dir / "z6_chain.json", layout(finite_chain("z6.json", {{0, 1, 2, 3, 4, 5}, {0, 3}})));
    write(dir / "gyro8_chain.json", layout(finite_chain("gyro8.json", {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 4, 5}, {0, 1}})));
    write(dir / "gyro8_fine_chain.json", layout(finite_chain("gyro8.json", {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 3, 7}, {0}})));
    std::vector<std::string> all16;
    for (Index a = 0; a < 8; ++a)
      for (Index b = 0; b < 2; ++b) all16.push_back(std::to_string(a) + "." + std::to_string(b));
    write(dir / "gyro16_chain.json",
          layout(finite_chain("gyro16.json", {all16, {"0.0", "0.1", "3.0", "3.1", "7.0", "7.1"}, {"0.0", "0.1"}})));
    write(dir / "mobius_chain.json",
          layout({{"kind", "radial"},
                  {"model", "mobius.json"},
                  {"balls", {{{"r", "1/4"}, {"closed", true}}, {{"r", "1/16"}, {"closed", true}}, {{"r", "0"}, {"closed", true}}}}}));
    // The same radii behind a whole-disk U₀, so they serve as U₁, U₂, U₃.
    write(dir / "mobius_metric_chain.json",
          layout({{"kind", "radial"},
                  {"model", "mobius.json"},
                  {"balls",
                   {{{"r", "1"}, {"closed", false}},
                    {{"r", "1/4"}, {"closed", true}},
                    {{"r", "1/16"}, {"closed", true}},
                    {{"r", "0"}, {"closed", true}}}}}));
    write(dir / "mobius_geometric_chain.json",
          layout({{"kind", "radial"},
                  {"model", "mobius.json"},
                  {"balls", {{{"r", "1/4"}, {"closed", true}}}},
                  {"tail", {{"ratio", "1/4"}}}}));

    write(dir / "z6_base.json", layout({{"sets", {{0, 1, 2, 3, 4, 5}, {0, 3}, {0}}}}));
    write(dir / "z8_base.json", layout({{"sets", {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 7}, {0}}}}));
    write(dir / "gyro8_base.json", layout({{"sets", {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 4, 5}, {0, 1}, {0, 3, 7}, {0}}}}));
    // H = {e, (1 2)} is neutral for no base containing {e, (0 1)}.
    write(dir / "s3_base.json", layout({{"sets", {{0, 2}}}}));
  } catch (const std::exception& e) {
    std::cerr << "make_fixtures: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
