#include "gyro/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gyro {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw InputError(what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

Index as_index(const json& v, std::size_t order, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string(what) + " must be a non-negative integer");
  const auto i = v.get<unsigned long long>();
  if (i >= order) fail(std::string(what) + " " + std::to_string(i) + " outside 0.." + std::to_string(order - 1));
  return static_cast<Index>(i);
}

Rational as_rational(const json& v, const char* what) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::invalid_argument& e) {
    fail(std::string(what) + ": " + e.what());
  }
  fail(std::string(what) + " must be an exact number written as a string, e.g. \"1/4\"");
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

CayleyTable table_from_json(const json& doc) {
  if (field(doc, "kind") != "cayley") fail("expected a document of kind \"cayley\"");
  const json& ord = field(doc, "order");
  if (!ord.is_number_integer() || ord.get<long long>() < 1) fail("order must be a positive integer");
  CayleyTable t;
  t.order = ord.get<std::size_t>();
  const std::size_t n = t.order;
  if (doc.contains("labels")) {
    const json& labels = doc.at("labels");
    if (!labels.is_array() || labels.size() != n) fail("labels must list exactly " + std::to_string(n) + " strings");
    for (const auto& l : labels) {
      if (!l.is_string()) fail("labels must be strings");
      t.labels.push_back(l.get<std::string>());
    }
  }
  const json& op = field(doc, "op");
  if (!op.is_array() || op.size() != n) fail("op must have " + std::to_string(n) + " rows");
  t.op.reserve(n * n);
  for (const auto& row : op) {
    if (!row.is_array() || row.size() != n) fail("every op row must have " + std::to_string(n) + " entries");
    for (const auto& v : row) t.op.push_back(as_index(v, n, "op entry"));
  }
  if (doc.contains("gyr")) {
    const json& g = doc.at("gyr");
    std::vector<Index> gyr;
    gyr.reserve(n * n * n);
    if (g == "identity") {
      for (std::size_t xy = 0; xy < n * n; ++xy)
        for (Index z = 0; z < n; ++z) gyr.push_back(z);
    } else {
      if (!g.is_array() || g.size() != n) fail("gyr must be \"identity\" or an order×order×order array");
      for (const auto& gx : g) {
        if (!gx.is_array() || gx.size() != n) fail("gyr must be \"identity\" or an order×order×order array");
        for (const auto& gxy : gx) {
          if (!gxy.is_array() || gxy.size() != n) fail("gyr must be \"identity\" or an order×order×order array");
          for (const auto& v : gxy) gyr.push_back(as_index(v, n, "gyr entry"));
        }
      }
    }
    t.declared_gyr = std::move(gyr);
  }
  return t;
}

json table_to_json(const CayleyTable& t) {
  const std::size_t n = t.order;
  json op = json::array();
  for (Index a = 0; a < n; ++a) {
    json row = json::array();
    for (Index b = 0; b < n; ++b) row.push_back(t.at(a, b));
    op.push_back(std::move(row));
  }
  json doc = {{"kind", "cayley"}, {"order", n}, {"labels", t.labels}, {"op", std::move(op)}};
  if (t.declared_gyr) {
    const auto& g = *t.declared_gyr;
    bool trivial = true;
    for (std::size_t i = 0; i < g.size() && trivial; ++i) trivial = g[i] == i % n;
    if (trivial) {
      doc["gyr"] = "identity";
    } else {
      json gx = json::array();
      for (Index x = 0; x < n; ++x) {
        json gxy = json::array();
        for (Index y = 0; y < n; ++y)
          gxy.push_back(std::vector<Index>(g.begin() + (x * n + y) * n, g.begin() + (x * n + y + 1) * n));
        gx.push_back(std::move(gxy));
      }
      doc["gyr"] = std::move(gx);
    }
  }
  return doc;
}

CayleyGyro table_load(const json& doc) { return CayleyGyro::from_table(table_from_json(doc)); }

json table_emit(const CayleyGyro& model) { return table_to_json(model.table()); }

LoadedModel model_from_json(const json& doc) {
  const json& kind = field(doc, "kind");
  LoadedModel m;
  if (kind == "cayley") {
    m.finite = std::make_shared<const CayleyGyro>(table_load(doc));
  } else if (kind == "mobius") {
    m.analytic = RadialModel::mobius();
  } else if (kind == "einstein") {
    Rational c = doc.contains("c") ? as_rational(doc.at("c"), "c") : Rational(1);
    if (c <= 0) fail("einstein c must be positive");
    m.analytic = RadialModel::einstein(c);
  } else {
    fail("unsupported model kind " + kind.dump());
  }
  return m;
}

LoadedModel load_model(const std::filesystem::path& path) { return model_from_json(read_json_file(path)); }

namespace {

LoadedModel resolve_model(const json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    return load_model(p.is_absolute() ? p : base_dir / p);
  }
  return model_from_json(ref);
}

}  // namespace

LoadedChain chain_from_json(const json& doc, const std::filesystem::path& base_dir) {
  const std::string kind = doc.value("kind", std::string("finite"));
  if (kind == "finite") {
    LoadedModel m = resolve_model(field(doc, "model"), base_dir);
    if (!m.is_finite()) fail("a finite chain needs a cayley model");
    FiniteChain c{m.finite, {}, ChainLevel::none};
    const json& sets = field(doc, "sets");
    if (!sets.is_array() || sets.empty()) fail("sets must be a nonempty array");
    for (const auto& s : sets) c.sets.push_back(set_from_json(m.finite, s));
    return c;
  }
  if (kind == "radial") {
    RadialChain c;
    c.model = doc.contains("model") ? resolve_model(doc.at("model"), base_dir).analytic : RadialModel::mobius();
    if (doc.contains("model") && resolve_model(doc.at("model"), base_dir).is_finite())
      fail("a radial chain needs a mobius or einstein model");
    const json& balls = field(doc, "balls");
    if (!balls.is_array() || balls.empty()) fail("balls must be a nonempty array");
    for (const auto& b : balls) {
      const Rational r = as_rational(field(b, "r"), "ball radius");
      const bool closed = b.value("closed", true);
      try {
        c.balls.emplace_back(c.model, r, closed);
      } catch (const std::exception& e) {
        fail(std::string("ball: ") + e.what());
      }
    }
    if (doc.contains("tail")) {
      const Rational q = as_rational(field(doc.at("tail"), "ratio"), "tail ratio");
      if (q < 0 || q >= 1) fail("tail ratio must lie in [0, 1)");
      c.tail_ratio = q;
    }
    return c;
  }
  fail("unsupported chain kind \"" + kind + "\"");
}

LoadedChain load_chain(const std::filesystem::path& path) {
  return chain_from_json(read_json_file(path), path.parent_path());
}

json chain_to_json(const FiniteChain& chain, const std::string& model_ref) {
  json sets = json::array();
  for (const auto& s : chain.sets) sets.push_back(s.elements());
  return {{"model", model_ref}, {"kind", "finite"}, {"sets", std::move(sets)}};
}

json chain_to_json(const RadialChain& chain) {
  json balls = json::array();
  for (const auto& b : chain.balls) balls.push_back({{"r", to_string(b.radius())}, {"closed", b.closed()}});
  json model = {{"kind", chain.model.name()}};
  if (chain.model.kind == RadialModel::Kind::einstein) model["c"] = to_string(chain.model.c);
  json doc = {{"kind", "radial"}, {"model", std::move(model)}, {"balls", std::move(balls)}};
  if (chain.tail_ratio) doc["tail"] = {{"ratio", to_string(*chain.tail_ratio)}};
  return doc;
}

BaseFamily base_from_json(const json& doc, const ModelPtr& model) {
  BaseFamily b{model, {}};
  const json& sets = field(doc, "sets");
  if (!sets.is_array()) fail("sets must be an array");
  for (const auto& s : sets) b.sets.push_back(set_from_json(model, s));
  return b;
}

BaseFamily load_base(const std::filesystem::path& path, const ModelPtr& model) {
  return base_from_json(read_json_file(path), model);
}

Index parse_element(const CayleyGyro& model, const std::string& raw) {
  const std::string token = trim(raw);
  if (auto i = model.find_label(token)) return *i;
  Index v = 0;
  const auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || p != token.data() + token.size() || token.empty())
    fail("unknown element \"" + token + "\"");
  if (v >= model.order()) fail("element index " + token + " outside the carrier");
  return v;
}

FinSubset parse_set(const ModelPtr& model, const std::string& text) {
  FinSubset s(model);
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (trim(token).empty()) continue;
    s.insert(parse_element(*model, token));
  }
  return s;
}

FinSubset set_from_json(const ModelPtr& model, const json& members) {
  if (!members.is_array()) fail("a set must be an array of element indices");
  FinSubset s(model);
  for (const auto& v : members) {
    if (v.is_string())
      s.insert(parse_element(*model, v.get<std::string>()));
    else
      s.insert(as_index(v, model->order(), "set member"));
  }
  return s;
}

Complex<Rational> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {parse_rational(trim(text)), 0};
    return {parse_rational(trim(text.substr(0, comma))), parse_rational(trim(text.substr(comma + 1)))};
  } catch (const std::invalid_argument& e) {
    fail("bad complex element \"" + text + "\": " + e.what());
  }
}

}  // namespace gyro
