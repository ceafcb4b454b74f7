#include "hsw/json_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hsw {

namespace {

std::string weight_key(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::vector<long> int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an integer list");
  std::vector<long> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " must be an integer list");
    out.push_back(x.get<long>());
  }
  return out;
}

RootDatum block_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("root datum block must be a JSON object");
  for (const char* key : {"rank", "simple_roots", "simple_coroots"})
    if (!j.contains(key)) throw InputError(std::string("root datum is missing '") + key + "'");
  if (!j["rank"].is_number_integer()) throw InputError("rank must be an integer");
  const int rank = j["rank"].get<int>();
  if (rank < 1 || rank > kMaxRank) throw InputError("rank out of range");
  auto vectors = [&](const char* key) {
    const Json& list = j[key];
    if (!list.is_array()) throw InputError(std::string(key) + " must be a list of vectors");
    std::vector<Weight> out;
    for (const auto& v : list) {
      const auto values = int_vector(v, key);
      if (static_cast<int>(values.size()) != rank) throw InputError(std::string(key) + " entry has the wrong length");
      out.push_back(Weight::from_vector(values));
    }
    return out;
  };
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  return RootDatum(name, rank, vectors("simple_roots"), vectors("simple_coroots"));
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      out[std::to_string(e)] = static_cast<long long>(c);
    } else {
      out[std::to_string(e)] = c.str();
    }
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("Laurent polynomial must be an {exponent: coefficient} object");
  std::map<int, Int> terms;
  for (const auto& [key, value] : j.items()) {
    int e = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc() || ptr != key.data() + key.size()) throw InputError("bad exponent '" + key + "'");
    if (value.is_number_integer()) {
      terms[e] += Int(value.get<long long>());
    } else if (value.is_string()) {
      terms[e] += Int(value.get<std::string>());
    } else {
      throw InputError("bad coefficient for exponent " + key);
    }
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const Weight& w) { return Json(w.to_vector()); }

Json to_json(const AffineWeylGroup& g, const AffineElt& x) {
  const auto& m = g.weyl().element(x.w).matrix;
  const int r = g.rank();
  Json rows = Json::array();
  for (int i = 0; i < r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < r; ++j) row.push_back(m[static_cast<std::size_t>(i * r + j)]);
    rows.push_back(row);
  }
  return Json{{"w", rows}, {"lambda", to_json(x.lambda)}};
}

Json word_to_json(const AffineWeylGroup& g, const std::vector<int>& word) {
  Json out = Json::array();
  for (int k : word) {
    const auto& s = g.simple(k);
    out.push_back(
        {{"kind", s.kind == SimpleReflection::Kind::finite ? "finite" : "affine"}, {"index", s.index + 1}});
  }
  return out;
}

Json to_json(const HeckeAlgebra& h, const HeckeElt& a) {
  Json out = Json::array();
  for (const auto& [x, c] : h.sorted_terms(a))
    out.push_back({{"element", to_json(h.group(), x)}, {"coefficient", to_json(c)}});
  return out;
}

Json to_json(const SphericalModule& m, const SphElt& a) {
  Json out = Json::array();
  for (const auto& [lambda, c] : m.sorted_terms(a))
    out.push_back({{"lambda", to_json(lambda)}, {"coefficient", to_json(c)}});
  return out;
}

Json decomposition_to_json(const std::map<Weight, LaurentPoly>& d) {
  Json out = Json::object();
  for (const auto& [lambda, c] : d) out[weight_key(lambda)] = to_json(c);
  return out;
}

Json to_json(const KatoResult& r) {
  return Json{{"lambda", to_json(r.lambda)}, {"mu", to_json(r.mu)}, {"lhs", to_json(r.lhs)},
              {"rhs", to_json(r.rhs)},       {"pass", r.pass}};
}

Json to_json(const CheckReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.results) rows.push_back({{"relation", c.relation}, {"instance", c.instance}, {"pass", c.pass}});
  return Json{{"checked", r.results.size()}, {"failures", r.failures()}, {"results", rows}};
}

Json datum_to_json(const RootDatum& d) {
  Json roots = Json::array(), coroots = Json::array();
  for (const auto& a : d.simple_roots()) roots.push_back(to_json(a));
  for (const auto& a : d.simple_coroots()) coroots.push_back(to_json(a));
  return Json{{"name", d.name()}, {"rank", d.rank()}, {"simple_roots", roots}, {"simple_coroots", coroots}};
}

RootDatum datum_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.empty()) throw InputError("empty list of root datum blocks");
    std::vector<RootDatum> blocks;
    for (const auto& b : j) blocks.push_back(block_from_json(b));
    return blocks.size() == 1 ? blocks.front() : RootDatum::product(blocks);
  }
  return block_from_json(j);
}

RootDatum load_datum(std::string_view preset_or_path) {
  const std::filesystem::path path{std::string(preset_or_path)};
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) {
    std::ifstream in(path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError("cannot parse root datum file: " + std::string(e.what()));
    }
    return datum_from_json(j);
  }
  return RootDatum::preset(preset_or_path);
}

Weight parse_weight(std::string_view text, int rank) {
  std::string s(text);
  std::erase_if(s, [](char c) { return c == ' ' || c == '(' || c == ')' || c == '[' || c == ']'; });
  std::vector<long> values;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(',', start);
    const std::string token = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    long value = 0;
    const char* first = token.data();
    if (!token.empty() && token[0] == '+') ++first;
    const auto [ptr, err] = std::from_chars(first, token.data() + token.size(), value);
    if (token.empty() || err != std::errc() || ptr != token.data() + token.size())
      throw InputError("malformed weight '" + std::string(text) + "'");
    values.push_back(value);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (static_cast<int>(values.size()) != rank)
    throw InputError("weight '" + std::string(text) + "' has " + std::to_string(values.size()) +
                     " coordinates, expected " + std::to_string(rank));
  return Weight::from_vector(values);
}

}  // namespace hsw
