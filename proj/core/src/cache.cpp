#include "genrep/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "genrep/hash.hpp"
#include "genrep/session.hpp"

namespace genrep {

namespace fs = std::filesystem;
using nlohmann::json;

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) {
    const char* env = std::getenv("GENREP_CACHE");
    dir_ = env && *env ? env : "./.genrep-cache";
  }
}

std::string Cache::entry_path(const std::string& ring_id,
                              const std::string& kind,
                              const std::string& params) const {
  return dir_ + "/" + ring_id.substr(0, 16) + "/" + kind + "-" +
         sha256_hex(params).substr(0, 16) + ".json";
}

void Cache::store_json(const std::string& ring_id, const std::string& kind,
                       const std::string& params, const json& j) {
  fs::path p = entry_path(ring_id, kind, params);
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  std::ofstream out(p);
  if (!out) return;  // unwritable cache is not an error, just a miss
  out << j.dump() << "\n";
}

std::optional<json> Cache::load_json(const std::string& ring_id,
                                     const std::string& kind,
                                     const std::string& params) {
  std::ifstream in(entry_path(ring_id, kind, params));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  json j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) {
    evict(ring_id, kind, params);
    std::cerr << "warning: corrupt cache entry evicted (" << kind << ")\n";
    return std::nullopt;
  }
  return j;
}

void Cache::evict(const std::string& ring_id, const std::string& kind,
                  const std::string& params) {
  std::error_code ec;
  fs::remove(entry_path(ring_id, kind, params), ec);
}

void Cache::store_catalog(Session& s, int d_max) {
  json classes = json::array();
  for (const auto& cls : s.catalog().classes()) {
    json c;
    c["class_id"] = cls.class_id;
    c["length"] = cls.length;
    c["n"] = cls.representative->size();
    c["zero"] = cls.representative->zero();
    c["gens"] = cls.representative->generators();
    json add = json::array(), act = json::array();
    for (int a = 0; a < cls.representative->size(); ++a)
      for (int b = 0; b < cls.representative->size(); ++b)
        add.push_back(cls.representative->add(a, b));
    for (int a = 0; a < cls.representative->size(); ++a)
      for (int r = 0; r < s.ring()->size(); ++r)
        act.push_back(cls.representative->act(a, r));
    c["add"] = std::move(add);
    c["act"] = std::move(act);
    classes.push_back(std::move(c));
  }
  json j;
  j["d_max"] = d_max;
  j["classes"] = std::move(classes);
  store_json(s.ring()->canonical_id(), "catalog",
             "d" + std::to_string(d_max), j);
}

bool Cache::load_catalog(Session& s, int d_max) {
  // only a pristine catalog can adopt cached classes; a session that already
  // auto-extended keeps its ids and recomputes
  if (!s.catalog().classes().empty()) return false;
  const std::string params = "d" + std::to_string(d_max);
  auto j = load_json(s.ring()->canonical_id(), "catalog", params);
  if (!j) return false;
  try {
    if (j->at("d_max").get<int>() != d_max)
      throw InvariantViolation("catalog cache d_max mismatch");
    std::vector<ModuleIsoClass> classes;
    for (const auto& c : j->at("classes")) {
      const int n = c.at("n").get<int>();
      ModuleIsoClass cls;
      // from_tables re-validates the module axioms exhaustively
      cls.representative = FiniteModule::from_tables(
          s.ring(), n, c.at("add").get<std::vector<uint16_t>>(),
          c.at("act").get<std::vector<uint16_t>>(), c.at("zero").get<int>(),
          "catalog", c.at("gens").get<std::vector<int>>());
      cls.length = module_length(cls.representative, s.caps());
      if (cls.length != c.at("length").get<int>())
        throw InvariantViolation("catalog cache length mismatch");
      cls.class_id = c.at("class_id").get<std::string>();
      std::string expect =
          "c" + std::to_string(cls.length) + "." + std::to_string(n) + "." +
          sha256_hex(cls.representative->canonical_json().dump()).substr(0, 8);
      if (cls.class_id != expect)
        throw InvariantViolation("catalog cache id mismatch", cls.class_id);
      classes.push_back(std::move(cls));
    }
    s.catalog().adopt(std::move(classes), d_max);
    return true;
  } catch (const std::exception& e) {
    evict(s.ring()->canonical_id(), "catalog", params);
    std::cerr << "warning: catalog cache entry evicted (" << e.what()
              << ")\n";
    return false;
  }
}

void Cache::attach_tables(Session& s) {
  const std::string ring_id = s.ring()->canonical_id();
  s.chars().set_store(
      [this, ring_id](const GroupPtr& g, uint64_t q) -> TablePtr {
        const std::string params =
            "g" + g->signature().substr(0, 16) + "-q" + std::to_string(q);
        auto j = load_json(ring_id, "chartable", params);
        if (!j) return nullptr;
        try {
          if (j->at("q").get<uint64_t>() != q)
            throw InvariantViolation("chartable cache modulus mismatch");
          auto rows = j->at("rows").get<std::vector<std::vector<uint64_t>>>();
          auto degrees = j->at("degrees").get<std::vector<long long>>();
          // from_data re-checks orthogonality and degree sums exactly
          return CharacterTable::from_data(g, q, std::move(rows),
                                           std::move(degrees));
        } catch (const std::exception& e) {
          evict(ring_id, "chartable", params);
          std::cerr << "warning: character table cache entry evicted ("
                    << e.what() << ")\n";
          return nullptr;
        }
      },
      [this, ring_id](const TablePtr& t) {
        json j;
        j["q"] = t->q();
        j["degrees"] = t->degrees();
        json rows = json::array();
        for (int i = 0; i < t->irr_count(); ++i) rows.push_back(t->row(i));
        j["rows"] = std::move(rows);
        json class_data = json::array();
        for (const auto& c : t->group()->conjugacy_classes())
          class_data.push_back({{"size", c.size}, {"rep", c.representative}});
        j["classes"] = std::move(class_data);
        store_json(ring_id, "chartable",
                   "g" + t->group()->signature().substr(0, 16) + "-q" +
                       std::to_string(t->q()),
                   j);
      });
}

}  // namespace genrep
