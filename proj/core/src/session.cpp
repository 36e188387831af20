#include "genrep/session.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "genrep/cache.hpp"

namespace genrep {

Session::Session(RingPtr ring, Caps caps, Cache* cache)
    : ring_(std::move(ring)), caps_(caps), catalog_(ring_), cache_(cache) {
  if (cache_) cache_->attach_tables(*this);
}

const SubmoduleLattice& Session::lattice(const ModulePtr& m) {
  return lattices_.lattice_for(m, caps_);
}

const SubmoduleLattice& Session::lattice(const std::string& class_id) {
  return lattice(catalog_.at(class_id).representative);
}

GroupPtr Session::aut(const std::string& class_id) {
  auto it = auts_.find(class_id);
  if (it != auts_.end()) return it->second;
  const auto& cls = catalog_.at(class_id);
  auto perms = aut_group(*cls.representative, caps_);
  GroupPtr g = PermGroup::closure(cls.representative->size(), perms, caps_);
  if (g->order() != static_cast<long long>(perms.size()))
    throw InvariantViolation("automorphism set is not closed");
  auts_[class_id] = g;
  // record the order on the catalog entry
  const_cast<ModuleIsoClass&>(cls).aut_order = g->order();
  return g;
}

GroupPtr Session::aut(const ModulePtr& m) { return aut(class_of(m)); }

TablePtr Session::table(const std::string& class_id) {
  return chars_.table(aut(class_id));
}

void Session::populate_catalog(int d_max) {
  if (cache_ && catalog_.populated_up_to() < d_max)
    cache_->load_catalog(*this, d_max);
  catalog_.populate(d_max, caps_);
  if (cache_) cache_->store_catalog(*this, d_max);
}

ModulePtr Session::module_from_json(const nlohmann::json& desc) {
  if (!desc.is_object() || !desc.contains("kind"))
    throw SpecError("module description must be an object with \"kind\"");
  const std::string kind = desc.at("kind").get<std::string>();
  try {
    if (kind == "free")
      return free_module(ring_, desc.at("rank").get<int>(), caps_);
    if (kind == "quotient") {
      int d = desc.at("rank").get<int>();
      ModulePtr f = free_module(ring_, d, caps_);
      std::vector<int> gens;
      for (const auto& rel : desc.at("relations")) {
        auto tuple = rel.get<std::vector<int>>();
        if (static_cast<int>(tuple.size()) != d)
          throw SpecError("relation arity must equal the rank");
        long long idx = 0, mult = 1;
        for (int i = 0; i < d; ++i) {
          if (tuple[i] < 0 || tuple[i] >= ring_->size())
            throw SpecError("relation entry out of ring range");
          idx += tuple[i] * mult;
          mult *= ring_->size();
        }
        gens.push_back(static_cast<int>(idx));
      }
      auto K = submodule_generated(*f, gens);
      return quotient_module(*f, K.elems).module;
    }
    if (kind == "sum") {
      ModulePtr acc;
      for (const auto& part : desc.at("parts")) {
        ModulePtr p = module_from_json(part);
        acc = acc ? direct_sum(acc, p) : p;
      }
      if (!acc) throw SpecError("sum requires at least one part");
      return acc;
    }
    if (kind == "catalog")
      return catalog_.at(desc.at("class_id").get<std::string>()).representative;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed module description: ") + e.what());
  }
  throw SpecError("unknown module kind \"" + kind + "\"");
}

ModulePtr Session::module_from_text(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] != '{') {
    std::ifstream in(text);
    if (!in) throw SpecError("cannot open module description file: " + text);
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
  if (j.is_discarded())
    throw SpecError("module description is not valid JSON");
  return module_from_json(j);
}

}  // namespace genrep
