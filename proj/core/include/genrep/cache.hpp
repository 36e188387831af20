#ifndef GENREP_CACHE_HPP
#define GENREP_CACHE_HPP

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "genrep/chartable.hpp"

namespace genrep {

class Session;

/// Content-addressed on-disk cache. Entries are keyed by (ring canonical_id,
/// artifact kind, parameters); loads are validated and corrupt entries are
/// evicted with a warning, so hits are always bit-identical to recomputation.
class Cache {
 public:
  /// dir precedence: explicit argument, then GENREP_CACHE, then
  /// ./.genrep-cache.
  explicit Cache(std::string dir = "");

  const std::string& dir() const { return dir_; }

  std::string entry_path(const std::string& ring_id, const std::string& kind,
                         const std::string& params) const;
  void store_json(const std::string& ring_id, const std::string& kind,
                  const std::string& params, const nlohmann::json& j);
  std::optional<nlohmann::json> load_json(const std::string& ring_id,
                                          const std::string& kind,
                                          const std::string& params);
  void evict(const std::string& ring_id, const std::string& kind,
             const std::string& params);

  /// Catalog persistence; loads validate module tables and class ids.
  void store_catalog(Session& s, int d_max);
  bool load_catalog(Session& s, int d_max);

  /// Character table persistence hooks for a session's CharContext.
  void attach_tables(Session& s);

 private:
  std::string dir_;
};

}  // namespace genrep

#endif
