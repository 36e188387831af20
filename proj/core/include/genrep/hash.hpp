#ifndef GENREP_HASH_HPP
#define GENREP_HASH_HPP

#include <cstdint>
#include <string>

namespace genrep {

/// SHA-256 hex digest of a byte string. Used for content addressing of rings,
/// iso-class representatives and cache entries; self-contained on purpose.
std::string sha256_hex(const std::string& data);

}  // namespace genrep

#endif
