#ifndef CONSTELLA_CONFIG_HPP
#define CONSTELLA_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace constella {

/// Limits on brute-force searches.
struct Caps {
  /// Maximum number of candidate maps |T|^|S| a morphism enumeration may visit.
  std::uint64_t morphism_space = 10'000'000;
  /// Maximum carrier size for structure enumeration.
  std::size_t enumeration_size = 4;
};

/// Parses "<space>[:<size>]", e.g. "10000000" or "10000000:5".
inline Caps parse_caps(const std::string& spec) {
  Caps caps;
  const auto colon = spec.find(':');
  try {
    std::size_t used = 0;
    const std::string head = spec.substr(0, colon);
    caps.morphism_space = std::stoull(head, &used);
    if (used != head.size()) throw std::invalid_argument(head);
    if (colon != std::string::npos) {
      const std::string tail = spec.substr(colon + 1);
      caps.enumeration_size = std::stoul(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    }
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed CONSTELLA_CAP value '" + spec + "'");
  }
  return caps;
}

/// Caps from the CONSTELLA_CAP environment variable, defaults if unset.
inline Caps caps_from_env() {
  const char* v = std::getenv("CONSTELLA_CAP");
  if (v == nullptr || *v == '\0') return {};
  return parse_caps(v);
}

}  // namespace constella

#endif  // CONSTELLA_CONFIG_HPP
