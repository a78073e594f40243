#ifndef LIEFAM_CATALOG_HPP
#define LIEFAM_CATALOG_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "liefam/liecore.hpp"

namespace liefam {

struct CatalogEntry {
  std::string name;
  std::string summary;
};

std::vector<CatalogEntry> catalog();
// The entry as an input document. ParseError for an unknown name.
nlohmann::ordered_json catalog_document(const std::string& name);

// Names of the reference real forms whose fingerprint equals `f`
// (sl(n,R), su(n), u(p,q) for small n, and the degenerate fibers of the
// catalog families).
std::vector<std::string> named_forms(const Fingerprint& f);

}  // namespace liefam

#endif
