#pragma once

#include <string>
#include <vector>

#include "curvecert/catalog/catalog.hpp"
#include "curvecert/certify/certificate.hpp"
#include "json.hpp"

namespace curvecert::io {

using nlohmann::json;

/// Sparse term list [[branch, exponent, "coef"], ...]. Coefficients may be
/// integers or strings; deformation coefficients use the a-expression grammar.
arith::Element parse_element(const json& j, int branches);
arith::DeformElement parse_deform_element(const json& j, int branches);
json element_json(const arith::Element& x);
json element_json(const arith::DeformElement& x);

/// { "name", "branches", "generators": [term lists] }
catalog::CatalogEntry parse_ring(const json& j);
json ring_json(const catalog::CatalogEntry& e);

/// Looks a ring id up among the built-in families (n = 1..8 where relevant).
catalog::CatalogEntry builtin_ring(const std::string& id);

/// { "ring": id or inline ring, "generators": [...] } plus optional catalog
/// columns "end", "ring_flag", "dualizing_flag", "subdivision", "name".
/// Returns the module entry and, through `ring`, the ring it lives over.
catalog::CatalogEntry parse_module(const json& j, catalog::CatalogEntry& ring);

/// { "rings": [ring objects], "modules": [module objects] }
struct CatalogFile {
  std::vector<catalog::CatalogEntry> rings;
  std::vector<catalog::CatalogEntry> modules;
};
CatalogFile parse_catalog(const json& j);

certify::Certificate parse_certificate(const json& j);
json certificate_json(const certify::Certificate& c);

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
json read_json_file(const std::string& path);

}  // namespace curvecert::io
