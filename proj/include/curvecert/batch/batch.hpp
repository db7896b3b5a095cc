#pragma once

#include <cstdint>
#include <vector>

#include "curvecert/catalog/catalog.hpp"
#include "curvecert/certify/certificate.hpp"

namespace curvecert::batch {

/// Seed for item i of a run: independent of scheduling, so parallel and
/// serial runs draw the same random elements.
std::uint64_t item_seed(std::uint64_t seed, std::size_t i);

/// Reports in input order. The parallel version fans out with OpenMP; the
/// serial one is the reference it is tested against.
std::vector<certify::CertificateReport> verify_all(const std::vector<certify::Certificate>& certs,
                                                   algebra::Window window, std::uint64_t seed);
std::vector<certify::CertificateReport> verify_all_serial(const std::vector<certify::Certificate>& certs,
                                                          algebra::Window window, std::uint64_t seed);

/// Table 2 rows in input order.
std::vector<catalog::Table2Row> table2(const std::vector<catalog::CatalogEntry>& modules,
                                       const catalog::Catalog& catalog, std::uint64_t seed);
std::vector<catalog::Table2Row> table2_serial(const std::vector<catalog::CatalogEntry>& modules,
                                              const catalog::Catalog& catalog, std::uint64_t seed);

}  // namespace curvecert::batch
