#include "curvecert/batch/batch.hpp"

namespace curvecert::batch {

namespace {

certify::CertificateReport verify_one(const certify::Certificate& c, algebra::Window window, std::uint64_t seed) {
  try {
    return certify::verify_certificate(c, window, seed);
  } catch (const Error& e) {
    // Malformed certificate: every stage fails with the setup error.
    certify::CertificateReport rep;
    rep.id = c.id;
    const char* names[] = {"linearity", "surjectivity", "special-fiber", "generic-fiber"};
    for (int s = 0; s < 4; ++s) rep.stages.push_back({s + 1, names[s], false, std::string("setup: ") + e.what()});
    return rep;
  }
}

catalog::Table2Row table2_one(const catalog::CatalogEntry& m, const catalog::Catalog& cat, std::uint64_t seed) {
  try {
    return catalog::verify_table2_row(m, cat, seed);
  } catch (const Error& e) {
    catalog::Table2Row row;
    row.ring_id = m.ring_id;
    row.presentation = m.presentation;
    row.subdivision = m.subdivision;
    row.expected_end = m.expected_end;
    row.ring_flag = m.is_ring_flag;
    row.dualizing_flag = m.is_dualizing_flag;
    row.detail = e.what();
    return row;
  }
}

}  // namespace

std::uint64_t item_seed(std::uint64_t seed, std::size_t i) {
  // splitmix64 step on (seed, i)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<certify::CertificateReport> verify_all(const std::vector<certify::Certificate>& certs,
                                                   algebra::Window window, std::uint64_t seed) {
  std::vector<certify::CertificateReport> out(certs.size());
  const auto n = static_cast<long>(certs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = verify_one(certs[k], window, item_seed(seed, k));
  }
  return out;
}

std::vector<certify::CertificateReport> verify_all_serial(const std::vector<certify::Certificate>& certs,
                                                          algebra::Window window, std::uint64_t seed) {
  std::vector<certify::CertificateReport> out;
  out.reserve(certs.size());
  for (std::size_t k = 0; k < certs.size(); ++k) out.push_back(verify_one(certs[k], window, item_seed(seed, k)));
  return out;
}

std::vector<catalog::Table2Row> table2(const std::vector<catalog::CatalogEntry>& modules,
                                       const catalog::Catalog& catalog, std::uint64_t seed) {
  std::vector<catalog::Table2Row> out(modules.size());
  const auto n = static_cast<long>(modules.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = table2_one(modules[k], catalog, item_seed(seed, k));
  }
  return out;
}

std::vector<catalog::Table2Row> table2_serial(const std::vector<catalog::CatalogEntry>& modules,
                                              const catalog::Catalog& catalog, std::uint64_t seed) {
  std::vector<catalog::Table2Row> out;
  out.reserve(modules.size());
  for (std::size_t k = 0; k < modules.size(); ++k) out.push_back(table2_one(modules[k], catalog, item_seed(seed, k)));
  return out;
}

}  // namespace curvecert::batch
