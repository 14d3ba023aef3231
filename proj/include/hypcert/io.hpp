#pragma once

#include <string>

#include "hypcert/hyperbolicity.hpp"

namespace hypcert::io {

/// Census/certificate JSON with stable field order:
/// {schema_version, kind, space, p, r?, q1, q2, j?, i_lambda?, c?, k0, a,
///  b, liminf_ln2_coeff, rows, oracles_checked}. Counts and Witt numbers
/// are decimal strings so output stays exact at any size.
std::string to_json(const hyp::WedgeCensus& census);
std::string to_json(const hyp::PHypCertificate& cert);
std::string failure_json(const std::string& space, long long p, const std::string& reason);

hyp::WedgeCensus census_from_json(const std::string& text);
hyp::PHypCertificate certificate_from_json(const std::string& text);

/// One row per (k, N, count), header included.
std::string to_csv(const hyp::WedgeCensus& census);
std::string to_csv(const hyp::PHypCertificate& cert);

std::string to_text(const hyp::WedgeCensus& census);
std::string to_text(const hyp::PHypCertificate& cert);

} // namespace hypcert::io
