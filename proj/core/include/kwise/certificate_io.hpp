#ifndef KWISE_CERTIFICATE_IO_HPP
#define KWISE_CERTIFICATE_IO_HPP

#include <string>

#include "kwise/extremal.hpp"

namespace kwise {

/// Serializes a certificate with stable key order; every rational is an
/// exact "a/b" string, so parsing and re-serializing reproduces the bytes.
/// {"n", "k", "p", "M", "support", "masses", "dual_zeros", "dual_coeffs",
///  "degenerate", ["reduction",] "checks"}
std::string certificate_json(const ExtremalCertificate& cert,
                             const CertificateChecks& checks, int indent = 2);

/// Round-trip used by the determinism tests: parse the JSON text, rebuild the
/// certificate, and re-serialize.
std::string reserialize_certificate_json(const std::string& text, int indent = 2);

} // namespace kwise

#endif
