#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cyclestab/decide.hpp"
#include "cyclestab/graph.hpp"

namespace cyclestab {

inline constexpr int kCertificateVersion = 1;

/// Certificate JSON text (schema version 1) for a decision.
std::string certificate_json(const Decision& d, int indent = 2);

/// Throws ParseError on malformed or schema-violating text.
Decision parse_certificate(std::string_view text);

struct CertificateCheck {
  bool ok = false;
  /// Evidence was present and verified; false for verdict-only certificates.
  bool evidence_checked = false;
  std::string diagnostic;
};

/// Independent validation against `g`: header consistency, then the evidence
/// (cycle / path validity and length, embedding plus host bound, separator
/// component count). Verdict-only certificates pass with evidence_checked
/// false.
CertificateCheck check_certificate(const Graph& g, const Decision& d);

/// Parses and checks; parse failures are reported, not thrown.
CertificateCheck check_certificate_text(const Graph& g, std::string_view text);

/// Deterministic mutation of certificate text that the validator must reject.
/// Requires a certificate carrying evidence.
std::string mutate_certificate(const Graph& g, std::string_view text, std::uint64_t seed);

}  // namespace cyclestab
