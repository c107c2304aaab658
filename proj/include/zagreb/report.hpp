#pragma once

#include "zagreb/verify.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zagreb {

enum class Format { json, csv, text, edgelist };

/// Throws RangeError for names other than json, csv, text, edgelist.
Format parse_format(const std::string &name);

/// Byte-stable serialization. JSON fields, in order: claim_id, params,
/// expected_bound, observed_max, status, graphs_examined,
/// orientations_examined, labeled_achievers, achiever_codes,
/// expected_codes and, when present, counterexample. Codes are hex.
/// `edgelist` is rejected with RangeError.
std::string emit_certificate(const Certificate &c, Format format);

/// JSON: an array. CSV: one header, one row per certificate. Text: one
/// line per certificate.
std::string emit_certificates(const std::vector<Certificate> &certs, Format format);

/// CSV rows "value,count" sorted by value (no header); JSON object keyed by
/// value; text "value: count" lines.
std::string emit_histogram(const std::map<std::int64_t, std::uint64_t> &hist, Format format);

} // namespace zagreb
