#include "zagreb/report.hpp"

#include "zagreb/error.hpp"

#include <json.hpp>

namespace zagreb {

namespace {

using ordered_json = nlohmann::ordered_json;

const char *status_text(Status s) { return s == Status::pass ? "PASS" : "FAIL"; }

ordered_json to_json(const Certificate &c) {
  ordered_json params = ordered_json::object();
  for (const Param &p : c.params)
    params[p.name] = p.value;
  auto codes = [](const std::vector<CanonicalCode> &v) {
    ordered_json arr = ordered_json::array();
    for (const CanonicalCode &code : v)
      arr.push_back(code.to_hex());
    return arr;
  };
  ordered_json j;
  j["claim_id"] = c.claim_id;
  j["params"] = std::move(params);
  j["expected_bound"] = c.expected_bound;
  j["observed_max"] = c.observed_max;
  j["status"] = status_text(c.status);
  j["graphs_examined"] = c.graphs_examined;
  j["orientations_examined"] = c.orientations_examined;
  j["labeled_achievers"] = c.labeled_achievers;
  j["achiever_codes"] = codes(c.achiever_codes);
  j["expected_codes"] = codes(c.expected_codes);
  if (c.counterexample)
    j["counterexample"] = *c.counterexample;
  return j;
}

std::string params_text(const Certificate &c, char sep) {
  std::string out;
  for (const Param &p : c.params) {
    if (!out.empty())
      out.push_back(sep);
    out += p.name + "=" + std::to_string(p.value);
  }
  return out;
}

const char *kCsvHeader =
    "claim_id,params,expected_bound,observed_max,status,graphs_examined,"
    "orientations_examined,labeled_achievers,achiever_classes,expected_classes\n";

std::string csv_row(const Certificate &c) {
  return c.claim_id + "," + params_text(c, ';') + "," + std::to_string(c.expected_bound) +
         "," + std::to_string(c.observed_max) + "," + status_text(c.status) + "," +
         std::to_string(c.graphs_examined) + "," + std::to_string(c.orientations_examined) +
         "," + std::to_string(c.labeled_achievers) + "," +
         std::to_string(c.achiever_codes.size()) + "," +
         std::to_string(c.expected_codes.size()) + "\n";
}

std::string text_line(const Certificate &c) {
  std::string out = std::string(status_text(c.status)) + " " + c.claim_id;
  const std::string params = params_text(c, ' ');
  if (!params.empty())
    out += " " + params;
  out += " expected=" + std::to_string(c.expected_bound) +
         " observed=" + std::to_string(c.observed_max) +
         " graphs=" + std::to_string(c.graphs_examined) +
         " orientations=" + std::to_string(c.orientations_examined) +
         " labeled=" + std::to_string(c.labeled_achievers) +
         " classes=" + std::to_string(c.achiever_codes.size()) + "/" +
         std::to_string(c.expected_codes.size()) + "\n";
  return out;
}

} // namespace

Format parse_format(const std::string &name) {
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  if (name == "text")
    return Format::text;
  if (name == "edgelist")
    return Format::edgelist;
  throw RangeError("unknown format '" + name + "'");
}

std::string emit_certificate(const Certificate &c, Format format) {
  switch (format) {
  case Format::json:
    return to_json(c).dump(2) + "\n";
  case Format::csv:
    return std::string(kCsvHeader) + csv_row(c);
  case Format::text: {
    std::string out = text_line(c);
    if (c.counterexample)
      out += "counterexample:\n" + *c.counterexample;
    return out;
  }
  case Format::edgelist:
    break;
  }
  throw RangeError("certificates cannot be written as an edge list");
}

std::string emit_certificates(const std::vector<Certificate> &certs, Format format) {
  switch (format) {
  case Format::json: {
    ordered_json arr = ordered_json::array();
    for (const Certificate &c : certs)
      arr.push_back(to_json(c));
    return arr.dump(2) + "\n";
  }
  case Format::csv: {
    std::string out = kCsvHeader;
    for (const Certificate &c : certs)
      out += csv_row(c);
    return out;
  }
  case Format::text: {
    std::string out;
    for (const Certificate &c : certs)
      out += text_line(c);
    return out;
  }
  case Format::edgelist:
    break;
  }
  throw RangeError("certificates cannot be written as an edge list");
}

std::string emit_histogram(const std::map<std::int64_t, std::uint64_t> &hist, Format format) {
  std::string out;
  switch (format) {
  case Format::csv:
    for (const auto &[value, count] : hist)
      out += std::to_string(value) + "," + std::to_string(count) + "\n";
    return out;
  case Format::text:
    for (const auto &[value, count] : hist)
      out += std::to_string(value) + ": " + std::to_string(count) + "\n";
    return out;
  case Format::json: {
    ordered_json j = ordered_json::object();
    for (const auto &[value, count] : hist)
      j[std::to_string(value)] = count;
    return j.dump(2) + "\n";
  }
  case Format::edgelist:
    break;
  }
  throw RangeError("histograms cannot be written as an edge list");
}

} // namespace zagreb
