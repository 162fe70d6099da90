#include "kmatch/report.hpp"

#include "kmatch/error.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace kmatch {

using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view claim_names[] = {
    "LEMMA2",         "LEMMA3",         "LEMMA4",
    "LEMMA6",         "LEMMA1_VS_ORACLE", "THM1_VS_LEMMA1",
    "THM2_VS_THM1",   "LEMMA7_VS_THM2", "THM3_VS_LEMMA7",
    "THM4_FACTORIZATION", "END_TO_END",
};

} // namespace

std::string_view to_string(ClaimId claim) { return claim_names[static_cast<int>(claim)]; }

ClaimId parse_claim(std::string_view text) {
  for (ClaimId c : all_claims)
    if (to_string(c) == text)
      return c;
  throw input_error("unknown claim '" + std::string(text) + "'");
}

std::string_view to_string(Verdict v) { return v == Verdict::match ? "match" : "mismatch"; }

VerificationRecord::VerificationRecord(ClaimId claim, std::string instance, std::string options,
                                       ExactRat lhs, ExactRat rhs)
    : claim_(claim), instance_(std::move(instance)), options_(std::move(options)),
      lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    auto& g = s[std::string(to_string(r.claim()))][r.options()];
    if (r.is_match()) {
      ++g.match;
    } else {
      ++g.mismatch;
      if (!g.first_counterexample)
        g.first_counterexample = i;
    }
    if (!r.lhs().is_integer())
      ++g.nonintegral;
  }
  return s;
}

std::string_view tool_version() { return "kmatch-lab 0.1.0"; }

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "text") return ReportFormat::text;
  throw input_error("unknown report format '" + std::string(text) + "'");
}

namespace {

json record_json(const VerificationRecord& r) {
  json j;
  j["claim"] = std::string(to_string(r.claim()));
  j["instance"] = r.instance();
  j["options"] = r.options();
  j["lhs"] = r.lhs().to_string();
  j["rhs"] = r.rhs().to_string();
  j["verdict"] = std::string(to_string(r.verdict()));
  j["lhs_integral"] = r.lhs().is_integer();
  return j;
}

json summary_json(const VerificationReport& report) {
  json out = json::object();
  for (const auto& [claim, groups] : report.summary()) {
    json per_claim = json::object();
    for (const auto& [options, g] : groups) {
      json gj;
      gj["match"] = g.match;
      gj["mismatch"] = g.mismatch;
      gj["nonintegral"] = g.nonintegral;
      gj["first_counterexample"] =
          g.first_counterexample ? record_json(report.records[*g.first_counterexample]) : json();
      per_claim[options] = gj;
    }
    out[claim] = per_claim;
  }
  return out;
}

std::string to_json(const VerificationReport& report) {
  json j;
  j["version"] = report.version;
  if (!report.options_matrix.empty())
    j["options_matrix"] = report.options_matrix;
  json records = json::array();
  for (const auto& r : report.records)
    records.push_back(record_json(r));
  j["records"] = records;
  j["summary"] = summary_json(report);
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "claim,instance,options,lhs,rhs,verdict,lhs_integral\n";
  for (const auto& r : report.records) {
    out += std::string(to_string(r.claim())) + "," + r.instance() + "," + r.options() + "," +
           r.lhs().to_string() + "," + r.rhs().to_string() + "," +
           std::string(to_string(r.verdict())) + "," +
           (r.lhs().is_integer() ? "true" : "false") + "\n";
  }
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.version << "\n";
  for (const auto& [claim, groups] : report.summary())
    for (const auto& [options, g] : groups) {
      out << claim << " [" << options << "] match=" << g.match << " mismatch=" << g.mismatch
          << " nonintegral=" << g.nonintegral << "\n";
      if (g.first_counterexample) {
        const auto& r = report.records[*g.first_counterexample];
        out << "  first counterexample: " << r.instance() << "  lhs=" << r.lhs()
            << "  rhs=" << r.rhs() << "\n";
      }
    }
  return out.str();
}

} // namespace

std::string format_report(const VerificationReport& report, ReportFormat format) {
  switch (format) {
  case ReportFormat::json: return to_json(report);
  case ReportFormat::csv: return to_csv(report);
  case ReportFormat::text: return to_text(report);
  }
  return {};
}

void write_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
  std::string body = format_report(report, format);
  if (path == "-") {
    std::cout << body << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw io_error("cannot open '" + path + "' for writing");
  out << body;
  out.flush();
  if (!out)
    throw io_error("failed writing report to '" + path + "'");
}

VerificationReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("report: ") + e.what(), e.byte);
  }
  try {
    VerificationReport report;
    report.version = j.value("version", "");
    if (j.contains("options_matrix"))
      report.options_matrix = j["options_matrix"].get<std::vector<std::string>>();
    for (const auto& r : j.at("records")) {
      VerificationRecord rec(parse_claim(r.at("claim").get<std::string>()),
                             r.at("instance").get<std::string>(),
                             r.at("options").get<std::string>(),
                             ExactRat::parse(r.at("lhs").get<std::string>()),
                             ExactRat::parse(r.at("rhs").get<std::string>()));
      if (r.at("verdict").get<std::string>() != to_string(rec.verdict()))
        throw input_error("report: stored verdict disagrees with lhs/rhs for " + rec.instance());
      report.records.push_back(std::move(rec));
    }
    if (j.at("summary") != summary_json(report))
      throw input_error("report: stored summary disagrees with record tallies");
    return report;
  } catch (const json::exception& e) {
    throw input_error(std::string("report: ") + e.what());
  }
}

} // namespace kmatch
