#ifndef KMATCH_REPORT_HPP
#define KMATCH_REPORT_HPP

#include "kmatch/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kmatch {

enum class ClaimId {
  LEMMA2,
  LEMMA3,
  LEMMA4,
  LEMMA6,
  LEMMA1_VS_ORACLE,
  THM1_VS_LEMMA1,
  THM2_VS_THM1,
  LEMMA7_VS_THM2,
  THM3_VS_LEMMA7,
  THM4_FACTORIZATION,
  END_TO_END,
};

inline constexpr ClaimId all_claims[] = {
    ClaimId::LEMMA2,         ClaimId::LEMMA3,         ClaimId::LEMMA4,
    ClaimId::LEMMA6,         ClaimId::LEMMA1_VS_ORACLE, ClaimId::THM1_VS_LEMMA1,
    ClaimId::THM2_VS_THM1,   ClaimId::LEMMA7_VS_THM2, ClaimId::THM3_VS_LEMMA7,
    ClaimId::THM4_FACTORIZATION, ClaimId::END_TO_END,
};

std::string_view to_string(ClaimId claim);
ClaimId parse_claim(std::string_view text);

enum class Verdict { match, mismatch };

std::string_view to_string(Verdict v);

/// One evaluation of both sides of a claim on one instance.
class VerificationRecord {
public:
  VerificationRecord(ClaimId claim, std::string instance, std::string options, ExactRat lhs,
                     ExactRat rhs);

  ClaimId claim() const { return claim_; }
  const std::string& instance() const { return instance_; }
  /// "-" for claims that take no options.
  const std::string& options() const { return options_; }
  const ExactRat& lhs() const { return lhs_; }
  const ExactRat& rhs() const { return rhs_; }
  Verdict verdict() const { return lhs_ == rhs_ ? Verdict::match : Verdict::mismatch; }
  bool is_match() const { return verdict() == Verdict::match; }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;

private:
  ClaimId claim_;
  std::string instance_;
  std::string options_;
  ExactRat lhs_;
  ExactRat rhs_;
};

struct GroupSummary {
  std::uint64_t match = 0;
  std::uint64_t mismatch = 0;
  /// Records whose lhs is not an integer.
  std::uint64_t nonintegral = 0;
  /// Index into records of the first mismatch, in report order.
  std::optional<std::size_t> first_counterexample;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

/// claim name -> options label -> tallies.
using ReportSummary = std::map<std::string, std::map<std::string, GroupSummary>>;

struct VerificationReport {
  std::string version;
  std::vector<std::string> options_matrix;
  /// Sorted by (claim, instance order); see sort_records.
  std::vector<VerificationRecord> records;

  ReportSummary summary() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

std::string_view tool_version();

enum class ReportFormat { json, csv, text };

ReportFormat parse_report_format(std::string_view text);

std::string format_report(const VerificationReport& report, ReportFormat format);

/// Writes format_report(...) to path, or to stdout when path is "-".
/// Throws io_error naming the path on failure.
void write_report(const VerificationReport& report, ReportFormat format, const std::string& path);

/// Inverse of the JSON format; checks the stored summary and verdicts
/// against the records.
VerificationReport parse_report_json(std::string_view text);

} // namespace kmatch

#endif // KMATCH_REPORT_HPP
