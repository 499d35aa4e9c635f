#pragma once

#include "singwf/dataset.hpp"

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace singwf {

enum class VerifyStatus { Pass, Fail, Skip };

std::string_view to_string(VerifyStatus s);

struct FieldDiff {
    std::string field;  // tilde_poly, tilde_weights, cone, diff:<stratum>, discrepancy, error
    std::string expected;
    std::string computed;
};

struct VerifyOutcome {
    std::string id;
    VerifyStatus status = VerifyStatus::Pass;
    std::vector<FieldDiff> diffs;  // nonempty exactly when status is Fail
    std::string reason;            // skip reason
    std::chrono::microseconds elapsed{0};
};

// Compares the transformed support, p~, the cone (when the record states one or asserts there is
// none), every Diff_E(0) coefficient, and raises an alarm for a negative discrepancy.
VerifyOutcome verify_record(const TableRecord& rec);

// Runs verify_record on up to `jobs` threads. Outcomes come back in record order. With fail_fast,
// records not yet started after the first failure are dropped from the result.
std::vector<VerifyOutcome> verify_all(const std::vector<TableRecord>& records, unsigned jobs = 1,
                                      bool fail_fast = false);

}  // namespace singwf
