#pragma once

#include "singwf/different.hpp"
#include "singwf/family.hpp"
#include "singwf/polynomial.hpp"
#include "singwf/weights.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace singwf {

// Record files are line oriented:
//
//   # comment
//   [record]
//   id=T1.2
//   source=Table 1 row 2
//   bind=n=7,9,11,13,17,19        optional; "k=a..b" ranges, "; " separates names
//   poly=t^2+z^3+zx^5+zy^{n}
//   tilde_poly=t+z^3+zx+zy        optional
//   tilde_weights=3 1 2 2
//   cone=1 1 1                    optional; "none" asserts that E is not a linear cone
//   diff=O:{n-1}/{n}, U:4/5, G:1/2, G2:3/4
//   indices=8 10 12 16 20
//   notes=free text
//   vars=x1,x2,x3                 optional; guessed from poly otherwise
//   skip=reason                   optional; the record loads but is not verified
//
// {expr} templates are evaluated under each binding, f_k(u,v) forms and "(A ||| B)" groups
// are expanded by the family module. Repeated diff names add up.

struct RawField {
    std::string key;
    std::string value;
    int line = 0;
};

struct RawRecord {
    int line = 0;  // line of the [record] header
    std::vector<RawField> fields;

    const RawField* find(std::string_view key) const;
};

// Structural parse only. Throws FormatError (with the line number) on unknown keys,
// repeated keys, fields outside a block and missing id/poly.
std::vector<RawRecord> parse_record_text(std::string_view text, std::string_view origin = "<text>");

// Canonical text of raw records: header, then "key=value" lines in source order.
std::string render_records(const std::vector<RawRecord>& records);

enum class ConeExpectation { Unchecked, Absent, Present };

struct TableRecord {
    std::string id;
    std::string source;
    std::string origin;  // file:line
    std::string poly_text;
    Polynomial poly;
    std::optional<Polynomial> expect_tilde_poly;
    std::vector<Weight> expect_tilde_weights;
    ConeExpectation cone = ConeExpectation::Unchecked;
    std::vector<Weight> expect_cone;
    BoundaryDivisor expect_diff;
    std::vector<int> indices;
    std::string notes;
    std::optional<std::string> skip;
};

// Instantiates raw records: bindings, templates, alternatives, stratum names.
// Throws FormatError, UnknownStratumName, DuplicateId, InconsistentFamily.
std::vector<TableRecord> expand_records(const std::vector<RawRecord>& raw, std::string_view origin = "<text>");

std::vector<TableRecord> load_records_text(std::string_view text, std::string_view origin = "<text>");

// A single file, or every *.rec file in a directory (sorted by name). Ids must be unique
// across everything loaded by one call.
std::vector<TableRecord> load_records(const std::filesystem::path& path);
std::vector<TableRecord> load_records(const std::vector<std::filesystem::path>& paths);

// SINGWF_TABLES if set, otherwise the directory configured at build time.
std::filesystem::path default_tables_dir();

}  // namespace singwf
