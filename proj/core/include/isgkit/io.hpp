#pragma once

#include <map>
#include <string>
#include <string_view>

#include "isgkit/semigroup.hpp"
#include "isgkit/verify.hpp"

namespace isgkit {

inline constexpr int kFormatVersion = 1;

using Metadata = std::map<std::string, std::string>;

/// A semigroup together with the free-form provenance it was stored with.
struct SemigroupFile
{
    InverseSemigroup semigroup;
    Metadata metadata;
};

/**
 * Parse the JSON semigroup format. Structural problems raise InputError with
 * the location of the first offending entry; axiom violations propagate as
 * AxiomError from from_cayley_table.
 */
SemigroupFile parse_semigroup(std::string_view bytes);

/// Canonical text: fixed key order, one table row per line, trailing newline.
std::string emit_semigroup(const InverseSemigroup& s, const Metadata& metadata = {});

/// "sha256:<hex>" of the bytes.
std::string content_digest(std::string_view bytes);

/// Digest of the canonical emission, so a builtin and its generated file agree.
std::string input_digest(const SemigroupFile& file);

/// Reads a path, or resolves "builtin:<name>" (metadata source = the URI).
SemigroupFile load_semigroup(std::string_view input);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

struct ReportFile
{
    LawReport report;
    std::string tool_version;
    std::string input_digest;
};

/// Canonical JSON report; witness elements carry both id and label.
std::string emit_report(const ReportFile& file, const InverseSemigroup& s);

/// Inverse of emit_report; element ids are checked against `s`.
ReportFile parse_report(std::string_view bytes, const InverseSemigroup& s);

}  // namespace isgkit
