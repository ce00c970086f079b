#pragma once

// Text, CSV and JSON renderings for the command-line tool. CSV and JSON output
// is a pure function of its input: no timestamps, stable ordering.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ewe/bwx.hpp"
#include "ewe/classification.hpp"
#include "ewe/enumeration.hpp"
#include "ewe/verification.hpp"

namespace ewe {

enum class OutputFormat { table, csv, json };

OutputFormat parse_format(std::string_view text);

struct CountRow {
  Permutation pattern;
  std::string domain;  // "n=6" or "shape=3,3,3"
  CountTriple counts;
};

std::string render_counts(const std::vector<CountRow>& rows, OutputFormat format);

/// Blocks are separated by solid rules; rows of one block are adjacent when a
/// proof joins them and separated by a dotted rule when only the counts do.
std::string render_partition(const ClassPartition& partition, OutputFormat format);
nlohmann::json partition_json(const ClassPartition& partition);

std::string render_class_counts(const std::vector<ClassCountRow>& rows, OutputFormat format);

std::string render_report(const verify::CheckReport& report, OutputFormat format);

nlohmann::json map_json(const Transversal& input, const Transversal& output, int size, bwx::Direction direction,
                        const bwx::BijectionTrace& trace);

}  // namespace ewe
