#include "ewe/render.hpp"

#include <algorithm>
#include <sstream>

#include "ewe/errors.hpp"

namespace ewe {

namespace {

std::string join(const std::vector<Permutation>& perms, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i) out += sep;
    out += to_string(perms[i]);
  }
  return out;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string link_text(const Provenance& p) {
  return p.kind == Provenance::Kind::theorem ? "proven" : "conjectured(" + std::to_string(p.horizon) + ")";
}

std::vector<std::uint64_t> fingerprint_values(const ClassBlock& block, EquivalenceMode mode) {
  std::vector<std::uint64_t> out;
  if (!block.fingerprint) return out;
  for (const auto& e : block.fingerprint->entries) out.push_back(mode == EquivalenceMode::wilf ? e.total : e.even);
  return out;
}

std::string count_label(EquivalenceMode mode) { return mode == EquivalenceMode::wilf ? "s" : "e"; }

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw usage_error("unknown format '" + std::string(text) + "' (expected table, csv or json)");
}

std::string render_counts(const std::vector<CountRow>& rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows)
        j.push_back({{"pattern", to_string(r.pattern)},
                     {"domain", r.domain},
                     {"total", r.counts.total},
                     {"even", r.counts.even},
                     {"odd", r.counts.odd}});
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "pattern,domain,total,even,odd\n";
      for (const auto& r : rows)
        out << to_string(r.pattern) << ",\"" << r.domain << "\"," << r.counts.total << ',' << r.counts.even << ','
            << r.counts.odd << '\n';
      break;
    case OutputFormat::table:
      out << pad("pattern", 12) << pad("domain", 18) << pad("total", 14) << pad("even", 14) << "odd\n";
      for (const auto& r : rows)
        out << pad(to_string(r.pattern), 12) << pad(r.domain, 18) << pad(std::to_string(r.counts.total), 14)
            << pad(std::to_string(r.counts.even), 14) << r.counts.odd << '\n';
      break;
  }
  return out.str();
}

nlohmann::json partition_json(const ClassPartition& partition) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& block : partition.blocks) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : block.rows) {
      std::vector<std::string> members;
      for (const auto& m : row.members) members.push_back(to_string(m));
      rows.push_back({{"representative", to_string(row.representative)}, {"members", members}});
    }
    nlohmann::json links = nlohmann::json::array();
    for (const auto& l : block.links) links.push_back(link_text(l));
    nlohmann::json b = {{"representative", to_string(block.representative())}, {"rows", rows}, {"links", links}};
    if (block.fingerprint) b["fingerprint"] = fingerprint_values(block, partition.mode);
    blocks.push_back(std::move(b));
  }
  return {{"k", partition.k},
          {"mode", std::string(to_string(partition.mode))},
          {"horizon", partition.horizon},
          {"block_count", partition.blocks.size()},
          {"blocks", blocks}};
}

std::string render_partition(const ClassPartition& partition, OutputFormat format) {
  std::ostringstream out;
  const std::string label = count_label(partition.mode);
  if (format == OutputFormat::json) {
    out << partition_json(partition).dump(2) << '\n';
    return out.str();
  }
  if (format == OutputFormat::csv) {
    out << "block,row,representative,members,provenance";
    for (int n = 0; n <= partition.horizon && partition.horizon > 0; ++n) out << ',' << label << '_' << n;
    out << '\n';
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
      const auto& block = partition.blocks[b];
      const auto values = fingerprint_values(block, partition.mode);
      for (std::size_t r = 0; r < block.rows.size(); ++r) {
        const auto& row = block.rows[r];
        out << b + 1 << ',' << r + 1 << ',' << to_string(row.representative) << ',' << join(row.members, " ") << ','
            << (r == 0 ? std::string("distinct") : link_text(block.links[r - 1]));
        for (auto v : values) out << ',' << v;
        out << '\n';
      }
    }
    return out.str();
  }

  const std::string title = partition.horizon > 0
                                ? std::string(to_string(partition.mode)) + " classes of S_" + std::to_string(partition.k) +
                                      ", counts compared for n <= " + std::to_string(partition.horizon)
                                : std::string(to_string(partition.mode)) + " classes of S_" + std::to_string(partition.k) +
                                      " implied by proofs";
  out << title << '\n';
  out << partition.blocks.size() << " blocks\n";
  const std::size_t width = static_cast<std::size_t>(partition.k) * 5 + 6;
  const std::string solid(72, '-');
  const std::string dotted = ". . . . . . . . . . . . . . . . . . . . . . . . . . . . . . . . . . . .";
  out << pad("rep", static_cast<std::size_t>(partition.k) + 3) << pad("members", width);
  if (partition.horizon > 0) out << label << "_n, n = 0.." << partition.horizon;
  out << '\n' << solid << '\n';
  for (const auto& block : partition.blocks) {
    const auto values = fingerprint_values(block, partition.mode);
    for (std::size_t r = 0; r < block.rows.size(); ++r) {
      if (r > 0 && block.links[r - 1].kind == Provenance::Kind::empirical) out << dotted << '\n';
      const auto& row = block.rows[r];
      out << pad(to_string(row.representative), static_cast<std::size_t>(partition.k) + 3)
          << pad(join(row.members, " "), width);
      if (r == 0)
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
      out << '\n';
    }
    out << solid << '\n';
  }
  return out.str();
}

std::string render_class_counts(const std::vector<ClassCountRow>& rows, OutputFormat format) {
  std::ostringstream out;
  auto pub = [](const std::optional<PublishedCount>& p) { return p ? p->text() : std::string("-"); };
  auto agrees = [](const std::optional<PublishedCount>& p, int v) {
    return p ? (p->admits(v) ? "yes" : "no") : "-";
  };
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows)
        j.push_back({{"k", r.k},
                     {"wilf", r.wilf},
                     {"even_wilf", r.even_wilf},
                     {"published_wilf", pub(r.published_wilf)},
                     {"published_even_wilf", pub(r.published_even_wilf)}});
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "k,wilf,even_wilf,published_wilf,published_even_wilf\n";
      for (const auto& r : rows)
        out << r.k << ',' << r.wilf << ',' << r.even_wilf << ",\"" << pub(r.published_wilf) << "\",\""
            << pub(r.published_even_wilf) << "\"\n";
      break;
    case OutputFormat::table:
      out << pad("k", 4) << pad("wilf", 8) << pad("published", 12) << pad("match", 8) << pad("even-wilf", 12)
          << pad("published", 12) << "match\n";
      for (const auto& r : rows)
        out << pad(std::to_string(r.k), 4) << pad(std::to_string(r.wilf), 8) << pad(pub(r.published_wilf), 12)
            << pad(agrees(r.published_wilf, r.wilf), 8) << pad(std::to_string(r.even_wilf), 12)
            << pad(pub(r.published_even_wilf), 12) << agrees(r.published_even_wilf, r.even_wilf) << '\n';
      break;
  }
  return out.str();
}

std::string render_report(const verify::CheckReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: out << report.to_json().dump(2) << '\n'; break;
    case OutputFormat::csv:
      out << "name,status,witness,params\n";
      out << report.name << ',' << verify::to_string(report.status) << ",\"" << report.witness.value_or("") << "\",\""
          << report.params.dump() << "\"\n";
      break;
    case OutputFormat::table:
      out << report.name << ": " << verify::to_string(report.status) << "  " << report.params.dump() << "  ("
          << report.elapsed_ms << " ms)\n";
      if (report.witness) out << "  witness: " << *report.witness << '\n';
      for (const auto& d : report.details) out << "  " << d << '\n';
      break;
  }
  return out.str();
}

nlohmann::json map_json(const Transversal& input, const Transversal& output, int size, bwx::Direction direction,
                        const bwx::BijectionTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps)
    steps.push_back({{"columns", s.selection.columns}, {"after", to_string(s.after)}});
  return {{"shape", to_string(input.shape)},
          {"t", size},
          {"direction", direction == bwx::Direction::forward ? "forward" : "backward"},
          {"input", to_string(input.perm)},
          {"output", to_string(output.perm)},
          {"input_sign", sign(input.perm) == Parity::even ? "even" : "odd"},
          {"output_sign", sign(output.perm) == Parity::even ? "even" : "odd"},
          {"trace", {{"applications", trace.applications}, {"sign_flips", trace.sign_flips}, {"steps", steps}}}};
}

}  // namespace ewe
