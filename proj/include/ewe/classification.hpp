#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ewe/enumeration.hpp"
#include "ewe/permutation.hpp"

namespace ewe {

enum class EquivalenceMode { wilf, even_wilf };

std::string_view to_string(EquivalenceMode mode);
EquivalenceMode parse_mode(std::string_view text);

/// Why two adjacent rows of a block are grouped together.
struct Provenance {
  enum class Kind { theorem, empirical };
  Kind kind = Kind::theorem;
  int horizon = 0;  // for empirical: counts agree for n <= horizon

  bool operator==(const Provenance&) const = default;
};

/// One trivial symmetry class. Members of a row are equivalent by symmetry alone.
struct ClassRow {
  Permutation representative;  // lexicographically least member
  std::vector<Permutation> members;
};

struct ClassBlock {
  std::vector<ClassRow> rows;
  std::vector<Provenance> links;  // links[i] joins rows[i] and rows[i+1]
  std::optional<AvoidanceVector> fingerprint;  // of rows[0].representative

  Permutation representative() const { return rows.front().representative; }
  std::vector<Permutation> members() const;
  bool contains(const Permutation& p) const;
};

struct ClassPartition {
  int k = 0;
  EquivalenceMode mode = EquivalenceMode::even_wilf;
  /// Largest n compared; 0 for a partition built from theorems alone.
  int horizon = 0;
  std::vector<ClassBlock> blocks;

  std::size_t block_of(const Permutation& p) const;
  bool same_block(const Permutation& a, const Permutation& b) const { return block_of(a) == block_of(b); }
};

/// ({s, s^-1, s^rc, (s^-1)^rc}, {s^r, s^c, (s^-1)^r, (s^-1)^c}).
std::pair<std::set<Permutation>, std::set<Permutation>> trivial_even_orbits(const Permutation& sigma);

/// Orbit of sigma under all eight symmetries.
std::set<Permutation> symmetry_orbit(const Permutation& sigma);

struct ClassificationOptions {
  EnumerationOptions enumeration;
  int max_k = 6;
  /// Enumerate one pattern per symmetry orbit and derive the rest through the
  /// sign rules for reverse and complement. Off forces a search per pattern.
  bool exploit_symmetry = true;
  /// Replaces avoidance_vector as the source of counts (e.g. a cache front end).
  std::function<AvoidanceVector(const Permutation&, int)> vector_source;
};

/// Avoidance vectors for every pattern of S_k up to max_n, in lexicographic pattern order.
std::vector<AvoidanceVector> fingerprints(int k, int max_n, const ClassificationOptions& opts = {});

/// Partition of S_k by equality of total (wilf) or even (even_wilf) counts for n <= max_n.
/// Blocks can only split as max_n grows.
ClassPartition empirical_classes(int k, int max_n, EquivalenceMode mode, const ClassificationOptions& opts = {});

/// Partition of S_k by what the symmetry lemmas, the J_t/F_t theorem for odd t
/// and the direct-sum lemma prove. k in 1..6 (wilf mode: symmetries and
/// shape-Wilf results only).
ClassPartition proven_classes(int k, EquivalenceMode mode = EquivalenceMode::even_wilf);

/// Published values a computed class count is compared against.
struct PublishedCount {
  int lo = 0;
  int hi = 0;
  bool either_endpoint = false;  // "{lo, hi}" rather than "[lo, hi]"

  bool admits(int value) const {
    return either_endpoint ? (value == lo || value == hi) : (value >= lo && value <= hi);
  }
  std::string text() const;
};

struct ClassCountRow {
  int k = 0;
  int wilf = 0;
  int even_wilf = 0;
  std::optional<PublishedCount> published_wilf;
  std::optional<PublishedCount> published_even_wilf;
};

std::optional<PublishedCount> published_wilf_count(int k);
std::optional<PublishedCount> published_even_wilf_count(int k);

ClassCountRow class_count_row(int k, int max_n, const ClassificationOptions& opts = {});
std::vector<ClassCountRow> class_count_table(int max_k, int max_n, const ClassificationOptions& opts = {});

}  // namespace ewe
