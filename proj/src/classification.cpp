#include "ewe/classification.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ewe/errors.hpp"

namespace ewe {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// S_k in lexicographic order with a lookup from pattern to index.
struct Universe {
  explicit Universe(int k) : patterns(all_permutations(k)) {
    for (std::size_t i = 0; i < patterns.size(); ++i) index.emplace(patterns[i], i);
  }
  std::size_t at(const Permutation& p) const { return index.at(p); }

  std::vector<Permutation> patterns;
  std::map<Permutation, std::size_t> index;
};

bool flips_sign(SymmetryOp op) {
  switch (op) {
    case SymmetryOp::reverse:
    case SymmetryOp::complement:
    case SymmetryOp::r_inverse:
    case SymmetryOp::c_inverse: return true;
    default: return false;
  }
}

// Counts for op(sigma) from those of sigma: reverse and complement send
// S_n(sigma) onto S_n(op(sigma)) and change sign iff n = 2, 3 (mod 4).
AvoidanceVector transported(const AvoidanceVector& base, SymmetryOp op) {
  AvoidanceVector out{apply_symmetry(base.pattern, op), base.entries};
  if (!flips_sign(op)) return out;
  for (std::size_t n = 0; n < out.entries.size(); ++n)
    if (n % 4 == 2 || n % 4 == 3) std::swap(out.entries[n].even, out.entries[n].odd);
  return out;
}

std::vector<std::uint64_t> key_of(const AvoidanceVector& v, EquivalenceMode mode) {
  std::vector<std::uint64_t> key;
  key.reserve(v.entries.size());
  for (const auto& e : v.entries) key.push_back(mode == EquivalenceMode::wilf ? e.total : e.even);
  return key;
}

std::set<Permutation> row_orbit(const Permutation& p, EquivalenceMode mode) {
  return mode == EquivalenceMode::wilf ? symmetry_orbit(p) : trivial_even_orbits(p).first;
}

// Union-find over S_k joined by proven equivalences.
UnionFind proven_union(const Universe& u, int k, EquivalenceMode mode) {
  UnionFind uf(u.patterns.size());
  for (const auto& p : u.patterns)
    for (const auto& q : row_orbit(p, mode)) uf.unite(u.at(p), u.at(q));

  // J_t (+) s against F_t (+) s. For shape-Wilf this holds for all t (and
  // J_t (+) s against I_t (+) s); the even version needs t odd.
  for (int t = 2; t <= k; ++t) {
    if (mode == EquivalenceMode::even_wilf && t % 2 == 0) continue;
    const Permutation j = realize({PatternFamily::Kind::J, t});
    const Permutation f = realize({PatternFamily::Kind::F, t});
    const Permutation i = realize({PatternFamily::Kind::I, t});
    for (const auto& tail : all_permutations(k - t)) {
      uf.unite(u.at(direct_sum(j, tail)), u.at(direct_sum(f, tail)));
      if (mode == EquivalenceMode::wilf) uf.unite(u.at(direct_sum(j, tail)), u.at(direct_sum(i, tail)));
    }
  }

  // Every proven pair here is both even-Wilf and Wilf equivalent, so reverse
  // and complement carry it to another proven pair. Wilf equivalence is
  // closed under all eight symmetries.
  const std::vector<SymmetryOp> transports =
      mode == EquivalenceMode::wilf ? std::vector<SymmetryOp>(std::begin(all_symmetries), std::end(all_symmetries))
                                    : std::vector<SymmetryOp>{SymmetryOp::reverse, SymmetryOp::complement};
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < u.patterns.size(); ++a) {
      const std::size_t root = uf.find(a);
      if (root == a) continue;
      for (SymmetryOp op : transports)
        changed |= uf.unite(u.at(apply_symmetry(u.patterns[a], op)), u.at(apply_symmetry(u.patterns[root], op)));
    }
  }
  return uf;
}

// Splits `members` into symmetry rows and orders them so rows joined by a
// proof sit next to each other.
ClassBlock make_block(std::vector<Permutation> members, EquivalenceMode mode, const Universe& u, UnionFind& proven,
                      int horizon) {
  std::sort(members.begin(), members.end());
  std::set<Permutation> placed;
  std::vector<ClassRow> rows;
  for (const auto& p : members) {
    if (placed.count(p)) continue;
    ClassRow row{p, {}};
    for (const auto& q : row_orbit(p, mode))
      if (std::binary_search(members.begin(), members.end(), q)) {
        row.members.push_back(q);
        placed.insert(q);
      }
    rows.push_back(std::move(row));
  }
  std::map<std::size_t, Permutation> least_in_class;
  for (const auto& row : rows) {
    const auto root = proven.find(u.at(row.representative));
    auto it = least_in_class.find(root);
    if (it == least_in_class.end() || row.representative < it->second) least_in_class[root] = row.representative;
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const ClassRow& a, const ClassRow& b) {
    const auto& la = least_in_class[proven.find(u.at(a.representative))];
    const auto& lb = least_in_class[proven.find(u.at(b.representative))];
    return std::tie(la, a.representative) < std::tie(lb, b.representative);
  });
  ClassBlock block;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const bool proved = proven.find(u.at(rows[i].representative)) == proven.find(u.at(rows[i + 1].representative));
    block.links.push_back(proved ? Provenance{Provenance::Kind::theorem, 0}
                                 : Provenance{Provenance::Kind::empirical, horizon});
  }
  block.rows = std::move(rows);
  return block;
}

void sort_blocks(std::vector<ClassBlock>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const ClassBlock& a, const ClassBlock& b) { return a.members().front() < b.members().front(); });
}

void check_k(int k, const ClassificationOptions& opts) {
  if (k < 1) throw usage_error("pattern length must be >= 1");
  if (k > opts.max_k)
    throw budget_error("pattern length " + std::to_string(k) + " exceeds the limit " + std::to_string(opts.max_k));
}

}  // namespace

std::string_view to_string(EquivalenceMode mode) { return mode == EquivalenceMode::wilf ? "wilf" : "even-wilf"; }

EquivalenceMode parse_mode(std::string_view text) {
  if (text == "wilf") return EquivalenceMode::wilf;
  if (text == "even-wilf" || text == "even_wilf" || text == "ewe") return EquivalenceMode::even_wilf;
  throw usage_error("unknown mode '" + std::string(text) + "' (expected wilf or even-wilf)");
}

std::vector<Permutation> ClassBlock::members() const {
  std::vector<Permutation> out;
  for (const auto& row : rows) out.insert(out.end(), row.members.begin(), row.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool ClassBlock::contains(const Permutation& p) const {
  for (const auto& row : rows)
    if (std::find(row.members.begin(), row.members.end(), p) != row.members.end()) return true;
  return false;
}

std::size_t ClassPartition::block_of(const Permutation& p) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].contains(p)) return i;
  throw usage_error(to_string(p) + " is not in the partitioned universe");
}

std::pair<std::set<Permutation>, std::set<Permutation>> trivial_even_orbits(const Permutation& sigma) {
  const Permutation inv = inverse(sigma);
  std::set<Permutation> same{sigma, inv, apply_symmetry(sigma, SymmetryOp::rc), apply_symmetry(inv, SymmetryOp::rc)};
  std::set<Permutation> flipped{reverse(sigma), complement(sigma), reverse(inv), complement(inv)};
  return {std::move(same), std::move(flipped)};
}

std::set<Permutation> symmetry_orbit(const Permutation& sigma) {
  std::set<Permutation> out;
  for (SymmetryOp op : all_symmetries) out.insert(apply_symmetry(sigma, op));
  return out;
}

std::vector<AvoidanceVector> fingerprints(int k, int max_n, const ClassificationOptions& opts) {
  check_k(k, opts);
  const Universe u(k);
  std::vector<std::optional<AvoidanceVector>> out(u.patterns.size());
  for (std::size_t i = 0; i < u.patterns.size(); ++i) {
    if (out[i]) continue;
    const AvoidanceVector base = opts.vector_source ? opts.vector_source(u.patterns[i], max_n)
                                                    : avoidance_vector(u.patterns[i], max_n, opts.enumeration);
    if (!opts.exploit_symmetry) {
      out[i] = base;
      continue;
    }
    for (SymmetryOp op : all_symmetries) {
      AvoidanceVector v = transported(base, op);
      const std::size_t j = u.at(v.pattern);
      if (!out[j]) out[j] = std::move(v);
    }
  }
  std::vector<AvoidanceVector> result;
  result.reserve(out.size());
  for (auto& v : out) result.push_back(std::move(*v));
  return result;
}

ClassPartition empirical_classes(int k, int max_n, EquivalenceMode mode, const ClassificationOptions& opts) {
  const Universe u(k);
  const auto prints = fingerprints(k, max_n, opts);
  auto proven = proven_union(u, k, mode);

  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < prints.size(); ++i) groups[key_of(prints[i], mode)].push_back(i);

  ClassPartition out{k, mode, max_n, {}};
  for (const auto& [key, indices] : groups) {
    std::vector<Permutation> members;
    for (auto i : indices) members.push_back(u.patterns[i]);
    ClassBlock block = make_block(std::move(members), mode, u, proven, max_n);
    block.fingerprint = prints[u.at(block.rows.front().representative)];
    out.blocks.push_back(std::move(block));
  }
  sort_blocks(out.blocks);
  return out;
}

ClassPartition proven_classes(int k, EquivalenceMode mode) {
  if (k < 1 || k > 6) throw usage_error("proven classification is available for 1 <= k <= 6");
  const Universe u(k);
  auto proven = proven_union(u, k, mode);
  std::map<std::size_t, std::vector<Permutation>> groups;
  for (std::size_t i = 0; i < u.patterns.size(); ++i) groups[proven.find(i)].push_back(u.patterns[i]);
  ClassPartition out{k, mode, 0, {}};
  for (auto& [root, members] : groups) out.blocks.push_back(make_block(std::move(members), mode, u, proven, 0));
  sort_blocks(out.blocks);
  return out;
}

std::string PublishedCount::text() const {
  if (lo == hi) return std::to_string(lo);
  if (either_endpoint) return "{" + std::to_string(lo) + ", " + std::to_string(hi) + "}";
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

std::optional<PublishedCount> published_wilf_count(int k) {
  static constexpr int values[] = {1, 1, 1, 3, 16, 91};
  if (k < 1 || k > 6) return std::nullopt;
  return PublishedCount{values[k - 1], values[k - 1], false};
}

std::optional<PublishedCount> published_even_wilf_count(int k) {
  switch (k) {
    case 1: return PublishedCount{1, 1, false};
    case 2: return PublishedCount{1, 1, false};
    case 3: return PublishedCount{2, 2, false};
    case 4: return PublishedCount{11, 11, false};
    case 5: return PublishedCount{35, 39, false};
    case 6: return PublishedCount{216, 218, true};
    default: return std::nullopt;
  }
}

ClassCountRow class_count_row(int k, int max_n, const ClassificationOptions& opts) {
  const Universe u(k);
  const auto prints = fingerprints(k, max_n, opts);
  std::set<std::vector<std::uint64_t>> wilf, even;
  for (const auto& v : prints) {
    wilf.insert(key_of(v, EquivalenceMode::wilf));
    even.insert(key_of(v, EquivalenceMode::even_wilf));
  }
  return ClassCountRow{k, static_cast<int>(wilf.size()), static_cast<int>(even.size()), published_wilf_count(k),
                       published_even_wilf_count(k)};
}

std::vector<ClassCountRow> class_count_table(int max_k, int max_n, const ClassificationOptions& opts) {
  std::vector<ClassCountRow> rows;
  for (int k = 1; k <= max_k; ++k) rows.push_back(class_count_row(k, max_n, opts));
  return rows;
}

}  // namespace ewe
