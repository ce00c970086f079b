#include <doctest.h>

#include <set>

#include "ewe/classification.hpp"
#include "ewe/errors.hpp"
#include "oracles.hpp"

using namespace ewe;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }

std::set<Permutation> S(std::initializer_list<const char*> words) {
  std::set<Permutation> out;
  for (const char* w : words) out.insert(P(w));
  return out;
}

std::set<std::set<Permutation>> blocks_of(const ClassPartition& part) {
  std::set<std::set<Permutation>> out;
  for (const auto& b : part.blocks) {
    const auto m = b.members();
    out.emplace(m.begin(), m.end());
  }
  return out;
}

// Every block of `fine` lies inside a block of `coarse`.
bool refines(const ClassPartition& fine, const ClassPartition& coarse) {
  for (const auto& b : fine.blocks) {
    const auto m = b.members();
    const auto home = coarse.block_of(m.front());
    for (const auto& p : m)
      if (coarse.block_of(p) != home) return false;
  }
  return true;
}

void check_partition_shape(const ClassPartition& part) {
  std::set<Permutation> seen;
  for (const auto& b : part.blocks) {
    REQUIRE(b.links.size() + 1 == b.rows.size());
    for (const auto& row : b.rows) {
      REQUIRE(row.representative == *std::min_element(row.members.begin(), row.members.end()));
      for (const auto& p : row.members) REQUIRE(seen.insert(p).second);
    }
  }
  REQUIRE(seen.size() == all_permutations(part.k).size());
}

}  // namespace

TEST_CASE("trivial orbits") {
  CHECK(trivial_even_orbits(P("123")) == std::pair{S({"123"}), S({"321"})});
  CHECK(trivial_even_orbits(P("132")) == std::pair{S({"132", "213"}), S({"231", "312"})});
  CHECK(symmetry_orbit(P("132")) == S({"132", "213", "231", "312"}));
  CHECK(symmetry_orbit(P("1234")).size() == 2);
}

TEST_CASE("modes") {
  CHECK(parse_mode("wilf") == EquivalenceMode::wilf);
  CHECK(parse_mode("even-wilf") == EquivalenceMode::even_wilf);
  CHECK(parse_mode("even_wilf") == EquivalenceMode::even_wilf);
  CHECK(to_string(EquivalenceMode::even_wilf) == "even-wilf");
  CHECK_THROWS_AS(parse_mode("odd"), usage_error);
}

TEST_CASE("small even-Wilf classifications") {
  for (int n = 2; n <= 6; ++n) {
    const auto two = empirical_classes(2, n, EquivalenceMode::even_wilf);
    CHECK(blocks_of(two) == std::set{S({"12"}), S({"21"})});
  }
  // The two length-2 patterns already differ at n = 2, by direct count.
  CHECK(oracle::count_filtered(2, P("12")).even != oracle::count_filtered(2, P("21")).even);

  const auto three = empirical_classes(3, 8, EquivalenceMode::even_wilf);
  CHECK(blocks_of(three) == std::set{S({"123", "231", "312"}), S({"132", "213", "321"})});
  CHECK(three.horizon == 8);
  check_partition_shape(three);
}

TEST_CASE("S_4 even-Wilf classification") {
  const auto four = empirical_classes(4, 9, EquivalenceMode::even_wilf);
  check_partition_shape(four);
  CHECK(four.blocks.size() == 11);
  const auto blocks = blocks_of(four);
  CHECK(blocks.count(S({"3214", "1432", "2134", "1243"})) == 1);
  CHECK(blocks.count(S({"3421", "4312", "4123", "2341"})) == 1);
  // Every merge at k = 4 is proven, so no link is marked empirical.
  for (const auto& b : four.blocks)
    for (const auto& l : b.links) CHECK(l.kind == Provenance::Kind::theorem);

  const auto proven = proven_classes(4);
  CHECK(blocks_of(proven) == blocks);
  CHECK(proven.horizon == 0);
}

TEST_CASE("fingerprints are stored per block and agree inside it") {
  const auto four = empirical_classes(4, 8, EquivalenceMode::even_wilf);
  const auto prints = fingerprints(4, 8);
  const auto s4 = all_permutations(4);
  for (const auto& b : four.blocks) {
    REQUIRE(b.fingerprint);
    CHECK(b.fingerprint->pattern == b.representative());
    for (const auto& p : b.members()) {
      const auto& v = prints[static_cast<std::size_t>(std::find(s4.begin(), s4.end(), p) - s4.begin())];
      REQUIRE(v.pattern == p);
      for (int n = 0; n <= 8; ++n) REQUIRE(v.entries[n].even == b.fingerprint->entries[n].even);
    }
  }
}

TEST_CASE("symmetry shortcut matches a search per pattern") {
  ClassificationOptions slow;
  slow.exploit_symmetry = false;
  for (int k = 1; k <= 4; ++k) CHECK(fingerprints(k, 8) == fingerprints(k, 8, slow));
  for (const auto& v : fingerprints(3, 7)) CHECK(v == avoidance_vector(v.pattern, 7));
}

TEST_CASE("a vector source replaces the enumerator") {
  int calls = 0;
  ClassificationOptions opts;
  opts.vector_source = [&](const Permutation& p, int n) {
    ++calls;
    return avoidance_vector(p, n);
  };
  CHECK(fingerprints(4, 7, opts) == fingerprints(4, 7));
  CHECK(calls > 0);
  CHECK(calls < 24);
}

TEST_CASE("proven classes") {
  CHECK(proven_classes(2).blocks.size() == 2);
  CHECK(proven_classes(3).blocks.size() == 2);
  CHECK(proven_classes(4).blocks.size() == 11);
  const auto five = proven_classes(5);
  CHECK(five.same_block(P("12345"), P("23451")));
  for (const auto& [a, b] : {std::pair{"12345", "23451"}, {"45312", "34512"}, {"15432", "54321"},
                             {"21354", "21543"}, {"12354", "12543"}, {"45321", "34521"}})
    CHECK(five.same_block(P(a), P(b)));
  CHECK_FALSE(five.same_block(P("12345"), P("54321")));
  CHECK_THROWS_AS(proven_classes(7), usage_error);
  CHECK_THROWS_AS(proven_classes(0), usage_error);
}

TEST_CASE("theorems never merge what counts separate") {
  for (int k = 1; k <= 6; ++k) {
    const int n = k <= 4 ? 9 : 8;
    for (auto mode : {EquivalenceMode::even_wilf, EquivalenceMode::wilf}) {
      const auto empirical = empirical_classes(k, n, mode);
      const auto proven = proven_classes(k, mode);
      CHECK(refines(proven, empirical));
    }
  }
}

TEST_CASE("even-Wilf blocks refine Wilf blocks and contain the trivial orbits") {
  for (int k = 1; k <= 4; ++k) {
    const auto even = empirical_classes(k, 9, EquivalenceMode::even_wilf);
    const auto wilf = empirical_classes(k, 9, EquivalenceMode::wilf);
    CHECK(refines(even, wilf));
    for (const auto& p : all_permutations(k)) {
      const auto [same, flipped] = trivial_even_orbits(p);
      for (const auto& q : same) CHECK(even.same_block(p, q));
      for (const auto& q : flipped) CHECK(even.same_block(*flipped.begin(), q));
      for (const auto& q : symmetry_orbit(p)) CHECK(wilf.same_block(p, q));
    }
  }
}

TEST_CASE("blocks only split as the horizon grows") {
  const auto coarse = empirical_classes(4, 5, EquivalenceMode::even_wilf);
  const auto fine = empirical_classes(4, 8, EquivalenceMode::even_wilf);
  CHECK(refines(fine, coarse));
  CHECK(coarse.blocks.size() <= fine.blocks.size());
}

TEST_CASE("class counts") {
  const auto rows = class_count_table(4, 9);
  REQUIRE(rows.size() == 4);
  const std::vector<int> wilf{1, 1, 1, 3};
  const std::vector<int> even{1, 2, 2, 11};
  for (int k = 1; k <= 4; ++k) {
    CHECK(rows[k - 1].k == k);
    CHECK(rows[k - 1].wilf == wilf[k - 1]);
    CHECK(rows[k - 1].even_wilf == even[k - 1]);
  }
  CHECK(published_wilf_count(5)->text() == "16");
  CHECK(published_even_wilf_count(5)->text() == "[35, 39]");
  CHECK(published_even_wilf_count(5)->admits(37));
  CHECK(published_even_wilf_count(6)->text() == "{216, 218}");
  CHECK_FALSE(published_even_wilf_count(6)->admits(217));
  CHECK_FALSE(published_even_wilf_count(7));

  ClassificationOptions tight;
  tight.max_k = 3;
  CHECK_THROWS_AS(fingerprints(4, 5, tight), budget_error);
  CHECK_THROWS_AS(fingerprints(0, 5), usage_error);
}
