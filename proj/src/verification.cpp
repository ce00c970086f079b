#include "ewe/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "ewe/bwx.hpp"
#include "ewe/classification.hpp"
#include "ewe/errors.hpp"
#include "ewe/shape.hpp"

namespace ewe::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Refutations are re-counted by brute force up to this length.
constexpr int naive_recheck_limit = 9;

std::string count_text(const CountTriple& c) {
  return std::to_string(c.total) + "/" + std::to_string(c.even) + "/" + std::to_string(c.odd);
}

void refute(CheckReport& report, std::string witness) {
  if (report.status == Status::refuted) return;
  report.status = Status::refuted;
  report.witness = std::move(witness);
}

// Recounts both sides with the brute-force counter and insists the mismatch is real.
void confirm_even_mismatch(const Permutation& a, const Permutation& b, int n, CheckReport& report) {
  if (n > naive_recheck_limit) {
    report.details.push_back("mismatch at n=" + std::to_string(n) + " beyond brute-force recheck limit");
    return;
  }
  const auto na = count_avoiders_naive(n, a);
  const auto nb = count_avoiders_naive(n, b);
  if (na.even == nb.even)
    throw contract_violation("pruned counter reported a mismatch for " + to_string(a) + " vs " + to_string(b) +
                             " at n=" + std::to_string(n) + " that brute force does not reproduce");
  report.details.push_back("brute force confirms mismatch at n=" + std::to_string(n));
}

// First n <= max_n (from `from`) where e_n differs, if any.
std::optional<int> first_even_mismatch(const AvoidanceVector& a, const AvoidanceVector& b, int from = 0,
                                       int step = 1) {
  for (int n = from; n < static_cast<int>(a.entries.size()); n += step)
    if (a.entries[n].even != b.entries[n].even) return n;
  return std::nullopt;
}

// e_n(a) = e_n(b) for all n <= max_n; records the comparison and refutes on mismatch.
bool expect_even_equal(const Permutation& a, const Permutation& b, int max_n, const EnumerationOptions& opts,
                       CheckReport& report) {
  const auto va = avoidance_vector(a, max_n, opts);
  const auto vb = avoidance_vector(b, max_n, opts);
  if (const auto n = first_even_mismatch(va, vb)) {
    report.details.push_back(to_string(a) + " vs " + to_string(b) + ": e_" + std::to_string(*n) + " " +
                             std::to_string(va.entries[*n].even) + " != " + std::to_string(vb.entries[*n].even));
    confirm_even_mismatch(a, b, *n, report);
    refute(report, "e_" + std::to_string(*n) + "(" + to_string(a) + ")=" + std::to_string(va.entries[*n].even) +
                       " but e_" + std::to_string(*n) + "(" + to_string(b) + ")=" + std::to_string(vb.entries[*n].even));
    return false;
  }
  report.details.push_back(to_string(a) + " vs " + to_string(b) + ": e_n equal for n <= " + std::to_string(max_n) +
                           " (e_" + std::to_string(max_n) + "=" + std::to_string(va.entries.back().even) + ")");
  return true;
}

Permutation perm(std::string_view text) { return parse_permutation(text); }

template <typename Body>
CheckReport timed(std::string name, Body body) {
  CheckReport report;
  report.name = std::move(name);
  const auto start = Clock::now();
  body(report);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

int need(const std::optional<int>& value, int fallback, const char* what, int lo, int hi) {
  const int v = value.value_or(fallback);
  if (v < lo || v > hi)
    throw usage_error(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                      std::to_string(v));
  return v;
}

// A length above the enumeration limit is a budget matter, not a usage error.
int need_n(const std::optional<int>& value, int fallback, int limit) {
  const int v = value.value_or(fallback);
  if (v > limit)
    throw budget_error("max-n = " + std::to_string(v) + " exceeds the enumeration limit " + std::to_string(limit));
  return need(value, fallback, "max-n", 0, limit);
}

CheckReport check_proven_s5_merges(int max_n, const EnumerationOptions& opts) {
  return timed("proven-s5-merges", [&](CheckReport& r) {
    r.params = {{"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    static constexpr std::pair<std::string_view, std::string_view> merges[] = {
        {"12345", "23451"}, {"45312", "34512"}, {"15432", "54321"},
        {"21354", "21543"}, {"12354", "12543"}, {"45321", "34521"},
    };
    for (const auto& [a, b] : merges) expect_even_equal(perm(a), perm(b), max_n, opts, r);
    if (r.ok()) r.status = Status::verified;
  });
}

CheckReport check_s5_pairs(int max_n, const EnumerationOptions& opts) {
  return timed("conj-s5-pairs", [&](CheckReport& r) {
    r.params = {{"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    static constexpr std::pair<std::string_view, std::string_view> pairs[] = {
        {"12345", "45312"}, {"54321", "21354"}, {"12354", "45321"}, {"13524", "42531"}};
    for (const auto& [a, b] : pairs) expect_even_equal(perm(a), perm(b), max_n, opts, r);
    if (r.ok()) r.status = Status::exhausted_no_counterexample;
  });
}

CheckReport check_jrjs(int t, int max_n, const EnumerationOptions& opts) {
  if (t % 2 == 0) throw usage_error("conj-jrjs needs odd t");
  return timed("conj-jrjs", [&](CheckReport& r) {
    r.params = {{"t", t}, {"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    const Permutation jt = realize({PatternFamily::Kind::J, t});
    for (int left = 1; left < t; ++left) {
      const Permutation sum =
          direct_sum(realize({PatternFamily::Kind::J, left}), realize({PatternFamily::Kind::J, t - left}));
      expect_even_equal(sum, jt, max_n, opts, r);
    }
    if (r.ok()) r.status = Status::exhausted_no_counterexample;
  });
}

CheckReport check_sw_even_shape(int box, int max_n, int alpha_max, const EnumerationOptions& opts) {
  return timed("conj-sw-even-shape", [&](CheckReport& r) {
    r.params = {{"box", box}, {"max_n", max_n}, {"alpha_max", alpha_max}};
    r.horizons = {{"box", box}, {"n", max_n}, {"alpha_max", alpha_max}};
    const Permutation p312 = perm("312"), p231 = perm("231");
    EnumerationOptions shape_opts = opts;
    shape_opts.max_shape_rows = std::max(opts.max_shape_rows, box);
    std::size_t shapes = 0;
    for (const auto& shape : shapes_up_to_box(box)) {
      ++shapes;
      const auto a = count_avoiders_shape(shape, p312, shape_opts);
      const auto b = count_avoiders_shape(shape, p231, shape_opts);
      if (a.even != b.even) {
        r.details.push_back("shape " + to_string(shape) + ": 312 " + count_text(a) + ", 231 " + count_text(b));
        refute(r, "shape " + to_string(shape) + ": e(312)=" + std::to_string(a.even) +
                      " e(231)=" + std::to_string(b.even));
      }
    }
    r.details.push_back(std::to_string(shapes) + " shapes compared");
    for (int len = 1; len <= alpha_max; ++len)
      for (const auto& alpha : all_permutations(len))
        expect_even_equal(direct_sum(p231, alpha), direct_sum(p312, alpha), max_n, opts, r);
    if (r.ok()) r.status = Status::exhausted_no_counterexample;
  });
}

CheckReport check_refinement(int k, int max_n, const EnumerationOptions& opts) {
  return timed("conj-refinement", [&](CheckReport& r) {
    r.params = {{"k", k}, {"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    ClassificationOptions copts;
    copts.enumeration = opts;
    for (int len = 1; len <= k; ++len) {
      const auto even = empirical_classes(len, max_n, EquivalenceMode::even_wilf, copts);
      const auto wilf = empirical_classes(len, max_n, EquivalenceMode::wilf, copts);
      for (const auto& block : even.blocks) {
        const auto members = block.members();
        const std::size_t home = wilf.block_of(members.front());
        for (const auto& p : members) {
          if (wilf.block_of(p) != home) {
            r.details.push_back("k=" + std::to_string(len) + ": " + to_string(members.front()) + " and " +
                                to_string(p) + " share e_n but not s_n");
            refute(r, to_string(members.front()) + " ~ewe " + to_string(p) + " but not Wilf-equivalent up to n=" +
                          std::to_string(max_n));
          }
        }
      }
      r.details.push_back("k=" + std::to_string(len) + ": " + std::to_string(even.blocks.size()) +
                          " even-Wilf blocks refine " + std::to_string(wilf.blocks.size()) + " Wilf blocks");
    }
    if (r.ok()) r.status = Status::exhausted_no_counterexample;
  });
}

CheckReport check_simion_schmidt(int max_n, const EnumerationOptions& opts) {
  return timed("simion-schmidt-mod4", [&](CheckReport& r) {
    r.params = {{"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    const Permutation a = perm("123"), b = perm("132");
    const auto va = avoidance_vector(a, max_n, opts);
    const auto vb = avoidance_vector(b, max_n, opts);
    std::vector<int> differ_at_multiple_of_4, differ_at;
    for (int n = 0; n <= max_n; ++n) {
      const auto ea = va.entries[n].even, eb = vb.entries[n].even;
      r.details.push_back("n=" + std::to_string(n) + ": e(123)=" + std::to_string(ea) + " e(132)=" + std::to_string(eb) +
                          (ea == eb ? "" : " (differ)"));
      if (ea == eb) continue;
      differ_at.push_back(n);
      if (n % 4 == 0) {
        differ_at_multiple_of_4.push_back(n);
      } else {
        confirm_even_mismatch(a, b, n, r);
        refute(r, "n=" + std::to_string(n) + ": e(123)=" + std::to_string(ea) + " e(132)=" + std::to_string(eb));
      }
    }
    r.horizons["differs_at_n_divisible_by_4"] = differ_at_multiple_of_4;
    r.horizons["differs_at"] = differ_at;
    if (r.ok()) r.status = Status::exhausted_no_counterexample;
  });
}

CheckReport check_even_horizon_12345(int max_n, const EnumerationOptions& opts) {
  return timed("even-horizon-12345", [&](CheckReport& r) {
    r.params = {{"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    const Permutation a = perm("12345"), b = perm("54321");
    const auto va = avoidance_vector(a, max_n, opts);
    const auto vb = avoidance_vector(b, max_n, opts);
    for (int n = 0; n <= max_n; n += 2) {
      r.details.push_back("n=" + std::to_string(n) + ": e(12345)=" + std::to_string(va.entries[n].even) +
                          " e(54321)=" + std::to_string(vb.entries[n].even));
    }
    if (const auto n = first_even_mismatch(va, vb, 0, 2)) {
      confirm_even_mismatch(a, b, *n, r);
      refute(r, "n=" + std::to_string(*n));
    }
    if (r.ok()) r.status = Status::exhausted_no_counterexample;
  });
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::verified: return "verified";
    case Status::refuted: return "refuted";
    case Status::exhausted_no_counterexample: return "exhausted-no-counterexample";
  }
  return "?";
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["params"] = params;
  j["status"] = std::string(to_string(status));
  if (witness) j["witness"] = *witness;
  j["horizons"] = horizons;
  j["details"] = details;
  j["elapsed_ms"] = elapsed_ms;
  j["tool_version"] = tool_version;
  return j;
}

CheckReport check_theorem_JtFt(int t, int box, const EnumerationOptions& opts) {
  if (t < 2) throw usage_error("t must be >= 2");
  return timed("theorem-jtft", [&](CheckReport& r) {
    r.params = {{"t", t}, {"box", box}};
    r.horizons = {{"box", box}};
    const bool odd = t % 2 == 1;
    const Permutation jt = realize({PatternFamily::Kind::J, t});
    const Permutation ft = realize({PatternFamily::Kind::F, t});
    EnumerationOptions shape_opts = opts;
    shape_opts.max_shape_rows = std::max(opts.max_shape_rows, box);

    // Opposite-sign patterns are separated at n = t by the pattern itself.
    {
      const auto cj = count_avoiders(t, jt, opts), cf = count_avoiders(t, ft, opts);
      const bool same_sign = sign(jt) == sign(ft);
      const bool as_expected = same_sign ? cj.even == cf.even : cj.even != cf.even;
      r.details.push_back("n=t: e(J_t)=" + std::to_string(cj.even) + " e(F_t)=" + std::to_string(cf.even) +
                          (same_sign ? " (same sign)" : " (opposite signs)"));
      if (!as_expected) refute(r, "sign separation at n=t fails");
    }

    std::size_t shapes = 0, domain = 0, uneven_shapes = 0;
    std::optional<std::string> flip_witness, preserved_witness, flipped_witness;
    for (const auto& shape : shapes_up_to_box(box)) {
      ++shapes;
      const auto cj = count_avoiders_shape(shape, jt, shape_opts);
      const auto cf = count_avoiders_shape(shape, ft, shape_opts);
      if (cj.total != cf.total)
        refute(r, "shape " + to_string(shape) + ": s(J_t)=" + std::to_string(cj.total) +
                      " s(F_t)=" + std::to_string(cf.total));
      if (cj.even != cf.even) {
        ++uneven_shapes;
        if (odd)
          refute(r, "shape " + to_string(shape) + ": J_t " + count_text(cj) + " vs F_t " + count_text(cf));
      }

      std::set<Permutation> avoid_j, avoid_f, image;
      for_each_transversal(shape, [&](const Permutation& p) {
        if (!transversal_contains(shape, p, jt)) avoid_j.insert(p);
        if (!transversal_contains(shape, p, ft)) avoid_f.insert(p);
      });
      if (avoid_j.size() != cj.total || avoid_f.size() != cf.total)
        throw contract_violation("shape counter disagrees with transversal filter on " + to_string(shape));
      domain += avoid_f.size();

      for (const auto& p : avoid_f) {
        const Transversal start{shape, p};
        auto [out, trace] = bwx::phi_star(start, t);
        const std::string where = to_string(shape) + " / " + to_string(p);
        if (!avoid_j.count(out.perm)) refute(r, "phi* image of " + where + " contains J_t");
        if (!image.insert(out.perm).second) refute(r, "phi* not injective at " + where);
        if (bwx::psi_star(out, t).first.perm != p) refute(r, "psi* does not invert phi* at " + where);
        if (odd && sign(out.perm) != sign(p)) refute(r, "phi* changes sign at " + where);
        if (!odd) {
          if (trace.sign_flips != trace.applications) refute(r, "a phi_t step kept the sign at " + where);
          if (!flip_witness && trace.applications > 0) {
            flip_witness = "phi_" + std::to_string(t) + " on " + to_string(shape) + ": " + to_string(p) + " -> " +
                           to_string(trace.steps[0].after);
          }
          if (trace.applications > 0 && trace.applications % 2 == 0 && !preserved_witness)
            preserved_witness = where + " -> " + to_string(out.perm);
          if (trace.applications % 2 == 1 && !flipped_witness) flipped_witness = where + " -> " + to_string(out.perm);
        }
      }
      if (image != avoid_j) refute(r, "phi* is not onto the J_t-avoiders of " + to_string(shape));
      for (const auto& q : avoid_j) {
        auto [back, trace] = bwx::psi_star(Transversal{shape, q}, t);
        if (!avoid_f.count(back.perm)) refute(r, "psi* image of " + to_string(q) + " contains F_t");
        if (bwx::phi_star(back, t).first.perm != q) refute(r, "phi* does not invert psi* at " + to_string(q));
      }
    }
    r.details.push_back(std::to_string(shapes) + " shapes, " + std::to_string(domain) + " F_t-avoiding transversals");
    if (odd) {
      r.details.push_back("even and odd counts agree on every shape; phi*/psi* preserve sign");
    } else {
      r.details.push_back(std::to_string(uneven_shapes) + " shapes where e(J_t) != e(F_t)");
      if (!flip_witness) refute(r, "no phi_t application found to exhibit the sign flip");
      if (flip_witness) r.details.push_back("sign flip: " + *flip_witness);
      if (preserved_witness) r.details.push_back("phi* keeps sign: " + *preserved_witness);
      if (flipped_witness) r.details.push_back("phi* flips sign: " + *flipped_witness);
      if (r.ok()) r.witness = flip_witness;
    }
    if (r.ok()) r.status = Status::verified;
  });
}

CheckReport check_sign_symmetry_lemmas(int max_n) {
  return timed("sign-symmetry", [&](CheckReport& r) {
    r.params = {{"max_n", max_n}};
    r.horizons = {{"n", max_n}};
    std::uint64_t checked = 0;
    std::optional<std::string> length6_witness;
    for (int n = 1; n <= max_n; ++n) {
      const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
      const bool keeps = n % 4 == 0 || n % 4 == 1;
      for_each_permutation(n, [&](const Permutation& p) {
        ++checked;
        const auto inv = inversions(p);
        const Permutation rev = reverse(p), comp = complement(p);
        const std::string at = to_string(p);
        if (inversions(rev) != pairs - inv) refute(r, "inv(reverse) identity fails at " + at);
        if (inversions(comp) != pairs - inv) refute(r, "inv(complement) identity fails at " + at);
        if ((sign(rev) == sign(p)) != keeps) refute(r, "reverse sign rule fails at " + at);
        if ((sign(comp) == sign(p)) != keeps) refute(r, "complement sign rule fails at " + at);
        if (sign(inverse(p)) != sign(p)) refute(r, "inverse sign rule fails at " + at);
        if (n == 6 && !length6_witness && sign(rev) != sign(p))
          length6_witness = at + " has sign " + (sign(p) == Parity::even ? "even" : "odd") + ", its reverse " +
                            to_string(rev) + " the opposite";
      });
    }
    r.horizons["permutations"] = checked;
    r.details.push_back(std::to_string(checked) + " permutations of length 1.." + std::to_string(max_n));
    if (length6_witness) r.details.push_back("length-6 witness: " + *length6_witness);
    if (r.ok()) r.status = Status::verified;
  });
}

std::vector<std::string> registry_names() {
  return {"theorem-jtft",        "sign-symmetry",      "proven-s5-merges", "conj-s5-pairs",
          "conj-jrjs",           "conj-sw-even-shape", "conj-refinement",  "simion-schmidt-mod4",
          "even-horizon-12345"};
}

CheckReport run_check(std::string_view raw_name, const CheckParams& p) {
  std::string name(raw_name);
  std::replace(name.begin(), name.end(), '_', '-');
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  const int limit = p.enumeration.max_n;
  const auto& e = p.enumeration;
  if (name == "theorem-jtft")
    return check_theorem_JtFt(need(p.t, 3, "t", 2, 9), need(p.box, 6, "box", 1, std::max(9, e.max_shape_rows)), e);
  if (name == "sign-symmetry") return check_sign_symmetry_lemmas(need(p.max_n, 7, "max-n", 1, 10));
  if (name == "proven-s5-merges") return check_proven_s5_merges(need_n(p.max_n, 9, limit), e);
  if (name == "conj-s5-pairs") return check_s5_pairs(need_n(p.max_n, 9, limit), e);
  if (name == "conj-jrjs") return check_jrjs(need(p.t, 5, "t", 3, 9), need_n(p.max_n, 9, limit), e);
  if (name == "conj-sw-even-shape")
    return check_sw_even_shape(need(p.box, 5, "box", 1, std::max(9, e.max_shape_rows)),
                               need_n(p.max_n, 9, limit), need(p.alpha_max, 4, "alpha-max", 0, 5), e);
  if (name == "conj-refinement")
    return check_refinement(need(p.k, 4, "k", 1, 6), need_n(p.max_n, 9, limit), e);
  if (name == "simion-schmidt-mod4") return check_simion_schmidt(need_n(p.max_n, 10, limit), e);
  if (name == "even-horizon-12345") return check_even_horizon_12345(need_n(p.max_n, 10, limit), e);
  std::string known;
  for (const auto& n : registry_names()) known += (known.empty() ? "" : ", ") + n;
  throw usage_error("unknown check '" + std::string(raw_name) + "'; available: " + known);
}

}  // namespace ewe::verify
