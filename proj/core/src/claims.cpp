#include "korbit/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "korbit/blocks.hpp"
#include "korbit/error.hpp"
#include "korbit/lattice.hpp"
#include "korbit/norbit.hpp"

namespace korbit::claims {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "L1-block-kernel",   "T2-odd-primitive",    "L3-fix-at-most-one",
      "C4-stab-semiregular", "C5-regular-subgroup", "C6-ld",
      "C7-div4",           "H1-hunt",             "P-regular-element",
      "LD-direct-product"};
  return ids;
}

namespace {

std::string subgroup_text(const Subgroup& s) {
  std::ostringstream os;
  os << "order=" << s.order() << " gens=";
  if (s.generators.empty()) {
    os << "()";
  } else {
    for (std::size_t i = 0; i < s.generators.size(); ++i) {
      if (i) os << ", ";
      os << to_cycle_string(s.generators[i]);
    }
  }
  return os.str();
}

std::string blocks_text(const BlockSystem& q) {
  std::ostringstream os;
  for (const auto& blk : q.blocks) {
    os << '{';
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (i) os << ' ';
      os << blk[i];
    }
    os << '}';
  }
  return os.str();
}

ClaimReport base_report(std::string claim, const std::string& group_id) {
  ClaimReport r;
  r.claim_id = std::move(claim);
  r.group_id = group_id;
  return r;
}

class Stopwatch {
public:
  explicit Stopwatch(ClaimReport& r) : report_(r) {}
  ~Stopwatch() {
    report_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
  }

private:
  ClaimReport& report_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

Applicability odd_primitive_filter(const PermGroup& g) {
  if (!is_transitive(g)) return {false, "intransitive"};
  if (!is_primitive(g)) return {false, "imprimitive"};
  if (g.is_abelian()) return {false, "abelian"};
  if (g.order() % 2 == 0) return {false, "even order"};
  return {true, {}};
}

std::optional<Perm> find_multi_fixing_element(const PermGroup& g) {
  for (const Perm& p : g.elements()) {
    if (p.is_identity()) continue;
    if (fixed_points(p).size() > 1) return p;
  }
  return std::nullopt;
}

std::optional<Subgroup> frobenius_kernel_candidate(const PermGroup& g) {
  std::vector<Perm> members{Perm::identity(g.degree())};
  for (const Perm& p : g.elements())
    if (!p.is_identity() && fixed_points(p).empty()) members.push_back(p);
  std::sort(members.begin(), members.end());
  for (const Perm& a : members)
    for (const Perm& b : members)
      if (!std::binary_search(members.begin(), members.end(), a * b))
        return std::nullopt;
  Subgroup s;
  s.degree = g.degree();
  s.generators = canonical_generators(g.degree(), members);
  s.elements = std::move(members);
  return s;
}

bool representation_is_md(const PermGroup& g) {
  if (!is_transitive(g)) throw Error("md status needs a transitive group");
  return is_md_representation(g, point_stabilizer(g, 0));
}

ClaimReport check_block_kernel_normal(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("L1-block-kernel", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  if (!is_transitive(g)) {
    r.verdict = Verdict::not_applicable;
    r.note = "intransitive";
    return r;
  }
  auto systems = minimal_block_systems(g);
  if (systems.empty()) {
    r.verdict = Verdict::not_applicable;
    r.note = "primitive (no block systems)";
    return r;
  }

  std::optional<bool> md;
  std::string md_note;
  try {
    md = representation_is_md(g);
    md_note = *md ? "md representation (computed)" : "nmd representation";
    if (*md && !is_maximal_subgroup(g, point_stabilizer(g, 0)))
      md_note += "; note: the point stabilizer is maximal among core-free "
                 "subgroups but not maximal in the group, so the two "
                 "readings of md differ here";
  } catch (const CapError&) {
    md_note = "md status unknown (lattice cap); nontriviality not enforced";
  }

  for (const auto& q : systems) {
    Subgroup kernel = block_kernel(g, q);
    if (!is_normal(g, kernel)) {
      r.verdict = Verdict::fails;
      r.witness = "blocks=" + blocks_text(q) + " kernel=" + subgroup_text(kernel);
      r.note = "kernel not normal";
      return r;
    }
    if (md && *md && kernel.is_trivial()) {
      r.verdict = Verdict::fails;
      r.witness = "blocks=" + blocks_text(q);
      r.note = "trivial kernel on an md representation";
      return r;
    }
  }
  r.verdict = Verdict::holds;
  r.note = std::to_string(systems.size()) + " minimal block system(s); " + md_note;
  return r;
}

ClaimReport check_primitive_odd_not_simple(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("T2-odd-primitive", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  auto filt = odd_primitive_filter(g);
  if (!filt.ok) {
    r.verdict = Verdict::not_applicable;
    r.note = filt.reason;
    return r;
  }
  if (auto kernel = frobenius_kernel_candidate(g)) {
    bool regular = kernel->order() == g.degree() &&
                   orbits_of(kernel->generators, g.degree()).size() == 1;
    if (regular && is_normal(g, *kernel) && !kernel->is_trivial() &&
        kernel->order() < g.order()) {
      r.verdict = Verdict::holds;
      r.witness = subgroup_text(*kernel);
      r.note = "fixed-point-free elements and the identity form a regular "
               "normal subgroup";
      return r;
    }
  }
  // fallback: the normal closure of some cyclic subgroup is proper
  for (const Perm& p : g.elements()) {
    if (p.is_identity()) continue;
    Subgroup n = normal_closure(g, std::span(&p, 1));
    if (n.order() < g.order()) {
      r.verdict = Verdict::holds;
      r.witness = subgroup_text(n);
      r.note = "proper normal closure of <" + to_cycle_string(p) + ">";
      return r;
    }
  }
  r.verdict = Verdict::fails;
  r.witness = cg.spec.id;
  r.note = "no proper nontrivial normal subgroup found (group is simple)";
  return r;
}

ClaimReport check_fixes_at_most_one(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("L3-fix-at-most-one", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  auto filt = odd_primitive_filter(g);
  if (!filt.ok) {
    r.verdict = Verdict::not_applicable;
    r.note = filt.reason;
    return r;
  }
  if (auto bad = find_multi_fixing_element(g)) {
    r.verdict = Verdict::fails;
    r.witness = to_cycle_string(*bad);
    r.note = "fixes " + std::to_string(fixed_points(*bad).size()) + " points";
    return r;
  }
  r.verdict = Verdict::holds;
  r.note = "every non-identity element fixes at most one point";
  return r;
}

ClaimReport check_stabilizer_semiregular(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("C4-stab-semiregular", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  auto filt = odd_primitive_filter(g);
  if (!filt.ok) {
    r.verdict = Verdict::not_applicable;
    r.note = filt.reason;
    return r;
  }
  const unsigned n = g.degree();
  for (Point v = 0; v < n; ++v) {
    Subgroup stab = point_stabilizer(g, v);
    if (stab.order() >= n) {
      r.verdict = Verdict::fails;
      r.witness = "v=" + std::to_string(v) + " " + subgroup_text(stab);
      r.note = "stabilizer order not below the degree";
      return r;
    }
    for (const Perm& a : stab.elements) {
      if (a.is_identity()) continue;
      if (fixed_points(a).size() != 1) {
        r.verdict = Verdict::fails;
        r.witness = to_cycle_string(a);
        r.note = "stabilizer of " + std::to_string(v) +
                 " is not semiregular off its fixed point";
        return r;
      }
    }
  }
  r.verdict = Verdict::holds;
  r.note = "|Stab(v)| < n and Stab(v) acts semiregularly on the rest, all v";
  return r;
}

ClaimReport check_regular_subgroup(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("C5-regular-subgroup", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  auto filt = odd_primitive_filter(g);
  if (!filt.ok) {
    r.verdict = Verdict::not_applicable;
    r.note = filt.reason;
    return r;
  }
  const unsigned n = g.degree();
  std::vector<Perm> fpf;
  for (const Perm& p : g.elements())
    if (!p.is_identity() && fixed_points(p).empty()) fpf.push_back(p);
  if (fpf.size() != n - 1) {
    r.verdict = Verdict::fails;
    r.witness = cg.spec.id;
    r.note = "fixed-point-free element count " + std::to_string(fpf.size()) +
             " instead of n-1 = " + std::to_string(n - 1);
    return r;
  }
  for (const Perm& p : fpf) {
    if (!is_regular_element(p)) {
      r.verdict = Verdict::fails;
      r.witness = to_cycle_string(p);
      r.note = "fixed-point-free element with non-uniform cycle lengths";
      return r;
    }
  }
  auto kernel = frobenius_kernel_candidate(g);
  if (!kernel || kernel->order() != n ||
      orbits_of(kernel->generators, n).size() != 1) {
    r.verdict = Verdict::fails;
    r.witness = cg.spec.id;
    r.note = "fixed-point-free elements with the identity do not close into "
             "a regular subgroup";
    return r;
  }
  Subgroup stab = point_stabilizer(g, 0);
  if (kernel->order() <= stab.order()) {
    r.verdict = Verdict::fails;
    r.witness = subgroup_text(*kernel);
    r.note = "|H| not above the stabilizer order";
    return r;
  }
  if (!is_normal(g, *kernel)) {
    r.verdict = Verdict::fails;
    r.witness = subgroup_text(*kernel);
    r.note = "regular subgroup is not normal";
    return r;
  }
  r.verdict = Verdict::holds;
  r.witness = subgroup_text(*kernel);
  r.note = "n-1 fixed-point-free elements, all uniform-cycle, closing with "
           "the identity into a normal regular subgroup";
  return r;
}

ClaimReport check_ld(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("C6-ld", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  auto filt = odd_primitive_filter(g);
  if (!filt.ok) {
    r.verdict = Verdict::not_applicable;
    r.note = filt.reason;
    return r;
  }
  try {
    FaithfulDegreeResult res = minimal_faithful_degree(g);
    if (res.degree == g.degree()) {
      r.verdict = Verdict::holds;
      r.note = "minimal faithful degree equals the current degree " +
               std::to_string(g.degree());
    } else {
      r.verdict = Verdict::fails;
      r.witness = subgroup_text(res.collection.front());
      r.note = "minimal faithful degree is " + std::to_string(res.degree);
    }
  } catch (const CapError& e) {
    r.verdict = Verdict::undecided;
    r.note = e.what();
  }
  return r;
}

ClaimReport check_div4(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("C7-div4", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  if (g.is_abelian()) {
    r.verdict = Verdict::not_applicable;
    r.note = "abelian";
    return r;
  }
  // simplicity scan: every nontrivial normal closure must be the whole group
  for (const Perm& p : g.elements()) {
    if (p.is_identity()) continue;
    Subgroup n = normal_closure(g, std::span(&p, 1));
    if (n.order() < g.order()) {
      r.verdict = Verdict::not_applicable;
      r.note = "not simple: normal closure of <" + to_cycle_string(p) +
               "> has order " + std::to_string(n.order());
      return r;
    }
  }
  if (g.order() % 4 == 0) {
    r.verdict = Verdict::holds;
    r.note = "simple, order " + std::to_string(g.order()) + " divisible by 4";
  } else {
    r.verdict = Verdict::fails;
    r.witness = "order=" + std::to_string(g.order());
    r.note = "simple non-abelian group with order not divisible by 4";
  }
  return r;
}

ClaimReport find_regular_element(const catalog::CatalogGroup& cg) {
  ClaimReport r = base_report("P-regular-element", cg.spec.id);
  Stopwatch timer(r);
  const PermGroup& g = cg.group;
  if (!is_transitive(g)) {
    r.verdict = Verdict::not_applicable;
    r.note = "intransitive";
    return r;
  }
  for (const Perm& p : g.elements()) {
    if (p.is_identity()) continue;
    if (is_regular_element(p)) {
      CycleType t = cycle_type(p);
      r.verdict = Verdict::holds;
      r.witness = to_cycle_string(p);
      r.note = std::to_string(t.lengths.size()) + " cycle(s) of length " +
               std::to_string(t.lengths.front()) +
               "; empirical probe, not a proof of the conjecture";
      return r;
    }
  }
  r.verdict = Verdict::fails;
  r.witness = cg.spec.id;
  r.note = "no non-identity element has uniform cycle lengths (elusive "
           "action); empirical probe, not a proof";
  return r;
}

ClaimReport check_direct_product_ld_intransitive(const catalog::CatalogGroup& a,
                                                 const catalog::CatalogGroup& b,
                                                 GroupConfig config) {
  ClaimReport r = base_report("LD-direct-product", a.spec.id + "x" + b.spec.id);
  Stopwatch timer(r);
  const unsigned da = a.group.degree(), db = b.group.degree();
  std::vector<Perm> gens;
  for (const Perm& g : a.group.generators()) {
    std::vector<Point> img(da + db);
    for (Point i = 0; i < da; ++i) img[i] = g(i);
    for (Point i = 0; i < db; ++i) img[da + i] = da + i;
    gens.emplace_back(std::move(img));
  }
  for (const Perm& g : b.group.generators()) {
    std::vector<Point> img(da + db);
    for (Point i = 0; i < da; ++i) img[i] = i;
    for (Point i = 0; i < db; ++i) img[da + i] = da + g(i);
    gens.emplace_back(std::move(img));
  }
  PermGroup product(da + db, std::move(gens), config);

  try {
    FaithfulDegreeResult res = minimal_faithful_degree(product);
    std::ostringstream deg_note;
    deg_note << "min faithful degree " << res.degree << " = ";
    for (std::size_t i = 0; i < res.collection.size(); ++i) {
      if (i) deg_note << "+";
      deg_note << product.order() / res.collection[i].order();
    }
    auto dt = res.best_transitive;
    auto di = res.best_intransitive;
    std::ostringstream collection_text;
    for (std::size_t i = 0; i < res.collection.size(); ++i) {
      if (i) collection_text << " | ";
      collection_text << subgroup_text(res.collection[i]);
    }
    if (di && (!dt || *di < *dt)) {
      r.verdict = Verdict::holds;
      r.witness = collection_text.str();
      r.note = deg_note.str() + ", achieved intransitively; best transitive " +
               (dt ? std::to_string(*dt) : std::string("none"));
    } else if (di && dt && *di == *dt) {
      r.verdict = Verdict::holds;
      r.witness = collection_text.str();
      r.note = deg_note.str() +
               "; a transitive representation of equal degree exists";
    } else {
      r.verdict = Verdict::fails;
      r.witness = collection_text.str();
      r.note = "best transitive degree " +
               (dt ? std::to_string(*dt) : std::string("?")) +
               " beats every intransitive collection" +
               (di ? " (best " + std::to_string(*di) + ")" : "");
    }
  } catch (const CapError& e) {
    r.verdict = Verdict::undecided;
    r.note = e.what();
  }
  return r;
}

std::vector<ClaimReport> hunt_hypothesis(
    std::span<const catalog::CatalogGroup> groups, unsigned degree_max,
    const ClaimOptions& options) {
  std::vector<ClaimReport> out;

  struct Member {
    const catalog::CatalogGroup* cg;
    std::string provenance;  // "computed" or "declared"
  };
  std::map<std::pair<unsigned, std::uint64_t>, std::vector<Member>> buckets;

  for (const auto& cg : groups) {
    if (cg.group.degree() > degree_max) continue;
    if (!is_primitive_paper(cg.group)) continue;
    std::string provenance = "computed";
    bool md = false;
    try {
      md = representation_is_md(cg.group);
      if (cg.spec.has_tag("md-declared") && !md) {
        ClaimReport r = base_report("H1-hunt", cg.spec.id);
        r.verdict = Verdict::not_applicable;
        r.note = "tag md-declared contradicts the computed md status; "
                 "group excluded";
        out.push_back(std::move(r));
        continue;
      }
    } catch (const CapError&) {
      if (cg.spec.has_tag("md-declared")) {
        md = true;
        provenance = "declared";
      } else {
        ClaimReport r = base_report("H1-hunt", cg.spec.id);
        r.verdict = Verdict::not_applicable;
        r.note = "md status unavailable (lattice cap) and not declared";
        out.push_back(std::move(r));
        continue;
      }
    }
    if (!md) continue;
    buckets[{cg.group.degree(), cg.group.order()}].push_back({&cg, provenance});
  }

  for (const auto& [key, members] : buckets) {
    ClaimReport r;
    r.claim_id = "H1-hunt";
    Stopwatch timer(r);
    std::ostringstream ids;
    std::ostringstream prov;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) ids << ",";
      ids << members[i].cg->spec.id;
      if (i) prov << ",";
      prov << members[i].provenance;
    }
    r.group_id = ids.str();
    std::string bucket_desc = "degree " + std::to_string(key.first) +
                              ", order " + std::to_string(key.second) +
                              "; md flags: " + prov.str();
    if (members.size() == 1) {
      r.verdict = Verdict::holds;
      r.note = "vacuous (singleton bucket); " + bucket_desc;
      out.push_back(std::move(r));
      continue;
    }
    std::vector<NOrbitMatrix> matrices;
    for (const Member& m : members)
      matrices.push_back(n_orbit(m.cg->group));
    bool any_undecided = false;
    std::string undecided_pairs;
    r.verdict = Verdict::holds;
    for (std::size_t i = 0; i < members.size() && r.verdict == Verdict::holds; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        IsoResult iso = n_orbits_isomorphic(matrices[i], matrices[j],
                                            options.iso_node_budget);
        if (iso.verdict == IsoVerdict::non_isomorphic) {
          r.verdict = Verdict::fails;
          r.witness = members[i].cg->spec.id + "/" + members[j].cg->spec.id;
          r.note = "same degree and order but non-isomorphic n-orbits; " +
                   bucket_desc;
          break;
        }
        if (iso.verdict == IsoVerdict::undecided) {
          any_undecided = true;
          if (!undecided_pairs.empty()) undecided_pairs += ",";
          undecided_pairs +=
              members[i].cg->spec.id + "/" + members[j].cg->spec.id;
        }
      }
    }
    if (r.verdict == Verdict::holds) {
      if (any_undecided) {
        r.verdict = Verdict::undecided;
        r.witness = undecided_pairs;
        r.note = "isomorphism undecided within the node budget; " + bucket_desc;
      } else {
        r.note = "all pairs have isomorphic n-orbits; " + bucket_desc;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

/// The direct-product claim runs on a fixed list of small factors present
/// in the catalog, every unordered pair with product order at most 36.
std::vector<std::pair<const catalog::CatalogGroup*, const catalog::CatalogGroup*>>
product_pairs(std::span<const catalog::CatalogGroup> groups) {
  static const char* kFactors[] = {"C2", "C3", "C4", "C5", "S3"};
  std::vector<const catalog::CatalogGroup*> factors;
  for (const char* id : kFactors)
    for (const auto& cg : groups)
      if (cg.spec.id == id) {
        factors.push_back(&cg);
        break;
      }
  std::vector<std::pair<const catalog::CatalogGroup*, const catalog::CatalogGroup*>>
      pairs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j)
      if (factors[i]->group.order() * factors[j]->group.order() <= 36)
        pairs.emplace_back(factors[i], factors[j]);
  return pairs;
}

}  // namespace

std::vector<ClaimReport> run_claims(const std::string& claim,
                                    std::span<const catalog::CatalogGroup> groups,
                                    const ClaimOptions& options, unsigned jobs) {
  const bool all = claim == "all";
  if (!all &&
      std::find(claim_ids().begin(), claim_ids().end(), claim) ==
          claim_ids().end())
    throw Error("unknown claim id: " + claim);

  using Task = std::function<std::vector<ClaimReport>()>;
  std::vector<Task> tasks;

  auto per_group = [&](const std::string& id,
                       ClaimReport (*fn)(const catalog::CatalogGroup&)) {
    if (!all && claim != id) return;
    for (const auto& cg : groups)
      tasks.push_back([fn, &cg] { return std::vector<ClaimReport>{fn(cg)}; });
  };

  per_group("L1-block-kernel", check_block_kernel_normal);
  per_group("T2-odd-primitive", check_primitive_odd_not_simple);
  per_group("L3-fix-at-most-one", check_fixes_at_most_one);
  per_group("C4-stab-semiregular", check_stabilizer_semiregular);
  per_group("C5-regular-subgroup", check_regular_subgroup);
  per_group("C6-ld", check_ld);
  per_group("C7-div4", check_div4);

  if (all || claim == "H1-hunt") {
    unsigned degree_max = 0;
    for (const auto& cg : groups)
      degree_max = std::max(degree_max, cg.group.degree());
    tasks.push_back([groups, degree_max, &options] {
      return hunt_hypothesis(groups, degree_max, options);
    });
  }

  per_group("P-regular-element", find_regular_element);

  if (all || claim == "LD-direct-product") {
    for (auto [a, b] : product_pairs(groups))
      tasks.push_back([a, b] {
        return std::vector<ClaimReport>{
            check_direct_product_ld_intransitive(*a, *b)};
      });
  }

  std::vector<std::vector<ClaimReport>> results(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        results[i] = tasks[i]();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<ClaimReport> out;
  for (auto& batch : results)
    for (auto& r : batch) out.push_back(std::move(r));
  return out;
}

bool any_fails(std::span<const ClaimReport> reports) {
  return std::any_of(reports.begin(), reports.end(), [](const ClaimReport& r) {
    return r.verdict == Verdict::fails;
  });
}

}  // namespace korbit::claims
