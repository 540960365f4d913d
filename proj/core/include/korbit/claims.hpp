#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "korbit/catalog.hpp"
#include "korbit/group.hpp"

namespace korbit::claims {

enum class Verdict { holds, fails, not_applicable, undecided };

std::string_view to_string(Verdict v);

/// Outcome of checking one structural claim against one catalog group.
/// A `fails` verdict always carries a witness that re-verifies on its own;
/// `not_applicable` records why the hypothesis filter rejected the group.
struct ClaimReport {
  std::string claim_id;
  std::string group_id;
  Verdict verdict = Verdict::not_applicable;
  std::string witness;  // canonical text form, empty if none
  std::string note;
  double elapsed_seconds = 0.0;  // excluded from JSON output
};

struct ClaimOptions {
  std::uint64_t iso_node_budget = 1'000'000;
};

/// The fixed claim identifiers, in report order.
const std::vector<std::string>& claim_ids();

// -- building blocks exposed for direct exploration ------------------------

/// Applicability filter shared by the odd-order claims: transitive,
/// primitive in the non-abelian convention, odd order.
struct Applicability {
  bool ok = false;
  std::string reason;  // set when !ok
};
Applicability odd_primitive_filter(const PermGroup& g);

/// First non-identity element (in sorted order) fixing two or more points.
std::optional<Perm> find_multi_fixing_element(const PermGroup& g);

/// Fixed-point-free elements plus the identity, as a subgroup if that set
/// is closed under the group operation.
std::optional<Subgroup> frobenius_kernel_candidate(const PermGroup& g);

/// "The representation is md": the point stabilizer is maximal among
/// core-free subgroups. Requires transitivity and a feasible lattice.
bool representation_is_md(const PermGroup& g);

// -- the claims -------------------------------------------------------------

ClaimReport check_block_kernel_normal(const catalog::CatalogGroup& cg);
ClaimReport check_primitive_odd_not_simple(const catalog::CatalogGroup& cg);
ClaimReport check_fixes_at_most_one(const catalog::CatalogGroup& cg);
ClaimReport check_stabilizer_semiregular(const catalog::CatalogGroup& cg);
ClaimReport check_regular_subgroup(const catalog::CatalogGroup& cg);
ClaimReport check_ld(const catalog::CatalogGroup& cg);
ClaimReport check_div4(const catalog::CatalogGroup& cg);
ClaimReport find_regular_element(const catalog::CatalogGroup& cg);
ClaimReport check_direct_product_ld_intransitive(const catalog::CatalogGroup& g,
                                                 const catalog::CatalogGroup& h,
                                                 GroupConfig config = {});

/// Bucket the primitive md catalog groups by (degree, order) and test all
/// same-bucket pairs for n-orbit isomorphism. One report per bucket, plus
/// one not-applicable report per group whose md status is unavailable.
std::vector<ClaimReport> hunt_hypothesis(
    std::span<const catalog::CatalogGroup> groups, unsigned degree_max,
    const ClaimOptions& options = {});

/// Run one claim (or "all") over a catalog with a deterministic report
/// order; work is spread over `jobs` threads, aggregation order is fixed.
std::vector<ClaimReport> run_claims(const std::string& claim_id_or_all,
                                    std::span<const catalog::CatalogGroup> groups,
                                    const ClaimOptions& options = {},
                                    unsigned jobs = 1);

bool any_fails(std::span<const ClaimReport> reports);

}  // namespace korbit::claims
