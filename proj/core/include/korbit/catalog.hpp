#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "korbit/group.hpp"

namespace korbit::catalog {

/// One catalog entry in the line-oriented spec format:
///   group <id> deg <n> gens <cycles>[, <cycles>]* [tags <t1> <t2> ...]
/// Generator strings are stored canonically (see to_cycle_string).
struct GroupSpec {
  enum class Source { builtin, file, enumerated };

  std::string id;
  unsigned degree = 0;
  std::vector<std::string> generators;
  std::set<std::string> tags;
  Source source = Source::file;
  std::optional<std::uint64_t> expected_order;  // builtin entries only

  bool has_tag(const std::string& t) const { return tags.count(t) != 0; }
};

/// Parse one spec line. `line_no` is used in error locations.
GroupSpec parse_spec_line(std::string_view line, std::size_t line_no = 1,
                          GroupSpec::Source source = GroupSpec::Source::file);

/// Canonical text form; parse_spec_line(print_spec(s)) == s up to source.
std::string print_spec(const GroupSpec& spec);

/// Parse a whole catalog stream: one group per line, '#' comments and
/// blank lines ignored.
std::vector<GroupSpec> parse_catalog(std::istream& in,
                                     GroupSpec::Source source = GroupSpec::Source::file);
std::vector<GroupSpec> parse_catalog_file(const std::string& path);

/// The built-in seed catalog. Orders are recorded and are verified against
/// the generated group whenever an entry is realized.
std::vector<GroupSpec> builtin_catalog();

/// All transitive subgroups of S_d up to conjugacy, d <= 6, as enumerated
/// specs T<d>.<k>. The count is validated in the tests against a stored
/// brute-force oracle run (tests/oracle/).
std::vector<GroupSpec> enumerate_transitive(unsigned degree);

/// A spec together with its generated group.
struct CatalogGroup {
  GroupSpec spec;
  PermGroup group;
};

/// Parse the generators and generate the group; verifies expected_order.
CatalogGroup realize(const GroupSpec& spec, GroupConfig config = {});

/// Realize a whole catalog in order.
std::vector<CatalogGroup> realize_all(const std::vector<GroupSpec>& specs,
                                      GroupConfig config = {});

const GroupSpec* find_spec(const std::vector<GroupSpec>& specs,
                           const std::string& id);

}  // namespace korbit::catalog
