#pragma once

#include <string>
#include <string_view>

#include "tambara/bispan.hpp"
#include "tambara/indexing.hpp"
#include "tambara/model.hpp"
#include "tambara/ring.hpp"

namespace tambara {

/// cyclic:<n>, klein4, sym:<n>, product:<a>x<b> (operands may be
/// parenthesised), sub:<elements>@<ref>, or a path to a group file.
GroupPtr parse_group_ref(const std::string& ref);

/// `group <n>` followed by the n rows of the multiplication table.
GroupPtr parse_group(std::string_view text, std::string name = {});
std::string write_group(const FiniteGroup& g);

/// e, G, C<n> (least cyclic subgroup of order n), or comma-separated
/// elements (the subgroup they generate), optionally in braces.
Subgroup parse_subgroup(const GroupPtr& g, const std::string& text);
std::string format_subgroup(const FiniteGroup& g, Subgroup h);

/// `gset <ref> <n>` then `g : perm` lines for generators, or the full
/// action table without prefixes.
GSet parse_gset(std::string_view text);
std::string write_gset(const GSet& x);

/// `bispan`, then gset blocks X, S, T, Y and gmap blocks
/// `gmap S X`, `gmap S T`, `gmap T Y`, each followed by the images.
Bispan parse_bispan(std::string_view text);
std::string write_bispan(const Bispan& b);

/// `indexing <ref>` then `adm <H> <K>` lines. Trivial pairs are implied.
/// With `check` the axioms are validated (ValidationError otherwise).
IndexingSystem parse_indexing(std::string_view text, bool check = true);
std::string write_indexing(const IndexingSystem& sys);

/// `ring <n>`, n rows of addition, n rows of multiplication, then one
/// automorphism per group element.
GRing parse_ring(std::string_view text, const GroupPtr& g);
std::string write_ring(const GRing& r);

/// Whitespace or comma separated integer coordinates.
Value parse_value(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace tambara
