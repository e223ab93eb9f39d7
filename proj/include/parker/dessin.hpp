#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "parker/group.hpp"
#include "parker/perm.hpp"

namespace parker {

using Partition = std::vector<std::size_t>;

/// A dessin given by its black and white vertex rotations on n edges.
///
/// The face permutation is c = (ab)^-1 so that a*b*c = 1 under the library's
/// composition convention. Construction checks degrees only; connectivity is
/// checked by validate_connected and by parse_dessin.
class Dessin {
 public:
  Dessin(Perm a, Perm b);

  std::size_t degree() const { return a_.degree(); }
  const Perm& a() const { return a_; }
  const Perm& b() const { return b_; }
  const Perm& c() const { return c_; }

 private:
  Perm a_;
  Perm b_;
  Perm c_;
};

/// Parses the dessin text format:
///
///   file   := stmt+             stmt := "n=" INT | "a=" cycles | "b=" cycles
///   cycles := "()" | ( "(" INT (SP INT)* ")" )+
///
/// Statements are separated by whitespace, each appears exactly once, points
/// are 1-based and omitted points are fixed. Throws ParseError on syntax errors
/// and InputError on range, disjointness or connectivity violations.
Dessin parse_dessin(std::string_view text);

/// Renders a dessin in the input format ("n=3 a=(1 2 3) b=(1 2)").
std::string to_dessin_string(const Dessin& d);

/// True iff <a, b> is transitive on the edges.
bool validate_connected(const Dessin& d);

/// (cycle_type(a), cycle_type(b), cycle_type(c)).
std::array<Partition, 3> passport(const Dessin& d);

/// Genus from V - E + F = 2 - 2g; throws InputError for a disconnected dessin.
std::size_t genus(const Dessin& d);

GroupTable monodromy_group(const Dessin& d, std::size_t cap = kDefaultGroupCap);

}  // namespace parker
