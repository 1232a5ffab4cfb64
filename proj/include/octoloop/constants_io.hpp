#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "octoloop/algebra.hpp"
#include "octoloop/rational.hpp"

namespace octoloop {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the structure-constants JSON format:
///   { "dim": n, "basis": [names], "entries": [[i, j, k, "p/q"], ...] }
/// Omitted (j,k) pairs are zero; an entry fixes its antisymmetric image, and
/// a file naming both an entry and its image is rejected. Values must be
/// decimal-free rational strings.
StructureConstants<Rational> parse_structure_constants(const std::string& json_text);

StructureConstants<Rational> load_structure_constants(const std::string& path);

/// Canonical rendering: entries with j < k only, sorted, exact "p/q" values.
/// `comment_lines`, when nonempty, are emitted under a "comment" key (the
/// loader ignores it); cmd_derive uses this for the multiplication-table
/// audit block.
std::string render_structure_constants(const StructureConstants<Rational>& sc,
                                       const std::vector<std::string>& comment_lines = {});

void save_structure_constants(const std::string& path,
                              const StructureConstants<Rational>& sc,
                              const std::vector<std::string>& comment_lines = {});

template <class S>
StructureConstants<S> convert_constants(const StructureConstants<Rational>& sc) {
  if constexpr (std::is_same_v<S, Rational>) {
    return sc;
  } else {
    StructureConstants<S> out{sc.dim, sc.basis, {}};
    out.c.reserve(sc.c.size());
    for (const auto& q : sc.c) out.c.push_back(q.get_d());
    return out;
  }
}

}  // namespace octoloop
