#pragma once

// Exhaustive homomorphism counting from finitely presented groups, and the
// presentations of Seifert manifold fundamental groups.

#include <cstdint>
#include <optional>
#include <vector>

#include "dwcount/group.hpp"
#include "dwcount/seifert.hpp"

namespace dwcount {

// Generators are numbered 1..num_generators; a word entry +k is generator k
// and -k its inverse.
struct Presentation {
  std::size_t num_generators = 0;
  std::vector<std::vector<std::int64_t>> relators;
};

// Longest relator the builders will emit.
inline constexpr std::size_t kMaxWordLength = 1'000'000;

// x_1..x_n, u_1, v_1, ..., u_g, v_g, h with [x_j,h], [u_k,h], [v_k,h],
// x_j^a_j h^b_j and x_1...x_n [u_1,v_1]...[u_g,v_g].
Presentation presentation_orientable(std::int64_t genus, const std::vector<SeifertPair>& pairs);
// x_1..x_n, y_1..y_g, h with [x_j,h], [y_k,h], h^2, x_j^a_j h^b_j and
// x_1...x_n y_1^2...y_g^2.
Presentation presentation_nonorientable_paper(std::int64_t genus, const std::vector<SeifertPair>& pairs);
// As above with y_k h y_k^-1 h in place of [y_k,h] and no h^2.
Presentation presentation_nonorientable_standard(std::int64_t genus, const std::vector<SeifertPair>& pairs);

struct OracleOptions {
  // Bound on |G|^num_generators before any pruning.
  double max_space = 1e9;
  unsigned threads = 1;
};

struct OracleResult {
  std::uint64_t count = 0;
  // 1-based generator enumerated first with centralizer pruning, if any.
  std::optional<std::size_t> central_generator;
  std::uint64_t nodes = 0;  // partial assignments that survived their relators
};

OracleResult count_homs_detailed(const FiniteGroup& g, const Presentation& p,
                                 const OracleOptions& options = {});
inline std::uint64_t count_homs(const FiniteGroup& g, const Presentation& p,
                                const OracleOptions& options = {}) {
  return count_homs_detailed(g, p, options).count;
}

}  // namespace dwcount
