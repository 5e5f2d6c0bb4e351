#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ooc/family.hpp"

namespace ooc {

// Every constructor re-measures the correlation maxima of its output and
// throws std::logic_error if they differ from the advertised parameters, so
// an unverified family can never escape this module.

// Two codewords over Z_v: a run X = {0..w-1} and the spread Y of lc-blocks at
// multiples of w, lc = w^2/v. A (v, w, w, w^2/v)-OOC. Requires w | v and v | w^2.
OocFamily construct_block(int v, int w);

// The block pair re-read over Z_{v+1} (a trailing zero appended), giving a
// (v+1, w, w-1, ceil(w^2/(v+1)))-OOC. Same preconditions as construct_block.
OocFamily construct_appended(int v, int w);

// n codewords over Z_{2^n}; the i-th is the period-2^i square wave, half ones
// then half zeros per period. A (2^n, 2^{n-1}, 2^{n-1}, 2^{n-2})-OOC.
// Requires n > 1.
OocFamily construct_powers_of_two(int n);

// The (m-1)/2 sets T_i = {0, i, m-i, m+i, 2m-i} over Z_{2m}, a (2m, 5, 4, 3)-OOC.
// Requires m odd, m > 3.
OocFamily construct_t_family(int m);

// The multiplicative cosets of <g> in Z_p, one codeword per coset, ordered by
// least representative. Parameters (lambda_a, lambda_c) are measured, not
// asserted. Requires p prime and g a nonzero residue.
OocFamily construct_cosets(int p, int g);

// The nonzero squares and nonsquares of Z_p, a
// (p, (p-1)/2, (p-1)/4, (p-1)/4)-OOC. Requires p prime, p == 1 (mod 4).
OocFamily construct_paley(int p);

enum class FamilyId { Block, Appended, PowersOfTwo, TFamily, Coset, PaleySedf };

struct ConstructionRecipe {
  FamilyId id = FamilyId::Block;
  std::vector<int> params;
  // (v, w, lambda_a, lambda_c, N); when present the output must match.
  std::optional<std::array<int, 5>> expected;
};

OocFamily construct(const ConstructionRecipe& recipe);

std::optional<FamilyId> family_id_from_string(const std::string& name);
std::string family_id_name(FamilyId id);

}  // namespace ooc
