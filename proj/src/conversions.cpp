#include "ooc/conversions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ooc/profile.hpp"

namespace ooc {

namespace {

// Hamming distance of equal-weight words: |A Δ B| = 2(w - |A ∩ B|).
int hamming_distance(const Codeword& a, const Codeword& b) {
  int common = 0;
  for (int q : a.support())
    if (b.contains(q)) ++common;
  return 2 * (a.weight() - common);
}

void require_uniform(const std::vector<Codeword>& codewords, const char* what) {
  if (codewords.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  for (const auto& c : codewords) {
    if (c.modulus() != codewords.front().modulus())
      throw std::invalid_argument(std::string(what) + ": mixed moduli");
    if (c.weight() != codewords.front().weight())
      throw std::invalid_argument(std::string(what) + ": mixed weights");
  }
}

// Every t-subset of points lies in at most one block.
bool covers_at_most_once(const std::vector<Codeword>& blocks, int t) {
  std::map<std::vector<int>, int> cover;
  std::vector<int> pick(static_cast<size_t>(t));
  for (const auto& block : blocks) {
    const auto& s = block.support();
    if (static_cast<int>(s.size()) < t) continue;
    std::vector<size_t> idx(static_cast<size_t>(t));
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
      for (size_t i = 0; i < idx.size(); ++i) pick[i] = s[idx[i]];
      if (++cover[pick] > 1) return false;
      size_t i = idx.size();
      while (i > 0 && idx[i - 1] == s.size() - (idx.size() - (i - 1))) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace

DistanceReport hamming_and_cyclic_distances(const std::vector<Codeword>& codewords) {
  require_uniform(codewords, "hamming_and_cyclic_distances");
  const int w = codewords.front().weight();
  DistanceReport report;

  int min_auto = w;  // smallest 2(w - mu) comes from the largest collision count
  int min_cross = -1;
  for (size_t i = 0; i < codewords.size(); ++i) {
    min_auto = std::min(min_auto, w - auto_profile(codewords[i]).max_entry());
    for (size_t j = i + 1; j < codewords.size(); ++j) {
      int dh = hamming_distance(codewords[i], codewords[j]);
      if (!report.d_hamming || dh < *report.d_hamming) report.d_hamming = dh;
      if (dh == 0) report.degenerate = true;
      int c = w - max_cross_correlation(codewords[i], codewords[j]);
      if (min_cross < 0 || c < min_cross) min_cross = c;
    }
  }
  report.d_cyclic = 2 * (min_cross < 0 ? min_auto : std::min(min_auto, min_cross));
  return report;
}

ConstantWeightCode ooc_to_cwcpc(const OocFamily& f) {
  if (!is_nondegenerate(f))
    throw std::invalid_argument("ooc_to_cwcpc: family is degenerate");
  const int v = f.modulus();
  const int w = f.weight();
  const int lc = f.lambda_c();

  std::vector<Codeword> words = f.codewords();
  if (f.size() >= 2) {
    // Re-shift the second member of the lexicographically first attaining pair
    // so lambda_c is realized at relative shift 0; smallest such s wins.
    bool placed = false;
    for (int i = 0; i < f.size() && !placed; ++i) {
      for (int j = i + 1; j < f.size() && !placed; ++j) {
        auto prof = cross_profile(f.at(i), f.at(j));
        if (prof.max_entry() != lc) continue;
        for (int s = 0; s < v; ++s) {
          if (prof.at_delta(mod_residue(-s, v)) == lc) {
            words[static_cast<size_t>(j)] = f.at(j).shifted(s);
            placed = true;
            break;
          }
        }
      }
    }
  }

  ConstantWeightCode cw;
  cw.v = v;
  cw.w = w;
  cw.codewords = std::move(words);
  auto dist = hamming_and_cyclic_distances(cw.codewords);
  cw.d_hamming = dist.d_hamming;
  cw.d_cyclic = dist.d_cyclic;
  cw.degenerate = dist.degenerate;
  if (cw.d_hamming && *cw.d_hamming != 2 * (w - lc))
    throw std::logic_error("ooc_to_cwcpc: minimum distance disagrees with 2(w - lambda_c)");
  if (*cw.d_cyclic != 2 * (w - std::max(f.lambda_a(), lc)))
    throw std::logic_error("ooc_to_cwcpc: cyclic distance disagrees with 2(w - lambda)");
  return cw;
}

OocFamily cwcpc_to_ooc(const ConstantWeightCode& c) {
  OocFamily f(c.codewords);
  if (!is_nondegenerate(f))
    throw std::invalid_argument("cwcpc_to_ooc: code is not cyclically permutable");
  return f;
}

ConstantWeightCode cyclic_closure(const OocFamily& f) {
  if (!is_nondegenerate(f))
    throw std::invalid_argument("cyclic_closure: family is degenerate");
  const int v = f.modulus();
  const int w = f.weight();

  std::vector<Codeword> shifts;
  shifts.reserve(static_cast<size_t>(v) * static_cast<size_t>(f.size()));
  std::set<std::vector<int>> seen;
  for (const auto& c : f.codewords()) {
    for (int s = 0; s < v; ++s) {
      Codeword moved = c.shifted(s);
      if (!seen.insert(moved.support()).second)
        throw std::logic_error("cyclic_closure: shifts of a non-degenerate family collided");
      shifts.push_back(std::move(moved));
    }
  }

  int min_dist = 2 * w;
  for (size_t i = 0; i < shifts.size(); ++i)
    for (size_t j = i + 1; j < shifts.size(); ++j)
      min_dist = std::min(min_dist, hamming_distance(shifts[i], shifts[j]));
  const int lambda = std::max(f.lambda_a(), f.lambda_c());
  if (min_dist != 2 * w - 2 * lambda)
    throw std::logic_error("cyclic_closure: minimum distance disagrees with 2w - 2*lambda");

  ConstantWeightCode cw;
  cw.v = v;
  cw.w = w;
  cw.codewords = std::move(shifts);
  cw.d_hamming = min_dist;
  cw.d_cyclic = std::nullopt;  // the closure is not cyclically permutable
  return cw;
}

bool check_df(const std::vector<Codeword>& sets, int lambda) {
  require_uniform(sets, "check_df");
  const int v = sets.front().modulus();
  std::map<int, int> unionCounts;
  for (const auto& q : sets)
    for (const auto& [delta, mult] : internal_differences(q).counts) unionCounts[delta] += mult;
  for (int delta = 1; delta < v; ++delta) {
    auto it = unionCounts.find(delta);
    if ((it == unionCounts.end() ? 0 : it->second) != lambda) return false;
  }
  return true;
}

SdfVerdict check_sdf(const std::vector<Codeword>& sets, int lambda) {
  require_uniform(sets, "check_sdf");
  SdfVerdict verdict;
  std::map<int, int> owner;  // residue -> index of the block holding it
  for (size_t i = 0; i < sets.size(); ++i) {
    for (const auto& [delta, mult] : internal_differences(sets[i]).counts) {
      auto [it, fresh] = owner.emplace(delta, static_cast<int>(i));
      if (!fresh && it->second != static_cast<int>(i)) return {};  // two blocks share a difference
      if (mult > lambda) return {};
      if (mult == lambda) verdict.proper = true;
    }
  }
  verdict.ok = true;
  return verdict;
}

bool check_rdf(const std::vector<Codeword>& sets, int subgroup_order, int lambda) {
  require_uniform(sets, "check_rdf");
  const int v = sets.front().modulus();
  if (subgroup_order < 1 || v % subgroup_order != 0)
    throw std::invalid_argument("check_rdf: subgroup order must divide v");
  const int step = v / subgroup_order;  // the order-n subgroup is <v/n>
  std::map<int, int> unionCounts;
  for (const auto& q : sets)
    for (const auto& [delta, mult] : internal_differences(q).counts) unionCounts[delta] += mult;
  for (int delta = 1; delta < v; ++delta) {
    const bool in_subgroup = delta % step == 0;
    auto it = unionCounts.find(delta);
    const int count = it == unionCounts.end() ? 0 : it->second;
    if (count != (in_subgroup ? 0 : lambda)) return false;
  }
  return true;
}

OocFamily sdf_to_ooc(const std::vector<Codeword>& sets, int lambda) {
  if (!check_sdf(sets, lambda).ok)
    throw std::invalid_argument("sdf_to_ooc: the sets do not form an SDF for this lambda");
  OocFamily f(sets);
  if (!verify_ooc(f, lambda, 1).ok)
    throw std::logic_error("sdf_to_ooc: SDF did not yield a (v, w, lambda, 1)-OOC");
  return f;
}

bool check_sedf(const std::vector<Codeword>& sets, int lambda) {
  require_uniform(sets, "check_sedf");
  const int v = sets.front().modulus();
  std::set<int> used;
  for (const auto& q : sets)
    for (int e : q.support())
      if (!used.insert(e).second)
        throw std::invalid_argument("check_sedf: sets must be pairwise disjoint");
  for (size_t i = 0; i < sets.size(); ++i) {
    std::map<int, int> unionCounts;
    for (size_t j = 0; j < sets.size(); ++j) {
      if (j == i) continue;
      for (const auto& [delta, mult] : external_differences(sets[i], sets[j]).counts)
        unionCounts[delta] += mult;
    }
    for (int delta = 1; delta < v; ++delta) {
      auto it = unionCounts.find(delta);
      if ((it == unionCounts.end() ? 0 : it->second) != lambda) return false;
    }
  }
  return true;
}

OocFamily sedf_to_ooc(const std::vector<Codeword>& sets, int lambda) {
  if (!check_sedf(sets, lambda))
    throw std::invalid_argument("sedf_to_ooc: the sets do not form an SEDF for this lambda");
  int la = 0;
  for (const auto& q : sets) la = std::max(la, internal_differences(q).max_multiplicity());
  OocFamily f(sets);
  if (!verify_ooc(f, la, lambda).ok)
    throw std::logic_error("sedf_to_ooc: SEDF did not yield a (v, w, lambda_a, lambda)-OOC");
  return f;
}

bool check_cac(const OocFamily& f) {
  std::vector<DifferenceMultiset> internals;
  internals.reserve(static_cast<size_t>(f.size()));
  for (const auto& c : f.codewords()) internals.push_back(internal_differences(c));
  for (size_t i = 0; i < internals.size(); ++i)
    for (size_t j = i + 1; j < internals.size(); ++j)
      if (!multiset_intersection(internals[i], internals[j]).counts.empty()) return false;
  return true;
}

bool check_irs(const OocFamily& f, int k, int m) {
  if (k < 1 || m < 1 || f.modulus() != k * m)
    throw std::invalid_argument("check_irs: requires v = k*m");
  for (const auto& c : f.codewords()) {
    if (c.weight() != k) return false;
    std::vector<int> per_block(static_cast<size_t>(k), 0);
    for (int q : c.support()) ++per_block[static_cast<size_t>(q / m)];
    for (int count : per_block)
      if (count != 1) return false;
  }
  return true;
}

CyclicPacking ooc_to_packing(const OocFamily& f, int t) {
  if (t < 1) throw std::invalid_argument("ooc_to_packing: requires t >= 1");
  if (!is_nondegenerate(f))
    throw std::invalid_argument("ooc_to_packing: family is degenerate");
  if (!verify_ooc(f, t - 1, t - 1).ok)
    throw std::invalid_argument("ooc_to_packing: family is not a (v, w, t-1, t-1)-OOC");
  const int v = f.modulus();

  CyclicPacking p;
  p.v = v;
  p.w = f.weight();
  p.t = t;
  p.lambda = 1;
  std::set<std::vector<int>> seen;
  for (const auto& c : f.codewords()) {
    p.orbits.push_back({Codeword(v, least_translate(c)), v, true});
    for (int s = 0; s < v; ++s) {
      Codeword block = c.shifted(s);
      if (!seen.insert(block.support()).second)
        throw std::logic_error("ooc_to_packing: duplicate block from a non-degenerate family");
      p.blocks.push_back(std::move(block));
    }
  }
  if (!covers_at_most_once(p.blocks, t))
    throw std::logic_error("ooc_to_packing: a t-subset landed in two blocks");
  return p;
}

PackingToOocResult packing_to_ooc(const CyclicPacking& p) {
  if (p.blocks.empty()) throw std::invalid_argument("packing_to_ooc: no blocks");
  require_uniform(p.blocks, "packing_to_ooc");
  const int v = p.blocks.front().modulus();
  if (v != p.v || p.blocks.front().weight() != p.w)
    throw std::invalid_argument("packing_to_ooc: blocks disagree with the declared (v, w)");
  if (p.lambda != 1)
    throw std::invalid_argument("packing_to_ooc: only lambda = 1 packings correspond to OOCs");

  // Group blocks into shift orbits by canonical translate.
  std::map<std::vector<int>, std::vector<std::vector<int>>> orbits;
  for (const auto& block : p.blocks)
    orbits[least_translate(block)].push_back(block.support());

  std::vector<Codeword> bases;
  int dropped = 0;
  for (auto& [rep, members] : orbits) {
    Codeword base(v, rep);
    std::set<std::vector<int>> expected;
    for (int s = 0; s < v; ++s) expected.insert(base.shifted(s).support());
    std::set<std::vector<int>> got(members.begin(), members.end());
    if (got != expected || got.size() != members.size())
      throw std::invalid_argument("packing_to_ooc: blocks are not complete shift orbits");
    if (expected.size() == static_cast<size_t>(v))
      bases.push_back(std::move(base));
    else
      ++dropped;  // short orbit: outside the correspondence
  }
  if (!covers_at_most_once(p.blocks, p.t))
    throw std::invalid_argument("packing_to_ooc: input is not a t-(v, w, 1) packing");
  if (bases.empty())
    throw std::invalid_argument("packing_to_ooc: no full orbits, empty family");

  OocFamily f(std::move(bases));
  if (!verify_ooc(f, p.t - 1, p.t - 1).ok)
    throw std::logic_error("packing_to_ooc: a verified packing must yield a (v, w, t-1, t-1)-OOC");
  return {std::move(f), dropped};
}

}  // namespace ooc
