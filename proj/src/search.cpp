#include "ooc/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ooc/differences.hpp"

namespace ooc {

std::vector<OrbitRep> enumerate_orbit_reps(int v, int w) {
  if (w < 1 || w > v)
    throw std::invalid_argument("enumerate_orbit_reps: requires 1 <= w <= v");
  // A lexicographically least translate always contains 0, so only subsets
  // with first element 0 are candidates.
  std::vector<OrbitRep> reps;
  std::vector<int> subset(static_cast<size_t>(w));
  subset[0] = 0;
  if (w == 1) {
    Codeword c(v, {0});
    reps.push_back({c, orbit_size(c), orbit_size(c) == v});
    return reps;
  }
  std::vector<size_t> idx(static_cast<size_t>(w - 1));
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const int rest = v - 1;
  while (true) {
    for (size_t i = 0; i < idx.size(); ++i) subset[i + 1] = static_cast<int>(idx[i]) + 1;
    Codeword c(v, subset);
    if (least_translate(c) == c.support()) {
      int len = orbit_size(c);
      reps.push_back({std::move(c), len, len == v});
    }
    // next (w-1)-combination of {0..v-2}
    size_t i = idx.size();
    while (i > 0 && idx[i - 1] == static_cast<size_t>(rest) - (idx.size() - (i - 1))) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
  return reps;
}

CompatibilityGraph build_graph(int v, int w, int lambda_a, int lambda_c,
                               bool include_short_orbits) {
  CompatibilityGraph g;
  g.v = v;
  g.w = w;
  g.lambda_a = lambda_a;
  g.lambda_c = lambda_c;
  for (auto& rep : enumerate_orbit_reps(v, w)) {
    if (!rep.full && !include_short_orbits) continue;
    if (internal_differences(rep.rep).max_multiplicity() <= lambda_a)
      g.vertices.push_back(std::move(rep.rep));
  }
  const size_t n = g.vertices.size();
  g.adj.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (external_differences(g.vertices[i], g.vertices[j]).max_multiplicity() <= lambda_c) {
        g.adj[i][j] = true;
        g.adj[j][i] = true;
      }
    }
  }
  return g;
}

namespace {

class CliqueSearcher {
public:
  CliqueSearcher(const CompatibilityGraph& g, double budget_seconds)
      : g_(g),
        unlimited_(budget_seconds <= 0),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds > 0 ? budget_seconds : 0))) {}

  std::uint64_t nodes() const { return nodes_; }
  bool out_of_time() const { return out_of_time_; }

  std::vector<int> run_max() {
    std::vector<int> all(g_.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  // Lexicographically least clique of the given size; empty on timeout.
  std::vector<int> run_lexmin(int k) {
    std::vector<int> chosen;
    std::vector<int> pool(g_.vertices.size());
    for (size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);
    while (static_cast<int>(chosen.size()) < k) {
      bool advanced = false;
      for (int v : pool) {
        std::vector<int> rest;
        for (int u : pool)
          if (u > v && g_.edge(u, v)) rest.push_back(u);
        if (exists_clique(rest, k - static_cast<int>(chosen.size()) - 1)) {
          chosen.push_back(v);
          pool = std::move(rest);
          advanced = true;
          break;
        }
        if (out_of_time_) return {};
      }
      if (!advanced) return {};
    }
    return chosen;
  }

private:
  bool time_ok() {
    if (out_of_time_) return false;
    if (!unlimited_ && std::chrono::steady_clock::now() > deadline_) out_of_time_ = true;
    return !out_of_time_;
  }

  // Greedy sequential coloring; afterwards candidates are sorted by color
  // class so iteration from the back visits the highest bound first.
  void color_sort(std::vector<int>& cand, std::vector<int>& colors) const {
    std::vector<std::vector<int>> classes;
    for (int v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool conflict = false;
        for (int u : cls)
          if (g_.edge(u, v)) {
            conflict = true;
            break;
          }
        if (!conflict) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    cand.clear();
    colors.clear();
    for (size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        cand.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
    }
  }

  void expand(std::vector<int>& cand) {
    ++nodes_;
    if (!time_ok()) return;
    std::vector<int> colors;
    color_sort(cand, colors);
    while (!cand.empty()) {
      const int v = cand.back();
      const int bound = colors.back();
      if (static_cast<int>(current_.size()) + bound <= static_cast<int>(best_.size())) return;
      cand.pop_back();
      colors.pop_back();
      current_.push_back(v);
      std::vector<int> next;
      for (int u : cand)
        if (g_.edge(u, v)) next.push_back(u);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      if (out_of_time_) return;
    }
  }

  bool exists_clique(std::vector<int> cand, int k) {
    if (k <= 0) return true;
    if (static_cast<int>(cand.size()) < k) return false;
    ++nodes_;
    if (!time_ok()) return false;
    std::vector<int> colors;
    color_sort(cand, colors);
    while (!cand.empty()) {
      if (colors.back() < k) return false;
      const int v = cand.back();
      cand.pop_back();
      colors.pop_back();
      std::vector<int> next;
      for (int u : cand)
        if (g_.edge(u, v)) next.push_back(u);
      if (exists_clique(std::move(next), k - 1)) return true;
      if (out_of_time_) return false;
    }
    return false;
  }

  const CompatibilityGraph& g_;
  bool unlimited_;
  std::chrono::steady_clock::time_point deadline_;
  bool out_of_time_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<int> best_;
  std::vector<int> current_;
};

}  // namespace

SearchResult max_clique(const CompatibilityGraph& g, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  CliqueSearcher searcher(g, budget_seconds);
  std::vector<int> incumbent = searcher.run_max();
  result.exhaustive = !searcher.out_of_time();
  result.witness_indices = incumbent;
  if (result.exhaustive && !incumbent.empty()) {
    // Deterministic re-scan: among all maximum cliques pick the
    // lexicographically least on sorted vertex indices.
    std::vector<int> lexmin = searcher.run_lexmin(static_cast<int>(incumbent.size()));
    if (!lexmin.empty()) result.witness_indices = lexmin;
  }
  result.phi = static_cast<int>(result.witness_indices.size());
  result.nodes = searcher.nodes();
  if (result.phi >= 1) {
    std::vector<Codeword> words;
    for (int idx : result.witness_indices) words.push_back(g.vertices[static_cast<size_t>(idx)]);
    result.witness = OocFamily(std::move(words));
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SearchResult phi_search(int v, int w, int lambda_a, int lambda_c, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  CompatibilityGraph g = build_graph(v, w, lambda_a, lambda_c);
  SearchResult result = max_clique(g, budget_seconds);
  if (result.witness && !verify_ooc(*result.witness, lambda_a, lambda_c).ok)
    throw std::logic_error("phi_search: witness failed verification");
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace ooc
