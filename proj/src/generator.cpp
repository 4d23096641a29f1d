#include "chordal/generator.hpp"

#include <algorithm>
#include <random>

namespace chordal {

namespace {

// Connected expansion from a random seed node. A frontier node is accepted only
// if the induced leaf count stays within the bound; rejected nodes are dropped
// from the frontier for good.
std::vector<Label> grow_subtree(const std::vector<std::vector<Label>>& adj, Label seed_node,
                                std::size_t target_size, std::uint32_t leaf_bound,
                                bool exact_leaves, std::mt19937_64& rng) {
  std::vector<Label> nodes{seed_node};
  std::vector<Label> frontier(adj[seed_node]);
  auto leaf_count = [&](const std::vector<Label>& sorted_nodes) {
    std::uint32_t leaves = 0;
    for (Label v : sorted_nodes) {
      std::uint32_t deg = 0;
      for (Label u : adj[v])
        if (std::binary_search(sorted_nodes.begin(), sorted_nodes.end(), u)) ++deg;
      if (deg <= 1) ++leaves;
    }
    return leaves;
  };
  std::vector<Label> sorted{seed_node};
  std::uint32_t leaves = 1;
  while (!frontier.empty()) {
    if (exact_leaves ? leaves >= leaf_bound : nodes.size() >= target_size) break;
    std::size_t pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    Label cand = frontier[pick];
    frontier[pick] = frontier.back();
    frontier.pop_back();
    if (std::binary_search(sorted.begin(), sorted.end(), cand)) continue;
    auto trial = sorted;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), cand), cand);
    std::uint32_t trial_leaves = leaf_count(trial);
    if (trial_leaves > leaf_bound) continue;
    sorted = std::move(trial);
    nodes.push_back(cand);
    leaves = trial_leaves;
    for (Label u : adj[cand])
      if (!std::binary_search(sorted.begin(), sorted.end(), u)) frontier.push_back(u);
  }
  return sorted;
}

}  // namespace

TreeModel gen_model(const GenParams& p) {
  if (p.n < 1 || p.k < 2 || p.tree_nodes < 1)
    throw std::invalid_argument("gen_model: need n >= 1, k >= 2, tree_nodes >= 1");
  if (p.singleton_frac < 0 || p.kleaf_frac < 0 || p.singleton_frac + p.kleaf_frac > 1)
    throw std::invalid_argument("gen_model: bad bias fractions");

  std::mt19937_64 rng(p.seed);
  TreeModel m;
  m.tree_nodes = p.tree_nodes;
  m.root = 1;
  m.k = p.k;
  m.parents.assign(p.tree_nodes, 0);
  for (Label v = 2; v <= p.tree_nodes; ++v)
    m.parents[v - 1] = std::uniform_int_distribution<Label>(1, v - 1)(rng);

  std::vector<std::vector<Label>> adj(p.tree_nodes + 1);
  for (Label v = 2; v <= p.tree_nodes; ++v) {
    adj[v].push_back(m.parents[v - 1]);
    adj[m.parents[v - 1]].push_back(v);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  double mean_len = std::min(p.tree_nodes / 4.0, 32.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Label> node_pick(1, p.tree_nodes);

  m.subtrees.resize(p.n);
  for (std::uint32_t i = 0; i < p.n; ++i) {
    double roll = coin(rng);
    Label seed_node = node_pick(rng);
    if (roll < p.singleton_frac) {
      m.subtrees[i] = {seed_node};
    } else if (roll < p.singleton_frac + p.kleaf_frac) {
      // grow until the leaf bound is saturated (or the tree runs out)
      m.subtrees[i] = grow_subtree(adj, seed_node, 0, p.k, true, rng);
    } else {
      std::size_t len = 1;
      if (mean_len > 1.0)
        len += std::geometric_distribution<std::uint32_t>(1.0 / mean_len)(rng);
      m.subtrees[i] = grow_subtree(adj, seed_node, len, p.k, false, rng);
    }
  }
  m.validate();
  return m;
}

}  // namespace chordal
