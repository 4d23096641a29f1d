#include "chordal/lower_bound.hpp"

#include <algorithm>
#include <random>

namespace chordal {

void LBInstance::validate() const {
  std::uint32_t m = basis_nodes;
  if (m < 3 || (m & (m + 1)) != 0)
    throw std::invalid_argument("lb: basis node count must be 2^h - 1 with h >= 2");
  if (leaf_bound < 2 || leaf_bound > m)
    throw std::invalid_argument("lb: leaf bound out of range");
  std::uint32_t leaves = (m + 1) / 2;
  if (leaves % (leaf_bound - 1) != 0)
    throw std::invalid_argument("lb: k-1 must divide the leaf count (m+1)/2");
  if (free_dependents < 1) throw std::invalid_argument("lb: need at least one free dependent");
}

NodeSet lb_span(std::uint32_t m, const NodeSet& j_nodes) {
  if (j_nodes.empty()) throw std::invalid_argument("lb_span: empty node set");
  for (auto v : j_nodes)
    if (v < 1 || v > m) throw std::invalid_argument("lb_span: node id out of range");
  // lca of the whole set, then union of paths from each node up to it
  auto depth = [](std::uint32_t v) { return floor_log2(v); };
  std::uint32_t l = j_nodes[0];
  for (auto v : j_nodes) {
    std::uint32_t a = l, b = v;
    while (depth(a) > depth(b)) a >>= 1;
    while (depth(b) > depth(a)) b >>= 1;
    while (a != b) {
      a >>= 1;
      b >>= 1;
    }
    l = a;
  }
  NodeSet out;
  for (auto v : j_nodes)
    for (std::uint32_t x = v; x != l; x >>= 1) out.push_back(x);
  out.push_back(l);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NodeSet> lb_fixed_subtrees(const LBInstance& inst) {
  inst.validate();
  std::uint32_t m = inst.basis_nodes;
  std::uint32_t first_leaf = (m + 1) / 2;
  std::vector<NodeSet> out;
  for (std::uint32_t t = 0; t < inst.fixed_dependents(); ++t) {
    NodeSet nodes;
    for (std::uint32_t j = 0; j < inst.leaf_bound - 1; ++j) {
      for (std::uint32_t x = first_leaf + t * (inst.leaf_bound - 1) + j; x != 1; x >>= 1)
        nodes.push_back(x);
    }
    nodes.push_back(1);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    out.push_back(std::move(nodes));
  }
  return out;
}

std::vector<NodeSet> lb_construct(const LBInstance& inst, const std::vector<NodeSet>& choices) {
  inst.validate();
  if (choices.size() != inst.free_dependents)
    throw std::invalid_argument("lb_construct: wrong number of choice sets");
  std::vector<NodeSet> out;
  out.reserve(choices.size());
  for (const auto& j_nodes : choices) {
    if (j_nodes.size() != inst.leaf_bound)
      throw std::invalid_argument("lb_construct: choice set must have exactly k nodes");
    for (std::size_t x = 1; x < j_nodes.size(); ++x)
      if (j_nodes[x] == j_nodes[x - 1])
        throw std::invalid_argument("lb_construct: duplicate node in choice set");
    out.push_back(lb_span(inst.basis_nodes, j_nodes));
  }
  return out;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// combination with index `rank` in lexicographic order, 0-based
NodeSet unrank_combo(std::uint32_t m, std::uint32_t k, std::uint64_t rank) {
  NodeSet out;
  std::uint32_t next = 1;
  for (std::uint32_t slot = k; slot > 0; --slot) {
    while (true) {
      std::uint64_t with_next = binomial(m - next, slot - 1);
      if (rank < with_next) break;
      rank -= with_next;
      ++next;
    }
    out.push_back(next++);
  }
  return out;
}

}  // namespace

DistinctnessReport lb_distinctness(const LBInstance& inst,
                                   const std::vector<std::vector<NodeSet>>& sample) {
  inst.validate();
  std::uint32_t m = inst.basis_nodes;
  std::uint32_t d = inst.free_dependents;
  std::size_t words = (m + 64) / 64;

  struct Entry {
    std::vector<std::uint64_t> tuple_key;  // the choice sets themselves, flattened
    std::vector<std::uint64_t> sig;        // concatenated span masks
    std::size_t idx;
  };
  std::vector<Entry> entries;
  entries.reserve(sample.size());
  for (std::size_t t = 0; t < sample.size(); ++t) {
    const auto& tup = sample[t];
    std::vector<NodeSet> spans = lb_construct(inst, tup);
    Entry e;
    e.idx = t;
    for (const auto& s : tup) {
      NodeSet c = s;
      std::sort(c.begin(), c.end());
      for (auto v : c) e.tuple_key.push_back(v);
    }
    e.sig.assign(d * words, 0);
    for (std::uint32_t i = 0; i < d; ++i)
      for (auto v : spans[i]) e.sig[i * words + v / 64] |= 1ULL << (v % 64);
    entries.push_back(std::move(e));
  }

  // duplicate tuples do not form distinct pairs; drop them first
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.tuple_key < b.tuple_key; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) { return a.tuple_key == b.tuple_key; }),
                entries.end());

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.sig != b.sig ? a.sig < b.sig : a.tuple_key < b.tuple_key;
  });

  DistinctnessReport rep;
  rep.structures = entries.size();
  rep.distinct = entries.empty() ? 0 : 1;
  for (std::size_t t = 1; t < entries.size(); ++t) {
    if (entries[t - 1].sig == entries[t].sig) {
      if (!rep.witness) rep.witness = {sample[entries[t - 1].idx], sample[entries[t].idx]};
    } else {
      ++rep.distinct;
    }
  }
  rep.all_distinct = rep.distinct == rep.structures;
  return rep;
}

DistinctnessReport lb_distinctness(const LBInstance& inst, std::uint64_t cap, std::uint64_t seed) {
  inst.validate();
  std::uint32_t m = inst.basis_nodes;
  std::uint32_t k = inst.leaf_bound;
  std::uint32_t d = inst.free_dependents;
  std::uint64_t combos = binomial(m, k);

  bool exhaustive = true;
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (total > cap / combos) {
      exhaustive = false;
      break;
    }
    total *= combos;
  }

  std::vector<std::vector<NodeSet>> sample;
  if (exhaustive) {
    sample.reserve(total);
    for (std::uint64_t id = 0; id < total; ++id) {
      std::vector<NodeSet> tup(d);
      std::uint64_t rest = id;
      for (std::uint32_t i = d; i > 0; --i) {
        tup[i - 1] = unrank_combo(m, k, rest % combos);
        rest /= combos;
      }
      sample.push_back(std::move(tup));
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, combos - 1);
    sample.reserve(cap);
    for (std::uint64_t t = 0; t < cap; ++t) {
      std::vector<NodeSet> tup(d);
      for (std::uint32_t i = 0; i < d; ++i) tup[i] = unrank_combo(m, k, pick(rng));
      sample.push_back(std::move(tup));
    }
  }
  DistinctnessReport rep = lb_distinctness(inst, sample);
  rep.exhaustive = exhaustive;
  return rep;
}

}  // namespace chordal
