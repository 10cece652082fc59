#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "qrk/hypergraph.hpp"
#include "qrk/hypergraph_io.hpp"

namespace qrk::testing {

inline std::filesystem::path data_dir() { return QRK_DATA_DIR; }

inline OrthoHypergraph load_fixture(const std::string& name) { return load_hypergraph(data_dir() / name); }

inline OrthoHypergraph make_graph(const std::vector<std::string>& atoms,
                                  const std::vector<std::vector<std::string>>& contexts) {
  OrthoHypergraph h;
  for (const auto& a : atoms) h.add_atom(a);
  for (const auto& c : contexts) h.add_context(c);
  return h;
}

inline OrthoHypergraph single_context(const std::string& prefix = "") {
  return make_graph({prefix + "a", prefix + "b", prefix + "c"}, {{prefix + "a", prefix + "b", prefix + "c"}});
}

/// Five contexts {a_i, b_i, a_{i+1 mod 5}} on ten atoms.
inline OrthoHypergraph pentagon() {
  std::vector<std::string> atoms;
  std::vector<std::vector<std::string>> contexts;
  for (int i = 0; i < 5; ++i) {
    atoms.push_back("a" + std::to_string(i));
    atoms.push_back("b" + std::to_string(i));
  }
  for (int i = 0; i < 5; ++i) {
    contexts.push_back({"a" + std::to_string(i), "b" + std::to_string(i), "a" + std::to_string((i + 1) % 5)});
  }
  return make_graph(atoms, contexts);
}

/// Disjoint union of two graphs with disjoint ids.
inline OrthoHypergraph disjoint_union(const OrthoHypergraph& x, const OrthoHypergraph& y) {
  OrthoHypergraph h;
  for (const auto* g : {&x, &y}) {
    for (const auto& a : g->atoms()) h.add_atom(a.id, a.label);
  }
  for (const auto* g : {&x, &y}) {
    for (const auto& c : g->contexts()) h.add_context(c);
  }
  return h;
}

/// Small valid hypergraph: `atoms` atoms named prefix0.., contexts of size 2-4,
/// every atom covered. Atom count stays small enough for 2^n brute force.
inline OrthoHypergraph random_graph(std::mt19937_64& rng, int atoms, const std::string& prefix) {
  std::vector<std::string> ids;
  for (int i = 0; i < atoms; ++i) ids.push_back(prefix + std::to_string(i));
  std::vector<std::vector<std::string>> contexts;
  std::vector<bool> covered(atoms, false);
  std::uniform_int_distribution<int> size_dist(2, std::min(4, atoms));
  std::uniform_int_distribution<int> count_dist(1, atoms);
  const int n_contexts = count_dist(rng);
  auto add = [&](std::vector<int> idx) {
    std::vector<std::string> ctx;
    for (int i : idx) {
      ctx.push_back(ids[i]);
      covered[i] = true;
    }
    contexts.push_back(std::move(ctx));
  };
  for (int k = 0; k < n_contexts; ++k) {
    std::vector<int> pool(atoms);
    for (int i = 0; i < atoms; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size_dist(rng));
    add(pool);
  }
  for (int i = 0; i < atoms; ++i) {
    if (!covered[i]) add({i, (i + 1) % atoms});
  }
  return make_graph(ids, contexts);
}

}  // namespace qrk::testing
