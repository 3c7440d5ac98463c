#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "onecall/harness.hpp"

namespace onecall {

std::vector<Formula> enumerate_formulas(Var max_vars, std::size_t max_nodes) {
  if (max_vars > 3) throw BudgetExceeded("enumerate_small supports at most 3 variables");

  // by_size[s] holds every formula with exactly s nodes.
  std::vector<std::vector<Formula>> by_size(max_nodes + 1);
  std::size_t total = 0;
  auto add = [&](std::size_t s, Formula f) {
    if (++total > kMaxFormulaCount)
      throw BudgetExceeded("formula enumeration exceeds " + std::to_string(kMaxFormulaCount));
    by_size[s].push_back(std::move(f));
  };

  if (max_nodes >= 1) {
    for (Var v = 1; v <= max_vars; ++v) add(1, Formula::var(v));
    add(1, Formula::constant(true));
    add(1, Formula::constant(false));
  }
  for (std::size_t s = 2; s <= max_nodes; ++s) {
    for (const auto& c : by_size[s - 1]) add(s, Formula::negate(c));
    for (std::size_t left = 1; left + 1 < s; ++left) {
      std::size_t right = s - 1 - left;
      for (const auto& l : by_size[left])
        for (const auto& r : by_size[right]) {
          add(s, Formula::conj(l, r));
          add(s, Formula::disj(l, r));
        }
    }
  }

  std::vector<std::pair<std::string, Formula>> keyed;
  keyed.reserve(total);
  for (auto& level : by_size)
    for (auto& f : level) keyed.emplace_back(serialize_expr(f), std::move(f));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return x.first < y.first;
  });

  std::vector<Formula> out;
  std::unordered_set<std::string> seen;
  for (auto& [text, f] : keyed)
    if (seen.insert(text).second) out.push_back(std::move(f));
  return out;
}

Corpus enumerate_small(Var max_vars, std::size_t max_nodes, std::size_t pair_limit) {
  if (pair_limit == 0 || pair_limit > kMaxPairCount)
    throw BudgetExceeded("pair limit must be in [1, " + std::to_string(kMaxPairCount) + "]");

  Corpus corpus;
  corpus.params.mode = CorpusMode::ExhaustiveSmall;
  corpus.params.max_vars = max_vars;
  corpus.params.max_nodes = max_nodes;
  corpus.params.pair_limit = pair_limit;
  corpus.formulas = enumerate_formulas(max_vars, max_nodes);

  const std::size_t n = corpus.formulas.size();
  const std::size_t square = n * n;
  std::size_t stride = 1;
  if (square > pair_limit) {
    stride = (square + pair_limit - 1) / pair_limit;
    while (std::gcd(stride, n) != 1) ++stride;
  }
  for (std::size_t t = 0; t < square; t += stride)
    corpus.pairs.emplace_back(corpus.formulas[t / n], corpus.formulas[t % n]);
  return corpus;
}

CnfFormula gen_random_cnf_clauses(Var vars, std::size_t clauses, std::size_t width, std::uint64_t seed) {
  if (width > vars) throw std::invalid_argument("clause width exceeds variable count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Var> pick(1, std::max<Var>(vars, 1));
  std::bernoulli_distribution positive(0.5);

  CnfFormula cnf;
  cnf.num_vars = vars;
  cnf.clauses.reserve(clauses);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<int> clause;
    clause.reserve(width);
    while (clause.size() < width) {
      int v = static_cast<int>(pick(rng));
      bool dup = std::any_of(clause.begin(), clause.end(), [v](int lit) { return std::abs(lit) == v; });
      if (dup) continue;
      clause.push_back(positive(rng) ? v : -v);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

Formula gen_random_cnf(Var vars, std::size_t clauses, std::size_t width, std::uint64_t seed) {
  return cnf_to_formula(gen_random_cnf_clauses(vars, clauses, width, seed));
}

Corpus random_corpus(std::size_t pairs, Var vars, std::size_t clauses, std::size_t width, std::uint64_t seed) {
  if (pairs > kMaxPairCount) throw BudgetExceeded("random corpus pair count too large");
  Corpus corpus;
  corpus.params.mode = CorpusMode::Random;
  corpus.params.pairs = pairs;
  corpus.params.vars = vars;
  corpus.params.clauses = clauses;
  corpus.params.width = width;
  corpus.params.seed = seed;

  std::mt19937_64 seeds(seed);
  corpus.pairs.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    std::uint64_t sa = seeds();
    std::uint64_t sb = seeds();
    corpus.pairs.emplace_back(gen_random_cnf(vars, clauses, width, sa), gen_random_cnf(vars, clauses, width, sb));
  }
  return corpus;
}

}  // namespace onecall
