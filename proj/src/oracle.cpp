#include "dwcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include "dwcount/errors.hpp"
#include "dwcount/kernels.hpp"

namespace dwcount {
namespace {

using Word = std::vector<std::int64_t>;

void append_power(Word& w, std::int64_t gen, std::int64_t e) {
  const std::size_t len = static_cast<std::size_t>(e < 0 ? -e : e);
  if (w.size() + len > kMaxWordLength)
    throw ValidationError("relator longer than " + std::to_string(kMaxWordLength) + " letters");
  w.insert(w.end(), len, e < 0 ? -gen : gen);
}

Word commutator(std::int64_t a, std::int64_t b) { return {a, b, -a, -b}; }

void check_pairs(std::int64_t genus, const std::vector<SeifertPair>& pairs, bool orientable) {
  validate(SeifertData{orientable, genus, pairs});
}

Presentation nonorientable(std::int64_t genus, const std::vector<SeifertPair>& pairs, bool paper) {
  check_pairs(genus, pairs, false);
  const auto n = static_cast<std::int64_t>(pairs.size());
  const std::int64_t h = n + genus + 1;
  Presentation p;
  p.num_generators = static_cast<std::size_t>(h);
  for (std::int64_t j = 1; j <= n; ++j) p.relators.push_back(commutator(j, h));
  for (std::int64_t k = 1; k <= genus; ++k) {
    const std::int64_t y = n + k;
    p.relators.push_back(paper ? commutator(y, h) : Word{y, h, -y, h});
  }
  if (paper) p.relators.push_back({h, h});
  for (std::int64_t j = 1; j <= n; ++j) {
    Word w;
    append_power(w, j, pairs[static_cast<std::size_t>(j - 1)].a);
    append_power(w, h, pairs[static_cast<std::size_t>(j - 1)].b);
    p.relators.push_back(std::move(w));
  }
  Word boundary;
  for (std::int64_t j = 1; j <= n; ++j) boundary.push_back(j);
  for (std::int64_t k = 1; k <= genus; ++k) boundary.insert(boundary.end(), {n + k, n + k});
  p.relators.push_back(std::move(boundary));
  return p;
}

struct Syllable {
  std::size_t gen;  // 0-based
  std::int64_t exp;
};

struct Compiled {
  std::vector<Syllable> syllables;
};

std::vector<Syllable> syllables_of(const Word& w) {
  std::vector<Syllable> out;
  for (std::int64_t letter : w) {
    const std::size_t gen = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
    const std::int64_t e = letter < 0 ? -1 : 1;
    if (!out.empty() && out.back().gen == gen) {
      out.back().exp += e;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back({gen, e});
    }
  }
  return out;
}

// Generator `c` in a relator of the form [a, c] or [c, a] (any rotation
// of a b a^-1 b^-1 is not considered).
std::optional<std::pair<std::size_t, std::size_t>> commutator_pair(const Word& w) {
  if (w.size() != 4) return std::nullopt;
  if (w[0] <= 0 || w[1] <= 0 || w[2] != -w[0] || w[3] != -w[1] || w[0] == w[1]) return std::nullopt;
  return std::pair{static_cast<std::size_t>(w[0] - 1), static_cast<std::size_t>(w[1] - 1)};
}

class Search {
 public:
  Search(const FiniteGroup& g, const Presentation& p) : g_(g), n_(static_cast<std::uint32_t>(g.order())) {
    const std::size_t k = p.num_generators;
    // the generator with the most commutator relators goes first
    std::vector<std::size_t> commutator_count(k, 0);
    for (const auto& w : p.relators)
      if (auto c = commutator_pair(w)) {
        ++commutator_count[c->first];
        ++commutator_count[c->second];
      }
    std::size_t best = k;
    for (std::size_t i = 0; i < k; ++i)
      if (commutator_count[i] > 0 && (best == k || commutator_count[i] > commutator_count[best])) best = i;
    for (std::size_t i = 0; i < k; ++i)
      if (i != best || best == k) order_.push_back(i);
    if (best != k) {
      order_.insert(order_.begin(), best);
      central_ = best;
    }
    level_of_.assign(k, 0);
    for (std::size_t l = 0; l < k; ++l) level_of_[order_[l]] = l;

    restricted_.assign(k, false);
    relators_at_.assign(k, {});
    for (const auto& w : p.relators) {
      for (std::int64_t letter : w)
        if (letter == 0 || static_cast<std::size_t>(std::llabs(letter)) > k)
          throw ValidationError("relator letter " + std::to_string(letter) + " out of range");
      if (central_) {
        if (auto c = commutator_pair(w); c && (c->first == *central_ || c->second == *central_)) {
          // implied by restricting the partner to the centralizer
          restricted_[c->first == *central_ ? c->second : c->first] = true;
          continue;
        }
      }
      auto syl = syllables_of(w);
      if (syl.empty()) continue;
      std::size_t deepest = 0;
      for (const auto& s : syl) deepest = std::max(deepest, level_of_[s.gen]);
      relators_at_[deepest].push_back(Compiled{std::move(syl)});
    }

    // x -> x^e over the whole group, for every exponent of a level's own generator
    for (std::size_t l = 0; l < k; ++l)
      for (const auto& r : relators_at_[l])
        for (const auto& s : r.syllables)
          if (s.gen == order_[l] && !power_maps_.count(s.exp)) {
            std::vector<std::uint32_t> m(n_);
            for (Element x = 0; x < n_; ++x) m[x] = g.power(x, s.exp);
            power_maps_.emplace(s.exp, std::move(m));
          }

    all_.resize(n_);
    std::iota(all_.begin(), all_.end(), 0u);
    if (central_ && std::find(restricted_.begin(), restricted_.end(), true) != restricted_.end()) {
      centralizers_.resize(n_);
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y)
          if (g.commute(x, y)) centralizers_[x].push_back(y);
    }
  }

  std::optional<std::size_t> central() const { return central_; }
  std::size_t levels() const { return order_.size(); }

  struct Worker {
    std::vector<Element> assignment;
    std::vector<std::vector<std::uint32_t>> cand;
    std::vector<std::uint32_t> acc, rhs;
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
  };

  Worker make_worker() const {
    Worker w;
    w.assignment.assign(order_.size(), 0);
    w.cand.resize(order_.size());
    return w;
  }

  // Surviving candidates at `level` given the assignments of shallower levels.
  std::size_t filter(Worker& w, std::size_t level) const {
    const auto& kern = kernels::active();
    const std::size_t gen = order_[level];
    const auto& source = restricted_[gen] ? centralizers_[w.assignment[*central_]] : all_;
    auto& cand = w.cand[level];
    cand.assign(source.begin(), source.end());
    std::size_t m = cand.size();
    for (const auto& r : relators_at_[level]) {
      if (m == 0) break;
      w.acc.assign(m, FiniteGroup::identity());
      w.rhs.resize(m);
      const std::span<std::uint32_t> acc(w.acc.data(), m);
      for (const auto& s : r.syllables) {
        if (s.gen == gen) {
          const auto& pm = power_maps_.at(s.exp);
          for (std::size_t k = 0; k < m; ++k) w.rhs[k] = pm[cand[k]];
          kern.compose_each(acc, std::span<const std::uint32_t>(w.rhs.data(), m), g_.table_data(), n_);
        } else {
          kern.compose_fixed(acc, g_.power(w.assignment[s.gen], s.exp), g_.table_data(), n_);
        }
      }
      m = kern.keep_identity(std::span<std::uint32_t>(cand.data(), m), acc);
    }
    cand.resize(m);
    return m;
  }

  void descend(Worker& w, std::size_t level) const {
    const std::size_t m = filter(w, level);
    w.nodes += m;
    if (level + 1 == order_.size()) {
      w.count += m;
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      w.assignment[order_[level]] = w.cand[level][k];
      descend(w, level + 1);
    }
  }

  std::size_t generator_at(std::size_t level) const { return order_[level]; }

 private:
  const FiniteGroup& g_;
  std::uint32_t n_;
  std::vector<std::size_t> order_;     // level -> generator
  std::vector<std::size_t> level_of_;  // generator -> level
  std::optional<std::size_t> central_;
  std::vector<bool> restricted_;
  std::vector<std::vector<Compiled>> relators_at_;
  std::map<std::int64_t, std::vector<std::uint32_t>> power_maps_;
  std::vector<std::uint32_t> all_;
  std::vector<std::vector<std::uint32_t>> centralizers_;
};

}  // namespace

Presentation presentation_orientable(std::int64_t genus, const std::vector<SeifertPair>& pairs) {
  check_pairs(genus, pairs, true);
  const auto n = static_cast<std::int64_t>(pairs.size());
  const std::int64_t h = n + 2 * genus + 1;
  Presentation p;
  p.num_generators = static_cast<std::size_t>(h);
  for (std::int64_t j = 1; j < h; ++j) p.relators.push_back(commutator(j, h));
  for (std::int64_t j = 1; j <= n; ++j) {
    Word w;
    append_power(w, j, pairs[static_cast<std::size_t>(j - 1)].a);
    append_power(w, h, pairs[static_cast<std::size_t>(j - 1)].b);
    p.relators.push_back(std::move(w));
  }
  Word boundary;
  for (std::int64_t j = 1; j <= n; ++j) boundary.push_back(j);
  for (std::int64_t k = 0; k < genus; ++k) {
    const auto c = commutator(n + 2 * k + 1, n + 2 * k + 2);
    boundary.insert(boundary.end(), c.begin(), c.end());
  }
  p.relators.push_back(std::move(boundary));
  return p;
}

Presentation presentation_nonorientable_paper(std::int64_t genus, const std::vector<SeifertPair>& pairs) {
  return nonorientable(genus, pairs, true);
}

Presentation presentation_nonorientable_standard(std::int64_t genus, const std::vector<SeifertPair>& pairs) {
  return nonorientable(genus, pairs, false);
}

OracleResult count_homs_detailed(const FiniteGroup& g, const Presentation& p, const OracleOptions& options) {
  const double space = std::pow(static_cast<double>(g.order()), static_cast<double>(p.num_generators));
  if (space > options.max_space)
    throw CostLimitError("oracle search space " + std::to_string(g.order()) + "^" +
                         std::to_string(p.num_generators) + " exceeds the limit; use a smaller group or fewer pairs");
  OracleResult result;
  if (p.num_generators == 0) {
    for (const auto& w : p.relators)
      if (!w.empty()) throw ValidationError("relator letter out of range");
    result.count = 1;
    return result;
  }
  const Search search(g, p);
  if (search.central()) result.central_generator = *search.central() + 1;

  Search::Worker root = search.make_worker();
  const std::size_t top = search.filter(root, 0);
  result.nodes = top;
  if (search.levels() == 1) {
    result.count = top;
    return result;
  }
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(top)));
  std::vector<Search::Worker> workers;
  for (unsigned t = 0; t < threads; ++t) workers.push_back(search.make_worker());
  auto run = [&](unsigned t) {
    auto& w = workers[t];
    for (std::size_t k = t; k < top; k += threads) {
      w.assignment[search.generator_at(0)] = root.cand[0][k];
      search.descend(w, 1);
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& w : workers) {
    result.count += w.count;
    result.nodes += w.nodes;
  }
  return result;
}

}  // namespace dwcount
