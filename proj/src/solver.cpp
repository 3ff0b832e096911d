#include "nctb/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nctb/error.hpp"

namespace nctb {

const char *to_string(SolveStatus status) {
  switch (status) {
  case SolveStatus::optimal:
    return "optimal";
  case SolveStatus::budget_exceeded:
    return "budget-exceeded";
  case SolveStatus::above_kmax:
    return "above-kmax";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

struct OutOfBudget {};

// Teaching sets are supports S_i; concept i's sample is then fixed by C_i.
// Concepts i and j are told apart iff (S_i ∪ S_j) meets C_i Δ C_j. Growing a
// support never hurts, so every S_i has exactly min(k, |allowed_i|) elements.
// Concepts are assigned one at a time (fewest remaining candidates first).
// Whenever no remaining candidate of i separates i from j, the candidates of
// j that miss C_i Δ C_j are dropped, and this runs to a fixpoint.
class Search {
public:
  Search(const ConceptClass &cc, int k, bool positive_only, std::uint64_t budget)
      : m_(static_cast<int>(cc.size())), budget_(budget), concept_(m_), diff_(m_ * m_), chosen_(m_, 0),
        assigned_(m_, 0), candidates_(m_), alive_(m_), alive_count_(m_) {
    Mask full = cc.ground == 64 ? ~Mask{0} : (Mask{1} << cc.ground) - 1;
    for (int i = 0; i < m_; ++i) concept_[i] = cc.concepts[i].words().empty() ? 0 : cc.concepts[i].words()[0];
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) diff_[i * m_ + j] = concept_[i] ^ concept_[j];
    std::uint64_t total = 0;
    for (int i = 0; i < m_; ++i) {
      Mask pool = positive_only ? concept_[i] : full;
      int size = std::min(k, std::popcount(pool));
      if (!subsets_of_size(pool, size, budget_ - total, candidates_[i])) throw OutOfBudget{};
      total += candidates_[i].size();
      alive_[i].assign((candidates_[i].size() + 63) / 64, ~Mask{0});
      if (auto tail = candidates_[i].size() % 64; tail != 0) alive_[i].back() = (Mask{1} << tail) - 1;
      alive_count_[i] = static_cast<int>(candidates_[i].size());
    }
  }

  std::uint64_t nodes() const { return nodes_; }

  bool run() {
    std::vector<int> all(m_);
    for (int i = 0; i < m_; ++i) all[i] = i;
    if (!propagate(all)) return false;
    if (!distinct_samples_possible()) return false;
    return descend();
  }

  const std::vector<Mask> &supports() const { return chosen_; }
  const std::vector<Mask> &concepts() const { return concept_; }

private:
  struct Saved {
    int owner;
    int word;
    Mask bits;
  };

  bool descend() {
    if (++nodes_ > budget_) throw OutOfBudget{};
    int pick = -1;
    for (int i = 0; i < m_; ++i)
      if (!assigned_[i] && (pick < 0 || alive_count_[i] < alive_count_[pick])) pick = i;
    if (pick < 0) return true;
    assigned_[pick] = 1;
    const auto &words = alive_[pick];
    for (std::size_t w = 0; w < words.size(); ++w)
      for (Mask rest = alive_[pick][w]; rest != 0; rest &= rest - 1) {
        std::size_t c = w * 64 + std::countr_zero(rest);
        chosen_[pick] = candidates_[pick][c];
        std::size_t mark = trail_.size();
        bool ok = propagate({pick});
        if (ok && descend()) return true;
        undo(mark);
      }
    assigned_[pick] = 0;
    chosen_[pick] = 0;
    return false;
  }

  // True when some remaining option for `i` meets `need`.
  bool can_hit(int i, Mask need) const {
    if (assigned_[i]) return (chosen_[i] & need) != 0;
    const auto &words = alive_[i];
    for (std::size_t w = 0; w < words.size(); ++w)
      for (Mask rest = words[w]; rest != 0; rest &= rest - 1)
        if ((candidates_[i][w * 64 + std::countr_zero(rest)] & need) != 0) return true;
    return false;
  }

  // When nothing left for i separates it from j, j must separate itself.
  // Repeats until no domain shrinks; false on a wipe-out.
  bool propagate(std::vector<int> queue) {
    std::vector<char> queued(m_, 0);
    for (int i : queue) queued[i] = 1;
    while (!queue.empty()) {
      int i = queue.back();
      queue.pop_back();
      queued[i] = 0;
      for (int j = 0; j < m_; ++j) {
        if (j == i || assigned_[j]) continue;
        Mask need = diff_[i * m_ + j];
        if (can_hit(i, need)) continue;
        bool changed = false;
        auto &words = alive_[j];
        for (std::size_t w = 0; w < words.size(); ++w) {
          Mask kill = 0;
          for (Mask rest = words[w]; rest != 0; rest &= rest - 1) {
            int bit = std::countr_zero(rest);
            if ((candidates_[j][w * 64 + bit] & need) == 0) kill |= Mask{1} << bit;
          }
          if (kill != 0) {
            trail_.push_back({j, static_cast<int>(w), words[w]});
            words[w] &= ~kill;
            alive_count_[j] -= std::popcount(kill);
            changed = true;
          }
        }
        if (alive_count_[j] == 0) return false;
        if (changed && !queued[j]) {
          queued[j] = 1;
          queue.push_back(j);
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [j, w, bits] = trail_.back();
      trail_.pop_back();
      alive_count_[j] += std::popcount(bits & ~alive_[j][w]);
      alive_[j][w] = bits;
    }
  }

  // All subsets of `pool` with exactly `size` elements, in increasing order;
  // false once more than `limit` are needed.
  static bool subsets_of_size(Mask pool, int size, std::uint64_t limit, std::vector<Mask> &out) {
    out.clear();
    std::vector<int> elems;
    for (Mask rest = pool; rest != 0; rest &= rest - 1) elems.push_back(std::countr_zero(rest));
    std::vector<int> pos(size);
    for (int i = 0; i < size; ++i) pos[i] = i;
    while (true) {
      Mask s = 0;
      for (int p : pos) s |= Mask{1} << elems[p];
      out.push_back(s);
      if (out.size() > limit) return false;
      int i = size - 1;
      while (i >= 0 && pos[i] == static_cast<int>(elems.size()) - size + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
    return true;
  }

  // Identical samples clash, so the concepts need pairwise distinct samples:
  // a bipartite matching from concepts into their candidate samples.
  bool distinct_samples_possible() {
    std::map<std::pair<Mask, Mask>, int> ids;
    std::vector<std::vector<int>> options(m_);
    for (int i = 0; i < m_; ++i)
      for (std::size_t c = 0; c < candidates_[i].size(); ++c) {
        if (!(alive_[i][c / 64] >> (c % 64) & 1)) continue;
        Mask s = candidates_[i][c];
        auto it = ids.emplace(std::pair{s, s & concept_[i]}, static_cast<int>(ids.size()));
        options[i].push_back(it.first->second);
      }
    std::vector<int> owner(ids.size(), -1);
    for (int i = 0; i < m_; ++i) {
      std::vector<char> seen(ids.size(), 0);
      if (!augment(i, options, owner, seen)) return false;
    }
    return true;
  }

  static bool augment(int i, const std::vector<std::vector<int>> &options, std::vector<int> &owner,
                      std::vector<char> &seen) {
    for (int s : options[i]) {
      if (seen[s]) continue;
      seen[s] = 1;
      if (owner[s] < 0 || augment(owner[s], options, owner, seen)) {
        owner[s] = i;
        return true;
      }
    }
    return false;
  }

  int m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Mask> concept_;
  std::vector<Mask> diff_;
  std::vector<Mask> chosen_;
  std::vector<char> assigned_;
  std::vector<std::vector<Mask>> candidates_;
  std::vector<std::vector<Mask>> alive_;
  std::vector<int> alive_count_;
  std::vector<Saved> trail_;
};

VertexSet from_mask(Mask mask, int universe) {
  VertexSet out(universe);
  for (; mask != 0; mask &= mask - 1) out.insert(std::countr_zero(mask));
  return out;
}

} // namespace

DecisionResult nctd_decision(const ConceptClass &cc, int k, bool positive_only, std::uint64_t budget) {
  if (k < 0) throw ValidationError("negative size bound");
  if (cc.size() == 0) throw ValidationError("empty concept class");
  if (cc.ground > 64) throw ValidationError("the exact solver handles ground sets of at most 64 elements");
  cc.validate();
  DecisionResult out;
  std::optional<Search> search;
  try {
    search.emplace(cc, k, positive_only, budget);
    out.answer = search->run();
  } catch (const OutOfBudget &) {
    out.nodes = search ? search->nodes() : budget;
    return out;
  }
  out.nodes = search->nodes();
  if (*out.answer) {
    TeachingMap tm;
    const auto &supports = search->supports();
    for (std::size_t i = 0; i < cc.size(); ++i) {
      Mask c = search->concepts()[i];
      tm.samples.emplace_back(from_mask(supports[i] & c, cc.ground), from_mask(supports[i] & ~c, cc.ground));
    }
    out.witness = std::move(tm);
  }
  return out;
}

SolveResult nctd_exact(const ConceptClass &cc, bool positive_only, int k_max, std::uint64_t budget) {
  SolveResult out;
  out.positive_only = positive_only;
  for (int k = 0; k <= k_max; ++k) {
    auto step = nctd_decision(cc, k, positive_only, budget - out.nodes);
    out.nodes += step.nodes;
    out.k = k;
    if (!step.answer) {
      out.status = SolveStatus::budget_exceeded;
      return out;
    }
    if (*step.answer) {
      out.witness = std::move(step.witness);
      out.status = SolveStatus::optimal;
      return out;
    }
  }
  out.k = k_max + 1;
  out.status = SolveStatus::above_kmax;
  return out;
}

} // namespace nctb
