#include "scq/pieces.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

namespace scq {

SymmetrizedPresentation symmetrize(int rank, const std::vector<Word>& relators) {
  SymmetrizedPresentation p;
  p.rank = rank;
  std::set<std::vector<int>> seen;
  for (const Word& r : relators) {
    Word core = cyclic_reduce(r).second;
    if (core.empty()) throw std::invalid_argument("trivial relator after cyclic reduction");
    p.relators.push_back(core);
    Word inv = inverse(core);
    for (int k = 0; k < core.length(); ++k) {
      for (const Word& base : {core, inv}) {
        Word w = rotate(base, k);
        if (seen.insert(w.letters).second) p.closure.push_back(w);
      }
    }
  }
  std::sort(p.closure.begin(), p.closure.end(), word_less);
  p.minlen = p.closure.empty() ? 0 : p.closure.front().length();
  return p;
}

PieceIndex::PieceIndex(const Word& w) {
  states_.push_back({});
  for (int c : w.letters) extend(c);
}

void PieceIndex::extend(int c) {
  int cur = static_cast<int>(states_.size());
  states_.push_back({});
  states_[cur].len = states_[last_].len + 1;
  int p = last_;
  while (p != -1 && !states_[p].next.count(c)) {
    states_[p].next[c] = cur;
    p = states_[p].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    int q = states_[p].next[c];
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = q;
    } else {
      int clone = static_cast<int>(states_.size());
      states_.push_back(states_[q]);
      states_[clone].len = states_[p].len + 1;
      while (p != -1 && states_[p].next[c] == q) {
        states_[p].next[c] = clone;
        p = states_[p].link;
      }
      states_[q].link = clone;
      states_[cur].link = clone;
    }
  }
  last_ = cur;
}

int PieceIndex::longest_common_factor(const Word& w) const {
  int v = 0, len = 0, best = 0;
  for (int c : w.letters) {
    while (v != 0 && !states_[v].next.count(c)) {
      v = states_[v].link;
      len = states_[v].len;
    }
    auto it = states_[v].next.find(c);
    if (it != states_[v].next.end()) {
      v = it->second;
      ++len;
    } else {
      v = 0;
      len = 0;
    }
    best = std::max(best, len);
  }
  return best;
}

int max_piece(const SymmetrizedPresentation& p) {
  int best = 0;
  for (std::size_t i = 0; i < p.closure.size(); ++i) {
    PieceIndex idx(p.closure[i]);
    for (std::size_t j = i + 1; j < p.closure.size(); ++j)
      best = std::max(best, idx.longest_common_factor(p.closure[j]));
  }
  return best;
}

namespace {

// Classical piece: a common prefix of two distinct closure members.  Shifts
// of one relator never share a long prefix with themselves, so this stays
// small where the raw common-factor length between overlapping shifts blows
// up (max_piece measures the latter).
int classical_piece(const SymmetrizedPresentation& p) {
  int best = 0;
  for (std::size_t i = 0; i < p.closure.size(); ++i)
    for (std::size_t j = i + 1; j < p.closure.size(); ++j) {
      const auto& a = p.closure[i].letters;
      const auto& b = p.closure[j].letters;
      int k = 0;
      while (k < static_cast<int>(std::min(a.size(), b.size())) && a[k] == b[k]) ++k;
      best = std::max(best, k);
    }
  return best;
}

}  // namespace

bool check_prime_condition(const SymmetrizedPresentation& p, Rat lambda) {
  if (lambda <= Rat(0) || lambda > Rat(1)) throw std::invalid_argument("lambda out of (0,1]");
  if (p.closure.empty()) return true;  // free presentation
  return Rat(classical_piece(p)) <= lambda * Rat(p.minlen);
}

namespace {

Word repeat_to(const Word& r, int target_len) {
  Word w;
  w.rank = r.rank;
  while (w.length() < target_len)
    w.letters.insert(w.letters.end(), r.letters.begin(), r.letters.end());
  return w;
}

// Longest common factor of a^inf and b^inf, truncated at cap.
int periodic_lcf(const Word& a, const Word& b, int cap) {
  PieceIndex idx(repeat_to(a, cap + 2 * a.length()));
  int l = idx.longest_common_factor(repeat_to(b, cap + 2 * b.length()));
  return std::min(l, cap);
}

// Longest run of positions t with r^inf[t] == r^inf[t+s], for 0 < s < |r|.
int self_shift_run(const Word& r, int s) {
  int k = r.length();
  int best = 0, run = 0;
  for (int t = 0; t < 3 * k; ++t) {
    if (r.letters[t % k] == r.letters[(t + s) % k]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

}  // namespace

int cylinder_delta(const std::vector<ConjClass>& roots) {
  for (const auto& c : roots) {
    const Word& r = c.representative;
    if (r.empty() || primitive_root(r).exponent != 1)
      throw std::invalid_argument("non-primitive root supplied");
    if (r.length() > 1 && r.letters.front() == -r.letters.back())
      throw std::invalid_argument("root not cyclically reduced");
  }
  // Deduplicate classes: equal classes contribute the same axis family.
  std::vector<Word> rs;
  for (const auto& c : roots) {
    Word rep = conj_class(c.representative).representative;
    if (std::find(rs.begin(), rs.end(), rep) == rs.end()) rs.push_back(rep);
  }
  auto row_best = [&](std::size_t i) {
    const Word& ri = rs[i];
    int ki = ri.length();
    int best = 0;
    // Distinct translates of the same axis, same orientation: shifted offsets.
    for (int s = 1; s < ki; ++s) best = std::max(best, self_shift_run(ri, s));
    // Orientation-reversed translates (never the same line in a free group).
    {
      int cap = 2 * ki;
      int l = periodic_lcf(ri, inverse(ri), cap);
      if (l >= cap) throw std::logic_error("Fine-Wilf truncation hit on reversed pair");
      best = std::max(best, l);
    }
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      const Word& rj = rs[j];
      int cap = ki + rj.length();
      for (const Word& other : {rj, inverse(rj)}) {
        int l = periodic_lcf(ri, other, cap);
        if (l >= cap) throw std::logic_error("Fine-Wilf truncation hit on distinct classes");
        best = std::max(best, l);
      }
    }
    return best;
  };

  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("SCQ_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) threads = static_cast<unsigned>(v);
  }
  threads = std::max(1u, std::min<unsigned>(threads, rs.size() ? rs.size() : 1));

  int best = 0;
  if (threads <= 1 || rs.size() < 2) {
    for (std::size_t i = 0; i < rs.size(); ++i) best = std::max(best, row_best(i));
    return best;
  }
  // max-reduction over rows: result is independent of the partition
  std::vector<int> partial(threads, 0);
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < rs.size(); i += threads)
          partial[w] = std::max(partial[w], row_best(i));
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  for (int p : partial) best = std::max(best, p);
  return best;
}

}  // namespace scq
