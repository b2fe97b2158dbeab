#include "subgame/search/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "subgame/laws.hpp"

namespace subgame::search {

RulesetEnumerator::RulesetEnumerator(Move bound, int k, Filter filter)
    : bound_(bound), k_(k), all_sizes_(k == 0), filter_(filter) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (all_sizes_) k_ = 1;
  if (bound_ < k_ || bound_ < 1) done_ = true;
}

bool RulesetEnumerator::advance() {
  if (!started_) {
    started_ = true;
    current_.resize(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) current_[static_cast<std::size_t>(i)] = i + 1;
    return true;
  }
  const int m = k_;
  for (int i = m - 1; i >= 0; --i) {
    auto& v = current_[static_cast<std::size_t>(i)];
    if (v < bound_ - (m - 1 - i)) {
      ++v;
      for (int j = i + 1; j < m; ++j) current_[static_cast<std::size_t>(j)] = current_[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  if (all_sizes_ && k_ < bound_) {
    ++k_;
    started_ = false;
    return advance();
  }
  return false;
}

std::optional<Ruleset> RulesetEnumerator::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    Ruleset r(current_);
    if (filter_ == Filter::all || is_max_symmetric(r)) return r;
  }
  return std::nullopt;
}

std::vector<Ruleset> enumerate_rulesets(Move bound, int k, Filter filter) {
  std::vector<Ruleset> out;
  RulesetEnumerator e(bound, k, filter);
  while (auto r = e.next()) out.push_back(std::move(*r));
  return out;
}

std::vector<Ruleset> enumerate_with_max(Move max_s, int k, Filter filter) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<Ruleset> out;
  if (max_s < 1 || k > max_s) return out;
  auto keep = [&](const Ruleset& r) { return filter == Filter::all || is_max_symmetric(r); };

  if (k == 0) {
    if (max_s > 30) throw std::invalid_argument("enumerating every size is limited to max S <= 30");
    const std::uint64_t subsets = std::uint64_t{1} << (max_s - 1);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      std::vector<Move> moves;
      for (Move s = 1; s < max_s; ++s)
        if (mask >> (s - 1) & 1) moves.push_back(s);
      moves.push_back(max_s);
      Ruleset r(std::move(moves));
      if (keep(r)) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  if (k == 1) {
    out.push_back(Ruleset{max_s});
    return out;
  }
  RulesetEnumerator e(max_s - 1, k - 1);
  while (auto r = e.next()) {
    Ruleset full = r->with(max_s);
    if (keep(full)) out.push_back(std::move(full));
  }
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace subgame::search
