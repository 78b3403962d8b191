#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "skewcert/folner/certificates.hpp"

namespace skewcert::folner {

struct SearchOptions {
  Rational theta;
  std::size_t budget = 10000;  // orbit points generated, across all strategies
  std::uint64_t seed = 1;
};

template <GroupAction G>
struct SearchResult {
  std::optional<SetFolnerCertificate<G>> certificate;
  Rational best_ratio;
  std::size_t candidates_examined = 0;
  std::string strategy;  // which stage produced the best set
};

namespace detail {

template <GroupAction G>
class FolnerSearch {
 public:
  using Point = typename NamedAction<G>::Point;
  using Candidate = std::vector<OrbitPoint<Point>>;

  FolnerSearch(const NamedAction<G>& action, Point base, std::vector<std::string> elements, SearchOptions options)
      : action_(action), base_(std::move(base)), elements_(std::move(elements)), options_(std::move(options)) {
    for (const auto& w : elements_) tests_.push_back(action_.element(w));
  }

  SearchResult<G> run() {
    if (!try_balls() && !try_chains()) try_local();
    return finish();
  }

 private:
  Rational ratio(const Candidate& T) {
    if (T.empty()) return Rational(0);
    std::vector<Point> pts;
    for (const auto& p : T) pts.push_back(p.point);
    std::size_t worst = T.size();
    for (const auto& g : tests_) {
      std::vector<Point> gT;
      for (const auto& p : pts) gT.push_back(NamedAction<G>::apply(g, p));
      worst = std::min(worst, match_equal(pts, gT));
    }
    return Rational(BigInt(static_cast<unsigned long>(worst)), BigInt(static_cast<unsigned long>(T.size())));
  }

  // Records T as the best so far if it improves; true once theta is met.
  bool consider(const Candidate& T, const char* strategy) {
    const Rational r = ratio(T);
    if (!best_ || r > best_ratio_ || (r == best_ratio_ && T.size() < best_->size())) {
      best_ = T;
      best_ratio_ = r;
      strategy_ = strategy;
    }
    return best_ratio_ >= options_.theta;
  }

  bool spend(std::size_t points) {
    if (examined_ + points > options_.budget) return false;
    examined_ += points;
    return true;
  }

  bool try_balls() {
    const std::string letters = action_.symmetric_letters();
    std::size_t previous = 0;
    for (std::size_t r = 0;; ++r) {
      Candidate ball;
      try {
        ball = schreier_ball(action_, base_, letters, r, options_.budget - examined_ + 1);
      } catch (const BudgetExceeded&) {
        return false;
      }
      if (!spend(ball.size() - previous)) return false;
      if (consider(ball, "ball")) return true;
      if (ball.size() == previous) return false;  // finite orbit exhausted
      previous = ball.size();
    }
  }

  bool try_chains() {
    for (char c : action_.symmetric_letters()) {
      const G& s = action_.generator(c);
      Candidate chain{{base_, ""}};
      std::set<Point> seen{base_};
      std::size_t next_check = 2;
      while (spend(1)) {
        Point q = NamedAction<G>::apply(s, chain.back().point);
        if (!seen.insert(q).second) break;  // periodic
        chain.push_back({std::move(q), std::string(1, c) + chain.back().word});
        if (chain.size() == next_check) {
          if (consider(chain, "chain")) return true;
          next_check = chain.size() < 32 ? chain.size() + 1 : chain.size() + chain.size() / 4;
        }
      }
    }
    return false;
  }

  // Greedy add/remove moves around the best set, accepting non-worsening moves.
  bool try_local() {
    if (!best_) return false;
    std::mt19937_64 rng(options_.seed);
    Candidate current = *best_;
    Rational current_ratio = best_ratio_;
    std::vector<std::string> moves = elements_;
    for (const auto& w : elements_) moves.push_back(inverse_word(w));
    if (moves.empty()) return false;
    while (spend(1)) {
      Candidate trial = current;
      const bool add = trial.size() < 2 || rng() % 3 != 0;
      if (add) {
        const auto& from = trial[rng() % trial.size()];
        const auto& w = moves[rng() % moves.size()];
        Point q = NamedAction<G>::apply(action_.element(w), from.point);
        bool present = false;
        for (const auto& p : trial) present = present || p.point == q;
        if (present) continue;
        trial.push_back({std::move(q), w + from.word});
      } else {
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(rng() % trial.size()));
      }
      const Rational r = ratio(trial);
      if (r >= current_ratio) {
        current = std::move(trial);
        current_ratio = r;
        if (consider(current, "local")) return true;
      }
    }
    return false;
  }

  SearchResult<G> finish() {
    SearchResult<G> out;
    out.best_ratio = best_ratio_;
    out.candidates_examined = examined_;
    out.strategy = strategy_;
    if (best_ && best_ratio_ >= options_.theta) {
      SetFolnerCertificate<G> cert;
      cert.action = action_.name();
      cert.base = base_;
      cert.elements = elements_;
      cert.theta = options_.theta;
      cert.T = *best_;
      std::vector<Point> pts;
      for (const auto& p : cert.T) pts.push_back(p.point);
      cert.per_g = folner_matchings(action_, elements_, pts);
      out.certificate = std::move(cert);
    }
    return out;
  }

  const NamedAction<G>& action_;
  Point base_;
  std::vector<std::string> elements_;
  SearchOptions options_;
  std::vector<G> tests_;
  std::optional<Candidate> best_;
  Rational best_ratio_;
  std::string strategy_;
  std::size_t examined_ = 0;
};

}  // namespace detail

/// Heuristic search for a set Folner certificate: Schreier balls of growing
/// radius, then orbits of single generators, then seeded local search. Never
/// throws on failure; the result reports the best ratio reached.
template <GroupAction G>
SearchResult<G> search_folner(const NamedAction<G>& action, const typename NamedAction<G>::Point& base,
                              const std::vector<std::string>& elements, const SearchOptions& options) {
  for (const auto& w : elements) {
    if (!action.valid_word(w)) throw std::invalid_argument("unknown letter in test word '" + w + "'");
  }
  return detail::FolnerSearch<G>(action, base, elements, options).run();
}

}  // namespace skewcert::folner
