#include "skewcert/monod/pp_element.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace skewcert::monod {

struct Validator {
  static PPValidation run(std::vector<ProjPoint> cuts, std::vector<Mobius> pieces);
  static PPElement assemble(std::vector<ProjPoint> cuts, std::vector<Mobius> pieces);
};

namespace {

PPDiagnostic diag(PPDiagnostic::Kind kind, std::size_t index, std::string message) {
  return {kind, index, std::move(message)};
}

std::optional<PPDiagnostic> check(const std::vector<ProjPoint>& cuts, const std::vector<Mobius>& pieces) {
  using K = PPDiagnostic::Kind;
  if (pieces.size() != cuts.size() + 1) {
    return diag(K::Malformed, 0, "expected " + std::to_string(cuts.size() + 1) + " pieces for " +
                                     std::to_string(cuts.size()) + " cuts");
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].is_infinity()) return diag(K::CutAtInfinity, i, "cut " + std::to_string(i) + " is infinity");
    if (i > 0 && !proj_less(cuts[i - 1], cuts[i])) {
      return diag(K::NonIncreasingCuts, i, "cuts not strictly increasing at cut " + std::to_string(i));
    }
  }
  if (!pieces.front().fixes_infinity()) return diag(K::InfinityNotFixed, 0, "first piece does not fix infinity");
  if (!pieces.back().fixes_infinity()) {
    return diag(K::InfinityNotFixed, pieces.size() - 1, "last piece does not fix infinity");
  }
  for (std::size_t i = 1; i + 1 < pieces.size(); ++i) {
    const int lo = pieces[i].pole_sign(cuts[i - 1]);
    const int hi = pieces[i].pole_sign(cuts[i]);
    if (lo == 0 || hi == 0 || lo != hi) {
      return diag(K::PoleInPiece, i, "piece " + std::to_string(i) + " has a pole on [" + cuts[i - 1].str() + ", " +
                                         cuts[i].str() + "]");
    }
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (pieces[i].apply(cuts[i]) != pieces[i + 1].apply(cuts[i])) {
      return diag(K::Discontinuity, i, "discontinuity at cut " + std::to_string(i) + " (" + cuts[i].str() + ")");
    }
  }
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (!proj_less(pieces[i].apply(cuts[i - 1]), pieces[i].apply(cuts[i]))) {
      return diag(K::NonMonotone, i, "piece " + std::to_string(i) + " does not increase across its interval");
    }
  }
  return std::nullopt;
}

}  // namespace

PPElement Validator::assemble(std::vector<ProjPoint> cuts, std::vector<Mobius> pieces) {
  PPElement h;
  h.pieces_ = {pieces.front()};
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (pieces[i + 1] == h.pieces_.back()) continue;
    h.cuts_.push_back(std::move(cuts[i]));
    h.pieces_.push_back(std::move(pieces[i + 1]));
  }
  for (std::size_t i = 0; i < h.cuts_.size(); ++i) h.image_cuts_.push_back(h.pieces_[i].apply(h.cuts_[i]));
  return h;
}

PPValidation Validator::run(std::vector<ProjPoint> cuts, std::vector<Mobius> pieces) {
  if (auto problem = check(cuts, pieces)) return *problem;
  return assemble(std::move(cuts), std::move(pieces));
}

const char* diagnostic_name(PPDiagnostic::Kind kind) {
  switch (kind) {
    case PPDiagnostic::Kind::Malformed: return "malformed";
    case PPDiagnostic::Kind::NonIncreasingCuts: return "non-increasing-cuts";
    case PPDiagnostic::Kind::CutAtInfinity: return "cut-at-infinity";
    case PPDiagnostic::Kind::NonMonotone: return "non-monotone";
    case PPDiagnostic::Kind::InfinityNotFixed: return "infinity-not-fixed";
    case PPDiagnostic::Kind::PoleInPiece: return "pole-in-piece";
    case PPDiagnostic::Kind::Discontinuity: return "discontinuity";
  }
  return "unknown";
}

PPValidation pp_validate(const PPRaw& raw) {
  using K = PPDiagnostic::Kind;
  std::vector<ProjPoint> cuts;
  for (std::size_t i = 0; i < raw.cuts.size(); ++i) {
    const auto& [p, q] = raw.cuts[i];
    if (p == 0 && q == 0) return diag(K::Malformed, i, "cut " + std::to_string(i) + " is [0:0]");
    cuts.emplace_back(p, q);
  }
  std::vector<Mobius> pieces;
  for (std::size_t i = 0; i < raw.pieces.size(); ++i) {
    const auto& [a, b, c, d] = raw.pieces[i];
    if (a * d - b * c <= 0) {
      return diag(K::NonMonotone, i, "piece " + std::to_string(i) + " has non-positive determinant");
    }
    pieces.emplace_back(a, b, c, d);
  }
  return Validator::run(std::move(cuts), std::move(pieces));
}

PPElement::PPElement() : pieces_{Mobius::identity()} {}

PPElement PPElement::from_parts(std::vector<ProjPoint> cuts, std::vector<Mobius> pieces) {
  auto result = Validator::run(std::move(cuts), std::move(pieces));
  if (auto* problem = std::get_if<PPDiagnostic>(&result)) {
    throw std::invalid_argument(std::string("invalid piecewise-projective element (") +
                                diagnostic_name(problem->kind) + "): " + problem->message);
  }
  return std::get<PPElement>(std::move(result));
}

PPElement PPElement::affine(const Rational& slope, const Rational& offset) {
  return from_parts({}, {Mobius::affine(slope, offset)});
}

const Mobius& PPElement::piece_at(const ProjPoint& x) const {
  if (x.is_infinity()) return pieces_.back();
  const auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x,
                                   [](const ProjPoint& v, const ProjPoint& c) { return proj_less(v, c); });
  return pieces_[static_cast<std::size_t>(it - cuts_.begin())];
}

ProjPoint PPElement::eval(const ProjPoint& x) const {
  if (x.is_infinity()) return x;
  return piece_at(x).apply(x);
}

ProjPoint PPElement::eval_inverse(const ProjPoint& y) const {
  if (y.is_infinity()) return y;
  const auto it = std::upper_bound(image_cuts_.begin(), image_cuts_.end(), y,
                                   [](const ProjPoint& v, const ProjPoint& c) { return proj_less(v, c); });
  return mobius_inverse(pieces_[static_cast<std::size_t>(it - image_cuts_.begin())]).apply(y);
}

ProjPoint pp_eval(const PPElement& h, const ProjPoint& x) { return h.eval(x); }

PPElement pp_compose(const PPElement& h1, const PPElement& h2) {
  std::vector<ProjPoint> cuts = h2.cuts();
  for (const auto& c : h1.cuts()) cuts.push_back(h2.eval_inverse(c));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // One interior sample per region between consecutive cuts.
  std::vector<ProjPoint> samples;
  if (cuts.empty()) {
    samples.emplace_back(0);
  } else {
    samples.emplace_back(cuts.front().affine() - Rational(1));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      samples.emplace_back((cuts[i].affine() + cuts[i + 1].affine()) * Rational(BigInt(1), BigInt(2)));
    }
    samples.emplace_back(cuts.back().affine() + Rational(1));
  }
  std::vector<Mobius> pieces;
  for (const auto& s : samples) pieces.push_back(mobius_compose(h1.piece_at(h2.eval(s)), h2.piece_at(s)));
  auto result = Validator::run(std::move(cuts), std::move(pieces));
  if (auto* problem = std::get_if<PPDiagnostic>(&result)) {
    throw std::logic_error("composition produced an invalid element: " + problem->message);
  }
  return std::get<PPElement>(std::move(result));
}

PPElement pp_inverse(const PPElement& h) {
  std::vector<ProjPoint> cuts;
  for (const auto& c : h.cuts()) cuts.push_back(h.eval(c));
  std::vector<Mobius> pieces;
  for (const auto& m : h.pieces()) pieces.push_back(mobius_inverse(m));
  auto result = Validator::run(std::move(cuts), std::move(pieces));
  if (auto* problem = std::get_if<PPDiagnostic>(&result)) {
    throw std::logic_error("inverse produced an invalid element: " + problem->message);
  }
  return std::get<PPElement>(std::move(result));
}

}  // namespace skewcert::monod
