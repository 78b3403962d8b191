#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "skewcert/action.hpp"
#include "skewcert/exact/projective.hpp"

namespace skewcert::monod {

/// An increasing piecewise-Mobius homeomorphism of the projective line fixing
/// infinity. pieces[0] acts on (-inf, cuts[0]], pieces[i] on [cuts[i-1], cuts[i]]
/// and pieces[k] on [cuts[k-1], +inf). The end pieces are affine.
class PPElement {
 public:
  /// The identity.
  PPElement();

  /// Validates (see pp_validate) and merges redundant cuts; throws
  /// std::invalid_argument carrying the diagnostic.
  static PPElement from_parts(std::vector<ProjPoint> cuts, std::vector<Mobius> pieces);
  static PPElement affine(const Rational& slope, const Rational& offset);

  const std::vector<ProjPoint>& cuts() const { return cuts_; }
  const std::vector<Mobius>& pieces() const { return pieces_; }

  ProjPoint eval(const ProjPoint& x) const;
  ProjPoint eval_inverse(const ProjPoint& y) const;
  /// The piece acting at an affine point (either neighbour at a cut).
  const Mobius& piece_at(const ProjPoint& x) const;
  bool is_identity() const { return cuts_.empty() && pieces_.front() == Mobius::identity(); }

  friend bool operator==(const PPElement& f, const PPElement& g) {
    return f.cuts_ == g.cuts_ && f.pieces_ == g.pieces_;
  }

 private:
  friend struct Validator;

  std::vector<ProjPoint> cuts_;
  std::vector<Mobius> pieces_;
  std::vector<ProjPoint> image_cuts_;
};

/// Unvalidated element data as integers, e.g. straight from JSON.
struct PPRaw {
  std::vector<std::array<BigInt, 2>> cuts;    // (p, q)
  std::vector<std::array<BigInt, 4>> pieces;  // (a, b, c, d)
};

struct PPDiagnostic {
  enum class Kind {
    Malformed,
    NonIncreasingCuts,
    CutAtInfinity,
    NonMonotone,
    InfinityNotFixed,
    PoleInPiece,
    Discontinuity,
  };
  Kind kind;
  std::size_t index = 0;  // offending cut or piece
  std::string message;
};

const char* diagnostic_name(PPDiagnostic::Kind kind);

using PPValidation = std::variant<PPElement, PPDiagnostic>;

/// Checks every invariant exactly: cuts affine and strictly increasing, all
/// determinants positive, end pieces fixing infinity, no pole on any closed
/// interior piece, and continuity at every cut. Never throws.
PPValidation pp_validate(const PPRaw& raw);

ProjPoint pp_eval(const PPElement& h, const ProjPoint& x);
/// (h1 o h2)(x) = h1(h2(x)).
PPElement pp_compose(const PPElement& h1, const PPElement& h2);
PPElement pp_inverse(const PPElement& h);

}  // namespace skewcert::monod

namespace skewcert {

template <>
struct GroupTraits<monod::PPElement> {
  using point_type = ProjPoint;
  static monod::PPElement identity() { return {}; }
  static monod::PPElement compose(const monod::PPElement& f, const monod::PPElement& g) {
    return monod::pp_compose(f, g);
  }
  static monod::PPElement inverse(const monod::PPElement& f) { return monod::pp_inverse(f); }
  static ProjPoint apply(const monod::PPElement& f, const ProjPoint& x) { return f.eval(x); }
};

}  // namespace skewcert
