#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcert/action.hpp"
#include "skewcert/exact/dyadic.hpp"

namespace skewcert::thompson {

struct Breakpoint {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Slopes on either side of a point, as log2 exponents. `left` is absent at 0
/// and `right` is absent at 1.
struct OneSidedSlopes {
  std::optional<long> left;
  std::optional<long> right;

  friend bool operator==(const OneSidedSlopes&, const OneSidedSlopes&) = default;
};

/// An element of F acting on [0,1]: increasing PL bijection with dyadic
/// breakpoints and power-of-two slopes, stored with minimal breakpoints.
class PLMapUnit {
 public:
  /// The identity.
  PLMapUnit();

  /// Validates and minimizes; throws std::invalid_argument with a diagnostic.
  static PLMapUnit from_breakpoints(std::vector<Breakpoint> points);
  /// Describes the first invariant violated by raw breakpoint data, if any.
  static std::optional<std::string> diagnose(const std::vector<Breakpoint>& points);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  /// log2 of the slope on each piece.
  const std::vector<long>& log_slopes() const { return log_slopes_; }
  bool is_identity() const { return points_.size() == 2; }

  Dyadic eval(const Dyadic& x) const;
  Dyadic eval_inverse(const Dyadic& y) const;
  OneSidedSlopes one_sided_slopes(const Dyadic& x) const;

  friend bool operator==(const PLMapUnit& f, const PLMapUnit& g) { return f.points_ == g.points_; }

 private:
  std::vector<Breakpoint> points_;
  std::vector<long> log_slopes_;
};

/// An element of F acting on Z[1/2]: PL with power-of-two slopes, equal to
/// x + left_tail left of the first breakpoint and x + right_tail right of the
/// last one. No breakpoints means a pure translation.
class PLMapLine {
 public:
  PLMapLine() = default;

  static PLMapLine translation(std::int64_t amount);
  static PLMapLine from_parts(std::vector<Breakpoint> points, std::int64_t left_tail, std::int64_t right_tail);
  static std::optional<std::string> diagnose(const std::vector<Breakpoint>& points, std::int64_t left_tail,
                                             std::int64_t right_tail);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  const std::vector<long>& log_slopes() const { return log_slopes_; }
  std::int64_t left_tail() const { return left_tail_; }
  std::int64_t right_tail() const { return right_tail_; }
  bool is_identity() const { return points_.empty() && left_tail_ == 0; }

  Dyadic eval(const Dyadic& x) const;
  Dyadic eval_inverse(const Dyadic& y) const;

  friend bool operator==(const PLMapLine&, const PLMapLine&) = default;

 private:
  std::vector<Breakpoint> points_;
  std::vector<long> log_slopes_;  // interior pieces only
  std::int64_t left_tail_ = 0;
  std::int64_t right_tail_ = 0;
};

Dyadic pl_eval(const PLMapUnit& f, const Dyadic& x);
Dyadic pl_eval(const PLMapLine& f, const Dyadic& x);

/// (f o g)(x) = f(g(x)).
PLMapUnit pl_compose(const PLMapUnit& f, const PLMapUnit& g);
PLMapLine pl_compose(const PLMapLine& f, const PLMapLine& g);
PLMapUnit pl_inverse(const PLMapUnit& f);
PLMapLine pl_inverse(const PLMapLine& f);

OneSidedSlopes one_sided_slopes(const PLMapUnit& g, const Dyadic& x);

/// The standard generators A (x0) and B (x1) in the unit picture.
struct Generators {
  PLMapUnit a;
  PLMapUnit b;
};
Generators generators();

/// Evaluates a word over {A, B, a, b} (lowercase = inverse); "AB" = A o B.
PLMapUnit unit_word(std::string_view word);

}  // namespace skewcert::thompson

namespace skewcert {

template <>
struct GroupTraits<thompson::PLMapUnit> {
  using point_type = Dyadic;
  static thompson::PLMapUnit identity() { return {}; }
  static thompson::PLMapUnit compose(const thompson::PLMapUnit& f, const thompson::PLMapUnit& g) {
    return thompson::pl_compose(f, g);
  }
  static thompson::PLMapUnit inverse(const thompson::PLMapUnit& f) { return thompson::pl_inverse(f); }
  static Dyadic apply(const thompson::PLMapUnit& f, const Dyadic& x) { return f.eval(x); }
};

template <>
struct GroupTraits<thompson::PLMapLine> {
  using point_type = Dyadic;
  static thompson::PLMapLine identity() { return {}; }
  static thompson::PLMapLine compose(const thompson::PLMapLine& f, const thompson::PLMapLine& g) {
    return thompson::pl_compose(f, g);
  }
  static thompson::PLMapLine inverse(const thompson::PLMapLine& f) { return thompson::pl_inverse(f); }
  static Dyadic apply(const thompson::PLMapLine& f, const Dyadic& x) { return f.eval(x); }
};

}  // namespace skewcert
