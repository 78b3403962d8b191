#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewcert/action.hpp"

namespace skewcert::folner {

/// A group acting on tuples of points, presented by named generators.
///
/// Words are strings over the generator letters: an uppercase letter is a
/// generator and the matching lowercase letter its inverse. A word acts as a
/// composition, so "AB" sends x to A(B(x)).
template <GroupAction G>
class NamedAction {
 public:
  using element_type = G;
  using base_point = typename GroupTraits<G>::point_type;
  using Point = std::vector<base_point>;

  NamedAction(std::string name, std::vector<std::pair<char, G>> generators, base_point origin)
      : name_(std::move(name)), origin_(std::move(origin)) {
    for (auto& [letter, g] : generators) {
      if (!std::isupper(static_cast<unsigned char>(letter))) {
        throw std::invalid_argument("generator letters must be uppercase");
      }
      letters_.push_back(letter);
      inverses_.emplace(static_cast<char>(std::tolower(static_cast<unsigned char>(letter))),
                        GroupTraits<G>::inverse(g));
      generators_.emplace(letter, std::move(g));
    }
  }

  const std::string& name() const { return name_; }
  /// The generator letters, uppercase.
  const std::string& letters() const { return letters_; }
  /// Generators followed by their inverses.
  std::string symmetric_letters() const {
    std::string out = letters_;
    for (char c : letters_) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
  }
  /// A distinguished base point (used for lamp toggles and default searches).
  const base_point& origin() const { return origin_; }

  bool valid_word(std::string_view word) const {
    for (char c : word) {
      if (!generators_.contains(c) && !inverses_.contains(c)) return false;
    }
    return true;
  }

  const G& generator(char letter) const {
    if (auto it = generators_.find(letter); it != generators_.end()) return it->second;
    if (auto it = inverses_.find(letter); it != inverses_.end()) return it->second;
    throw std::invalid_argument(std::string("unknown generator letter '") + letter + "' for action " + name_);
  }

  G element(std::string_view word) const {
    G out = GroupTraits<G>::identity();
    for (char c : word) out = GroupTraits<G>::compose(out, generator(c));
    return out;
  }

  static Point apply(const G& g, const Point& x) {
    Point out;
    out.reserve(x.size());
    for (const auto& p : x) out.push_back(GroupTraits<G>::apply(g, p));
    return out;
  }

  /// Applies the letters right to left without composing.
  Point apply_word(std::string_view word, Point x) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply(generator(*it), x);
    return x;
  }

 private:
  std::string name_;
  std::string letters_;
  std::map<char, G> generators_;
  std::map<char, G> inverses_;
  base_point origin_;
};

/// Inverse of a word: reversed, with cases swapped.
inline std::string inverse_word(std::string_view word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) {
    c = std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                                                     : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace skewcert::folner
