#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <type_traits>
#include <string>
#include <vector>

#include "skewcert/codec.hpp"
#include "skewcert/exact/dyadic.hpp"
#include "skewcert/exact/projective.hpp"
#include "skewcert/folner/json.hpp"
#include "skewcert/schema.hpp"

namespace skewcert::cli {

enum ExitCode : int { kAccepted = 0, kRejected = 1, kMalformed = 2 };

struct Context {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t budget = 10000;
  std::string out;
  std::function<int()> run;
};

/// Reads a JSON document from a path, or standard input for "-".
Json read_json(const std::string& path);
/// Prints the payload; with --out also saves `document` (the payload itself
/// unless given).
void emit(const Context& ctx, const Json& payload, const Json* document = nullptr);
Json tagged(Json doc, const char* schema);

std::vector<std::string> split(const std::string& text, char sep = ',');

/// Command-line point literals: integers, "p/q" or "m/2^e" dyadics, rationals
/// or "inf". Lamp configurations have no literal form.
template <class P>
P parse_point(const std::string& text) {
  if constexpr (std::is_same_v<P, std::int64_t>) {
    std::size_t used = 0;
    const auto v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad integer literal '" + text + "'");
    return v;
  } else if constexpr (std::is_same_v<P, Dyadic>) {
    return Dyadic::parse(text);
  } else if constexpr (std::is_same_v<P, ProjPoint>) {
    return ProjPoint::parse(text);
  } else {
    throw std::invalid_argument("this action has no point literals; omit --base to start at the origin");
  }
}

template <class P>
std::vector<P> parse_points(const std::string& text) {
  std::vector<P> out;
  for (const auto& s : split(text)) out.push_back(parse_point<P>(s));
  return out;
}

/// Registration hooks, one per command group.
void add_thompson(CLI::App& app, Context& ctx);
void add_monod(CLI::App& app, Context& ctx);
void add_matching(CLI::App& app, Context& ctx);
void add_folner(CLI::App& app, Context& ctx);
void add_simulate(CLI::App& app, Context& ctx);
void add_wreath(CLI::App& app, Context& ctx);

}  // namespace skewcert::cli
