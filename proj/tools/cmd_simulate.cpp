#include <iostream>

#include "cli.hpp"
#include "skewcert/folner/actions.hpp"
#include "skewcert/folner/simulation.hpp"
#include "skewcert/monod/json.hpp"
#include "skewcert/thompson/json.hpp"

namespace skewcert::cli {

namespace {

template <class G>
std::vector<G> elements_or_generators(const Json& doc, const folner::NamedAction<G>& action) {
  if (doc.contains("E")) return folner::detail::list_from_json<G>(doc, "E");
  std::vector<G> out;
  for (char c : action.letters()) out.push_back(action.generator(c));
  return out;
}

int choose_t(const Context& ctx, const Json& doc) {
  const std::string group = require_string(doc, "group");
  if (group == "thompson-line") {
    const auto E = elements_or_generators(doc, folner::thompson_line_action());
    const auto S = folner::detail::list_from_json<std::int64_t>(doc, "S");
    const auto P = folner::detail::list_from_json<Dyadic>(doc, "P");
    const auto choice = folner::thompson_choose_t(E, S, P);
    std::cerr << Json{{"N", choice.N}}.dump() << "\n";
    emit(ctx, folner::simulation_to_json(group, choice.witness));
    return folner::check_simulation_witness(choice.witness).accepted ? kAccepted : kRejected;
  }
  if (group == "monod") {
    const auto E = elements_or_generators(doc, folner::monod_action());
    const auto S = folner::detail::list_from_json<monod::PPElement>(doc, "S");
    const auto P = folner::detail::list_from_json<ProjPoint>(doc, "P");
    const auto choice = folner::monod_choose_t(E, S, P);
    std::cerr << Json{{"a", choice.a.str()}}.dump() << "\n";
    emit(ctx, folner::simulation_to_json(group, choice.witness));
    return folner::check_simulation_witness(choice.witness).accepted ? kAccepted : kRejected;
  }
  throw SchemaError("field 'group': choose-t supports thompson-line and monod, got '" + group + "'");
}

int check(const Context& ctx, const Json& doc) {
  const std::string schema = require_string(doc, "schema");
  if (schema != "simulation/1" && schema != "approximation/1") {
    throw SchemaError("field 'schema': expected simulation/1 or approximation/1, got '" + schema + "'");
  }
  return folner::with_group(require_string(doc, "group"), [&](auto tag) {
    using G = typename decltype(tag)::type;
    const folner::Verdict v = schema == "simulation/1"
                                  ? folner::check_simulation_witness(folner::simulation_from_json<G>(doc))
                                  : folner::check_approximation_witness(folner::approximation_from_json<G>(doc));
    emit(ctx, Json{{"accepted", v.accepted}, {"reason", v.reason}, {"detail", v.detail}});
    return v.accepted ? kAccepted : kRejected;
  });
}

}  // namespace

void add_simulate(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("simulate", "Proximal simulation witnesses");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand(
        "choose-t", "Build a simulation witness from {group, E?, S, P}; E defaults to the generators");
    auto path = std::make_shared<std::string>();
    sub->add_option("input", *path, "Instance JSON, or - for standard input")->required();
    sub->callback([&ctx, path] {
      ctx.run = [&ctx, path] { return choose_t(ctx, read_json(*path)); };
    });
  }
  {
    auto* sub = cmd->add_subcommand("check", "Check a simulation/1 or approximation/1 witness");
    auto path = std::make_shared<std::string>();
    sub->add_option("witness", *path, "Witness JSON, or - for standard input")->required();
    sub->callback([&ctx, path] {
      ctx.run = [&ctx, path] { return check(ctx, read_json(*path)); };
    });
  }
}

}  // namespace skewcert::cli
