#include <iostream>

#include "cli.hpp"
#include "skewcert/folner/actions.hpp"
#include "skewcert/folner/orbit.hpp"
#include "skewcert/folner/search.hpp"

namespace skewcert::cli {

namespace {

template <class A>
typename A::Point base_or_origin(const A& action, const std::string& text) {
  if (text.empty()) return {action.origin()};
  return parse_points<typename A::base_point>(text);
}

int verify_document(const Context& ctx, const Json& doc) {
  const std::string schema = require_string(doc, "schema");
  if (schema != "folner-set/1" && schema != "reiter/1") {
    throw SchemaError("field 'schema': expected folner-set/1 or reiter/1, got '" + schema + "'");
  }
  return folner::with_action(require_string(doc, "action"), [&](const auto& action) {
    using G = typename std::decay_t<decltype(action)>::element_type;
    const folner::Verdict v =
        schema == "folner-set/1"
            ? folner::verify_set_certificate(action, folner::set_certificate_from_json<G>(doc))
            : folner::verify_reiter_certificate(action, folner::reiter_certificate_from_json<G>(doc));
    emit(ctx, Json{{"accepted", v.accepted}, {"reason", v.reason}, {"detail", v.detail}});
    return v.accepted ? kAccepted : kRejected;
  });
}

}  // namespace

void add_folner(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("folner", "Folner set and Reiter measure certificates");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("search", "Search for a Folner set certificate");
    struct Args {
      std::string action, base, elements, theta = "9/10";
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--action", a->action, "z-shift, thompson-unit, thompson-line, monod, lamplighter or wreath:<base>")
        ->required();
    sub->add_option("--base", a->base, "Base tuple, comma separated (default: the action's origin)");
    sub->add_option("--elements", a->elements, "Test words, comma separated (default: the generators)");
    sub->add_option("--theta", a->theta, "Required matching ratio, as p/q (default 9/10)");
    sub->callback([&ctx, a] {
      ctx.run = [&ctx, a] {
        return folner::with_action(a->action, [&](const auto& action) {
          using G = typename std::decay_t<decltype(action)>::element_type;
          std::vector<std::string> elements = split(a->elements);
          if (elements.empty()) {
            for (char c : action.letters()) elements.emplace_back(1, c);
          }
          folner::SearchOptions options{Rational::parse(a->theta), ctx.budget, ctx.seed};
          const auto result = folner::search_folner(action, base_or_origin(action, a->base), elements, options);
          const Json summary{{"found", result.certificate.has_value()},
                             {"best_ratio", result.best_ratio.str()},
                             {"candidates_examined", result.candidates_examined},
                             {"strategy", result.strategy}};
          if (!result.certificate) {
            emit(ctx, summary);
            return kRejected;
          }
          const Json cert = folner::set_certificate_to_json<G>(*result.certificate);
          std::cerr << summary.dump() << "\n";
          emit(ctx, cert);
          return kAccepted;
        });
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("verify", "Verify a folner-set/1 or reiter/1 certificate");
    auto path = std::make_shared<std::string>();
    sub->add_option("certificate", *path, "Certificate JSON, or - for standard input")->required();
    sub->callback([&ctx, path] {
      ctx.run = [&ctx, path] { return verify_document(ctx, read_json(*path)); };
    });
  }
  {
    auto* sub = cmd->add_subcommand("ball", "Schreier ball of a base tuple");
    struct Args {
      std::string action, base, letters;
      std::size_t radius = 2;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--action", a->action, "Action name")->required();
    sub->add_option("--base", a->base, "Base tuple, comma separated (default: the action's origin)");
    sub->add_option("--letters", a->letters, "Letters to walk along (default: generators and inverses)");
    sub->add_option("--radius", a->radius, "Word length bound (default 2)");
    sub->callback([&ctx, a] {
      ctx.run = [&ctx, a] {
        return folner::with_action(a->action, [&](const auto& action) {
          using P = typename std::decay_t<decltype(action)>::base_point;
          const std::string letters = a->letters.empty() ? action.symmetric_letters() : a->letters;
          for (char c : letters) {
            if (!action.valid_word(std::string(1, c))) throw std::invalid_argument(std::string("unknown letter ") + c);
          }
          Json points = Json::array();
          for (const auto& p : folner::schreier_ball(action, base_or_origin(action, a->base), letters, a->radius, ctx.budget)) {
            points.push_back({{"point", Codec<std::vector<P>>::encode(p.point)}, {"word", p.word}});
          }
          emit(ctx, Json{{"action", action.name()}, {"radius", a->radius}, {"points", std::move(points)}});
          return kAccepted;
        });
      };
    });
  }
}

}  // namespace skewcert::cli
