#include "cli.hpp"
#include "skewcert/folner/actions.hpp"
#include "skewcert/monod/json.hpp"
#include "skewcert/thompson/json.hpp"
#include "skewcert/wreath/json.hpp"
#include "skewcert/wreath/reiter.hpp"

namespace skewcert::cli {

namespace {

// Larger certificates run to tens of megabytes; n = 10 is verified in memory only.
constexpr int kMaxPersistedReiter = 6;

template <class G>
Json elem_doc(const std::string& group, const SemidirectElem<G>& e) {
  Json doc = tagged(Codec<SemidirectElem<G>>::encode(e), "wreath-elem/1");
  doc["group"] = group;
  return doc;
}

Json verdict_json(const folner::Verdict& v) {
  return Json{{"accepted", v.accepted}, {"reason", v.reason}, {"detail", v.detail}};
}

template <class F>
int with_base_action(const std::string& name, F&& f) {
  if (name == "z-shift") return f(folner::z_shift_action());
  if (name == "thompson-unit") return f(folner::thompson_unit_action());
  if (name == "thompson-line") return f(folner::thompson_line_action());
  if (name == "monod") return f(folner::monod_action());
  throw SchemaError("field 'action': probe takes z-shift, thompson-unit, thompson-line or monod, got '" + name + "'");
}

}  // namespace

void add_wreath(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("wreath", "Lamp configurations over a base action and their semidirect products");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("mul", "Product (f, g)(f', g') = (f + g.f', g g')");
    auto group = std::make_shared<std::string>(), a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    sub->add_option("--group", *group, "z-shift, thompson-unit, thompson-line or monod")->required();
    sub->add_option("--a", *a, "Element JSON {config, element}")->required();
    sub->add_option("--b", *b, "Element JSON {config, element}")->required();
    sub->callback([&ctx, group, a, b] {
      ctx.run = [&ctx, group, a, b] {
        return folner::with_group(*group, [&](auto tag) {
          using G = typename decltype(tag)::type;
          const auto x = Codec<SemidirectElem<G>>::decode(read_json(*a));
          const auto y = Codec<SemidirectElem<G>>::decode(read_json(*b));
          emit(ctx, elem_doc(*group, semidirect_mul(x, y)));
          return kAccepted;
        });
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("act", "Apply an element to a configuration");
    auto group = std::make_shared<std::string>(), e = std::make_shared<std::string>(), f = std::make_shared<std::string>();
    sub->add_option("--group", *group, "z-shift, thompson-unit, thompson-line or monod")->required();
    sub->add_option("--elem", *e, "Element JSON {config, element}")->required();
    sub->add_option("--config", *f, "Configuration JSON {lamps, entries}")->required();
    sub->callback([&ctx, group, e, f] {
      ctx.run = [&ctx, group, e, f] {
        return folner::with_group(*group, [&](auto tag) {
          using G = typename decltype(tag)::type;
          using P = typename GroupTraits<G>::point_type;
          const auto x = Codec<SemidirectElem<G>>::decode(read_json(*e));
          const auto c = Codec<Config<P>>::decode(read_json(*f));
          emit(ctx, Codec<Config<P>>::encode(wreath_act(x, c)));
          return kAccepted;
        });
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("reiter", "Build and verify the lamplighter box-average measure");
    auto n = std::make_shared<int>(10);
    sub->add_option("--n", *n, "Box half-width, 1..11 (default 10)")->check(CLI::Range(1, 11));
    sub->callback([&ctx, n] {
      ctx.run = [&ctx, n] {
        if (!ctx.out.empty() && *n > kMaxPersistedReiter) {
          throw std::invalid_argument("--out is limited to n <= " + std::to_string(kMaxPersistedReiter));
        }
        const auto cert = lamplighter_reiter(*n);
        const auto v = folner::verify_reiter_certificate(folner::lamplighter_action(), cert);
        const Json summary{{"n", *n},
                           {"support", cert.mu.size()},
                           {"denominator", cert.mu.denominator.get_str()},
                           {"epsilon", cert.epsilon.str()},
                           {"verdict", verdict_json(v)}};
        if (ctx.out.empty()) {
          emit(ctx, summary);
        } else {
          const Json doc = folner::reiter_certificate_to_json(cert);
          emit(ctx, summary, &doc);
        }
        return v.accepted ? kAccepted : kRejected;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("probe", "Search for an invariant-ish measure on configurations over a base action");
    auto action = std::make_shared<std::string>(), eps = std::make_shared<std::string>("1/10");
    auto radius = std::make_shared<std::size_t>(8);
    sub->add_option("--action", *action, "Base action: z-shift, thompson-unit, thompson-line or monod")->required();
    sub->add_option("--epsilon", *eps, "Target epsilon as p/q; accepted once every defect is <= 2 epsilon")
        ->default_str("1/10");
    sub->add_option("--max-radius", *radius, "Largest Schreier ball tried for the seed window (default 8)");
    sub->callback([&ctx, action, eps, radius] {
      ctx.run = [&ctx, action, eps, radius] {
        return with_base_action(*action, [&](const auto& base) {
          const ProbeOptions options{Rational::parse(*eps), ctx.budget, *radius};
          const auto result = extensive_probe(base, options);
          const Json summary{{"accepted", result.accepted},
                             {"best_defect", result.best_defect.str()},
                             {"radius", result.radius},
                             {"half_length", result.half_length},
                             {"candidates", result.candidates},
                             {"support", result.best.mu.size()}};
          const Json doc = folner::reiter_certificate_to_json(result.best);
          emit(ctx, summary, &doc);
          return result.accepted ? kAccepted : kRejected;
        });
      };
    });
  }
}

}  // namespace skewcert::cli
