#include "cli.hpp"
#include "skewcert/monod/constructors.hpp"
#include "skewcert/monod/json.hpp"

namespace skewcert::cli {

namespace {

using monod::PPElement;

Json pp_doc(const PPElement& h) { return tagged(Codec<PPElement>::encode(h), "pp/1"); }
Json mobius_doc(const Mobius& m) { return tagged(Codec<Mobius>::encode(m), "mobius/1"); }

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) out.push_back(Rational::parse(s));
  return out;
}

}  // namespace

void add_monod(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("monod", "Piecewise-projective homeomorphisms of the projective line fixing infinity");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("compose", "Print f o g (g acts first)");
    auto f = std::make_shared<std::string>(), g = std::make_shared<std::string>();
    sub->add_option("--f", *f, "Element JSON")->required();
    sub->add_option("--g", *g, "Element JSON")->required();
    sub->callback([&ctx, f, g] {
      ctx.run = [&ctx, f, g] {
        emit(ctx, pp_doc(monod::pp_compose(Codec<PPElement>::decode(read_json(*f)),
                                           Codec<PPElement>::decode(read_json(*g)))));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("eval", "Evaluate at a rational point or inf");
    auto e = std::make_shared<std::string>(), x = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON")->required();
    sub->add_option("--x", *x, "Point, as p/q or inf")->required();
    sub->callback([&ctx, e, x] {
      ctx.run = [&ctx, e, x] {
        const ProjPoint point = ProjPoint::parse(*x);
        emit(ctx, Json(Codec<PPElement>::decode(read_json(*e)).eval(point).str()));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("two-transitive", "The affine map sending s0, s1 to t0, t1");
    auto s = std::make_shared<std::string>(), t = std::make_shared<std::string>();
    sub->add_option("--from", *s, "s0,s1 with s0 < s1")->required();
    sub->add_option("--to", *t, "t0,t1 with t0 < t1")->required();
    sub->callback([&ctx, s, t] {
      ctx.run = [&ctx, s, t] {
        const auto a = parse_rationals(*s), b = parse_rationals(*t);
        if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("--from and --to take exactly two points");
        emit(ctx, mobius_doc(monod::two_transitive(a[0], a[1], b[0], b[1])));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("fix-infty", "The translation sending s to t");
    auto s = std::make_shared<std::string>(), t = std::make_shared<std::string>();
    sub->add_option("--from", *s, "s")->required();
    sub->add_option("--to", *t, "t")->required();
    sub->callback([&ctx, s, t] {
      ctx.run = [&ctx, s, t] {
        emit(ctx, mobius_doc(monod::fix_infty_map(Rational::parse(*s), Rational::parse(*t))));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("strong-transitive", "An element sending xs[i] to ys[i]");
    auto xs = std::make_shared<std::string>(), ys = std::make_shared<std::string>();
    sub->add_option("--xs", *xs, "Increasing rationals, comma separated")->required();
    sub->add_option("--ys", *ys, "Increasing rationals, comma separated")->required();
    sub->callback([&ctx, xs, ys] {
      ctx.run = [&ctx, xs, ys] {
        const auto a = parse_rationals(*xs), b = parse_rationals(*ys);
        emit(ctx, pp_doc(monod::strongly_transitive_H(a, b)));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("tail-affine", "The affine germ at infinity and where it starts");
    auto e = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON")->required();
    sub->callback([&ctx, e] {
      ctx.run = [&ctx, e] {
        const auto tail = monod::tail_affine(Codec<PPElement>::decode(read_json(*e)));
        emit(ctx, Json{{"piece", Codec<Mobius>::encode(tail.m)}, {"from", Codec<Rational>::encode(tail.a)}});
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("validate", "Check an element; exit 1 with the first violated condition");
    auto e = std::make_shared<std::string>();
    sub->add_option("element", *e, "Element JSON")->required();
    sub->callback([&ctx, e] {
      ctx.run = [&ctx, e] {
        const auto result = monod::pp_validate(monod::pp_raw_from_json(read_json(*e)));
        if (const auto* d = std::get_if<monod::PPDiagnostic>(&result)) {
          emit(ctx, Json{{"valid", false},
                         {"kind", monod::diagnostic_name(d->kind)},
                         {"index", d->index},
                         {"message", d->message}});
          return kRejected;
        }
        emit(ctx, Json{{"valid", true}, {"element", pp_doc(std::get<PPElement>(result))}});
        return kAccepted;
      };
    });
  }
}

}  // namespace skewcert::cli
