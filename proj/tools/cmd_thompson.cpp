#include "cli.hpp"
#include "skewcert/thompson/cocycle.hpp"
#include "skewcert/thompson/conjugation.hpp"
#include "skewcert/thompson/json.hpp"
#include "skewcert/thompson/transitive.hpp"
#include "skewcert/wreath/json.hpp"

namespace skewcert::cli {

namespace {

using thompson::PLMapLine;
using thompson::PLMapUnit;

bool is_line(const Json& doc) {
  if (auto it = doc.find("schema"); it != doc.end() && *it == "pl-line/1") return true;
  return doc.is_object() && doc.contains("left_tail");
}

Json unit_doc(const PLMapUnit& f) { return tagged(Codec<PLMapUnit>::encode(f), "pl-unit/1"); }
Json line_doc(const PLMapLine& f) { return tagged(Codec<PLMapLine>::encode(f), "pl-line/1"); }

// Runs fn on the decoded element in whichever picture the document uses.
template <class Fn>
auto with_element(const Json& doc, Fn fn) {
  if (is_line(doc)) return fn(Codec<PLMapLine>::decode(doc));
  return fn(Codec<PLMapUnit>::decode(doc));
}

Json element_doc(const PLMapUnit& f) { return unit_doc(f); }
Json element_doc(const PLMapLine& f) { return line_doc(f); }

}  // namespace

void add_thompson(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("thompson", "Thompson's group F in the unit and line pictures");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("compose", "Print f o g (g acts first)");
    auto f = std::make_shared<std::string>(), g = std::make_shared<std::string>();
    sub->add_option("--f", *f, "Element JSON")->required();
    sub->add_option("--g", *g, "Element JSON")->required();
    sub->callback([&ctx, f, g] {
      ctx.run = [&ctx, f, g] {
        const Json a = read_json(*f), b = read_json(*g);
        if (is_line(a) != is_line(b)) throw SchemaError("field 'left_tail': both elements must use the same picture");
        Json out = is_line(a) ? line_doc(thompson::pl_compose(Codec<PLMapLine>::decode(a), Codec<PLMapLine>::decode(b)))
                              : unit_doc(thompson::pl_compose(Codec<PLMapUnit>::decode(a), Codec<PLMapUnit>::decode(b)));
        emit(ctx, out);
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("inverse", "Print the inverse element");
    auto e = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON")->required();
    sub->callback([&ctx, e] {
      ctx.run = [&ctx, e] {
        emit(ctx, with_element(read_json(*e), [](const auto& f) { return element_doc(thompson::pl_inverse(f)); }));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("eval", "Evaluate an element at a dyadic point");
    auto e = std::make_shared<std::string>(), x = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON")->required();
    sub->add_option("--x", *x, "Point, as m, p/q or m/2^e")->required();
    sub->callback([&ctx, e, x] {
      ctx.run = [&ctx, e, x] {
        const Dyadic point = Dyadic::parse(*x);
        emit(ctx, Json(with_element(read_json(*e), [&](const auto& f) { return f.eval(point); }).str()));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("eta", "The cocycle eta(g) of a unit-picture element");
    auto e = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON")->required();
    sub->callback([&ctx, e] {
      ctx.run = [&ctx, e] {
        const auto g = Codec<PLMapUnit>::decode(read_json(*e));
        Json out = Codec<Config<Dyadic>>::encode(thompson::eta(g));
        if (auto w = thompson::freeness_witness(g)) out["min_support"] = w->str();
        emit(ctx, out);
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("iota", "The embedding g -> (eta(g^-1), g)");
    auto e = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON")->required();
    sub->callback([&ctx, e] {
      ctx.run = [&ctx, e] {
        emit(ctx, Codec<thompson::WreathF>::encode(thompson::iota(Codec<PLMapUnit>::decode(read_json(*e)))));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("phi", "Conjugate between the unit and line pictures");
    auto e = std::make_shared<std::string>();
    sub->add_option("--elem", *e, "Element JSON; a line element is mapped back to the unit picture")->required();
    sub->callback([&ctx, e] {
      ctx.run = [&ctx, e] {
        const Json doc = read_json(*e);
        emit(ctx, is_line(doc) ? unit_doc(thompson::phi_inv(Codec<PLMapLine>::decode(doc)))
                               : line_doc(thompson::phi(Codec<PLMapUnit>::decode(doc))));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("strong-transitive", "An element of F sending xs to ys in (0,1)");
    auto xs = std::make_shared<std::string>(), ys = std::make_shared<std::string>();
    sub->add_option("--xs", *xs, "Increasing dyadics, comma separated")->required();
    sub->add_option("--ys", *ys, "Increasing dyadics, comma separated")->required();
    sub->callback([&ctx, xs, ys] {
      ctx.run = [&ctx, xs, ys] {
        const auto a = parse_points<Dyadic>(*xs), b = parse_points<Dyadic>(*ys);
        emit(ctx, unit_doc(thompson::strong_transitive_F(a, b)));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("generators", "The generators A and B, or a word in them");
    auto picture = std::make_shared<std::string>("unit");
    auto word = std::make_shared<std::string>();
    sub->add_option("--picture", *picture, "unit or line")->check(CLI::IsMember({"unit", "line"}));
    sub->add_option("--word", *word, "A word over A, B, a, b (a = A^-1); prints that element instead");
    sub->callback([&ctx, picture, word] {
      ctx.run = [&ctx, picture, word] {
        const bool line = *picture == "line";
        if (!word->empty()) {
          emit(ctx, line ? line_doc(thompson::line_word(*word)) : unit_doc(thompson::unit_word(*word)));
          return kAccepted;
        }
        const auto [a, b] = thompson::generators();
        emit(ctx, line ? Json{{"A", line_doc(thompson::phi(a))}, {"B", line_doc(thompson::phi(b))}}
                       : Json{{"A", unit_doc(a)}, {"B", unit_doc(b)}});
        return kAccepted;
      };
    });
  }
}

}  // namespace skewcert::cli
