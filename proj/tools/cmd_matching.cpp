#include "cli.hpp"
#include "skewcert/matching/json.hpp"

namespace skewcert::cli {

using matching::BipartiteGraph;
using matching::MatchingCertificate;

void add_matching(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("matching", "Maximum matchings and Ore deficiency certificates");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("solve", "Maximum matching with a deficiency set");
    auto g = std::make_shared<std::string>();
    sub->add_option("graph", *g, "Graph JSON")->required();
    sub->callback([&ctx, g] {
      ctx.run = [&ctx, g] {
        const auto graph = Codec<BipartiteGraph>::decode(read_json(*g));
        emit(ctx, tagged(Codec<MatchingCertificate>::encode(matching::max_matching(graph)), "matching/1"));
        return kAccepted;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("ore-check", "Compare the matching number with the brute-force Ore formula");
    auto g = std::make_shared<std::string>();
    sub->add_option("graph", *g, "Graph JSON (at most 22 left vertices)")->required();
    sub->callback([&ctx, g] {
      ctx.run = [&ctx, g] {
        const auto graph = Codec<BipartiteGraph>::decode(read_json(*g));
        const std::size_t m = matching::max_matching(graph).size;
        const std::size_t ore = matching::ore_defect_bruteforce(graph);
        emit(ctx, Json{{"matching", m}, {"ore", ore}, {"agree", m == ore}});
        return m == ore ? kAccepted : kRejected;
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("verify", "Check a matching certificate against its graph");
    auto g = std::make_shared<std::string>(), c = std::make_shared<std::string>();
    sub->add_option("graph", *g, "Graph JSON")->required();
    sub->add_option("certificate", *c, "Certificate JSON")->required();
    sub->callback([&ctx, g, c] {
      ctx.run = [&ctx, g, c] {
        const auto graph = Codec<BipartiteGraph>::decode(read_json(*g));
        const auto cert = Codec<MatchingCertificate>::decode(read_json(*c));
        const auto verdict = matching::verify_matching_certificate(graph, cert);
        emit(ctx, Json{{"accepted", verdict.accepted()},
                       {"reason", matching::reason_name(verdict.reason)},
                       {"detail", verdict.detail}});
        return verdict.accepted() ? kAccepted : kRejected;
      };
    });
  }
}

}  // namespace skewcert::cli
