#include <fstream>
#include <iostream>

#include "cli.hpp"

namespace skewcert::cli {

Json read_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return Json::parse(in);
}

void emit(const Context& ctx, const Json& payload, const Json* document) {
  std::cout << payload.dump(2) << "\n";
  if (ctx.out.empty()) return;
  std::ofstream out(ctx.out);
  if (!out) throw std::runtime_error("cannot write '" + ctx.out + "'");
  out << (document ? *document : payload).dump() << "\n";
}

Json tagged(Json doc, const char* schema) {
  doc["schema"] = schema;
  return doc;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace skewcert::cli

int main(int argc, char** argv) {
  using namespace skewcert::cli;
  Context ctx;
  CLI::App app{"Exact certificates for Thompson's group F, piecewise-projective maps, matchings and Folner sets"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json"}));
  app.add_option("--seed", ctx.seed, "Seed for randomized search (default 1)");
  app.add_option("--budget", ctx.budget, "Search budget in orbit points (default 10000)");
  app.add_option("--out", ctx.out, "Also write the resulting document to this path");

  add_thompson(app, ctx);
  add_monod(app, ctx);
  add_matching(app, ctx);
  add_folner(app, ctx);
  add_simulate(app, ctx);
  add_wreath(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }
  if (!ctx.run) {
    std::cerr << app.help();
    return kMalformed;
  }
  try {
    return ctx.run();
  } catch (const skewcert::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kMalformed;
}
