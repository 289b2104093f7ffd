#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "genus1.h"

namespace {

using nlohmann::json;

// positional JSON arguments: literal, @file, or - for stdin
json read_json_arg(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return json::parse(ss.str());
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw CLI::ValidationError("cannot open " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return json::parse(ss.str());
  }
  return json::parse(arg);
}

struct Invocation {
  std::string op;
  json args = json::object();
  bool raw_json = false;
};

int run(const Invocation& inv) {
  json request{{"op", inv.op}, {"args", inv.args}};
  std::string req = request.dump();
  g1_result* res = nullptr;
  g1_status st = g1_eval(req.c_str(), &res);
  if (res == nullptr) {
    std::cerr << "{\"ok\":false,\"error\":{\"code\":\"nomem\"}}\n";
    return 1;
  }
  json body = json::parse(g1_result_json(res));
  g1_result_free(res);

  if (st != G1_OK) {
    std::cerr << body.at("error").dump() << "\n";
    return st == G1_ERR_INCONCLUSIVE ? 2 : 1;
  }
  json result = body.at("result");
  if (inv.raw_json) {
    std::cout << result.dump(2) << "\n";
    return 0;
  }

  // human-readable rendering per operation
  auto print_matrix = [](const json& m, const std::string& indent) {
    for (const auto& row : m) {
      std::cout << indent << "[";
      bool first = true;
      for (const auto& cell : row) {
        if (!first) std::cout << ", ";
        first = false;
        if (cell.is_object()) {  // Laurent entry
          if (cell.empty()) std::cout << "0";
          bool f2 = true;
          for (auto it = cell.begin(); it != cell.end(); ++it) {
            if (!f2) std::cout << " + ";
            f2 = false;
            std::cout << "(" << it.value().get<std::string>() << ")z^" << it.key();
          }
        } else {
          std::cout << cell.get<std::string>();
        }
      }
      std::cout << "]\n";
    }
  };
  auto print_charge = [](const json& c) {
    std::cout << "charge: rank " << c.at("rank") << ", degree " << c.at("degree") << "\n";
  };

  if (inv.op == "birkhoff") {
    std::cout << "exponents: " << result.at("exponents").dump() << "\n";
    std::cout << "splitting type: " << result.at("splitting_type").dump() << "\n";
    std::cout << "S (over k[z]):\n";
    print_matrix(result.at("S"), "  ");
    std::cout << "T (over k[z^-1]):\n";
    print_matrix(result.at("T"), "  ");
  } else if (inv.op == "describe") {
    print_charge(result.at("charge"));
    std::cout << "component multidegrees: " << result.at("component_multidegrees").dump() << "\n";
    if (result.contains("component_ranks"))
      std::cout << "component ranks: " << result.at("component_ranks").dump() << "\n";
    std::cout << "canonical form: " << result.at("canonical").dump() << "\n";
  } else if (inv.op == "triple") {
    const json& t = result.at("triple");
    std::cout << "cycle of " << t.at("curve").at("cycle") << ", module columns "
              << t.at("node_cols").dump() << ", chi = " << result.at("chi") << "\n";
    int ci = 1;
    for (const auto& c : t.at("components")) {
      std::cout << "component " << ci++ << ": degrees " << c.at("rows").dump() << "\n";
      std::cout << " gluing at zero:\n";
      print_matrix(c.at("at_zero"), "  ");
      std::cout << " gluing at infinity:\n";
      print_matrix(c.at("at_infinity"), "  ");
    }
  } else if (inv.op == "cohomology") {
    if (result.contains("formula"))
      std::cout << "formula: h0 = " << result.at("formula").at("h0")
                << ", h1 = " << result.at("formula").at("h1") << "\n";
    if (result.contains("oracle"))
      std::cout << "oracle:  h0 = " << result.at("oracle").at("h0")
                << ", h1 = " << result.at("oracle").at("h1") << "\n";
    if (result.contains("match"))
      std::cout << "match = " << (result.at("match").get<bool>() ? "true" : "false") << "\n";
  } else if (inv.op == "tensor" || inv.op == "pullback") {
    for (const auto& s : result.at("summands")) {
      std::cout << s.at("multiplicity") << " x " << s.at("descriptor").dump() << "  (rank "
                << s.at("charge").at("rank") << ", degree " << s.at("charge").at("degree")
                << ")\n";
    }
    std::cout << "total: rank " << result.at("total_charge").at("rank") << ", degree "
              << result.at("total_charge").at("degree") << "\n";
  } else if (inv.op == "dual" || inv.op == "pushforward") {
    std::cout << result.at("descriptor").dump() << "\n";
    print_charge(result.at("charge"));
  } else if (inv.op == "stable-seq") {
    std::cout << "sequence: " << result.at("sequence").dump() << "\n";
    if (result.at("twist").get<int>() != 0)
      std::cout << "twist: " << result.at("twist") << " (bits " << result.at("bits").dump()
                << ")\n";
    for (const auto& line : result.at("trace")) std::cout << "  " << line.get<std::string>() << "\n";
  } else if (inv.op == "cusp-matrix" || inv.op == "cusp-tf") {
    const json& t = result.at("triple");
    std::cout << "splitting degrees: " << t.at("rows").dump() << "\n";
    std::cout << "i(0):\n";
    print_matrix(t.at("i0"), "  ");
    std::cout << "i_eps(0):\n";
    print_matrix(t.at("i_eps"), "  ");
    std::cout << "End dimension: " << result.at("end_dim") << "\n";
    for (const auto& line : result.at("trace")) std::cout << "  " << line.get<std::string>() << "\n";
  } else if (inv.op == "hom") {
    std::cout << "hom dimension: " << result.at("hom_dim") << "\n";
  } else if (inv.op == "isomorphic") {
    std::cout << (result.at("isomorphic").get<bool>() ? "isomorphic" : "not isomorphic") << "\n";
  } else if (inv.op == "fm") {
    std::cout << "image: " << result.at("image").dump() << "\n";
    print_charge(result.at("charge"));
    std::cout << "module length: " << result.at("module_length") << "\n";
  } else if (inv.op == "verify") {
    for (const auto& s : result.at("suites")) {
      std::cout << s.at("suite").get<std::string>() << ": " << s.at("cases") << " cases, "
                << s.at("mismatches") << " mismatches"
                << (s.at("ok").get<bool>() ? "" : "  FAILED") << "\n";
      for (const auto& fmsg : s.at("failures")) std::cout << "  " << fmsg.get<std::string>() << "\n";
    }
    if (!result.at("ok").get<bool>()) return 1;
  } else {
    std::cout << result.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for vector bundles and torsion free sheaves on "
               "degenerations of elliptic curves"};
  app.require_subcommand(1);

  std::string field = "q";
  std::uint64_t seed = 1;
  bool raw = false;
  app.add_option("--field", field, "base field: q or f<p> (prime p)")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized procedures")->capture_default_str();
  app.add_flag("--json", raw, "print the raw JSON result");

  struct Sub {
    CLI::App* cmd;
    std::vector<std::string> positionals;
    std::string mode;  // cohomology
    int r = 0;
    int to_cycle = 0;
    long cases = 0;
    std::string suite = "all";
  };
  std::map<std::string, Sub> subs;

  auto add = [&](const std::string& name, const std::string& desc,
                 const std::vector<std::pair<std::string, std::string>>& pos) {
    Sub s;
    s.cmd = app.add_subcommand(name, desc);
    s.positionals.resize(pos.size());
    for (size_t i = 0; i < pos.size(); ++i)
      s.cmd->add_option(pos[i].first, s.positionals[i], pos[i].second)->required();
    subs[name] = std::move(s);
    return subs[name].cmd;
  };

  add("birkhoff", "diagonalize a Laurent gluing matrix", {{"matrix", "matrix JSON, @file or -"}});
  add("describe", "charge, multidegrees and canonical form of a descriptor",
      {{"descriptor", "descriptor JSON"}});
  add("triple", "gluing matrices of a band or string", {{"descriptor", "descriptor JSON"}});
  {
    auto* c = add("cohomology", "cohomology of a descriptor or triple",
                  {{"descriptor", "descriptor or triple JSON"}});
    auto& s = subs["cohomology"];
    s.mode = "oracle";
    c->add_flag_callback("--formula", [&] { subs["cohomology"].mode = "formula"; },
                         "use the closed band formula");
    c->add_flag_callback("--oracle", [&] { subs["cohomology"].mode = "oracle"; },
                         "use the linear-algebra oracle (default)");
    c->add_flag_callback("--both", [&] { subs["cohomology"].mode = "both"; },
                         "run both and compare");
  }
  add("tensor", "tensor product of two bands on the one-node cycle",
      {{"a", "band JSON"}, {"b", "band JSON"}});
  add("dual", "dual descriptor", {{"descriptor", "descriptor JSON"}});
  {
    add("pullback", "pullback along the cyclic etale cover", {{"descriptor", "band JSON"}});
    subs["pullback"].cmd->add_option("--r", subs["pullback"].r, "covering degree")->required();
  }
  {
    add("pushforward", "direct image of a line bundle times F_m",
        {{"descriptor", "band data JSON on the covering cycle"}});
    subs["pushforward"].cmd
        ->add_option("--to-cycle", subs["pushforward"].to_cycle, "target cycle size")
        ->required();
  }
  add("stable-seq", "degree sequence of the stable bundle on the one-node cycle",
      {{"r", "rank"}, {"d", "degree"}});
  add("cusp-matrix", "simple vector bundle on the cuspidal cubic",
      {{"r", "rank"}, {"d", "degree"}, {"lambda", "continuous parameter"}});
  add("cusp-tf", "simple torsion free non-bundle on the cuspidal cubic",
      {{"r", "rank"}, {"d", "degree"}});
  add("hom", "dimension of the morphism space", {{"a", "object JSON"}, {"b", "object JSON"}});
  add("isomorphic", "randomized isomorphism test (exit 2 when inconclusive)",
      {{"a", "object JSON"}, {"b", "object JSON"}});
  add("fm", "semi-stable sheaf attached to a torsion module", {{"module", "module JSON"}});
  {
    add("verify", "run the oracle cross-check suites", {});
    auto& s = subs["verify"];
    s.cmd->add_option("--suite", s.suite,
                      "birkhoff, cohomology, tensor, duality, stable, pushforward or all")
        ->capture_default_str();
    s.cmd->add_option("--cases", s.cases, "case budget for randomized suites");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& [name, sub] : subs) {
      if (!sub.cmd->parsed()) continue;
      Invocation inv;
      inv.op = name;
      inv.raw_json = raw;
      inv.args["field"] = field;
      inv.args["seed"] = seed;
      if (name == "birkhoff") inv.args["matrix"] = read_json_arg(sub.positionals[0]);
      if (name == "describe" || name == "triple" || name == "dual")
        inv.args["descriptor"] = read_json_arg(sub.positionals[0]);
      if (name == "cohomology") {
        inv.args["descriptor"] = read_json_arg(sub.positionals[0]);
        inv.args["mode"] = sub.mode;
      }
      if (name == "tensor" || name == "hom" || name == "isomorphic") {
        inv.args["a"] = read_json_arg(sub.positionals[0]);
        inv.args["b"] = read_json_arg(sub.positionals[1]);
      }
      if (name == "pullback") {
        inv.args["descriptor"] = read_json_arg(sub.positionals[0]);
        inv.args["r"] = sub.r;
      }
      if (name == "pushforward") {
        inv.args["descriptor"] = read_json_arg(sub.positionals[0]);
        inv.args["to_cycle"] = sub.to_cycle;
      }
      if (name == "stable-seq" || name == "cusp-matrix" || name == "cusp-tf") {
        inv.args["r"] = std::stol(sub.positionals[0]);
        inv.args["d"] = std::stol(sub.positionals[1]);
        if (name == "cusp-matrix") inv.args["lambda"] = sub.positionals[2];
      }
      if (name == "fm") inv.args["module"] = read_json_arg(sub.positionals[0]);
      if (name == "verify") {
        inv.args["suite"] = sub.suite;
        inv.args["cases"] = sub.cases;
      }
      return run(inv);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "{\"code\":\"invalid-argument\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"code\":\"invalid-argument\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 1;
}
