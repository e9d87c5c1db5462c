// Command line front end: construct chains, enumerate admissible subsets,
// export graphs, and run the verification suite.
//
// Exit codes: 0 success, 1 verification counterexample (or internal
// invariant failure), 2 usage error, 3 resource bound exceeded.

#include <CLI11.hpp>

#include <alcove/qbg.hpp>
#include <alcove/verify.hpp>

#include <fstream>
#include <iostream>

using namespace alcove;

namespace {

struct CommonOpts {
  std::string type = "A";
  int n = 0;
  std::string lambda;
  std::string format;
  std::string out;
  int workers = 1;
  long max_group_order = 3628800;
  std::size_t max_chain_length = 64;
  bool bars = false;
  bool all_subsets = false;
};

RootSystem parse_system(const CommonOpts& o) {
  if (o.type != "A" && o.type != "C")
    throw CLI::ValidationError("--type must be A or C");
  if (o.n < 2) throw CLI::ValidationError("--n must be at least 2");
  return RootSystem(o.type == "A" ? Kind::A : Kind::C, o.n);
}

std::vector<int> parse_partition(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("--lambda is required");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    try {
      parts.push_back(std::stoi(text.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--lambda must be a comma separated partition");
    }
    pos = next + 1;
  }
  return parts;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + o.out);
  file << text;
}

int cmd_chain(const CommonOpts& o) {
  const RootSystem rs = parse_system(o);
  const LambdaChain chain = lambda_chain(rs, weight_from_partition(rs, parse_partition(o.lambda)));
  if (o.format == "json") {
    nlohmann::json j;
    j["kind"] = kind_name(rs.kind);
    j["n"] = rs.n;
    j["lambda"] = chain.lambda_parts;
    j["roots"] = nlohmann::json::array();
    for (const Root& b : chain.roots) j["roots"].push_back(root_str(b));
    j["levels"] = chain.levels;
    j["co_levels"] = chain.co_levels;
    j["segment_offsets"] = chain.segment_offsets;
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "i\troot\tl\tl~\tsegment\n";
  for (std::size_t i = 1; i <= chain.size(); ++i)
    os << i << "\t" << root_str(chain.roots[i - 1]) << "\t" << chain.levels[i - 1]
       << "\t" << chain.co_levels[i - 1] << "\t" << chain.segment_of(i) << "\n";
  emit(o, os.str());
  return 0;
}

int cmd_enumerate(const CommonOpts& o) {
  const RootSystem rs = parse_system(o);
  const LambdaChain chain = lambda_chain(rs, weight_from_partition(rs, parse_partition(o.lambda)));
  const auto subsets = enumerate_admissible(chain, o.max_chain_length, o.workers);
  std::ostringstream os;
  for (const auto& J : subsets) {
    const FoldedChain f = fold(chain, J);
    const SortedFilling s = sfill(chain, J);
    if (o.format == "table") {
      os << subset_str(J) << "\tmu=";
      for (std::size_t k = 0; k < f.mu.coords.size(); ++k)
        os << (k ? "," : "") << f.mu.coords[k];
      os << "\theight=" << f.height << "\tsfill=";
      if (o.bars) os << tensor_str(s.element, true);
      else  // plain ASCII: factors joined by |, barred letters negative
        for (std::size_t t = 0; t < s.element.factors.size(); ++t)
          os << (t ? "|" : "") << column_str(s.element.factors[t]);
      os << "\n";
      continue;
    }
    nlohmann::json row;
    row["J"] = J;
    row["mu"] = f.mu.coords;
    row["height"] = f.height;
    row["fill"] = nlohmann::json::array();
    for (const Column& c : fill(chain, J)) row["fill"].push_back(c);
    row["sfill"] = nlohmann::json::array();
    for (const Column& c : s.columns) row["sfill"].push_back(c);
    if (rs.kind == Kind::C) row["kn"] = tensor_to_json(s.element);
    os << row.dump() << "\n";
  }
  emit(o, os.str());
  return 0;
}

int cmd_graph(const CommonOpts& o, const std::string& which) {
  const RootSystem rs = parse_system(o);
  const bool dot = o.format.empty() || o.format == "dot";
  std::string text;
  if (which == "qbg") {
    const QuantumBruhatGraph g =
        build_quantum_bruhat_graph(rs, o.max_group_order, o.workers);
    text = dot ? qbg_to_dot(g, o.bars) : qbg_to_json(g).dump(2) + "\n";
  } else if (which == "alcove") {
    const LambdaChain chain =
        lambda_chain(rs, weight_from_partition(rs, parse_partition(o.lambda)));
    const AlcoveCrystal g = build_alcove_crystal(chain, o.max_chain_length, o.workers);
    text = dot ? alcove_crystal_to_dot(g) : alcove_crystal_to_json(g).dump(2) + "\n";
  } else {
    CrystalGraph g = build_tensor_crystal(rs, parse_partition(o.lambda), 2000000, o.workers);
    const auto conflicts = compute_energy(g);
    require(conflicts.empty(), "energy propagation conflict");
    text = dot ? crystal_to_dot(g, o.bars) : crystal_to_json(g).dump(2) + "\n";
  }
  emit(o, text);
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  const RootSystem rs = parse_system(o);
  VerifyOptions opts;
  opts.workers = o.workers;
  opts.max_chain_length = o.max_chain_length;
  opts.all_subsets = o.all_subsets;
  VerifyReport rep = verify_isomorphism(rs, parse_partition(o.lambda), opts);

  Check theta_check{"qbg_lemma_theta"};
  for (const auto& bad : check_lemma_theta(rs, o.max_group_order))
    theta_check.fail({{"what", bad}});
  rep.checks.push_back(theta_check);

  Check diamond_check{"qbg_diamond_lemmas"};
  for (const auto& bad : check_diamond_lemmas(rs, o.max_group_order))
    diamond_check.fail({{"what", bad}});
  rep.checks.push_back(diamond_check);

  Check fast_check{"qbg_fast_predicates"};
  for (const WeylElement& w : all_group_elements(rs, o.max_group_order))
    for (const Root& b : positive_roots(rs))
      if (edge_kind_fast(w, b) != edge_kind_by_length(w, b))
        fast_check.fail({{"w", window_str(w)}, {"root", root_str(b)}});
  rep.checks.push_back(fast_check);

  emit(o, rep.to_json().dump(2) + "\n");
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum alcove model for types A and C"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    cmd->add_option("--type,-t", o.type, "root system type: A or C")->required();
    cmd->add_option("--n,-n", o.n, "rank parameter")->required();
    if (needs_lambda)
      cmd->add_option("--lambda,-l", o.lambda, "partition, e.g. 3,2")->required();
    cmd->add_option("--format,-f", o.format, "output format");
    cmd->add_option("--out,-o", o.out, "output path (default stdout)");
    cmd->add_option("--workers,-w", o.workers, "worker thread count");
    cmd->add_option("--max-group-order", o.max_group_order, "Weyl group size bound");
    cmd->add_option("--max-chain-length", o.max_chain_length, "chain length bound");
    cmd->add_flag("--bars", o.bars, "render barred letters with overlines");
  };

  CLI::App* chain = app.add_subcommand("chain", "print a lambda-chain");
  add_common(chain, true);
  CLI::App* enumerate = app.add_subcommand("enumerate", "stream admissible subsets");
  add_common(enumerate, true);
  CLI::App* graph = app.add_subcommand("graph", "export a graph");
  graph->require_subcommand(1);
  CLI::App* gqbg = graph->add_subcommand("qbg", "quantum Bruhat graph");
  add_common(gqbg, false);
  CLI::App* galc = graph->add_subcommand("alcove", "crystal on admissible subsets");
  add_common(galc, true);
  CLI::App* gten = graph->add_subcommand("tensor", "tensor product crystal");
  add_common(gten, true);
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, true);
  verify->add_flag("--all-subsets", o.all_subsets,
                   "run the content lemmas over every subset of the chain");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(chain)) return cmd_chain(o);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
    if (app.got_subcommand(graph)) {
      if (graph->got_subcommand(gqbg)) return cmd_graph(o, "qbg");
      if (graph->got_subcommand(galc)) return cmd_graph(o, "alcove");
      return cmd_graph(o, "tensor");
    }
    return cmd_verify(o);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
