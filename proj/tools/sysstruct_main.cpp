#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "sysstruct/dsf.hpp"
#include "sysstruct/gds.hpp"
#include "sysstruct/io.hpp"
#include "sysstruct/sparsity.hpp"
#include "sysstruct/structure.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sysstruct;

namespace {

GeneralizedRealization load(const std::string& path) { return parse_realization(read_file(path)); }

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

void emit_dot(const std::optional<std::string>& dir, const std::string& name,
              const std::string& content) {
  if (!dir) return;
  fs::create_directories(*dir);
  write_file((fs::path(*dir) / name).string(), content);
}

json matrix_json(const RFMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const RFMatrix& m) {
  return "rows " + std::to_string(m.rows()) + "\ncols " + std::to_string(m.cols()) + "\n" +
         to_string(m);
}

struct AnalysisReport {
  std::size_t n = 0, l = 0, m = 0, p = 0, p1 = 0, blocks = 0;
  bool lft_route_equal = false;
  bool dsf_route_equal = false;
  bool sparsity_chain_equal = false;
  bool q_diag_zero = false;
  bool q_strictly_proper = false;
  bool pbar_proper = false;
  bool partition_admissible = false;
  enum class Relation { Holds, Fails, NotApplicable } relation = Relation::NotApplicable;
  std::string relation_note;
  std::size_t residual_nonzeros = 0;
  double elapsed_ms = 0.0;

  bool all_pass() const {
    return lft_route_equal && dsf_route_equal && sparsity_chain_equal && q_diag_zero &&
           q_strictly_proper && pbar_proper && partition_admissible &&
           relation != Relation::Fails;
  }
};

AnalysisReport run_check(const GeneralizedRealization& g) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.n = g.n;
  rep.l = g.l;
  rep.m = g.m;
  rep.p = g.p;

  const StateRealization minimal = minimize_intricacy(g);
  const RFMatrix g_ss = transfer_function(minimal);

  const CompStructure c = comp_structure(g);
  SubsystemStructure ss = subsystem_structure(c);
  attach_block_tfs(ss, c, g);
  rep.blocks = ss.block_count();
  rep.partition_admissible = is_admissible(c, ss.component_of);
  const LftForm lft = to_lft(ss, c, g);
  const RFMatrix g_lft = lft_transfer(lft);
  rep.lft_route_equal = g_lft == g_ss;

  const OutputNormalForm nf = output_normal_form(minimal);
  rep.p1 = nf.p1;
  const DynamicalStructureFunction d = dsf(nf);
  const RFMatrix g_dsf = dsf_transfer(d);
  rep.dsf_route_equal = g_dsf == g_ss;

  rep.sparsity_chain_equal =
      sparsity(g_ss).edges == sparsity(g_lft).edges && sparsity(g_ss).edges == sparsity(g_dsf).edges;

  rep.q_diag_zero = true;
  rep.q_strictly_proper = true;
  for (std::size_t i = 0; i < d.p1; ++i)
    for (std::size_t j = 0; j < d.p1; ++j) {
      if (i == j && !d.Q(i, j).is_zero()) rep.q_diag_zero = false;
      if (d.Q(i, j).properness() != Properness::StrictlyProper) rep.q_strictly_proper = false;
    }
  rep.pbar_proper = true;
  const RFMatrix pb = d.pbar();
  for (std::size_t i = 0; i < pb.rows(); ++i)
    for (std::size_t j = 0; j < pb.cols(); ++j)
      if (pb(i, j).properness() == Properness::Improper) rep.pbar_proper = false;

  try {
    const std::vector<std::size_t> assignment = output_assignment(ss, c);
    const RelationCheck relation = check_relation(lft, d, assignment);
    rep.relation = relation.consistent ? AnalysisReport::Relation::Holds : AnalysisReport::Relation::Fails;
    for (std::size_t i = 0; i < relation.residual.rows(); ++i)
      for (std::size_t j = 0; j < relation.residual.cols(); ++j)
        if (!relation.residual(i, j).is_zero()) ++rep.residual_nonzeros;
  } catch (const error& e) {
    rep.relation = AnalysisReport::Relation::NotApplicable;
    rep.relation_note = e.what();
  }

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void print_report_text(const AnalysisReport& r) {
  const auto line = [](bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
  };
  std::cout << "input: n=" << r.n << " l=" << r.l << " m=" << r.m << " p=" << r.p << "\n";
  std::cout << "subsystem blocks: " << r.blocks << ", dsf rank p1=" << r.p1 << "\n";
  line(r.lft_route_equal, "LFT route equals the state-space transfer function");
  line(r.dsf_route_equal, "DSF route equals the state-space transfer function");
  line(r.sparsity_chain_equal, "sparsity structure identical across the three routes");
  line(r.q_diag_zero, "Q has a zero diagonal");
  line(r.q_strictly_proper, "Q entries are strictly proper");
  line(r.pbar_proper, "Pbar entries are proper");
  line(r.partition_admissible, "returned partition is admissible");
  if (r.relation == AnalysisReport::Relation::NotApplicable)
    std::cout << "[SKIP] subsystem/signal relation: " << r.relation_note << "\n";
  else
    line(r.relation == AnalysisReport::Relation::Holds,
         "subsystem/signal relation holds (nonzero residual entries: " +
             std::to_string(r.residual_nonzeros) + ")");
  std::cout << "elapsed: " << r.elapsed_ms << " ms\n";
}

json report_json(const AnalysisReport& r) {
  json j;
  j["input"] = {{"n", r.n}, {"l", r.l}, {"m", r.m}, {"p", r.p}};
  j["subsystem_blocks"] = r.blocks;
  j["p1"] = r.p1;
  j["verdicts"] = {
      {"lft_route_equal", r.lft_route_equal},
      {"dsf_route_equal", r.dsf_route_equal},
      {"sparsity_chain_equal", r.sparsity_chain_equal},
      {"q_diag_zero", r.q_diag_zero},
      {"q_strictly_proper", r.q_strictly_proper},
      {"pbar_proper", r.pbar_proper},
      {"partition_admissible", r.partition_admissible},
      {"relation", r.relation == AnalysisReport::Relation::Holds        ? "holds"
                   : r.relation == AnalysisReport::Relation::Fails      ? "fails"
                                                                        : "not_applicable"},
      {"relation_residual_nonzeros", r.residual_nonzeros},
  };
  if (!r.relation_note.empty()) j["relation_note"] = r.relation_note;
  j["elapsed_ms"] = r.elapsed_ms;
  j["all_pass"] = r.all_pass();
  return j;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!token.empty()) out.push_back(std::stoul(token));
      token.clear();
    } else {
      token += ch;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural representations of LTI systems: subsystem, signal and sparsity structure"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;
  std::optional<std::string> dot_dir;

  auto* cmd_min = app.add_subcommand("minimize", "minimal intricacy realization");
  cmd_min->add_option("file", file)->required();

  auto* cmd_tf = app.add_subcommand("tf", "transfer function of the minimal realization");
  cmd_tf->add_option("file", file)->required();

  auto* cmd_sub = app.add_subcommand("subsystems", "maximal admissible partition and LFT");
  cmd_sub->add_option("file", file)->required();
  cmd_sub->add_option("--dot", dot_dir, "directory for DOT output");

  auto* cmd_dsf = app.add_subcommand("dsf", "dynamical structure function (Q, P)");
  cmd_dsf->add_option("file", file)->required();
  cmd_dsf->add_option("--dot", dot_dir, "directory for DOT output");

  auto* cmd_sparsity = app.add_subcommand("sparsity", "zero pattern of the transfer function");
  cmd_sparsity->add_option("file", file)->required();
  cmd_sparsity->add_option("--dot", dot_dir, "directory for DOT output");

  auto* cmd_check = app.add_subcommand("check", "cross-representation consistency report");
  cmd_check->add_option("file", file)->required();

  auto* cmd_gds = app.add_subcommand("gds", "simulate a sequential graph dynamical system");
  std::string x0_text, inputs_text;
  std::size_t steps = 0;
  bool cycle = false;
  std::optional<std::string> deps_file;
  cmd_gds->add_option("file", file)->required();
  cmd_gds->add_option("--x0", x0_text, "initial state bits, e.g. 0,0,0,0")->required();
  cmd_gds->add_option("--inputs", inputs_text, "input node sequence, e.g. 1,2,3,4")->required();
  cmd_gds->add_option("--steps", steps, "number of sequential updates")->required();
  cmd_gds->add_flag("--cycle", cycle, "repeat the input list as needed");
  cmd_gds->add_option("--deps", deps_file, "write the dependency graph DOT here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_min->parsed()) {
      const StateRealization minimal = minimize_intricacy(load(file));
      if (format == "json") {
        json j = {{"n", minimal.n}, {"m", minimal.m},      {"p", minimal.p},
                  {"A", matrix_json(minimal.A)}, {"B", matrix_json(minimal.B)},
                  {"C", matrix_json(minimal.C)}, {"D", matrix_json(minimal.D)}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << write_realization(minimal);
      }
    } else if (cmd_tf->parsed()) {
      const RFMatrix g = transfer_function(minimize_intricacy(load(file)));
      if (format == "json")
        std::cout << json{{"rows", g.rows()}, {"cols", g.cols()}, {"G", matrix_json(g)}}.dump(2) << "\n";
      else
        std::cout << matrix_text(g);
    } else if (cmd_sub->parsed()) {
      const GeneralizedRealization g = load(file);
      const CompStructure c = comp_structure(g);
      SubsystemStructure ss = subsystem_structure(c);
      attach_block_tfs(ss, c, g);
      const LftForm lft = to_lft(ss, c, g);
      emit_dot(dot_dir, stem(file) + "_structure.dot", to_dot(c));
      emit_dot(dot_dir, stem(file) + "_partition.dot", to_dot(ss, c));
      emit_dot(dot_dir, stem(file) + "_condensation.dot", to_dot_condensation(ss, c));
      if (format == "json") {
        json j;
        j["components"] = json::array();
        for (const auto& comp : ss.components) {
          json jc;
          json members = json::array();
          for (std::size_t v : comp.members) members.push_back(c.vertex_name(v));
          jc["members"] = members;
          jc["block"] = comp.is_block;
          if (comp.is_block) {
            json ins = json::array(), outs = json::array();
            for (const Var& v : comp.inputs) ins.push_back(var_name(v, c.labels()));
            for (const Var& v : comp.outputs) outs.push_back(var_name(v, c.labels()));
            jc["inputs"] = ins;
            jc["outputs"] = outs;
            jc["S"] = matrix_json(*comp.tf);
          }
          j["components"].push_back(jc);
        }
        j["L"] = matrix_json(lft.L);
        j["K"] = matrix_json(lft.K);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "components " << ss.components.size() << "\n";
        std::size_t block_no = 0;
        for (const auto& comp : ss.components) {
          if (comp.is_block) {
            std::cout << "block S" << ++block_no << ": members";
            for (std::size_t v : comp.members) std::cout << " " << c.vertex_name(v);
            std::cout << " | inputs";
            for (const Var& v : comp.inputs) std::cout << " " << var_name(v, c.labels());
            std::cout << " | outputs";
            for (const Var& v : comp.outputs) std::cout << " " << var_name(v, c.labels());
            std::cout << "\n";
          } else {
            std::cout << "node " << c.vertex_name(comp.members.front()) << "\n";
          }
        }
        std::cout << "L\n" << to_string(lft.L) << "K\n" << to_string(lft.K);
        block_no = 0;
        for (const RFMatrix& s : lft.s_blocks)
          std::cout << "S" << ++block_no << "\n" << to_string(s);
      }
    } else if (cmd_dsf->parsed()) {
      const GeneralizedRealization g = load(file);
      const DynamicalStructureFunction d = dsf(output_normal_form(minimize_intricacy(g)));
      emit_dot(dot_dir, stem(file) + "_signal.dot", to_dot(signal_structure_graph(d)));
      if (format == "json") {
        json j = {{"p1", d.p1}, {"m", d.m},      {"p", d.p},
                  {"Q", matrix_json(d.Q)}, {"P", matrix_json(d.P)}, {"D1", matrix_json(d.D1)}};
        if (d.p1 < d.p) {
          j["C2"] = matrix_json(d.C2);
          j["D2"] = matrix_json(d.D2);
        }
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << write_dsf(d);
      }
    } else if (cmd_sparsity->parsed()) {
      const GeneralizedRealization g = load(file);
      const RFMatrix tf = transfer_function(minimize_intricacy(g));
      const SparsityStructure z = sparsity(tf, g.labels);
      emit_dot(dot_dir, stem(file) + "_sparsity.dot", to_dot(z));
      if (format == "json") {
        json edges = json::array();
        for (const auto& e : z.edges)
          edges.push_back({{"from", z.labels.input(e.input)},
                           {"to", z.labels.output(e.output)},
                           {"tf", e.label}});
        std::cout << json{{"m", z.m}, {"p", z.p}, {"edges", edges}}.dump(2) << "\n";
      } else {
        std::cout << "edges " << z.edges.size() << "\n";
        for (const auto& e : z.edges)
          std::cout << z.labels.input(e.input) << " -> " << z.labels.output(e.output) << ": "
                    << e.label << "\n";
      }
    } else if (cmd_check->parsed()) {
      const AnalysisReport rep = run_check(load(file));
      if (format == "json")
        std::cout << report_json(rep).dump(2) << "\n";
      else
        print_report_text(rep);
      return rep.all_pass() ? 0 : 1;
    } else if (cmd_gds->parsed()) {
      const Gds g = parse_gds(read_file(file));
      GdsState x0;
      for (std::size_t bit : parse_index_list(x0_text)) {
        if (bit > 1) raise(errc::bad_node, "--x0 entries must be 0 or 1");
        x0.push_back(static_cast<std::uint8_t>(bit));
      }
      std::vector<std::size_t> inputs = parse_index_list(inputs_text);
      if (cycle && !inputs.empty()) {
        const std::size_t period = inputs.size();
        while (inputs.size() < steps) inputs.push_back(inputs[inputs.size() % period]);
      }
      const GdsTrajectory t = gds_simulate(g, std::move(x0), inputs, steps);
      std::cout << to_csv(g, t);
      if (deps_file) write_file(*deps_file, to_dot(gds_dependency_graph(g)));
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
