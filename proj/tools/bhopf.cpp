// bhopf: command-line front end for the braided Hopf algebra checks.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 malformed input.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bhopf/braided_family.hpp"
#include "bhopf/diagram.hpp"
#include "bhopf/fixtures.hpp"
#include "bhopf/hopf.hpp"
#include "bhopf/io.hpp"
#include "bhopf/proof_chain.hpp"
#include "bhopf/tensor_product.hpp"
#include "run_report.hpp"

namespace fs = std::filesystem;
using namespace bhopf;
using cli::RunReport;

namespace {

struct Options {
  bool json = false;
  bool no_timestamp = false;
};

int finish(const RunReport& report, const Options& opt) {
  if (opt.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else if (report.exit_code() != 2) {
    const bool color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
    report.print_human(std::cout, color);
  }
  return report.exit_code();
}

CheckReport bundle_battery(const HopfBundle& b) {
  CheckReport r = check_braided_bialgebra(b);
  if (b.antipode()) r.append(check_antipode(b, *b.antipode()));
  return r;
}

// Expression text, or the contents of a file when written as "@path".
std::string expression_arg(const std::string& arg, RunReport& report) {
  if (arg.size() > 1 && arg[0] == '@') {
    report.add_input(arg.substr(1));
    return io::read_text_file(arg.substr(1));
  }
  return arg;
}

void cmd_validate(RunReport& report, const std::string& path) {
  report.add_input(path);
  report.add_section("battery", bundle_battery(io::bundle_from_json(io::read_json_file(path))));
}

void cmd_tensor(RunReport& report, const std::string& h_path, const std::string& l_path,
                const std::string& x_path, const std::string& out, bool force) {
  for (const auto& p : {h_path, l_path, x_path}) report.add_input(p);
  const auto h = io::bundle_from_json(io::read_json_file(h_path));
  const auto l = io::bundle_from_json(io::read_json_file(l_path));
  const auto x = io::cross_braid_from_json(io::read_json_file(x_path), h, l);
  auto hypotheses = check_tensor_hypotheses(h, l, x);
  const bool gated = !hypotheses.passed() && !force;
  report.add_section("hypotheses", std::move(hypotheses));
  if (gated) return;
  const auto hl = build_tensor_product(h, l, x, BuildMode::Force);
  auto battery = bundle_battery(hl);
  battery.append(check_tensor_braid_equation(hl));
  report.add_section("product", std::move(battery));
  io::write_json_file(out, io::bundle_to_json(hl));
  report.add_note("output", out);
}

void cmd_antipode(RunReport& report, const std::string& path, const std::string& out) {
  report.add_input(path);
  const auto b = io::bundle_from_json(io::read_json_file(path));
  CheckReport r;
  auto s = compute_antipode(b);
  if (!s) {
    r.add_failure("antipode.exists");
    report.add_section("antipode", std::move(r));
    report.add_note("reason", "NoAntipode");
    return;
  }
  r.add_pass("antipode.exists");
  r.append(check_antipode(b, *s));
  report.add_section("antipode", std::move(r));
  io::write_json_file(out, io::bundle_to_json(b.with_antipode(*s)));
  report.add_note("output", out);
}

void cmd_family(RunReport& report, const std::string& path) {
  report.add_input(path);
  const auto f = io::family_from_json(io::read_json_file(path));
  report.add_section("braided", check_family_braided(f));
  report.add_section("maps", check_all_maps_compatible(f));
}

void cmd_diagram(RunReport& report, const std::string& env_path, const std::string& first,
                 const std::string& second, bool json) {
  report.add_input(env_path);
  const auto env = io::environment_from_json(io::read_json_file(env_path));
  const auto lhs = diagram::parse(expression_arg(first, report));
  if (second.empty()) {
    const auto boundary = diagram::typecheck(*lhs, env);
    const auto m = diagram::evaluate(*lhs, env);
    report.add_note("dom", boundary.dom);
    report.add_note("cod", boundary.cod);
    report.add_note("matrix", io::matrix_to_json(m));
    if (!json)
      std::cout << diagram::to_string(boundary.dom) << " -> " << diagram::to_string(boundary.cod) << "\n"
                << to_string(m) << "\n";
    return;
  }
  const auto rhs = diagram::parse(expression_arg(second, report));
  report.add_section("diagram", diagram::check_equal(*lhs, *rhs, env));
}

void cmd_fixtures(RunReport& report, const fs::path& dir) {
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& name, const io::json& j) {
    io::write_json_file(dir / name, j);
    written.push_back(name);
  };
  auto emit_text = [&](const std::string& name, const std::string& text) {
    io::write_text_file(dir / name, text + "\n");
    written.push_back(name);
  };
  const auto q = FieldSpec::rationals();
  const auto f5 = FieldSpec::prime(5);
  const auto b42 = fixtures::braided_line(4, Scalar::from_int(f5, 2));

  emit("trivial.json", io::bundle_to_json(fixtures::trivial()));
  emit("cross_trivial.json", io::cross_braid_to_json(CrossBraid::canonical(q, 1, 1)));
  emit("q_c2.json", io::bundle_to_json(fixtures::cyclic_group_algebra(2)));
  emit("q_c3.json", io::bundle_to_json(fixtures::cyclic_group_algebra(3)));
  emit("q_c6.json", io::bundle_to_json(fixtures::cyclic_group_algebra(6)));
  emit("q_c2xc3.json", io::bundle_to_json(fixtures::product_group_algebra(2, 3)));
  emit("cross_c2_c3_flip.json", io::cross_braid_to_json(CrossBraid::canonical(q, 3, 2)));
  emit("super_line.json", io::bundle_to_json(fixtures::braided_line(2, Scalar::from_int(q, -1))));
  emit("b42.json", io::bundle_to_json(b42));
  emit("bialgebra_no_antipode.json", io::bundle_to_json(fixtures::idempotent_bialgebra()));
  for (int r = 1; r <= 4; ++r) {
    const CrossBraid x(fixtures::scalar_cross_braid(4, 4, Scalar::from_int(f5, r)));
    emit("cross_b42_r" + std::to_string(r) + ".json", io::cross_braid_to_json(x));
    emit("family_b42_r" + std::to_string(r) + ".json", io::family_to_json(disentangle(b42, b42, x.c_lh_inverse())));
  }
  const auto t = fixtures::trivial();
  emit("family_trivial.json", io::family_to_json(disentangle(t, t, Morphism::identity(q, 1))));

  const CrossBraid x2(fixtures::scalar_cross_braid(4, 4, Scalar::from_int(f5, 2)));
  emit("diagram_env.json", io::environment_to_json(proof_environment(b42, b42, x2)));
  const auto steps = proof_chain();
  for (std::size_t k = 0; k < steps.size(); ++k)
    emit_text("chain_" + std::to_string(k + 1) + "_" + steps[k].name + ".txt", steps[k].text);
  const auto bad = misbraided_step();
  emit_text("chain_3_" + bad.name + ".txt", bad.text);
  report.add_note("written", written);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::string command = "bhopf";
  CLI::App app{"Exact checks for braided Hopf algebras and their tensor products", "bhopf"};
  app.set_version_flag("--version", BHOPF_VERSION);
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Print the run report as JSON");
  app.add_flag("--no-timestamp", opt.no_timestamp, "Omit the timestamp from the JSON report");
  app.fallthrough();

  std::string a, b, c, out;
  bool force = false;

  auto* validate = app.add_subcommand("validate", "Run the braided bialgebra battery on a bundle");
  validate->add_option("bundle", a, "Bundle JSON")->required();

  auto* tensor = app.add_subcommand("tensor", "Build H⊗L from a cross-braid and check it");
  tensor->add_option("H", a, "Bundle H")->required();
  tensor->add_option("L", b, "Bundle L")->required();
  tensor->add_option("cross", c, "Cross-braid JSON {\"c_LH\": ...}")->required();
  tensor->add_option("--out", out, "Where to write the product bundle")->required();
  tensor->add_flag("--force", force, "Build even when the hypotheses fail");

  auto* antipode = app.add_subcommand("antipode", "Solve for the antipode and write the augmented bundle");
  antipode->add_option("bundle", a, "Bundle JSON")->required();
  antipode->add_option("--out", out, "Where to write the bundle")->required();

  auto* family = app.add_subcommand("family", "Check a braided family and its maps");
  family->add_option("family", a, "Family JSON")->required();

  auto* diag = app.add_subcommand("diagram", "Evaluate one diagram or compare two (\"@file\" reads a file)");
  diag->add_option("env", a, "Environment JSON")->required();
  diag->add_option("expr1", b, "Diagram")->required();
  diag->add_option("expr2", c, "Second diagram to compare against");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the canonical fixture set");
  fixtures_cmd->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  command = app.get_subcommands().front()->get_name();
  RunReport report(command, !opt.no_timestamp);
  try {
    if (command == "validate")
      cmd_validate(report, a);
    else if (command == "tensor")
      cmd_tensor(report, a, b, c, out, force);
    else if (command == "antipode")
      cmd_antipode(report, a, out);
    else if (command == "family")
      cmd_family(report, a);
    else if (command == "diagram")
      cmd_diagram(report, a, b, c, opt.json);
    else
      cmd_fixtures(report, out);
  } catch (const std::exception& e) {
    std::cerr << "bhopf " << command << ": " << e.what() << "\n";
    report.set_error(e.what());
  }
  return finish(report, opt);
}
