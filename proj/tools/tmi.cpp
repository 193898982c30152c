// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tmi: build, resolve and certify cellular resolutions of transversal
// monomial ideals.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmi/tmi.hpp"

namespace {

constexpr int kPipelineVariableCap = 16;

struct ConfigOptions {
  int n = 0;
  int t = 0;
  std::string b;
  std::string config_path;
};

void add_config_options(CLI::App* cmd, ConfigOptions& o) {
  cmd->add_option("-n", o.n, "number of blocks");
  cmd->add_option("-t", o.t, "transversal degree");
  cmd->add_option("-b", o.b, "block sizes, comma separated");
  cmd->add_option("--config", o.config_path, "JSON file {\"n\":..,\"t\":..,\"b\":[..]}");
}

tmi::BlockConfig resolve_config(const ConfigOptions& o) {
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw tmi::ParameterError("cannot open config file " + o.config_path);
    tmi::json j;
    try {
      in >> j;
    } catch (const tmi::json::exception& e) {
      throw tmi::ParameterError(std::string("config file is not valid JSON: ") + e.what());
    }
    return tmi::config_from_json(j);
  }
  if (o.n == 0 || o.t == 0 || o.b.empty()) throw tmi::ParameterError("need -n, -t and -b (or --config)");
  std::vector<int> sizes;
  std::stringstream ss(o.b);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      sizes.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw tmi::ParameterError("malformed block size '" + item + "'");
    }
  }
  return tmi::BlockConfig(o.n, o.t, sizes);
}

std::vector<std::string> config_warnings(const tmi::BlockConfig& cfg) {
  std::vector<std::string> out;
  if (!cfg.weakly_increasing()) out.push_back("block sizes are not weakly increasing; accepted as given");
  return out;
}

void enforce_pipeline_cap(const tmi::BlockConfig& cfg) {
  if (cfg.m() > kPipelineVariableCap) {
    throw tmi::SizeCapError("pipeline limited to m <= " + std::to_string(kPipelineVariableCap) + " variables, got m=" +
                            std::to_string(cfg.m()));
  }
}

void write_json_file(const std::string& path, const tmi::json& j) {
  std::ofstream out(path);
  if (!out) throw tmi::ParameterError("cannot write " + path);
  out << j.dump(2) << "\n";
}

tmi::LabeledComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tmi::ParameterError("cannot open complex file " + path);
  tmi::json j;
  try {
    in >> j;
  } catch (const tmi::json::exception& e) {
    throw tmi::ParameterError(std::string("complex file is not valid JSON: ") + e.what());
  }
  return tmi::complex_from_json(j);
}

tmi::LabeledComplex build_gamma(const tmi::BlockConfig& cfg, bool closed) {
  enforce_pipeline_cap(cfg);
  return closed ? tmi::gamma_closed(cfg) : tmi::gamma(cfg);
}

std::string f_vector_string(const std::vector<std::size_t>& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + std::to_string(f[i]);
  return out + ")";
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

template <class Field>
tmi::AcyclicityReport run_acyclic(const tmi::LabeledComplex& x, const Field& field) {
  return tmi::check_acyclic(x, field);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular resolutions of transversal monomial ideals"};
  app.require_subcommand(1);

  ConfigOptions opts;
  std::string json_path;
  std::string off_path;
  std::string input_path;
  bool closed = false;
  bool seed_check = false;
  std::uint32_t prime = tmi::kDefaultPrime;
  bool rational = false;

  auto* gen = app.add_subcommand("gen", "print the minimal generators of I_{n,t}");
  add_config_options(gen, opts);
  gen->add_option("--json", json_path, "write generators as JSON");

  auto* build = app.add_subcommand("build", "build the complex and print its f-vector");
  add_config_options(build, opts);
  build->add_flag("--closed", closed, "use the closed-form construction");
  build->add_flag("--seed-check", seed_check, "compare the recursive and closed-form constructions");
  build->add_option("--json", json_path, "write the complex as JSON");

  auto* resolve = app.add_subcommand("resolve", "print the Betti table read off the complex");
  add_config_options(resolve, opts);
  resolve->add_flag("--closed", closed, "use the closed-form construction");
  resolve->add_option("--input", input_path, "read the complex from a JSON file instead");
  resolve->add_option("--json", json_path, "write the Betti table as JSON");

  auto* verify = app.add_subcommand("verify", "certify that the complex supports a minimal free resolution");
  add_config_options(verify, opts);
  verify->add_flag("--closed", closed, "use the closed-form construction");
  verify->add_option("--input", input_path, "read the complex from a JSON file instead");
  verify->add_option("--prime", prime, "characteristic for the homology computations");
  verify->add_flag("--rational", rational, "compute homology over Q (slow)");
  verify->add_option("--json", json_path, "write the certificate as JSON");

  auto* oracle = app.add_subcommand("oracle", "Betti table from the ideal alone (upper Koszul complexes)");
  add_config_options(oracle, opts);
  oracle->add_option("--prime", prime, "characteristic for the homology computations");
  oracle->add_flag("--rational", rational, "compute homology over Q (slow)");
  oracle->add_option("--json", json_path, "write the Betti table as JSON");

  std::string mono_text;
  int vm = 0, vt = 0;
  bool inverse = false;
  auto* depol = app.add_subcommand("depolarize", "squarefree Veronese depolarization x -> y");
  depol->add_option("monomial", mono_text, "e.g. x[1]*x[3]*x[4]")->required();
  depol->add_option("-m", vm, "number of variables")->required();
  depol->add_option("-t", vt, "degree")->required();
  depol->add_flag("--inverse", inverse, "polarize a y-monomial back to x");

  auto* vcheck = app.add_subcommand("veronese-check", "ball-shape necessary conditions for the Veronese case");
  vcheck->add_option("-m", vm, "number of variables")->required();
  vcheck->add_option("-t", vt, "degree")->required();
  vcheck->add_option("--prime", prime, "characteristic for the homology computation");

  auto* exp = app.add_subcommand("export", "export the complex as JSON and/or OFF");
  add_config_options(exp, opts);
  exp->add_flag("--closed", closed, "use the closed-form construction");
  exp->add_option("--json", json_path, "write the complex as JSON");
  exp->add_option("--off", off_path, "write the realization as OFF");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto cfg = resolve_config(opts);
      print_warnings(config_warnings(cfg));
      const auto ideal = tmi::transversal_generators(cfg);
      std::cout << tmi::to_string(ideal);
      if (!json_path.empty()) {
        tmi::json j;
        j["config"] = tmi::to_json(cfg);
        j["warnings"] = config_warnings(cfg);
        std::vector<std::string> gens;
        for (const auto& g : ideal.gens()) gens.push_back(tmi::to_string(g));
        j["generators"] = gens;
        write_json_file(json_path, j);
      }
      return 0;
    }

    if (*build || *exp) {
      const auto cfg = resolve_config(opts);
      print_warnings(config_warnings(cfg));
      const auto x = build_gamma(cfg, closed);
      if (*build) {
        std::cout << "f-vector: " << f_vector_string(tmi::f_vector(x)) << "\n";
        std::cout << "maximal cells: " << tmi::maximal_cells(x).size() << "\n";
        std::cout << "connected: " << (tmi::is_connected(x) ? "yes" : "no") << "\n";
      }
      int status = 0;
      if (seed_check) {
        const bool same = tmi::gamma(cfg) == tmi::gamma_closed(cfg);
        std::cout << "seed-check: " << (same ? "PASS" : "FAIL") << "\n";
        if (!same) status = 1;
      }
      if (!json_path.empty()) {
        tmi::json j = tmi::to_json(x);
        j["config"] = tmi::to_json(cfg);
        j["warnings"] = config_warnings(cfg);
        write_json_file(json_path, j);
      }
      if (!off_path.empty()) {
        std::ofstream out(off_path);
        if (!out) throw tmi::ParameterError("cannot write " + off_path);
        tmi::write_off(out, x, cfg.variables());
      }
      return status;
    }

    if (*resolve) {
      tmi::LabeledComplex x;
      std::vector<std::string> warnings;
      if (!input_path.empty()) {
        x = load_complex(input_path);
      } else {
        const auto cfg = resolve_config(opts);
        warnings = config_warnings(cfg);
        print_warnings(warnings);
        x = build_gamma(cfg, closed);
      }
      const auto table = tmi::betti_table(x);
      std::cout << tmi::betti_text(table);
      if (!json_path.empty()) {
        tmi::json j = tmi::to_json(table);
        j["warnings"] = warnings;
        write_json_file(json_path, j);
      }
      return 0;
    }

    if (*verify) {
      tmi::LabeledComplex x;
      std::optional<tmi::MonomialIdeal> ideal;
      if (!input_path.empty()) {
        x = load_complex(input_path);
      } else {
        const auto cfg = resolve_config(opts);
        print_warnings(config_warnings(cfg));
        x = build_gamma(cfg, closed);
        ideal = tmi::transversal_generators(cfg);
      }
      if (static_cast<int>(x.variables().size()) > kPipelineVariableCap) {
        throw tmi::SizeCapError("verification limited to " + std::to_string(kPipelineVariableCap) + " variables");
      }
      const auto d2 = tmi::check_d2(tmi::cellular_complex(x));
      const auto minimal = tmi::check_minimal(x);
      const auto acyclic = rational ? run_acyclic(x, tmi::RationalField()) : run_acyclic(x, tmi::PrimeField(prime));
      std::optional<tmi::HilbertReport> hilbert;
      if (ideal && ideal->size() <= tmi::kHilbertGeneratorCap) hilbert = tmi::hilbert_numerator_check(x, *ideal);

      auto word = [](bool ok) { return ok ? "PASS" : "FAIL"; };
      std::cout << "d2: " << word(d2.passed) << ", minimal: " << word(minimal.passed)
                << ", acyclic: " << word(acyclic.check.passed) << " (" << acyclic.check.checked
                << " degrees checked)";
      if (hilbert) std::cout << ", hilbert: " << word(hilbert->check.passed);
      std::cout << "\n";
      for (const auto* r : {&d2, &minimal, &acyclic.check}) {
        for (const auto& f : r->failures) std::cout << "  " << r->name << ": " << f << "\n";
      }
      if (hilbert) {
        for (const auto& f : hilbert->check.failures) std::cout << "  hilbert: " << f << "\n";
      }
      const bool ok = d2.passed && minimal.passed && acyclic.check.passed && (!hilbert || hilbert->check.passed);
      if (!json_path.empty()) {
        tmi::json j;
        j["passed"] = ok;
        j["characteristic"] = acyclic.characteristic;
        tmi::json checks = tmi::json::array({tmi::to_json(d2), tmi::to_json(minimal), tmi::to_json(acyclic.check)});
        if (hilbert) checks.push_back(tmi::to_json(hilbert->check));
        j["checks"] = std::move(checks);
        write_json_file(json_path, j);
      }
      return ok ? 0 : 1;
    }

    if (*oracle) {
      const auto cfg = resolve_config(opts);
      print_warnings(config_warnings(cfg));
      enforce_pipeline_cap(cfg);
      const auto ideal = tmi::transversal_generators(cfg);
      const auto table = rational ? tmi::betti_oracle(ideal, tmi::RationalField())
                                  : tmi::betti_oracle(ideal, tmi::PrimeField(prime));
      std::cout << tmi::betti_text(table);
      if (!json_path.empty()) write_json_file(json_path, tmi::to_json(table));
      return 0;
    }

    if (*depol) {
      const auto mono = tmi::parse_monomial(mono_text);
      if (inverse) {
        std::cout << tmi::veronese_string(tmi::polarize(mono, vm, vt), 'x') << "\n";
      } else {
        std::cout << tmi::veronese_string(tmi::depolarize(mono, vm, vt), 'y') << "\n";
      }
      return 0;
    }

    if (*vcheck) {
      if (vm > kPipelineVariableCap) throw tmi::SizeCapError("veronese-check limited to m <= 16");
      const auto report = tmi::veronese_checks(vm, vt, prime);
      std::cout << "f-vector: " << f_vector_string(report.f) << "\n";
      for (const auto& c : report.checks) {
        std::cout << c.name << ": " << (c.passed ? "PASS" : "FAIL");
        for (const auto& f : c.failures) std::cout << " (" << f << ")";
        std::cout << "\n";
      }
      return report.passed() ? 0 : 1;
    }
  } catch (const tmi::Error& e) {
    const char* kind = dynamic_cast<const tmi::SizeCapError*>(&e)      ? "size-cap"
                       : dynamic_cast<const tmi::ParameterError*>(&e)  ? "parameter"
                                                                       : "construction";
    std::cerr << tmi::json({{"error", kind}, {"message", e.what()}}).dump() << "\n";
    return 2;
  }
  return 0;
}
