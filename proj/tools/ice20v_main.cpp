// Command-line front end: sequence emission, verification suites, exact
// determinant inspection, and SVG rendering of path configurations and
// domino tilings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ice20v/apm.hpp"
#include "ice20v/builders.hpp"
#include "ice20v/count20v.hpp"
#include "ice20v/jsonio.hpp"
#include "ice20v/refinement.hpp"
#include "ice20v/region.hpp"
#include "ice20v/schroder.hpp"
#include "ice20v/svg.hpp"
#include "ice20v/verify.hpp"

namespace {

using namespace ice20v;

void write_output(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  f << text;
}

std::string read_input(const std::string& in) {
  if (in.empty() || in == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(in, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file: " + in);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct SeqOptions {
  std::string family;
  int max_n = 6;
  int k = 0;
  int b = 0, c = 1;
  std::string format = "json";
  std::string out;
};

int run_seq(const SeqOptions& opt) {
  std::vector<std::string> labels;
  std::vector<json> values;
  auto push_scalar = [&](int n, const Int& v) {
    labels.push_back(std::to_string(n));
    values.push_back(v.get_str());
  };
  auto emit_counts = [&](auto&& fn) {
    for (int n = 1; n <= opt.max_n; ++n) push_scalar(n, fn(n));
  };

  const std::string& fam = opt.family;
  if (fam == "A") emit_counts([](int n) { return count_20v(BoundarySpec::Kind::DWBC1, n); });
  else if (fam == "B") emit_counts([](int n) { return count_20v(BoundarySpec::Kind::DWBC3, n); });
  else if (fam == "p") emit_counts([&](int n) { return count_pentagon(n, opt.k); });
  else if (fam == "N") {
    for (int a = 0; a <= opt.max_n; ++a) {
      labels.push_back(std::to_string(a));
      values.push_back(count_rect_dwbc4(a, opt.b, opt.c).get_str());
    }
  } else if (fam == "sapm1")
    emit_counts([](int n) { return count_symmetry(BoundarySpec::Kind::DWBC1, n, ApmSymmetry::SAPM); });
  else if (fam == "tcapm")
    emit_counts([](int n) { return count_symmetry(BoundarySpec::Kind::DWBC1, n, ApmSymmetry::TCAPM); });
  else if (fam == "sapm3")
    emit_counts([](int n) { return count_symmetry(BoundarySpec::Kind::DWBC3, n, ApmSymmetry::SAPM); });
  else if (fam == "sapm4")
    emit_counts([](int n) { return count_symmetry(BoundarySpec::Kind::DWBC4, n, ApmSymmetry::SAPM); });
  else if (fam == "htapm")
    emit_counts([](int n) { return count_symmetry(BoundarySpec::Kind::DWBC4, n, ApmSymmetry::HTAPM); });
  else if (fam == "b" || fam == "b_n")
    emit_counts([](int n) { return triangle_count(std::size_t(n)); });
  else if (fam == "T4")
    emit_counts([](int n) { return t4_count(std::size_t(n)); });
  else if (fam == "refined1" || fam == "refined2") {
    int type = (fam == "refined1") ? 1 : 2;
    for (int n = 1; n <= opt.max_n; ++n) {
      labels.push_back(std::to_string(n));
      values.push_back(poly_to_json(t4_refined(std::size_t(n), type)));
    }
  } else {
    std::cerr << "unknown family: " << fam << "\n";
    return 2;
  }

  std::string text;
  if (opt.format == "json") {
    json arr = json::array();
    for (std::size_t i = 0; i < values.size(); ++i)
      arr.push_back(json{{"n", labels[i]}, {"value", values[i]}});
    text = json{{"family", fam}, {"values", arr}}.dump(2) + "\n";
  } else if (opt.format == "csv") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      text += labels[i];
      if (values[i].is_array()) {
        for (const auto& c : values[i]) text += "," + c.get<std::string>();
      } else {
        text += "," + values[i].get<std::string>();
      }
      text += "\n";
    }
  } else {
    std::cerr << "unknown format: " << opt.format << "\n";
    return 2;
  }
  write_output(opt.out, text);
  return 0;
}

struct DetOptions {
  std::string builder;
  int n = 3;
  int type = 1;
  std::string theta = "1";
  bool dump = false;
  std::string out;
};

int run_det(const DetOptions& opt) {
  json result;
  result["builder"] = opt.builder;
  result["n"] = opt.n;
  if (opt.builder == "t4") {
    Rat theta = rat_from_string(opt.theta);
    if (theta == 1) {
      Matrix<Int> m = build_t4_matrix(std::size_t(opt.n));
      if (opt.dump) result["matrix"] = matrix_to_json(m)["entries"];
      result["det"] = det_exact(m).get_str();
    } else {
      Matrix<Rat> m = build_t4_matrix<Rat>(std::size_t(opt.n), theta);
      result["theta"] = theta.get_str();
      if (opt.dump) result["matrix"] = matrix_to_json(m)["entries"];
      result["det"] = det_exact(m).get_str();
    }
  } else if (opt.builder == "t4-refined") {
    Matrix<PolyZ> m = build_refined_t4_matrix(std::size_t(opt.n), opt.type);
    result["type"] = opt.type;
    if (opt.dump) {
      json rows = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
      }
      result["matrix"] = rows;
    }
    PolyZ d = det_exact(m);
    result["det"] = poly_to_json(d);
    result["det_pretty"] = d.to_string();
  } else if (opt.builder == "ik") {
    IkDeterminant ik = build_ik_matrix(std::size_t(opt.n));
    if (opt.dump) {
      json rows = json::array();
      for (std::size_t i = 0; i < ik.matrix.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < ik.matrix.cols(); ++j)
          row.push_back(to_json(ik.matrix.at(i, j)));
        rows.push_back(row);
      }
      result["matrix"] = rows;
    }
    result["prefactor"] = to_json(ik.prefactor);
    result["det"] = ik_partition_value(std::size_t(opt.n)).get_str();
  } else if (opt.builder == "ik-refined") {
    Rat v = rat_from_string(opt.theta);
    IkDeterminant ik = build_ik_refined_matrix(std::size_t(opt.n), v);
    result["v"] = v.get_str();
    if (opt.dump) {
      json rows = json::array();
      for (std::size_t i = 0; i < ik.matrix.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < ik.matrix.cols(); ++j)
          row.push_back(to_json(ik.matrix.at(i, j)));
        rows.push_back(row);
      }
      result["matrix"] = rows;
    }
    result["prefactor"] = to_json(ik.prefactor);
    result["value"] = to_json(ik_refined_value(std::size_t(opt.n), v));
  } else if (opt.builder == "lgv-triangle") {
    std::size_t n = std::size_t(opt.n);
    StripSchroderTable strip(int(2 * n - 1));
    Matrix<Int> m(n, n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = strip.value(int(2 * i), int(2 * j + 1), int(2 * j + 1));
    if (opt.dump) result["matrix"] = matrix_to_json(m)["entries"];
    result["det"] = triangle_count(n).get_str();
  } else {
    std::cerr << "unknown builder: " << opt.builder << "\n";
    return 2;
  }
  write_output(opt.out, result.dump(2) + "\n");
  return 0;
}

struct RenderOptions {
  std::string in;
  std::string out = "out.svg";
  bool all = false;
  int limit = 64;
};

int run_render(const RenderOptions& opt) {
  std::string text = read_input(opt.in);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    std::cerr << "empty input\n";
    return 2;
  }
  try {
    if (text[first] == '{') {
      json j = json::parse(text);
      if (j.contains("h_bits")) {
        LatticeConfig c = config_from_json(j);
        write_output(opt.out, render_config_svg(c));
        return 0;
      }
      if (j.contains("region")) {
        Region r = Region::parse(j.at("region").get<std::string>());
        auto tilings = enumerate_tilings(r, std::size_t(opt.all ? opt.limit : 1));
        if (tilings.empty()) throw std::runtime_error("region has no tiling");
        if (!opt.all) {
          write_output(opt.out, render_tiling_svg(r, tilings[0]));
        } else {
          std::string stem = opt.out;
          if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".svg")
            stem = stem.substr(0, stem.size() - 4);
          for (std::size_t i = 0; i < tilings.size(); ++i)
            write_output(stem + "-" + std::to_string(i + 1) + ".svg",
                         render_tiling_svg(r, tilings[i]));
        }
        return 0;
      }
      std::cerr << "json input is neither a configuration nor a region\n";
      return 2;
    }
    // plain region bitmap
    Region r = Region::parse(text);
    auto tilings = enumerate_tilings(r, std::size_t(opt.all ? opt.limit : 1));
    if (tilings.empty()) throw std::runtime_error("region has no tiling");
    if (!opt.all) {
      write_output(opt.out, render_tiling_svg(r, tilings[0]));
    } else {
      std::string stem = opt.out;
      if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".svg")
        stem = stem.substr(0, stem.size() - 4);
      for (std::size_t i = 0; i < tilings.size(); ++i)
        write_output(stem + "-" + std::to_string(i + 1) + ".svg",
                     render_tiling_svg(r, tilings[i]));
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "render failed: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of triangular-lattice ice configurations and companion "
               "domino-tiling determinants"};
  app.require_subcommand(1);

  SeqOptions seq;
  CLI::App* seq_cmd = app.add_subcommand("seq", "emit counting sequences");
  seq_cmd->add_option("--family", seq.family, "A, B, p, N, sapm1, tcapm, sapm3, sapm4, htapm, b, T4, refined1, refined2")
      ->required();
  seq_cmd->add_option("--max-n", seq.max_n, "upper bound of the index range");
  seq_cmd->add_option("--k", seq.k, "pentagon vacancy count (family p)");
  seq_cmd->add_option("--b", seq.b, "rectangle parameter b (family N)");
  seq_cmd->add_option("--c", seq.c, "rectangle parameter c (family N)");
  seq_cmd->add_option("--format", seq.format, "json or csv");
  seq_cmd->add_option("--out", seq.out, "output file (default stdout)");

  std::string suite;
  int verify_max_n = 0;
  int jobs = 0;
  std::string verify_out;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "an6v z20t4 refined dwbc3 penta nabc apm-rules symmetry yang-baxter staggered kasteleyn all")
      ->required();
  verify_cmd->add_option("--max-n", verify_max_n, "override the per-suite size cap");
  verify_cmd->add_option("--jobs", jobs, "worker threads (env ICE20V_JOBS overrides)");
  verify_cmd->add_option("--out", verify_out, "write the JSON report to a file");

  DetOptions det;
  CLI::App* det_cmd = app.add_subcommand("det", "build a determinant matrix and evaluate it");
  det_cmd->add_option("--builder", det.builder, "t4, t4-refined, ik, ik-refined, lgv-triangle")
      ->required();
  det_cmd->add_option("--n", det.n, "matrix size");
  det_cmd->add_option("--type", det.type, "refined statistic type (1 or 2)");
  det_cmd->add_option("--theta", det.theta,
                      "path weight for t4; deformation parameter v for ik-refined");
  det_cmd->add_flag("--dump", det.dump, "include the matrix in the output");
  det_cmd->add_option("--out", det.out, "output file (default stdout)");

  RenderOptions render;
  CLI::App* render_cmd = app.add_subcommand("render", "render a configuration or tiling as SVG");
  render_cmd->add_option("--in", render.in, "input file (default stdin)");
  render_cmd->add_option("--out", render.out, "output SVG path");
  render_cmd->add_flag("--all", render.all, "render every tiling of a region (numbered files)");
  render_cmd->add_option("--limit", render.limit, "cap for --all");

  std::string matchings_in;
  CLI::App* match_cmd =
      app.add_subcommand("matchings", "count domino tilings of a region bitmap");
  match_cmd->add_option("--in", matchings_in, "region text file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (seq_cmd->parsed()) return run_seq(seq);
    if (det_cmd->parsed()) return run_det(det);
    if (render_cmd->parsed()) return run_render(render);
    if (match_cmd->parsed()) {
      Region r = Region::parse(read_input(matchings_in));
      std::cout << domino_matchings(r).get_str() << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      if (std::getenv("ICE20V_JOBS") || jobs <= 0) jobs = default_jobs();
      VerifyReport rep = run_suite(suite, verify_max_n, jobs);
      std::string text = rep.to_json().dump(2) + "\n";
      if (!verify_out.empty()) write_output(verify_out, text);
      std::cout << text;
      for (const auto& c : rep.checks)
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.id
                  << (c.expected_fail ? " (negative control)" : "") << "\n";
      return rep.passed() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
