#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "loophom/artin.hpp"
#include "loophom/io.hpp"
#include "loophom/loop_assembly.hpp"
#include "loophom/verify.hpp"

using namespace loophom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

std::vector<VertexAlgebra> parse_inputs(const std::string& spec, int m,
                                        int cutoff) {
  std::vector<VertexAlgebra> out;
  if (spec.find(';') == std::string::npos &&
      spec.find('{') == std::string::npos) {
    // "poly(1)" applied to all vertices, or "poly(1),exterior(2),..." per
    // vertex
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : spec) {
      if (ch == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
        continue;
      }
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      cur += ch;
    }
    if (!cur.empty()) parts.push_back(cur);
    if (static_cast<int>(parts.size()) == 1)
      parts.assign(m, parts.front());
    if (static_cast<int>(parts.size()) != m)
      throw std::invalid_argument("expected one vertex algebra per vertex");
    for (const auto& p : parts) out.push_back(vertex_algebra_from_spec(p, cutoff));
    return out;
  }
  // semicolon-separated JSON payloads
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';'))
    out.push_back(vertex_algebra_from_spec(item, cutoff));
  if (static_cast<int>(out.size()) == 1) out.assign(m, out.front());
  if (static_cast<int>(out.size()) != m)
    throw std::invalid_argument("expected one vertex algebra per vertex");
  return out;
}

TruncatedSeries series_of_input(const std::string& spec, int order) {
  auto paren = spec.find('(');
  if (paren == std::string::npos || spec.back() != ')')
    throw std::invalid_argument("series inputs must be poly(n) or exterior(n)");
  std::string kind = spec.substr(0, paren);
  int arg = std::stoi(spec.substr(paren + 1, spec.size() - paren - 2));
  if (kind == "poly") return TruncatedSeries::geometric(order, arg);
  if (kind == "exterior")
    return TruncatedSeries::one(order) +
           TruncatedSeries::monomial(order, arg, Rational(1));
  throw std::invalid_argument("unknown series shorthand: " + spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homology of configuration chain algebras over "
               "simplicial complexes"};
  app.require_subcommand(1);

  std::string complex_path, output_path, format = "tsv", inputs = "poly(1)";
  std::string multidegree_arg, interpretation = "vacuous", direction = "calibrated";
  int bound = 3, cutoff = 6;
  long long characteristic = 0;
  unsigned seed = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_complex) {
    if (needs_complex)
      cmd->add_option("--complex", complex_path, "complex JSON file")->required();
    cmd->add_option("-o,--output", output_path, "output file (default stdout)");
    cmd->add_option("--format", format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));
  };

  auto* betti = app.add_subcommand("betti", "integer homology table");
  add_common(betti, true);
  betti->add_option("--bound", bound, "max |I|");
  std::string dump_dir;
  betti->add_option("--dump-boundaries", dump_dir,
                    "also write each boundary matrix as sparse triplets, one "
                    "file per (I, degree), into this directory");

  auto* ext = app.add_subcommand(
      "ext", "resolution vs chain-algebra dimension comparison");
  add_common(ext, true);
  ext->add_option("--bound", bound, "max |I|");
  ext->add_option("--char", characteristic, "field characteristic (0 or prime)");

  auto* verify = app.add_subcommand("verify", "run the cross-check battery");
  std::vector<std::string> verify_complexes;
  std::string corpus_mode = "builtin";
  bool corrupt_hook = false;
  verify->add_option("--complex", verify_complexes, "complex JSON file(s)");
  verify->add_option("--corpus", corpus_mode, "builtin|none")
      ->check(CLI::IsMember({"builtin", "none"}));
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_flag("--corrupt-hook", corrupt_hook,
                   "test hook: corrupt a boundary matrix and expect detection");
  verify->add_option("-o,--output", output_path, "output file (default stdout)");

  auto* loop = app.add_subcommand("loop", "loop homology dimensions");
  add_common(loop, true);
  loop->add_option("--inputs", inputs,
                   "vertex algebras: poly(n), exterior(n), comma list, or "
                   "semicolon-separated JSON");
  loop->add_option("--cutoff", cutoff, "max total degree");
  loop->add_option("--char", characteristic, "field characteristic");

  auto* series = app.add_subcommand("series", "inverse Poincare series");
  add_common(series, true);
  series->add_option("--inputs", inputs, "poly(n)/exterior(n), comma list");
  series->add_option("--cutoff", cutoff, "truncation order");
  bool fatwedge = false;
  int fw_m = 3, fw_s = 3;
  series->add_flag("--fatwedge", fatwedge,
                   "also evaluate the generalized fat wedge formula");
  series->add_option("--fatwedge-m", fw_m, "fat wedge m");
  series->add_option("--fatwedge-s", fw_s, "fat wedge s");

  auto* artin = app.add_subcommand("artin", "monoid element counts");
  add_common(artin, true);
  artin->add_option("--bound", bound, "max |I|");
  artin->add_option("--multidegree", multidegree_arg,
                    "single multidegree, comma-joined");

  auto* noequal = app.add_subcommand(
      "noequal", "basis enumeration vs homology for the no-s-equal manifold");
  int ne_m = 4, ne_s = 3;
  noequal->add_option("-m", ne_m, "ambient arity")->required();
  noequal->add_option("-s", ne_s, "equality arity")->required();
  noequal->add_option("--interpretation", interpretation,
                      "vacuous|nonempty|internal");
  noequal->add_option("--direction", direction, "calibrated|printed");
  noequal->add_option("-o,--output", output_path, "output file");

  auto* arrangement =
      app.add_subcommand("arrangement", "diagonal arrangement description");
  add_common(arrangement, true);
  arrangement->add_option("--multidegree", multidegree_arg, "comma-joined")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream file;

    if (betti->parsed()) {
      auto K = complex_from_json_file(complex_path);
      BettiTable table;
      for (const auto& I : multidegrees_up_to(K.vertex_count(), bound)) {
        if (I.total() == 0) {
          table.entries[{I, 0}] = HomologyGroup{1, {}};
          continue;
        }
        auto cx = tk_complex(K, I);
        for (const auto& [d, g] : integer_homology(cx))
          table.entries[{I, d}] = g;
        if (!dump_dir.empty()) {
          for (int d = cx.min_degree(); d <= cx.max_degree(); ++d) {
            std::string name = dump_dir + "/boundary_";
            for (int j = 0; j < K.vertex_count(); ++j)
              name += (j ? "-" : "") + std::to_string(I[j]);
            name += "_" + std::to_string(d) + ".txt";
            std::ofstream out(name);
            if (!out) throw std::runtime_error("cannot open " + name);
            cx.dump_boundary(d, out);
          }
        }
      }
      auto& os = open_output(file, output_path);
      if (format == "tsv")
        write_betti_tsv(table, os);
      else
        write_betti_json(table, os);
      return kExitOk;
    }

    if (ext->parsed()) {
      auto K = complex_from_json_file(complex_path);
      auto report = verify_cotor_iso(K, characteristic, bound);
      auto& os = open_output(file, output_path);
      write_cotor_tsv(report, os);
      return report.all_match ? kExitOk : kExitCheckFailure;
    }

    if (verify->parsed()) {
      VerifyOptions opt;
      opt.seed = seed;
      opt.corrupt_hook = corrupt_hook;
      if (corpus_mode == "builtin") opt.complexes = builtin_corpus();
      for (const auto& path : verify_complexes)
        opt.complexes.push_back({path, complex_from_json_file(path)});
      auto results = run_verification(opt);
      auto& os = open_output(file, output_path);
      bool all = true;
      for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << '\t' << r.name;
        if (!r.detail.empty()) os << '\t' << r.detail;
        os << '\n';
        all = all && r.pass;
      }
      return all ? kExitOk : kExitCheckFailure;
    }

    if (loop->parsed()) {
      auto K = complex_from_json_file(complex_path);
      auto algebras = parse_inputs(inputs, K.vertex_count(), cutoff);
      auto dims = loop_homology_dims(K, algebras, characteristic, cutoff);
      auto& os = open_output(file, output_path);
      if (format == "tsv")
        write_dims_tsv(dims, os);
      else
        write_dims_json(dims, os);
      return kExitOk;
    }

    if (series->parsed()) {
      auto K = complex_from_json_file(complex_path);
      int m = K.vertex_count();
      std::vector<std::string> parts;
      std::string cur;
      for (char ch : inputs) {
        if (ch == ',' && cur.find('(') != std::string::npos &&
            cur.back() == ')') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      if (!cur.empty()) parts.push_back(cur);
      if (static_cast<int>(parts.size()) == 1) parts.assign(m, parts.front());
      std::vector<TruncatedSeries> vs;
      for (const auto& p : parts) vs.push_back(series_of_input(p, cutoff));
      auto inv = flag_loop_series(K, vs, cutoff);
      auto& os = open_output(file, output_path);
      if (format == "tsv")
        write_series_tsv(inv, os);
      else
        write_series_json(inv, os);
      if (fatwedge) {
        std::vector<TruncatedSeries> fws(fw_m, vs.front());
        auto all = fatwedge_loop_series(fw_m, fw_s, fws, cutoff, true);
        auto faces = fatwedge_loop_series(fw_m, fw_s, fws, cutoff, false);
        os << "# fat wedge (all subsets reading)\n";
        write_series_tsv(all, os);
        os << "# fat wedge (skeleton faces reading)\n";
        write_series_tsv(faces, os);
      }
      return kExitOk;
    }

    if (artin->parsed()) {
      auto K = complex_from_json_file(complex_path);
      auto& os = open_output(file, output_path);
      os << "I\tcount\n";
      if (!multidegree_arg.empty()) {
        std::vector<int> e;
        std::stringstream ss(multidegree_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
        MultiDegree I(e);
        os << I.to_string() << '\t' << artin_count_by_multidegree(K, I) << '\n';
      } else {
        for (const auto& I : multidegrees_up_to(K.vertex_count(), bound))
          os << I.to_string() << '\t' << artin_count_by_multidegree(K, I)
             << '\n';
      }
      return kExitOk;
    }

    if (noequal->parsed()) {
      NoEqualInterpretation interp;
      if (interpretation == "vacuous")
        interp = NoEqualInterpretation::kVacuousWhenEmpty;
      else if (interpretation == "nonempty")
        interp = NoEqualInterpretation::kRequireNonempty;
      else if (interpretation == "internal")
        interp = NoEqualInterpretation::kInternalOnly;
      else
        throw CLI::ValidationError("--interpretation",
                                   "expected vacuous|nonempty|internal");
      NoEqualDirection dir = direction == "printed"
                                 ? NoEqualDirection::kAsPrinted
                                 : NoEqualDirection::kCalibrated;
      auto cmp = no_k_equal_comparison(ne_m, ne_s, interp, dir);
      auto& os = open_output(file, output_path);
      write_noequal_tsv(cmp, os);
      return cmp.all_match ? kExitOk : kExitCheckFailure;
    }

    if (arrangement->parsed()) {
      auto K = complex_from_json_file(complex_path);
      std::vector<int> e;
      std::stringstream ss(multidegree_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
      auto arr = multidegree_to_arrangement(K, MultiDegree(e));
      auto& os = open_output(file, output_path);
      write_arrangement_json(arr, os);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
