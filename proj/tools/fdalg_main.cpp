// Command line front end: analyze algebra files, run the bundled end-to-end
// checks, export the built-in algebra families, build semitrivial extensions,
// and probe Picard orders.  Exit codes: 0 success, 1 a check or search
// failed, 2 usage or file errors.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fdalg/serialize.hpp"
#include "fdalg/verify.hpp"

namespace {

using namespace fdalg;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

AlgebraFile load(const std::string& path) {
  try {
    return from_json(slurp(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer list \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<Scalar> parse_scalars(const Field& f, const std::string& text) {
  std::vector<Scalar> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(f.from_string(item));
    } catch (const std::exception&) {
      throw UsageError("bad scalar list \"" + text + "\" over " + f.name());
    }
  }
  if (out.empty()) throw UsageError("empty scalar list");
  return out;
}

Scalar parse_scalar(const Field& f, const std::string& text) {
  try {
    return f.from_string(text);
  } catch (const std::exception&) {
    throw UsageError("bad scalar \"" + text + "\" over " + f.name());
  }
}

void emit(const Report& rep, bool json) { std::cout << (json ? render_json(rep) : render_text(rep)); }

std::string order_str(const std::optional<int>& o, int max) {
  return o ? std::to_string(*o) : ("none found up to " + std::to_string(max));
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, const VerifyOptions& opt, bool json) {
  const AlgebraFile file = load(path);
  const FDAlgebra& A = file.algebra;
  Rng rng(opt.seed);
  Report root{"analysis of " + path, "", "", 0.0, {}};
  Stopwatch sw;

  root.child("field").verdict = A.field.name();
  root.child("dimension").verdict = std::to_string(A.dim);
  root.child("algebra axioms").verdict = check_algebra(A).ok() ? "pass" : "FAIL";
  root.child("center dimension").verdict = std::to_string(center(A).dim());

  const QuasiFrobeniusReport qf = is_quasi_frobenius(A);
  root.child("quasi-Frobenius").verdict = qf.quasi_frobenius() ? "yes" : "no";

  const FrobeniusSearch fs = find_frobenius_form(A, rng, opt.trials);
  {
    Report& ch = root.child("Frobenius form");
    ch.verdict = fs.frobenius() ? "yes" : "no";
    ch.detail = fs.evidence.describe();
  }
  if (fs.frobenius()) {
    const OutOrderResult oo = out_order(A, fs.witness->nakayama, opt.max_order, rng, opt.trials);
    root.child("Nakayama outer order").verdict = order_str(oo.order, opt.max_order);
  }
  {
    const SymmetricSearch sym = is_symmetric(A, rng, opt.trials);
    Report& ch = root.child("symmetric");
    ch.verdict = sym.symmetric() ? "yes" : "no";
    ch.detail = "trace-like dimension " + std::to_string(sym.trace_like_dim) + "; " + sym.evidence.describe();
  }

  if (file.grading) {
    root.child("grading axioms").verdict = check_graded(*file.grading).ok() ? "pass" : "FAIL";
    root.child("strongly graded").verdict = is_strongly_graded(*file.grading).strongly_graded() ? "yes" : "no";
  }
  if (file.hopf) {
    root.child("Hopf axioms").verdict = check_hopf(*file.hopf).ok() ? "pass" : "FAIL";
    try {
      const TheoremAReport rep = theorem_A_check(*file.hopf, opt.max_order, rng, opt.trials);
      root.child("antipode-squared outer order").verdict = std::to_string(rep.antipode_sq_out_order);
      root.child("modular convolution order").verdict = std::to_string(rep.modular_order);
      root.child("Picard order of the dual class").verdict = std::to_string(rep.pic_order);
      root.child("lcm identity").verdict = rep.lcm_consistent ? "holds" : "FAILS";
    } catch (const std::exception& e) {
      root.child("Hopf order battery").verdict = std::string("skipped: ") + e.what();
    }
  }

  root.ms = sw.ms();
  emit(root, json);
  return 0;
}

int cmd_verify(const VerifyOptions& opt, bool json, int section) {
  std::vector<CriterionResult> results;
  if (section != 0) {
    if (section < 1 || section > criterion_count()) throw UsageError("--section must be in 1.." + std::to_string(criterion_count()));
    results.push_back(run_criterion(section, opt));
  } else {
    results = run_all(opt);
  }

  int failures = 0;
  Report root{"bundled checks", "", "", 0.0, {}};
  for (const CriterionResult& res : results) {
    if (!res.passed) ++failures;
    root.children.push_back(res.report);
    root.ms += res.ms;
  }
  root.verdict = failures == 0 ? "pass" : std::to_string(failures) + " FAILED";
  if (json) {
    emit(root, true);
  } else {
    for (const CriterionResult& res : results) {
      std::printf("%s  %2d  %-64s  %7.0f ms (target %5.0f ms)\n", res.passed ? "PASS" : "FAIL", res.id,
                  res.title.c_str(), res.ms, res.target_ms);
      if (!res.passed) std::cout << render_text(res.report);
    }
    std::cout << (failures == 0 ? "all criteria passed\n" : std::to_string(failures) + " criteria FAILED\n");
  }
  return failures == 0 ? 0 : 1;
}

int cmd_zoo(const std::string& name, const std::string& field_name, const std::string& q_str,
            const std::string& u_str, const std::string& v_str, const std::string& orders_str,
            const std::string& kind_str, int n, const std::string& c_str, const std::string& cstar_str,
            const std::string& out_path) {
  const Field f = [&] {
    try {
      return field_from_name(field_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  AlgebraFile file;
  try {
    if (name == "nakayama-R") {
      file = wrap(nakayama_R(f));
    } else if (name == "quantum-plane") {
      file = wrap(quantum_plane_quotient(f, parse_scalar(f, q_str)));
    } else if (name == "nakayama-nesbitt") {
      file = wrap(nakayama_nesbitt(f, parse_scalar(f, u_str), parse_scalar(f, v_str)).algebra);
    } else if (name == "group-algebra") {
      file = wrap(group_algebra(AbelianGroupSpec{parse_orders(orders_str)}, f));
    } else if (name == "quantum-line") {
      QuantumLineKind kind;
      if (kind_str == "h1" || kind_str == "H1") {
        kind = QuantumLineKind::H1;
      } else if (kind_str == "h2" || kind_str == "H2") {
        kind = QuantumLineKind::H2;
      } else {
        throw UsageError("--kind must be h1 or h2");
      }
      const AbelianGroupSpec C{parse_orders(orders_str)};
      const CharacterSpec cstar{parse_scalars(f, cstar_str)};
      file = wrap(quantum_line(kind, C, n, parse_orders(c_str), cstar, f).hopf);
    } else {
      throw UsageError("unknown family \"" + name +
                       "\" (expected nakayama-R, quantum-plane, nakayama-nesbitt, quantum-line, group-algebra)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot build ") + name + ": " + e.what());
  }

  const std::string text = to_json(file);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    spill(out_path, text);
    std::cerr << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_extend(const std::string& path, const std::string& pairing_mode, const std::string& out_path,
               const VerifyOptions& opt, bool json) {
  const AlgebraFile file = load(path);
  const FDAlgebra& A = file.algebra;
  Rng rng(opt.seed);

  std::optional<Pairing> pairing;
  std::string how;
  if (pairing_mode == "zero") {
    pairing = zero_pairing(A);
    how = "zero pairing";
  } else if (pairing_mode == "auto") {
    if (A.same_shape(nakayama_R(A.field))) {
      pairing = make_pairing(A, varphi_pairing(A.field).iso.matrix);
      how = "built-in monomial pairing";
    } else {
      const FrobeniusSearch fs = find_frobenius_form(A, rng, opt.trials);
      if (fs.frobenius()) {
        try {
          const PairingMapResult pm = frobenius_pairing_map(A, *fs.witness, rng, opt.trials);
          pairing = Pairing{A, pm.square, pm.iso};
          how = "pairing induced by a Frobenius form";
        } catch (const std::exception& e) {
          std::cerr << "Frobenius route failed: " << e.what() << "\n";
        }
      }
    }
    if (pairing && !is_associative_pairing(*pairing).ok()) {
      std::cerr << "found pairing is not associative; giving up\n";
      pairing.reset();
    }
    if (!pairing) {
      std::cerr << "no associative pairing found for " << path << "\n";
      return 1;
    }
  } else {
    throw UsageError("--pairing must be zero or auto");
  }

  const GradedAlgebra ext = semitrivial_extension(A, *pairing);
  Report root{"semitrivial extension of " + path, "", "", 0.0, {}};
  root.child("pairing").verdict = how;
  root.child("dimension").verdict = std::to_string(ext.algebra.dim);
  root.child("strongly graded").verdict = is_strongly_graded(ext).strongly_graded() ? "yes" : "no";
  const SymmetricSearch sym = is_symmetric(ext.algebra, rng, opt.trials);
  root.child("symmetric").verdict = sym.symmetric() ? "yes" : "no";

  const std::string text = to_json(wrap(ext));
  if (out_path.empty()) {
    std::cout << text;
    std::cerr << (json ? render_json(root) : render_text(root));
  } else {
    spill(out_path, text);
    emit(root, json);
  }
  return 0;
}

int cmd_pic_order(const std::string& path, const VerifyOptions& opt, bool json) {
  const AlgebraFile file = load(path);
  const FDAlgebra& A = file.algebra;
  Rng rng(opt.seed);
  Report root{"Picard order probe of " + path, "", "", 0.0, {}};
  Stopwatch sw;

  const QuasiFrobeniusReport qf = is_quasi_frobenius(A);
  root.child("quasi-Frobenius").verdict = qf.quasi_frobenius() ? "yes" : "no";
  if (!qf.quasi_frobenius()) {
    root.verdict = "not applicable";
    root.ms = sw.ms();
    emit(root, json);
    return 1;
  }

  const PicProbeResult probe = pic_order_probe(A, opt.max_order, rng, opt.trials);
  root.child("order of the dual class").verdict = order_str(probe.order, opt.max_order);
  {
    Report& ch = root.child("power dimensions");
    std::string s;
    for (std::size_t i = 0; i < probe.power_dims.size(); ++i)
      s += (i ? ", " : "") + std::to_string(probe.power_dims[i]);
    ch.verdict = s;
  }
  for (std::size_t k = 0; k < probe.certificates.size(); ++k) {
    Report& ch = root.child("power " + std::to_string(k + 1));
    ch.verdict = probe.certificates[k].isomorphic() ? "regular (witness verified)" : "not regular";
    ch.detail = probe.certificates[k].evidence.describe();
  }
  if (probe.nakayama_out_order)
    root.child("Nakayama outer order cross-check").verdict = std::to_string(*probe.nakayama_out_order);
  if (!probe.diagnostic.empty()) root.child("diagnostic").verdict = probe.diagnostic;

  root.ms = sw.ms();
  emit(root, json);
  return probe.order ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for finite-dimensional algebras given by structure constants"};
  app.require_subcommand(1);

  VerifyOptions opt;
  bool json = false;
  app.add_option("--seed", opt.seed, "random seed (default 0)");
  app.add_option("--trials", opt.trials, "random trials per witness search (default 8)");
  app.add_option("--max-order", opt.max_order, "largest order probed (default 8)");
  app.add_flag("--json", json, "emit reports as JSON");

  std::string path, out_path, pairing_mode = "auto";
  int section = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "structural battery for an algebra file");
  analyze->add_option("file", path, "algebra file (JSON)")->required();

  CLI::App* verify = app.add_subcommand("verify-paper", "run the bundled end-to-end checks");
  verify->add_option("--section", section, "run only this numbered check (1-11)");

  std::string family, field_name = "Q", q_str = "-1", u_str = "1", v_str = "1";
  std::string orders_str = "2", kind_str = "h2", c_str = "1", cstar_str = "-1";
  int n = 2;
  CLI::App* zoo = app.add_subcommand("zoo", "export a built-in algebra family as JSON");
  zoo->add_option("family", family,
                  "nakayama-R | quantum-plane | nakayama-nesbitt | quantum-line | group-algebra")
      ->required();
  zoo->add_option("--field", field_name, "Q or F<p> (default Q)");
  zoo->add_option("--q", q_str, "quantum-plane parameter (default -1)");
  zoo->add_option("--u", u_str, "nakayama-nesbitt left parameter (default 1)");
  zoo->add_option("--v", v_str, "nakayama-nesbitt right parameter (default 1)");
  zoo->add_option("--orders", orders_str, "cyclic group orders, comma separated (default 2)");
  zoo->add_option("--kind", kind_str, "quantum-line kind: h1 or h2 (default h2)");
  zoo->add_option("--n", n, "quantum-line truncation exponent (default 2)");
  zoo->add_option("--c", c_str, "quantum-line group element as generator exponents (default 1)");
  zoo->add_option("--cstar", cstar_str, "quantum-line character values on the generators (default -1)");
  zoo->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* extend = app.add_subcommand("extend", "build the semitrivial extension of an algebra file");
  extend->add_option("file", path, "algebra file (JSON)")->required();
  extend->add_option("--pairing", pairing_mode, "zero or auto (default auto)");
  extend->add_option("-o,--output", out_path, "output file (default stdout)");

  CLI::App* pic = app.add_subcommand("pic-order", "probe the order of the dual class");
  pic->add_option("file", path, "algebra file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(path, opt, json);
    if (app.got_subcommand(verify)) return cmd_verify(opt, json, section);
    if (app.got_subcommand(zoo))
      return cmd_zoo(family, field_name, q_str, u_str, v_str, orders_str, kind_str, n, c_str, cstar_str,
                     out_path);
    if (app.got_subcommand(extend)) return cmd_extend(path, pairing_mode, out_path, opt, json);
    if (app.got_subcommand(pic)) return cmd_pic_order(path, opt, json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
