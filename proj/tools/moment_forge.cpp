// moment-forge: command line front door for the exact moment-problem
// toolkit. Every subcommand prints JSON (or plain text with --plain) and
// exits 0 on success, 1 on a failed check, 2 on usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "mforge/basis.hpp"
#include "mforge/builtin.hpp"
#include "mforge/characters.hpp"
#include "mforge/decompose.hpp"
#include "mforge/dessin.hpp"
#include "mforge/moments.hpp"
#include "mforge/reproduce.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace mforge;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + out_path);
  file << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const RationalFunction& function_by_label(const std::string& label) {
  if (label == "F1") return builtin::F1();
  if (label == "F2") return builtin::F2();
  if (label == "L") {
    static const RationalFunction l = laurent_to_rational(builtin::L());
    return l;
  }
  throw UsageError("unknown function label " + label + " (expected F1, F2 or L)");
}

ordered_json poly_to_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (long i = 0; i <= p.degree(); ++i)
    arr.push_back(p.coeff(static_cast<std::size_t>(i)).str());
  return arr;
}

ordered_json partition_to_json(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr;
}

int run_solve_basis(bool plain, const std::string& out) {
  auto basis = solve_basis(builtin::L());
  if (plain) {
    std::string text;
    for (std::size_t j = 0; j < basis.size(); ++j)
      text += "Q" + std::to_string(j) + " = " + basis[j].str() + "\n";
    emit(text, out);
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["basis"] = ordered_json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ordered_json entry;
    entry["label"] = "Q" + std::to_string(i);
    entry["laurent"] = basis[i].str();
    j["basis"].push_back(entry);
  }
  emit(dump(j), out);
  return 0;
}

int run_verify_moments(const std::string& q_label, const std::string& q_text,
                       long n_override, bool full_scan, bool plain,
                       const std::string& out) {
  LaurentPoly q;
  std::string label = q_label;
  if (!q_text.empty()) {
    q = LaurentPoly::parse(q_text);
    label = "custom";
  } else {
    if (q_label.size() != 2 || q_label[0] != 'Q' || q_label[1] < '0' || q_label[1] > '4')
      throw UsageError("--q-label expects Q0..Q4");
    auto basis = solve_basis(builtin::L());
    q = basis[static_cast<std::size_t>(q_label[1] - '0')];
  }
  long n = n_override > 0 ? n_override
                          : orbit_size(builtin::monodromy_generators(),
                                       builtin::sign_split_vector());
  auto start = std::chrono::steady_clock::now();
  MomentReport report = verify_solution(builtin::L(), q, n, full_scan);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  if (plain) {
    std::string text = label + ": bound " + std::to_string(report.checked_upper_bound) +
                       (report.all_zero ? ", all moments vanish"
                                        : ", first nonzero moment at i=" +
                                              std::to_string(*report.first_nonzero_index)) +
                       "\n";
    emit(text, out);
  } else {
    ordered_json j;
    j["schema"] = 1;
    j["q_label"] = label;
    j["N"] = n;
    j["bound"] = report.checked_upper_bound;
    j["all_zero"] = report.all_zero;
    if (report.first_nonzero_index)
      j["first_nonzero_index"] = *report.first_nonzero_index;
    j["elapsed_ms"] = ms;
    emit(dump(j), out);
  }
  return report.all_zero ? 0 : 1;
}

int run_decompose(const std::string& input, bool plain, const std::string& out) {
  LaurentPoly q = LaurentPoly::parse(input);
  auto basis = solve_basis(builtin::L());
  Classification result = classify(q, builtin::L(), basis);
  if (plain) {
    std::string text;
    for (std::size_t j = 0; j < 5; ++j)
      text += "R" + std::to_string(j) + " = " +
              result.decomposition.r_polys[j].str() + "\n";
    text += "remainder = " + result.decomposition.remainder.str() + "\n";
    text += std::string("solution: ") + (result.is_solution ? "yes" : "no") + "\n";
    emit(text, out);
  } else {
    ordered_json j;
    j["schema"] = 1;
    j["input"] = q.str();
    for (std::size_t idx = 0; idx < 5; ++idx)
      j["r" + std::to_string(idx)] = poly_to_json(result.decomposition.r_polys[idx]);
    j["remainder"] = poly_to_json(result.decomposition.remainder);
    j["is_solution"] = result.is_solution;
    if (result.report.first_nonzero_index)
      j["first_nonzero_index"] = *result.report.first_nonzero_index;
    emit(dump(j), out);
  }
  return 0;
}

int run_check_group(bool plain, const std::string& out) {
  auto gens = builtin::monodromy_generators();
  bool relation = (builtin::sigma() * builtin::alpha() * builtin::phi()).is_identity();
  auto order = group_order({builtin::alpha(), builtin::sigma()});
  bool transitive = is_transitive(gens);
  auto blocks = find_blocks(gens);
  const auto& fans = builtin::fans();
  const auto& cycles = builtin::hamiltonians();
  std::vector<VectorF> diffs;
  for (std::size_t i = 1; i < fans.size(); ++i) diffs.push_back(fans[i] - fans[0]);
  long orbit = orbit_size(gens, builtin::sign_split_vector());
  long self = edge_action_character_self_product(EdgeLabeling::pentagon_pentagram());

  if (plain) {
    std::string text;
    text += "sigma = " + builtin::sigma().cycle_string() + "\n";
    text += "alpha = " + builtin::alpha().cycle_string() + "\n";
    text += "phi   = " + builtin::phi().cycle_string() + "\n";
    text += "sigma*alpha*phi = identity: " + std::string(relation ? "yes" : "no") + "\n";
    text += "order of <alpha, sigma>: " + std::to_string(order) + "\n";
    text += "transitive: " + std::string(transitive ? "yes" : "no") +
            ", nontrivial block systems: " + std::to_string(blocks.size()) + "\n";
    text += "fan rank " + std::to_string(span_rank(fans)) + ", cycle rank " +
            std::to_string(span_rank(cycles)) + ", <pi,pi> = " + std::to_string(self) +
            ", orbit of the sign vector: " + std::to_string(orbit) + "\n";
    emit(text, out);
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["generators"] = {{"sigma", builtin::sigma().cycle_string()},
                     {"alpha", builtin::alpha().cycle_string()},
                     {"phi", builtin::phi().cycle_string()}};
  j["sigma_alpha_phi_is_identity"] = relation;
  j["group_order_alpha_sigma"] = order;
  j["transitive"] = transitive;
  j["primitive"] = transitive && blocks.empty();
  j["block_systems"] = ordered_json::array();
  for (const auto& system : blocks) {
    ordered_json sys = ordered_json::array();
    for (const auto& block : system) {
      ordered_json b = ordered_json::array();
      for (int p : block) b.push_back(p + 1);
      sys.push_back(b);
    }
    j["block_systems"].push_back(sys);
  }
  ordered_json sub;
  sub["fan_rank"] = static_cast<long>(span_rank(fans));
  sub["cycle_rank"] = static_cast<long>(span_rank(cycles));
  sub["fans_invariant"] = invariant_subspace_check(gens, fans);
  sub["cycles_invariant"] = invariant_subspace_check(gens, cycles);
  sub["fan_difference_rank"] = static_cast<long>(span_rank(diffs));
  sub["character_self_product"] = self;
  sub["orbit_of_sign_vector"] = orbit;
  j["subspaces"] = sub;
  emit(dump(j), out);
  return 0;
}

int run_count_maps(bool plain, const std::string& out) {
  std::vector<Partition> classes{Partition{6, 3, 1}, Partition{2, 2, 2, 1, 1, 1, 1},
                                 Partition{5, 5}};
  mpz_class count = frobenius_count(10, classes);
  mpz_class fact10 = factorial(10);
  mpz_class multiple = count / fact10;
  Rational scale(1);
  for (const auto& c : classes) scale *= Rational(class_size(c));
  scale /= Rational(fact10);

  ordered_json per_lambda = ordered_json::array();
  std::string plain_rows;
  std::vector<int> ones(10, 1);
  for (const Partition& lambda : partitions_of(10)) {
    long long dim = mn_character(lambda, Partition(ones));
    Rational term(1);
    ordered_json values = ordered_json::array();
    for (const auto& c : classes) {
      long long chi = mn_character(lambda, c);
      values.push_back(chi);
      term *= Rational(chi);
    }
    term /= Rational(dim);
    Rational contribution = scale * term;
    ordered_json entry;
    entry["lambda"] = lambda.str();
    entry["dimension"] = dim;
    entry["character_values"] = values;
    entry["contribution"] = contribution.str();
    per_lambda.push_back(entry);
    if (!contribution.is_zero())
      plain_rows += "  [" + lambda.str() + "] dim " + std::to_string(dim) +
                    " contributes " + contribution.str() + "\n";
  }

  if (plain) {
    std::string text = "triples with classes (6,3,1), (2,2,2,1,1,1,1), (5,5): " +
                       count.get_str() + " = " + multiple.get_str() +
                       " * 10!\n" + plain_rows;
    emit(text, out);
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["n"] = 10;
  j["classes"] = ordered_json::array();
  for (const auto& c : classes) j["classes"].push_back(partition_to_json(c));
  j["count"] = count.get_str();
  j["multiple_of_10_factorial"] = multiple.get_str();
  j["per_lambda"] = per_lambda;
  emit(dump(j), out);
  return 0;
}

int run_verify_belyi(const std::string& label, const std::string& k_text,
                     const std::string& a_text, const std::string& b_text,
                     bool plain, const std::string& out) {
  RationalFunction f = RationalFunction(Polynomial{FieldElem(1)}, Polynomial{FieldElem(1)});
  std::string name = label;
  if (!k_text.empty() || !a_text.empty() || !b_text.empty()) {
    if (k_text.empty() || a_text.empty() || b_text.empty())
      throw UsageError("explicit candidates need all of --K, --a, --b");
    f = build_candidate(FieldElem::parse(k_text), FieldElem::parse(a_text),
                        FieldElem::parse(b_text));
    name = "candidate";
  } else {
    f = function_by_label(label);
  }

  ordered_json j;
  j["schema"] = 1;
  j["function"] = name;
  j["degree"] = f.map_degree();
  bool certified = true;
  std::string error;
  try {
    RamificationProfile profile = ramification_profile(f);
    j["profile"] = {{"over_zero", partition_to_json(profile.over_zero)},
                    {"over_one", partition_to_json(profile.over_one)},
                    {"over_infinity", partition_to_json(profile.over_infinity)}};
  } catch (const NotBelyiError& e) {
    certified = false;
    error = e.what();
  }
  j["certified"] = certified;
  if (!certified) j["error"] = error;

  if (plain) {
    std::string text = name + ": " + (certified ? "certified" : "NOT a Belyi map");
    if (certified)
      text += ", profile " + j["profile"]["over_zero"].dump() + " / " +
              j["profile"]["over_one"].dump() + " / " +
              j["profile"]["over_infinity"].dump();
    else
      text += " (" + error + ")";
    emit(text + "\n", out);
  } else {
    emit(dump(j), out);
  }
  return certified ? 0 : 1;
}

int run_render_dessin(const std::string& label, int samples, const std::string& out,
                      bool plain) {
  const RationalFunction& f = function_by_label(label);
  std::ofstream svg(out, std::ios::binary);
  if (!svg) throw UsageError("cannot open output file " + out);
  DessinPlot plot = render_dessin(f, samples, &svg);

  auto vertices_json = [](const std::vector<DessinVertex>& vs) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : vs) {
      ordered_json entry;
      entry["re"] = v.position.real();
      entry["im"] = v.position.imag();
      entry["multiplicity"] = v.multiplicity;
      entry["attached_arcs"] = v.attached_arcs;
      arr.push_back(entry);
    }
    return arr;
  };
  if (plain) {
    std::string text = label + ": " + std::to_string(plot.arcs.size()) +
                       " arcs, svg written to " + out + "\n";
    for (const auto& w : plot.warnings) text += "warning: " + w + "\n";
    std::cout << text;
  } else {
    ordered_json j;
    j["schema"] = 1;
    j["function"] = label;
    j["samples"] = samples;
    j["arcs"] = plot.arcs.size();
    j["black_vertices"] = vertices_json(plot.black_vertices);
    j["white_vertices"] = vertices_json(plot.white_vertices);
    j["warnings"] = plot.warnings;
    j["svg"] = out;
    std::cout << dump(j);
  }
  return plot.warnings.empty() ? 0 : 1;
}

int run_reproduce_all(bool plain, const std::string& out) {
  auto results = run_acceptance_criteria();
  bool all_pass = true;
  std::string table;
  ordered_json j;
  j["schema"] = 1;
  j["criteria"] = ordered_json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    char line[512];
    std::snprintf(line, sizeof(line), "[%s] %2d %-55s %s\n", r.pass ? "PASS" : "FAIL",
                  r.id, r.label.c_str(), r.detail.c_str());
    table += line;
    ordered_json entry;
    entry["id"] = r.id;
    entry["label"] = r.label;
    entry["pass"] = r.pass;
    entry["detail"] = r.detail;
    entry["elapsed_ms"] = r.elapsed_ms;
    j["criteria"].push_back(entry);
  }
  j["all_pass"] = all_pass;
  table += all_pass ? "all criteria passed\n" : "SOME CRITERIA FAILED\n";
  emit(plain ? table : dump(j), out);
  if (!plain) std::cerr << table;
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reproduction toolkit for the degree-10 Laurent moment problem"};
  app.require_subcommand(1);
  app.fallthrough();

  bool plain = false;
  std::string out_path;
  app.add_flag("--plain", plain, "plain text instead of JSON");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* solve_cmd = app.add_subcommand("solve-basis", "solve for Q0..Q4 and print them");
  solve_cmd->fallthrough();

  auto* verify_cmd =
      app.add_subcommand("verify-moments", "check all moments of a candidate solution");
  verify_cmd->fallthrough();
  std::string q_label = "Q4", q_text;
  long n_override = 0;
  bool full_scan = false;
  verify_cmd->add_option("--q-label", q_label, "basis element Q0..Q4 (default Q4)");
  verify_cmd->add_option("--q", q_text, "explicit Laurent polynomial to verify");
  verify_cmd->add_option("--n", n_override, "override the orbit size N");
  verify_cmd->add_flag("--full-scan", full_scan, "do not stop at the first nonzero moment");

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "write a Laurent polynomial as sum (R_j o L) * Q_j + remainder");
  decompose_cmd->fallthrough();
  std::string decompose_input;
  decompose_cmd->add_option("laurent", decompose_input, "Laurent polynomial, textual form")
      ->required();

  auto* group_cmd = app.add_subcommand(
      "check-group", "monodromy generators, group order, blocks, invariant subspaces");
  group_cmd->fallthrough();

  auto* count_cmd = app.add_subcommand(
      "count-maps", "count permutation triples with the three fiber cycle types");
  count_cmd->fallthrough();

  auto* belyi_cmd = app.add_subcommand(
      "verify-belyi", "certify ramification over {0,1,inf} and print the profile");
  belyi_cmd->fallthrough();
  std::string function_label = "F1", k_text, a_text, b_text;
  belyi_cmd->add_option("--function", function_label, "F1, F2 or L (default F1)");
  belyi_cmd->add_option("--K", k_text, "leading constant of an explicit candidate");
  belyi_cmd->add_option("--a", a_text, "linear coefficient of the pole quadratic");
  belyi_cmd->add_option("--b", b_text, "constant coefficient of the pole quadratic");

  auto* dessin_cmd =
      app.add_subcommand("render-dessin", "draw the preimage of [0,1] as an SVG");
  dessin_cmd->fallthrough();
  std::string dessin_function = "F1", dessin_out = "dessin.svg";
  int samples = 200;
  dessin_cmd->add_option("--function", dessin_function, "F1, F2 or L (default F1)");
  dessin_cmd->add_option("--samples", samples, "grid points on (0,1), default 200");
  dessin_cmd->add_option("--out", dessin_out, "SVG output path (default dessin.svg)");

  auto* reproduce_cmd = app.add_subcommand(
      "reproduce-all", "run every acceptance criterion and print a summary table");
  reproduce_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve_cmd->parsed()) return run_solve_basis(plain, out_path);
    if (verify_cmd->parsed())
      return run_verify_moments(q_label, q_text, n_override, full_scan, plain, out_path);
    if (decompose_cmd->parsed()) return run_decompose(decompose_input, plain, out_path);
    if (group_cmd->parsed()) return run_check_group(plain, out_path);
    if (count_cmd->parsed()) return run_count_maps(plain, out_path);
    if (belyi_cmd->parsed())
      return run_verify_belyi(function_label, k_text, a_text, b_text, plain, out_path);
    if (dessin_cmd->parsed())
      return run_render_dessin(dessin_function, samples, dessin_out, plain);
    if (reproduce_cmd->parsed()) return run_reproduce_all(plain, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
