#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "artifacts.hpp"
#include "starks/bell.hpp"
#include "starks/designs.hpp"
#include "starks/games.hpp"
#include "starks/golden.hpp"
#include "starks/hadamard.hpp"
#include "starks/ksets.hpp"
#include "starks/parallel.hpp"
#include "starks/serialize.hpp"
#include "starks/visibility.hpp"

namespace starks::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  unsigned threads = 0;
  std::optional<double> budget;
  std::string out_dir = ".";
};

struct Env {
  Globals g;
  std::ostream& out;
  std::ostream& err;

  fs::path output(const std::string& name) const {
    const fs::path p(name);
    return p.is_absolute() ? p : fs::path(g.out_dir) / p;
  }
  EngineOptions engine(bool branch_and_bound = false) const {
    EngineOptions o;
    o.budget_seconds = g.budget;
    o.branch_and_bound = branch_and_bound;
    return o;
  }
};

// Options shared by every leaf command; unused ones stay empty.
struct Args {
  std::string file, out, cert, from, golden, compare, factorization, base, rbibd, kset, variant, pipeline;
  std::vector<std::string> reps;
  int q = 0, k = 0, n = 0, d = 0;
  std::optional<int> c;
  bool kron = false, normalize = false, full = false, branch_and_bound = false;
};

std::string str(const Rational& q) { return to_string(q); }

json labels_json(const std::vector<Pair>& v) {
  json out = json::array();
  for (auto p : v) out.push_back(json::array({p.lo, p.hi}));
  return out;
}

Variant variant_of(const std::string& s) {
  auto v = parse_variant(s);
  if (!v) throw InvalidArgument("unknown variant \"" + s + "\" (colored, line_line, point_line)");
  return *v;
}

fs::path cert_path(const Env& env, const Args& a, const std::string& fallback) {
  return env.output(a.cert.empty() ? fallback + ".cert.json" : a.cert);
}

KSSet golden_set(const std::string& name) {
  if (name == "j7") return golden::j7_set();
  if (name == "j9") return golden::j9_set();
  if (name == "j11") return golden::j11_set();
  if (name == "ceg18-0") return ceg18(0);
  if (name == "ceg18-1") return ceg18(1);
  throw InvalidArgument("unknown golden set \"" + name + "\" (j7, j9, j11, ceg18-0, ceg18-1)");
}

json kset_summary(const KSSet& k) {
  return {{"n_lines", k.n_lines}, {"dim", k.dim}, {"root_order", k.root_order},
          {"vectors", k.vectors.size()}, {"bases", k.bases.size()}, {"notes", k.notes}};
}

// Compares against a stored set; returns false on mismatch.
bool compare_golden(const KSSet& k, const std::string& name, json& result) {
  if (name.empty()) return true;
  const bool same = k == golden_set(name);
  result["golden"] = name;
  result["golden_match"] = same;
  return same;
}

void print_violations(const Env& env, const VerificationReport& r) {
  for (const auto& v : r.violations) {
    env.out << "  " << v.kind << " [";
    for (std::size_t i = 0; i < v.where.size(); ++i) env.out << (i ? "," : "") << v.where[i];
    env.out << "] " << v.detail << "\n";
  }
}

// hadamard ------------------------------------------------------------------

int hadamard_build(const Env& env, const Args& a) {
  Certificate cert("gh");
  GHMatrix m = jungnickel_gh(a.q, a.c);
  if (a.kron) m = gh_kronecker(m, gh_mult_table(a.q));
  const auto rep = verify_gh(m);
  auto& r = cert.result();
  r = {{"q", a.q}, {"group_order", m.group_order}, {"lambda", m.lambda}, {"size", m.size()}, {"verify", report_json(rep)}};
  if (a.c) r["c"] = *a.c;
  bool ok = rep.passed();
  if (!a.compare.empty()) {
    if (a.compare != "d3") throw InvalidArgument("unknown golden matrix \"" + a.compare + "\" (d3)");
    r["golden"] = a.compare;
    r["golden_match"] = m == golden::d3();
    ok = ok && m == golden::d3();
  }
  write_file(env.output(a.out), write_gh(m));
  cert.write(cert_path(env, a, fs::path(a.out).stem().string()));
  env.out << "GH(" << m.group_order << "," << m.lambda << ") " << m.size() << "x" << m.size() << (ok ? " verified" : " FAILED")
          << " -> " << a.out << "\n";
  return ok ? Exit::ok : Exit::failure;
}

int hadamard_verify(const Env& env, const Args& a) {
  std::string text = read_file(a.file);
  const std::string kind = document_kind(text);
  Certificate cert(kind == "gh" ? "gh" : "shadamard");
  text = cert.read_input(a.file);
  VerificationReport rep;
  if (kind == "gh") {
    rep = verify_gh(read_gh(text));
  } else if (kind == "shadamard") {
    rep = verify_shadamard(read_shadamard(text));
  } else {
    throw FormatError("/kind", "expected \"gh\" or \"shadamard\", got \"" + kind + "\"");
  }
  cert.result() = {{"verify", report_json(rep)}};
  cert.write(cert_path(env, a, fs::path(a.file).stem().string() + "-verify"));
  env.out << rep.summary() << "\n";
  print_violations(env, rep);
  return rep.passed() ? Exit::ok : Exit::failure;
}

int hadamard_convert(const Env& env, const Args& a) {
  Certificate cert("shadamard");
  const GHMatrix m = read_gh(cert.read_input(a.file));
  SHadamard s = gh_to_shadamard(m);
  if (a.normalize) s = normalize_shadamard(s);
  const auto rep = verify_shadamard(s);
  cert.result() = {{"order", s.order}, {"root_order", s.root_order}, {"normalized", s.normalized}, {"verify", report_json(rep)}};
  write_file(env.output(a.out), write_shadamard(s));
  cert.write(cert_path(env, a, fs::path(a.out).stem().string()));
  env.out << "S-Hadamard order " << s.order << " over zeta_" << s.root_order << (rep.passed() ? " verified" : " FAILED") << " -> "
          << a.out << "\n";
  print_violations(env, rep);
  return rep.passed() ? Exit::ok : Exit::failure;
}

// kset ----------------------------------------------------------------------

int kset_build(const Env& env, const Args& a) {
  Certificate cert("kset");
  KSSet k;
  if (!a.from.empty()) {
    k = lisonek_construct(read_shadamard(cert.read_input(a.from)));
  } else if (!a.golden.empty()) {
    k = golden_set(a.golden);
    cert.result()["source"] = a.golden;
  } else {
    throw InvalidArgument("kset build needs --from or --golden");
  }
  auto& r = cert.result();
  r.update(kset_summary(k));
  const bool ok = compare_golden(k, a.compare, r);
  write_file(env.output(a.out), write_kset(k));
  cert.write(cert_path(env, a, fs::path(a.out).stem().string()));
  env.out << k.vectors.size() << " vectors in dimension " << k.dim << ", " << k.bases.size() << " bases"
          << (a.compare.empty() ? "" : ok ? ", matches " + a.compare : ", DIFFERS from " + a.compare) << " -> " << a.out << "\n";
  return ok ? Exit::ok : Exit::failure;
}

int kset_verify(const Env& env, const Args& a) {
  Certificate cert("kset");
  const KSSet k = read_kset(cert.read_input(a.file));
  const auto bases = verify_bases(k);
  const bool parity = parity_check(k);
  const auto orr = or_check(k);
  auto& r = cert.result();
  r = kset_summary(k);
  r["verify_bases"] = report_json(bases);
  r["parity"] = parity;
  r["or_check"] = report_json(orr);
  const bool ok = bases.passed() && parity && orr.passed();
  r["passed"] = ok;
  cert.write(cert_path(env, a, fs::path(a.file).stem().string() + "-verify"));
  env.out << bases.summary() << "\n";
  print_violations(env, bases);
  env.out << "parity " << (parity ? "holds" : "fails") << "\n" << orr.summary() << "\n";
  print_violations(env, orr);
  return ok ? Exit::ok : Exit::failure;
}

int kset_search(const Env& env, const Args& a) {
  Certificate cert("kset");
  const KSSet k = read_kset(cert.read_input(a.file));
  const auto s = ks_assignment_search(k, a.full, env.g.budget);
  std::vector<Pair> ones;
  for (auto i : s.ones) ones.push_back(k.labels[i]);
  cert.result() = {{"status", to_string(s.status)}, {"full_orthogonality", a.full}, {"nodes", s.nodes}, {"assignment", labels_json(ones)}};
  cert.write(cert_path(env, a, fs::path(a.file).stem().string() + (a.full ? "-search-full" : "-search")));
  env.out << "assignment search: " << to_string(s.status) << " after " << s.nodes << " nodes\n";
  switch (s.status) {
    case SearchStatus::none: return Exit::ok;
    case SearchStatus::found: return Exit::failure;
    default: return Exit::budget;
  }
}

int kset_graph(const Env& env, const Args& a) {
  Certificate cert("kset");
  const KSSet k = read_kset(cert.read_input(a.file));
  const SimpleGraph g = orthogonality_graph(k);
  const auto extra = faithfulness_check(k);
  json pairs = json::array();
  for (const auto& [u, v] : extra) pairs.push_back(json::array({json::array({u.lo, u.hi}), json::array({v.lo, v.hi})}));
  json graph{{"kind", "graph"}, {"n_vertices", g.n_vertices}, {"labels", labels_json(g.labels)}, {"edges", labels_json(g.edges)}};
  write_file(env.output(a.out), graph.dump(1) + "\n");
  cert.result() = {{"n_vertices", g.n_vertices}, {"edges", g.edges.size()}, {"faithful", extra.empty()}, {"extra_orthogonal", pairs}};
  cert.write(cert_path(env, a, fs::path(a.out).stem().string()));
  env.out << g.n_vertices << " vertices, " << g.edges.size() << " orthogonal pairs, " << extra.size()
          << " of them between disjoint labels -> " << a.out << "\n";
  return Exit::ok;
}

int kset_export(const Env& env, const Args& a) {
  const KSSet k = read_kset(read_file(a.file));
  std::ostringstream csv;
  csv << "i,j";
  for (int t = 0; t < k.dim; ++t) csv << ",x" << t;
  csv << "\n";
  for (std::size_t i = 0; i < k.vectors.size(); ++i) {
    csv << k.labels[i].lo << "," << k.labels[i].hi;
    for (std::size_t t = 0; t < k.vectors[i].dim(); ++t) csv << ",\"" << k.vectors[i].entry(t).to_string() << "\"";
    csv << "\n";
  }
  write_file(env.output(a.out), csv.str());
  env.out << k.vectors.size() << " rows -> " << a.out << "\n";
  return Exit::ok;
}

// design --------------------------------------------------------------------

int design_ag2(const Env& env, const Args& a) {
  const RBIBD d = ag2_rbibd(a.k);
  const auto rep = verify_rbibd(d);
  write_file(env.output(a.out), write_rbibd(d));
  env.out << "AG(2," << a.k << "): " << d.v << " points, " << d.b << " lines, " << d.resolution.size() << " classes"
          << (rep.passed() ? "" : " FAILED") << " -> " << a.out << "\n";
  print_violations(env, rep);
  return rep.passed() ? Exit::ok : Exit::failure;
}

int design_paley9(const Env& env, const Args& a) {
  const Factorization f = k9_paley_factorization();
  const auto rep = verify_factorization(f);
  write_file(env.output(a.out), write_factorization(f));
  env.out << "K9 into " << f.factors.size() << " Paley factors" << (rep.passed() ? "" : " FAILED") << " -> " << a.out << "\n";
  print_violations(env, rep);
  return rep.passed() ? Exit::ok : Exit::failure;
}

int design_factorize(const Env& env, const Args& a) {
  const RBIBD d = read_rbibd(read_file(a.file));
  const Factorization f = rbibd_to_factorization(d);
  const auto rep = verify_factorization(f);
  write_file(env.output(a.out), write_factorization(f));
  env.out << "K" << d.v << " into " << f.factors.size() << " factors" << (rep.passed() ? "" : " FAILED") << " -> " << a.out << "\n";
  print_violations(env, rep);
  return rep.passed() ? Exit::ok : Exit::failure;
}

int design_embed(const Env& env, const Args& a) {
  Certificate cert("kset");
  std::vector<KSSet> reps;
  for (const auto& f : a.reps) reps.push_back(read_kset(cert.read_input(f)));
  const Factorization f = read_factorization(cert.read_input(a.factorization));
  const KSSet k = factor_embed(reps, f);
  auto& r = cert.result();
  r = kset_summary(k);
  const bool ok = compare_golden(k, a.compare, r);
  write_file(env.output(a.out), write_kset(k));
  cert.write(cert_path(env, a, fs::path(a.out).stem().string()));
  env.out << k.vectors.size() << " vectors in dimension " << k.dim
          << (a.compare.empty() ? "" : ok ? ", matches " + a.compare : ", DIFFERS from " + a.compare) << " -> " << a.out << "\n";
  return ok ? Exit::ok : Exit::failure;
}

int design_recurse(const Env& env, const Args& a) {
  Certificate cert("kset");
  const KSSet base = read_kset(cert.read_input(a.base));
  const RBIBD d = read_rbibd(cert.read_input(a.rbibd));
  const KSSet k = recursive_construct(base, d);
  cert.result() = kset_summary(k);
  write_file(env.output(a.out), write_kset(k));
  cert.write(cert_path(env, a, fs::path(a.out).stem().string()));
  env.out << k.vectors.size() << " vectors in dimension " << k.dim << " on " << k.n_lines << " lines -> " << a.out << "\n";
  return Exit::ok;
}

// game ----------------------------------------------------------------------

int game_classical(const Env& env, const Args& a) {
  Certificate cert("game");
  const Variant v = variant_of(a.variant);
  const auto res = classical_optimum(make_game(a.n, v), env.engine(a.branch_and_bound));
  cert.result() = {{"n", a.n}, {"variant", to_string(v)}, {"max_wins", res.max_wins}, {"total", res.total},
                   {"value", str(res.value())}, {"certified", res.certified},
                   {"witness", {{"alice", res.alice.outputs}, {"bob", res.bob.outputs}}}};
  cert.write(cert_path(env, a, "classical-n" + std::to_string(a.n) + "-" + to_string(v)));
  env.out << str(res.value()) << (res.certified ? "" : " (lower bound; budget exhausted)") << "\n";
  return res.certified ? Exit::ok : Exit::budget;
}

int game_quantum(const Env& env, const Args& a) {
  Certificate cert("game");
  const Variant v = variant_of(a.variant);
  const KSSet k = read_kset(cert.read_input(a.kset));
  const auto q = quantum_value(make_game(a.n, v), k);
  json offending = json::array(), incomplete = json::array();
  for (const auto& o : q.offending) offending.push_back(o.to_string());
  for (const auto& o : q.incomplete) incomplete.push_back(o.to_string());
  cert.result() = {{"n", a.n}, {"variant", to_string(v)}, {"value", q.value.to_string()}, {"perfect", q.perfect()},
                   {"checked_pairs", q.checked_pairs}, {"offending", offending}, {"incomplete", incomplete}};
  cert.write(cert_path(env, a, "quantum-n" + std::to_string(a.n) + "-" + to_string(v)));
  env.out << q.value.to_string() << "\n";
  for (const auto& o : q.offending) env.out << "  loses with nonzero probability: " << o.to_string() << "\n";
  for (const auto& o : q.incomplete) env.out << "  incomplete outcome set: " << o.to_string() << "\n";
  return q.perfect() ? Exit::ok : Exit::failure;
}

int game_bks(const Env& env, const Args& a) {
  Certificate cert("bks");
  const KSSet k = read_kset(cert.read_input(a.kset));
  const int n = k.n_lines;
  const auto e = optimal_bks_enumerate(k, env.g.budget);
  bool all_disjoint = true;
  json pairs = json::array();
  for (const auto& [p, q] : e.bks) {
    all_disjoint = all_disjoint && intersection_size(p, q) == 0;
    pairs.push_back(json::array({json::array({p.lo, p.hi}), json::array({q.lo, q.hi})}));
  }
  const std::size_t disjoint_choices = static_cast<std::size_t>(n * (n - 1) / 2) * static_cast<std::size_t>((n - 2) * (n - 3) / 2);
  const bool iff = e.complete && all_disjoint && e.bks.size() == disjoint_choices;

  // Alice with N-3 lines against Bob with every line: each case must be classically satisfiable.
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::size_t small_cases = 0, small_assignable = 0;
  std::vector<int> pick(static_cast<std::size_t>(n - 3));
  std::function<void(int, std::size_t)> rec = [&](int from, std::size_t depth) {
    if (depth == pick.size()) {
      ++small_cases;
      if (bks_solve(k, {pick, all}).status == SearchStatus::found) ++small_assignable;
      return;
    }
    for (int i = from; i <= n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(1, 0);

  cert.result() = {{"n_lines", n}, {"examined", e.examined}, {"complete", e.complete}, {"bks_count", e.bks.size()},
                   {"disjoint_choices", disjoint_choices}, {"bks_iff_disjoint", iff}, {"bks_pairs", pairs},
                   {"small_alice_cases", small_cases}, {"small_alice_assignable", small_assignable}};
  cert.write(cert_path(env, a, "bks-n" + std::to_string(n)));
  env.out << e.bks.size() << " of " << e.examined << " removed-pair choices give B-KS pairs"
          << (iff ? " (exactly the disjoint ones)" : "") << "; " << small_assignable << "/" << small_cases
          << " Alice sets of size " << n - 3 << " admit an assignment\n";
  if (!e.complete) return Exit::budget;
  return iff && small_assignable == small_cases ? Exit::ok : Exit::failure;
}

int game_visibility(const Env& env, const Args& a) {
  Certificate cert("visibility");
  const Variant v = variant_of(a.variant);
  const auto r = visibility_report(v, a.d);
  cert.result() = {{"d", a.d}, {"variant", to_string(v)}, {"threshold", str(r.threshold)}, {"crossing", str(r.crossing)},
                   {"classical", str(r.classical)}, {"noisy_at_zero", str(r.noisy_at_zero)}, {"consistent", r.consistent()}};
  cert.write(cert_path(env, a, "visibility-d" + std::to_string(a.d) + "-" + to_string(v)));
  env.out << str(r.threshold) << "\n";
  return r.consistent() ? Exit::ok : Exit::failure;
}

// bell ----------------------------------------------------------------------

int bell_build(const Env& env, const Args& a) {
  Certificate cert("bell");
  const BellFunctional f = build_functional(a.n);
  const std::string dir = "bell-n" + std::to_string(a.n);
  json files = json::array();
  for (int x : f.alice_inputs)
    for (int y : f.bob_inputs) {
      if (x >= y) continue;
      const std::string name = dir + "/M_" + std::to_string(x) + "_" + std::to_string(y) + ".csv";
      write_file(env.output(name), m_matrix_csv(f, x, y));
      files.push_back(name);
    }
  cert.result() = {{"n", a.n}, {"alice_inputs", f.alice_inputs}, {"bob_inputs", f.bob_inputs}, {"outputs", f.outputs},
                   {"claimed_bound", f.claimed_bound}, {"dim_ns", cg_dimension(f)}, {"files", files}};
  cert.write(cert_path(env, a, dir + "-build"));
  env.out << files.size() << " coefficient blocks -> " << dir << "/\n";
  return Exit::ok;
}

int bell_bound(const Env& env, const Args& a) {
  Certificate cert("bell");
  const BellFunctional f = build_functional(a.n);
  const auto lb = local_bound(f, env.engine(a.branch_and_bound));
  auto& r = cert.result();
  r = {{"n", a.n}, {"bound", lb.bound}, {"claimed_bound", f.claimed_bound}, {"certified", lb.certified},
       {"witness", {{"alice", lb.alice_pos}, {"bob", lb.bob_pos}}}};
  if (!a.kset.empty()) r["quantum_value"] = str(quantum_functional_value(f, read_kset(cert.read_input(a.kset))));
  cert.write(cert_path(env, a, "bell-n" + std::to_string(a.n) + "-bound"));
  env.out << "local bound " << lb.bound << (lb.certified ? "" : " (lower bound; budget exhausted)");
  if (r.contains("quantum_value")) env.out << ", quantum value " << r["quantum_value"].get<std::string>();
  env.out << "\n";
  if (!lb.certified) return Exit::budget;
  return lb.bound == f.claimed_bound ? Exit::ok : Exit::failure;
}

int bell_certify(const Env& env, const Args& a) {
  Certificate cert("bell");
  const BellFunctional f = build_functional(a.n);
  const auto c = nontightness_certificate(f, env.engine(a.branch_and_bound));
  auto& r = cert.result();
  r = {{"n", a.n}, {"bound", c.bound}, {"claimed_bound", f.claimed_bound}, {"n_saturating", c.saturating_points},
       {"n_saturating_alice", c.saturating_alice}, {"forced_zeros", c.forced_zeros},
       {"forced_zeros_per_point", c.forced_zeros_per_point}, {"zero_on_all", c.zero_on_all}, {"affine_rank", c.affine_rank},
       {"dim_ns", c.dim_ns}, {"symmetry_lemma", c.symmetry_lemma}, {"tight", c.tight}, {"complete", c.complete()},
       {"notes", c.notes}};
  if (!a.kset.empty()) r["quantum_value"] = str(quantum_functional_value(f, read_kset(cert.read_input(a.kset))));
  cert.write(cert_path(env, a, "bell-n" + std::to_string(a.n) + "-certificate"));
  env.out << "bound " << c.bound << ", " << c.saturating_points << " saturating points, " << c.forced_zeros
          << " forced zeros, affine rank " << c.affine_rank << " of dim(NS) " << c.dim_ns << ": " << (c.tight ? "tight" : "not tight")
          << "\n";
  if (!c.complete()) return Exit::budget;
  const bool ok = !c.tight && c.symmetry_lemma && c.forced_zeros_per_point && c.bound == f.claimed_bound;
  return ok ? Exit::ok : Exit::failure;
}

// pipeline ------------------------------------------------------------------

struct Stage {
  std::string name;
  std::vector<std::string> args;
  std::string cert;  // certificate file to check, relative to the pipeline dir
  std::function<bool(const json& result)> expect;
};

std::vector<Stage> pipeline_stages(const std::string& name, const std::string& dir) {
  auto at = [&dir](const std::string& f) { return (fs::path(dir) / f).string(); };
  auto is = [](const char* key, json value) { return [key, value](const json& r) { return r.at(key) == value; }; };
  std::vector<Stage> s;
  auto lisonek = [&](int q, const std::string& golden) {
    s.push_back({"gh", {"hadamard", "build", "--q", std::to_string(q), "--c", "2", "--out", "gh.json"}, "gh.cert.json",
                 [](const json& r) { return r.at("verify").at("passed").get<bool>(); }});
    s.push_back({"gh-verify", {"hadamard", "verify", "--file", at("gh.json")}, "gh-verify.cert.json",
                 [](const json& r) { return r.at("verify").at("passed").get<bool>(); }});
    s.push_back({"shadamard", {"hadamard", "convert", "--file", at("gh.json"), "--out", "sh.json"}, "sh.cert.json",
                 [](const json& r) { return r.at("verify").at("passed").get<bool>(); }});
    s.push_back({"kset", {"kset", "build", "--from", at("sh.json"), "--out", "kset.json", "--compare-golden", golden},
                 "kset.cert.json", is("golden_match", true)});
  };
  auto verify = [&] {
    s.push_back({"kset-verify", {"kset", "verify", "--file", at("kset.json")}, "kset-verify.cert.json", is("passed", true)});
  };
  auto search = [&] {
    s.push_back({"ks-search", {"kset", "search", "--file", at("kset.json")}, "kset-search.cert.json", is("status", "none")});
  };
  auto classical = [&](int n, const char* variant, const char* value) {
    s.push_back({std::string("classical-") + variant, {"game", "classical", "--n", std::to_string(n), "--variant", variant},
                 "classical-n" + std::to_string(n) + "-" + variant + ".cert.json", is("value", value)});
  };
  auto quantum = [&](int n) {
    s.push_back({"quantum", {"game", "quantum", "--n", std::to_string(n), "--variant", "colored", "--kset", at("kset.json")},
                 "quantum-n" + std::to_string(n) + "-colored.cert.json", is("perfect", true)});
  };

  if (name == "paper-n7") {
    lisonek(3, "j7");
    s[0].args.insert(s[0].args.end(), {"--compare-golden", "d3"});
    s[0].expect = [](const json& r) { return r.at("verify").at("passed").get<bool>() && r.at("golden_match").get<bool>(); };
    verify();
    search();
    classical(7, "colored", "24/25");
    classical(7, "line_line", "45/49");
    classical(7, "point_line", "41/42");
    quantum(7);
    s.push_back({"bks", {"game", "bks", "--kset", at("kset.json")}, "bks-n7.cert.json", is("bks_iff_disjoint", true)});
    s.push_back({"bell", {"bell", "certify", "--n", "7", "--kset", at("kset.json")}, "bell-n7-certificate.cert.json",
                 [](const json& r) {
                   return r.at("bound") == 24 && r.at("quantum_value") == "25" && r.at("tight") == false &&
                          r.at("forced_zeros").get<int>() >= 72 && r.at("affine_rank").get<int>() < 674;
                 }});
  } else if (name == "paper-n9") {
    s.push_back({"paley", {"design", "paley9", "--out", "factorization.json"}, "", nullptr});
    s.push_back({"ceg18-0", {"kset", "build", "--golden", "ceg18-0", "--out", "ceg18-0.json"}, "ceg18-0.cert.json", nullptr});
    s.push_back({"ceg18-1", {"kset", "build", "--golden", "ceg18-1", "--out", "ceg18-1.json"}, "ceg18-1.cert.json", nullptr});
    s.push_back({"kset",
                 {"design", "embed", "--rep", at("ceg18-0.json"), "--rep", at("ceg18-1.json"), "--factorization",
                  at("factorization.json"), "--out", "kset.json", "--compare-golden", "j9"},
                 "kset.cert.json", is("golden_match", true)});
    verify();
    search();
    classical(9, "colored", "48/49");
    quantum(9);
    s.push_back({"bell-bound", {"bell", "bound", "--n", "9", "--kset", at("kset.json")}, "bell-n9-bound.cert.json",
                 [](const json& r) { return r.at("bound") == 48 && r.at("quantum_value") == "49"; }});
    s.push_back({"bell-certify", {"bell", "certify", "--n", "9"}, "bell-n9-certificate.cert.json",
                 [](const json& r) { return r.at("tight") == false && r.at("forced_zeros").get<int>() >= 36; }});
  } else if (name == "paper-n11") {
    lisonek(5, "j11");
    verify();
    s.push_back({"graph", {"kset", "graph", "--file", at("kset.json"), "--out", "graph.json"}, "graph.cert.json",
                 [](const json& r) {
                   const json want = json::array({json::array({1, 2}), json::array({3, 4})});
                   for (const auto& p : r.at("extra_orthogonal"))
                     if (p == want) return true;
                   return false;
                 }});
    search();
    s.push_back({"ks-search-full", {"kset", "search", "--file", at("kset.json"), "--full-orthogonality"},
                 "kset-search-full.cert.json", is("status", "none")});
    quantum(11);
  } else if (name == "paper-n121") {
    lisonek(5, "j11");
    s.push_back({"ag2", {"design", "ag2", "--k", "11", "--out", "ag2-11.json"}, "", nullptr});
    s.push_back({"recurse", {"design", "recurse", "--base", at("kset.json"), "--rbibd", at("ag2-11.json"), "--out", "kset121.json"},
                 "kset121.cert.json", [](const json& r) { return r.at("n_lines") == 121 && r.at("dim") == 120; }});
    s.push_back({"kset121-verify", {"kset", "verify", "--file", at("kset121.json")}, "kset121-verify.cert.json",
                 is("passed", true)});
  } else {
    throw InvalidArgument("unknown pipeline \"" + name + "\" (paper-n7, paper-n9, paper-n11, paper-n121)");
  }
  return s;
}

int run_pipeline(const Env& env, const Args& a) {
  const std::string dir = (fs::path(env.g.out_dir) / a.pipeline).string();
  const auto stages = pipeline_stages(a.pipeline, dir);
  fs::create_directories(dir);
  json summary = json::array();
  int code = Exit::ok;
  for (const auto& st : stages) {
    std::vector<std::string> args = st.args;
    args.insert(args.end(), {"--out-dir", dir});
    if (env.g.threads) args.insert(args.end(), {"--threads", std::to_string(env.g.threads)});
    if (env.g.budget) args.insert(args.end(), {"--budget-seconds", std::to_string(*env.g.budget)});
    std::ostringstream out;
    const int rc = run(args, out, env.err);
    bool met = rc == Exit::ok;
    if (met && st.expect) met = st.expect(json::parse(read_file(fs::path(dir) / st.cert)).at("result"));
    env.out << (met ? "ok   " : "FAIL ") << st.name << ": " << out.str();
    summary.push_back({{"stage", st.name}, {"exit", rc}, {"met", met}});
    if (rc == Exit::budget) code = Exit::budget;
    else if (!met && code == Exit::ok) code = Exit::failure;
    if (rc == Exit::usage) return Exit::usage;
  }
  write_file(fs::path(dir) / "pipeline.json", json{{"pipeline", a.pipeline}, {"stages", summary}}.dump(1) + "\n");
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star-configuration Kochen-Specker sets, games, and Bell certificates", "star-ks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Args a;
  app.add_option("--threads", g.threads, "Worker threads (default: all cores)");
  app.add_option("--budget-seconds", g.budget, "Wall-clock budget for searches");
  app.add_option("--out-dir", g.out_dir, "Directory for artifacts and certificates");

  auto cert_opt = [&a](CLI::App* s) { s->add_option("--cert", a.cert, "Certificate path (relative to --out-dir)"); };

  auto* had = app.add_subcommand("hadamard", "Generalized and S-Hadamard matrices");
  had->require_subcommand(1);
  auto* hb = had->add_subcommand("build", "Jungnickel GH(q,2)");
  hb->add_option("--q", a.q, "Odd prime")->required();
  hb->add_option("--c", a.c, "Non-square modulo q (default: least)");
  hb->add_flag("--kron", a.kron, "Kronecker with the q x q multiplication table");
  hb->add_option("--compare-golden", a.compare, "Compare with a stored matrix (d3)");
  hb->add_option("--out", a.out)->required();
  auto* hv = had->add_subcommand("verify", "Verify a GH or S-Hadamard file");
  hv->add_option("--file", a.file)->required();
  auto* hc = had->add_subcommand("convert", "GH to S-Hadamard");
  hc->add_option("--file", a.file)->required();
  hc->add_option("--out", a.out)->required();
  hc->add_flag("--normalize", a.normalize);
  for (auto* s : {hb, hv, hc}) cert_opt(s);

  auto* ks = app.add_subcommand("kset", "Kochen-Specker sets");
  ks->require_subcommand(1);
  auto* kb = ks->add_subcommand("build", "Build from an S-Hadamard file or a stored set");
  kb->add_option("--from", a.from, "S-Hadamard JSON");
  kb->add_option("--golden", a.golden, "j7, j9, j11, ceg18-0, ceg18-1");
  kb->add_option("--compare-golden", a.compare, "Compare with a stored set");
  kb->add_option("--out", a.out)->required();
  auto* kv = ks->add_subcommand("verify", "Bases, parity, and orthogonal representation");
  kv->add_option("--file", a.file)->required();
  auto* kse = ks->add_subcommand("search", "Exhaustive {0,1} assignment search");
  kse->add_option("--file", a.file)->required();
  kse->add_flag("--full-orthogonality", a.full, "Forbid every orthogonal pair of 1s");
  auto* kg = ks->add_subcommand("graph", "Orthogonality graph and faithfulness");
  kg->add_option("--file", a.file)->required();
  kg->add_option("--out", a.out)->required();
  auto* ke = ks->add_subcommand("export", "Vectors as CSV");
  ke->add_option("--file", a.file)->required();
  ke->add_option("--out", a.out)->required();
  for (auto* s : {kb, kv, kse, kg}) cert_opt(s);

  auto* de = app.add_subcommand("design", "Designs and factorizations");
  de->require_subcommand(1);
  auto* da = de->add_subcommand("ag2", "Affine plane AG(2,k)");
  da->add_option("--k", a.k, "Odd prime")->required();
  da->add_option("--out", a.out)->required();
  auto* dp = de->add_subcommand("paley9", "K9 split into two Paley graphs");
  dp->add_option("--out", a.out)->required();
  auto* df = de->add_subcommand("factorize", "RBIBD to a factorization of K_v");
  df->add_option("--file", a.file)->required();
  df->add_option("--out", a.out)->required();
  auto* dem = de->add_subcommand("embed", "Embed factor representations");
  dem->add_option("--rep", a.reps, "One KS-set file per factor")->required();
  dem->add_option("--factorization", a.factorization)->required();
  dem->add_option("--compare-golden", a.compare, "Compare with a stored set");
  dem->add_option("--out", a.out)->required();
  auto* dr = de->add_subcommand("recurse", "Recursive construction from an RBIBD");
  dr->add_option("--base", a.base)->required();
  dr->add_option("--rbibd", a.rbibd)->required();
  dr->add_option("--out", a.out)->required();
  for (auto* s : {dem, dr}) cert_opt(s);

  auto* ga = app.add_subcommand("game", "Star games");
  ga->require_subcommand(1);
  auto* gc = ga->add_subcommand("classical", "Exact classical optimum");
  gc->add_option("--n", a.n)->required();
  gc->add_option("--variant", a.variant)->required();
  gc->add_flag("--branch-and-bound", a.branch_and_bound);
  auto* gq = ga->add_subcommand("quantum", "Exact value of the KS strategy");
  gq->add_option("--n", a.n)->required();
  gq->add_option("--variant", a.variant)->required();
  gq->add_option("--kset", a.kset)->required();
  auto* gb = ga->add_subcommand("bks", "B-KS pairs over all removed-pair choices");
  gb->add_option("--kset", a.kset)->required();
  auto* gv = ga->add_subcommand("visibility", "Werner-state visibility threshold");
  gv->add_option("--d", a.d)->required();
  gv->add_option("--variant", a.variant)->required();
  for (auto* s : {gc, gq, gb, gv}) cert_opt(s);

  auto* be = app.add_subcommand("bell", "Bell functional");
  be->require_subcommand(1);
  auto* bb = be->add_subcommand("build", "Coefficient blocks as CSV");
  auto* bo = be->add_subcommand("bound", "Local bound");
  auto* bc = be->add_subcommand("certify", "Non-tightness certificate");
  for (auto* s : {bb, bo, bc}) {
    s->add_option("--n", a.n)->required();
    cert_opt(s);
  }
  for (auto* s : {bo, bc}) {
    s->add_option("--kset", a.kset, "KS set for the quantum value");
    s->add_flag("--branch-and-bound", a.branch_and_bound);
  }

  auto* pi = app.add_subcommand("pipeline", "End-to-end checks");
  pi->add_option("name", a.pipeline, "paper-n7, paper-n9, paper-n11, paper-n121")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  if (g.threads) set_thread_count(g.threads);
  const Env env{g, out, err};
  const std::vector<std::pair<CLI::App*, std::function<int(const Env&, const Args&)>>> commands{
      {hb, hadamard_build}, {hv, hadamard_verify}, {hc, hadamard_convert}, {kb, kset_build},      {kv, kset_verify},
      {kse, kset_search},   {kg, kset_graph},      {ke, kset_export},      {da, design_ag2},      {dp, design_paley9},
      {df, design_factorize}, {dem, design_embed}, {dr, design_recurse},   {gc, game_classical},  {gq, game_quantum},
      {gb, game_bks},       {gv, game_visibility}, {bb, bell_build},       {bo, bell_bound},      {bc, bell_certify},
      {pi, run_pipeline}};
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(env, a);
  } catch (const FormatError& e) {
    err << "malformed input at " << e.what() << "\n";
    return Exit::usage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  }
  return Exit::usage;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace starks::cli
