// Command-line workbench: object construction from JSON, mapping-complex
// and slice computation, subdivision, bounded fibrancy checks, filtration
// certificates, Segal inversion, free categories, homology, and the
// verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 malformed JSON, 3 precondition
// violation.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "scx/json_io.hpp"
#include "scx/segal.hpp"
#include "scx/slices.hpp"
#include "scx/subdiv.hpp"
#include "scx/suites.hpp"

namespace {

using namespace scx;

struct Output {
  std::optional<std::string> path;
  std::string format = "json";

  void emit(const json& j, const std::string& text) const {
    std::string payload = format == "json" ? dump_canonical(j) : text;
    if (path)
      write_json_file(*path, j);
    else
      std::cout << payload;
  }
};

json load(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const json::parse_error& e) {
    throw e;
  }
}

std::string report_text(const SuiteReport& R) {
  std::string out = "suite " + R.suite + (R.ok() ? " ok" : " FAILED") + "\n";
  auto sorted = R.checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  for (const auto& c : sorted) {
    out += "  " + c.name + ": " + c.status + " (" + std::to_string(c.ms) +
           " ms)";
    if (!c.witness.empty()) out += " [" + c.witness + "]";
    out += "\n";
  }
  return out;
}

FinCategory category_from_json(const json& j) {
  FinCategory C;
  for (const auto& o : j.at("objects")) C.add_object(o.get<std::string>());
  std::map<std::string, int> by_label;
  for (int m = 0; m < C.num_morphisms(); ++m)
    by_label[C.morphisms[m].label] = m;
  if (j.contains("morphisms"))
    for (const auto& m : j.at("morphisms"))
      by_label[m.at("label").get<std::string>()] =
          C.add_morphism(m.at("label").get<std::string>(),
                         m.at("src").get<int>(), m.at("tgt").get<int>());
  if (j.contains("compose"))
    for (const auto& t : j.at("compose"))
      C.set_composite(by_label.at(t.at(0).get<std::string>()),
                      by_label.at(t.at(1).get<std::string>()),
                      by_label.at(t.at(2).get<std::string>()));
  C.validate();
  return C;
}

PreSegalSet presegal_from_json(const json& j, int bound) {
  if (j.contains("free"))
    return PreSegalSet::free_on(j.at("free").at("n").get<int>(),
                                j.at("free").at("size").get<int>(), bound);
  if (j.contains("category"))
    return PreSegalSet::from_category(category_from_json(j.at("category")),
                                      bound);
  throw PreconditionError(
      "presegal json needs a 'free' or 'category' description");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for scaled and marked simplicial combinatorics"};
  app.require_subcommand(1);

  std::string out_path, format = "json", input, base, from, to, kind, family;
  unsigned long long seed = 0;
  int bound = 3, n = 2, horn_i = 1;
  bool scaled = false;
  std::string style = "flat";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON report to a file");
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--seed", seed, "seed for randomized generation");
    cmd->add_option("--bound", bound, "dimension bound");
  };

  auto* cmd_build = app.add_subcommand("build", "construct a named complex");
  cmd_build->add_option("--kind", kind,
                        "simplex | boundary | horn | collapsed-k")
      ->required();
  cmd_build->add_option("--n", n, "dimension parameter");
  cmd_build->add_option("--i", horn_i, "horn index");
  cmd_build->add_option("--scale", style, "emit a scaling: flat or sharp");
  cmd_build->add_flag("--scaled", scaled, "attach the scaling");
  add_common(cmd_build);

  auto* cmd_hom = app.add_subcommand("hom", "mapping complex of the base");
  cmd_hom->add_option("--base", base, "base complex JSON")->required();
  cmd_hom->add_option("--from", from)->required();
  cmd_hom->add_option("--to", to)->required();
  cmd_hom->add_flag("--scaled", scaled, "use the scaling and emit markings");
  add_common(cmd_hom);

  auto* cmd_slice = app.add_subcommand("slice", "scaled slice under a vertex");
  cmd_slice->add_option("--input", input)->required();
  cmd_slice->add_option("--from", from)->required();
  cmd_slice->add_option("--to", to, "restrict to the fiber over a vertex");
  add_common(cmd_slice);

  auto* cmd_subdivide = app.add_subcommand("subdivide", "nondegenerate subdivision");
  cmd_subdivide->add_option("--input", input)->required();
  cmd_subdivide->add_flag("--scaled", scaled, "apply the marked variant");
  add_common(cmd_subdivide);

  auto* cmd_jt = app.add_subcommand("jt-check", "level fiber certificates");
  cmd_jt->add_option("--input", input)->required();
  cmd_jt->add_option("--n", n, "level")->required();
  add_common(cmd_jt);

  auto* cmd_bicat = app.add_subcommand("check-bicat",
                                       "bounded weak-bicategory verdict");
  cmd_bicat->add_option("--input", input)->required();
  add_common(cmd_bicat);

  auto* cmd_filt = app.add_subcommand("certify-filtration",
                                      "prism filtration certificates");
  cmd_filt->add_option("--family", family,
                       "prism-last | cone-prism | prism-first")
      ->required();
  cmd_filt->add_option("--n", n, "prism dimension")->required();
  cmd_filt->add_option("--i", horn_i, "inner index for cone-prism");
  add_common(cmd_filt);

  auto* cmd_segal = app.add_subcommand("segal", "category-object check");
  cmd_segal->add_option("--input", input)->required();
  add_common(cmd_segal);

  auto* cmd_free = app.add_subcommand("free-cat", "free enriched hom");
  cmd_free->add_option("--input", input)->required();
  cmd_free->add_option("--from", from)->required();
  cmd_free->add_option("--to", to)->required();
  add_common(cmd_free);

  auto* cmd_hml = app.add_subcommand("homology", "integral homology");
  cmd_hml->add_option("--input", input)->required();
  add_common(cmd_hml);

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  cmd_verify->add_option("suite", suite, "suite name or 'all'")->required();
  add_common(cmd_verify);

  CLI11_PARSE(app, argc, argv);
  Output out{out_path.empty() ? std::nullopt
                              : std::optional<std::string>(out_path),
             format};

  try {
    if (*cmd_build) {
      FiniteSimplicialSet X;
      if (kind == "simplex")
        X = FiniteSimplicialSet::simplex(n);
      else if (kind == "boundary")
        X = FiniteSimplicialSet::boundary(n);
      else if (kind == "horn")
        X = FiniteSimplicialSet::horn(n, horn_i);
      else if (kind == "collapsed-k")
        X = collapsed_k();
      else
        throw PreconditionError("unknown kind: " + kind);
      if (scaled) {
        auto D = decorate(X, style == "sharp" ? DecorStyle::Sharp
                                              : DecorStyle::Flat,
                          DecorKind::Scaled);
        out.emit(decorated_to_json(D), dump_canonical(decorated_to_json(D)));
      } else {
        out.emit(sset_to_json(X), dump_canonical(sset_to_json(X)));
      }
      return 0;
    }
    if (*cmd_hom) {
      json bj = load(base);
      if (scaled) {
        auto S = decorated_from_json(bj);
        if (S.kind != DecorKind::Scaled)
          throw PreconditionError("hom --scaled needs a thin set");
        auto M = marked_closure(S, from, to, bound);
        out.emit(decorated_to_json(M), dump_canonical(decorated_to_json(M)));
      } else {
        auto X = sset_from_json(bj);
        auto H = hom_complex(X, from, to, bound);
        out.emit(sset_to_json(H), dump_canonical(sset_to_json(H)));
      }
      return 0;
    }
    if (*cmd_slice) {
      auto S = decorated_from_json(load(input));
      if (S.kind != DecorKind::Scaled)
        throw PreconditionError("slice needs a scaled input");
      auto R = scaled_slice(S, from, bound,
                            to.empty() ? std::nullopt
                                       : std::optional<std::string>(to));
      out.emit(decorated_to_json(R.complex),
               dump_canonical(decorated_to_json(R.complex)));
      return 0;
    }
    if (*cmd_subdivide) {
      json ij = load(input);
      json result;
      if (scaled || ij.contains("thin")) {
        auto S = decorated_from_json(ij);
        auto SD = sd_plus0(S);
        MarkedSSet M;
        M.base = SD.base;
        M.kind = DecorKind::Marked;
        M.decorated = SD.marking;
        result = decorated_to_json(M);
        json dims = json::object();
        for (int v = 0; v < SD.base.num_generators(0); ++v)
          dims[SD.base.label(0, v)] = SD.dim_labels[v];
        result["dim_labels"] = dims;
      } else {
        auto X = sset_from_json(ij);
        auto SD = sd0(X);
        result = sset_to_json(SD.base);
        json dims = json::object();
        for (int v = 0; v < SD.base.num_generators(0); ++v)
          dims[SD.base.label(0, v)] = SD.dim_labels[v];
        result["dim_labels"] = dims;
      }
      out.emit(result, dump_canonical(result));
      return 0;
    }
    if (*cmd_jt) {
      auto X = sset_from_json(load(input));
      auto q = q_levels(X, n);
      json fibers = json::array();
      bool all_ok = true;
      for (const auto& sigma : q[n]) {
        auto cert = beta_fiber_certificate(X, n, sigma, n + 1, 2);
        all_ok &= cert.witness_verified && cert.homology.contractible_grade();
        json f;
        f["simplex"] = X.label(sigma);
        f["witness_verified"] = cert.witness_verified;
        f["certificate"] = certificate_to_json(cert.homology);
        fibers.push_back(f);
      }
      json result{{"level", n}, {"fibers", fibers}, {"ok", all_ok}};
      out.emit(result, dump_canonical(result));
      return all_ok ? 0 : 1;
    }
    if (*cmd_bicat) {
      auto S = decorated_from_json(load(input));
      if (S.kind != DecorKind::Scaled)
        throw PreconditionError("check-bicat needs a scaled input");
      auto R = is_weak_bicategory(S, bound);
      json result;
      result["verdict"] =
          R.verdict == Verdict::SemiDecidedYes ? "semi-decided-yes" : "no";
      if (R.verdict == Verdict::No) result["witness"] = R.witness_kind;
      out.emit(result, dump_canonical(result));
      return R.verdict == Verdict::SemiDecidedYes ? 0 : 1;
    }
    if (*cmd_filt) {
      FiltrationFamily F;
      if (family == "prism-last")
        F = prism_last_family(n);
      else if (family == "cone-prism")
        F = cone_prism_family(n, horn_i);
      else if (family == "prism-first")
        F = prism_first_family(n);
      else
        throw PreconditionError("unknown family: " + family);
      auto cert = verify_filtration(F);
      json result{{"family", F.name},
                  {"steps", F.steps.size()},
                  {"ok", cert.ok}};
      if (!cert.ok) result["failure"] = cert.failure;
      out.emit(result, dump_canonical(result));
      return cert.ok ? 0 : 1;
    }
    if (*cmd_segal) {
      auto X = sset_from_json(load(input));
      auto verdict = is_category_object(X, bound);
      json result{{"category_object", verdict.ok}};
      if (!verdict.ok) {
        result["witness"] = verdict.failure;
      } else {
        auto C = to_category(X, 3);
        result["objects"] = C.num_objects();
        result["morphisms"] = C.num_morphisms();
        result["round_trip"] = isomorphic(nerve(C, std::max(bound, 3)), X);
      }
      out.emit(result, dump_canonical(result));
      return verdict.ok ? 0 : 1;
    }
    if (*cmd_free) {
      auto P = presegal_from_json(load(input), bound);
      auto xi = std::find(P.objects.begin(), P.objects.end(), from);
      auto yi = std::find(P.objects.begin(), P.objects.end(), to);
      if (xi == P.objects.end() || yi == P.objects.end())
        throw PreconditionError("free-cat: endpoint not among the objects");
      auto res = free_category_hom(
          P, static_cast<int>(xi - P.objects.begin()),
          static_cast<int>(yi - P.objects.begin()), bound);
      json result{{"count", res.count}, {"stabilized", res.stabilized}};
      out.emit(result, dump_canonical(result));
      return 0;
    }
    if (*cmd_hml) {
      auto X = sset_from_json(load(input));
      auto H = homology(X, bound);
      json result = certificate_to_json(H);
      out.emit(result, dump_canonical(result));
      return 0;
    }
    if (*cmd_verify) {
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names = {suite};
      json reports = json::array();
      std::string text;
      bool ok = true;
      for (const auto& nm : names) {
        auto R = run_suite(nm, seed);
        ok &= R.ok();
        reports.push_back(R.to_json());
        text += report_text(R);
      }
      json result = names.size() == 1 ? reports[0]
                                      : json{{"suites", reports}, {"ok", ok}};
      out.emit(result, text);
      return ok ? 0 : 1;
    }
  } catch (const json::exception& e) {
    std::cerr << "malformed json: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
