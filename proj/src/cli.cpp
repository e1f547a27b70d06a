#include "strata/cli.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "strata/catalog.hpp"
#include "strata/ih.hpp"

namespace strata::cli {

using io::Json;

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

struct Context {
  Exec exec = Exec::Serial;
  bool witness = false;
  Json inputs = Json::array();

  Json load(const std::string& path) {
    Json j = io::read_json_file(path);
    inputs.push_back({{"path", path}, {"digest", io::digest(io::canonical(j))}});
    return j;
  }
  FilteredComplex filtered(const std::string& path) {
    FilteredComplex FX = io::filtered_from_json(load(path));
    if (!FX.boundary) {
      SimplicialComplex B = boundary_subcomplex(FX.complex);
      if (!B.is_empty()) FX.boundary = std::move(B);
    }
    return FX;
  }
};

struct Outcome {
  Json result;
  int code = kOk;
  bool heuristic = false;
};

Json census(const FilteredComplex& FX) {
  Json a = Json::array();
  for (const auto& S : strata_of(FX))
    a.push_back({{"dim", S.dim}, {"simplices", S.simplices.size()}, {"regular", S.regular},
                 {"at", io::simplex_to_json(S.simplices.front())}});
  return a;
}

Outcome cmd_validate(Context& ctx, const std::string& file, bool with_boundary) {
  const FilteredComplex FX = ctx.filtered(file);
  const ValidationReport R = validate(FX, with_boundary ? Mode::WithBoundary : Mode::Closed, ctx.exec);
  return {io::report_to_json(R), R.pass ? kOk : kNegative, !R.exact};
}

Outcome cmd_stratify(Context& ctx, const std::string& file) {
  const FilteredComplex in = ctx.filtered(file);
  const bool with_b = in.boundary && !in.boundary->is_empty();
  FilteredComplex FX = with_b ? intrinsic_with_boundary(in.complex, ctx.exec) : intrinsic_stratification(in.complex, ctx.exec);
  FX.name = in.name.empty() ? "intrinsic" : in.name + "*";
  return {{{"stratification", io::filtered_to_json(FX)}, {"strata", census(FX)}}, kOk, FX.heuristic};
}

Outcome cmd_links(Context& ctx, const std::string& file) {
  const FilteredComplex FX = ctx.filtered(file);
  Json a = Json::array();
  for (const auto& S : strata_of(FX)) {
    if (S.regular) continue;
    const FilteredComplex L = stratum_link(FX, S);
    a.push_back({{"dim", S.dim},
                 {"at", io::simplex_to_json(S.simplices.front())},
                 {"link", io::filtered_to_json(L)},
                 {"homology", io::homology_to_json(homology(L.complex, Ring::integers(), false, ctx.exec))}});
  }
  return {{{"links", a}}, kOk, FX.heuristic};
}

Outcome cmd_homology(Context& ctx, const std::string& file, const std::string& ring, bool reduced) {
  const SimplicialComplex K = io::complex_from_json(ctx.load(file));
  const Ring R = Ring::parse(ring);
  return {{{"ring", R.name()}, {"reduced", reduced}, {"groups", io::homology_to_json(homology(K, R, reduced, ctx.exec))}}};
}

Outcome cmd_ih(Context& ctx, const std::string& file, const std::string& perv, const std::string& ring) {
  const FilteredComplex FX = ctx.filtered(file);
  const Perversity p = parse_perversity(perv, FX.dim());
  const Ring R = Ring::parse(ring);
  Json values = Json::array();
  for (int k = 2; k <= p.max_codim(); ++k) values.push_back(p.at(k));
  return {{{"perversity", {{"name", p.name}, {"values", values}}},
           {"ring", R.name()},
           {"groups", io::homology_to_json(intersection_homology(FX, p, R, ctx.exec))}},
          kOk,
          FX.heuristic};
}

ClassVerdict classify_route(const FilteredComplex& FX, const SingularityClass& C, const std::string& via, Exec exec) {
  if (via == "stratified") return links_in_class(FX, C.kind == ClassKind::E ? C : e_of_g(C), exec);
  return polyhedral_links_in(FX.complex, C.kind == ClassKind::E ? g_of_e(C) : C, exec);
}

Outcome cmd_classify(Context& ctx, const std::string& file, const std::string& cls, const std::string& via) {
  const FilteredComplex FX = ctx.filtered(file);
  const SingularityClass C = builtin(cls);
  Outcome o;
  o.result["class"] = C.name;
  o.result["via"] = via;
  if (via == "both") {
    const ClassVerdict s = classify_route(FX, C, "stratified", ctx.exec);
    const ClassVerdict p = classify_route(FX, C, "polyhedral", ctx.exec);
    o.result["stratified"] = io::verdict_to_json(s, ctx.witness);
    o.result["polyhedral"] = io::verdict_to_json(p, ctx.witness);
    o.result["member"] = s.member;
    o.result["agree"] = s.member == p.member;
    o.heuristic = s.heuristic || p.heuristic;
    o.code = s.member != p.member ? kBreach : s.member ? kOk : kNegative;
    return o;
  }
  const ClassVerdict v = classify_route(FX, C, via, ctx.exec);
  o.result["verdict"] = io::verdict_to_json(v, ctx.witness);
  o.result["member"] = v.member;
  o.heuristic = v.heuristic;
  o.code = v.member ? kOk : kNegative;
  return o;
}

Outcome certificate_outcome(const BordismCertificate& C, Exec exec) {
  const CertificateCheck check = verify_certificate(C, exec);
  return {{{"certificate", io::certificate_to_json(C)}, {"check", io::check_to_json(check)}},
          check.pass ? kOk : kBreach,
          C.Y.heuristic};
}

Outcome cmd_bordism(Context& ctx, const std::string& to_intrinsic, const std::vector<std::string>& between,
                    const std::string& cyl, const std::string& half) {
  const int chosen = !to_intrinsic.empty() + !between.empty() + !cyl.empty() + !half.empty();
  if (chosen != 1) throw CLI::ValidationError("bordism", "choose exactly one construction");
  if (!half.empty()) {
    const FilteredComplex H = half_intrinsic_suspension(ctx.filtered(half), ctx.exec);
    const ValidationReport R = validate(H, Mode::Closed, ctx.exec);
    return {{{"half_suspension", io::filtered_to_json(H)}, {"strata", census(H)}, {"validation", io::report_to_json(R)}},
            R.pass ? kOk : kBreach,
            H.heuristic};
  }
  if (!to_intrinsic.empty()) return certificate_outcome(bordism_to_intrinsic(ctx.filtered(to_intrinsic), ctx.exec), ctx.exec);
  if (!cyl.empty()) return certificate_outcome(cylinder(ctx.filtered(cyl), ctx.exec), ctx.exec);
  const FilteredComplex A = ctx.filtered(between[0]);
  const FilteredComplex B = ctx.filtered(between[1]);
  return certificate_outcome(bordism_between(A, B, ctx.exec), ctx.exec);
}

Outcome cmd_glue(Context& ctx, const std::string& y1, const std::string& y2, const std::string& along) {
  const auto eq = along.find('=');
  if (eq == std::string::npos) throw CLI::ValidationError("--along", "expected L1=L2");
  const BordismCertificate C1 = io::certificate_from_json(ctx.load(y1));
  const BordismCertificate C2 = io::certificate_from_json(ctx.load(y2));
  return certificate_outcome(glue(C1, along.substr(0, eq), C2, along.substr(eq + 1), {}, ctx.exec), ctx.exec);
}

/// Drops flags whose values may differ between otherwise identical runs.
Json command_echo(const std::vector<std::string>& args) {
  Json a = Json::array();
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& s = args[i];
    if (s == "--timing") continue;
    if (s == "--jobs" || s == "-j" || s == "--format") {
      ++i;
      continue;
    }
    if (s.rfind("--jobs=", 0) == 0 || s.rfind("--format=", 0) == 0) continue;
    a.push_back(s);
  }
  return a;
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Stratified pseudomanifolds: validation, intrinsic strata, intersection homology, classes, bordisms"};
  app.require_subcommand(1);
  int jobs = 1;
  std::string format = "json";
  bool timing = false;
  Context ctx;
  app.add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "report rendering")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "include wall-clock timing");
  app.add_flag("--witness", ctx.witness, "include failing links as complexes");

  std::function<Outcome()> action;
  std::string file, file2, ring = "Z", perv = "m", cls, ih_ring = "Q", via = "stratified", along, to_intr, cyl, half, name;
  std::vector<std::string> between;
  bool with_boundary = false, reduced = false;
  int strat_index = 0;
  std::string out_path;

  auto* v = app.add_subcommand("validate", "check the stratified pseudomanifold axioms");
  v->add_option("file", file)->required();
  v->add_flag("--with-boundary", with_boundary);
  v->callback([&] { action = [&] { return cmd_validate(ctx, file, with_boundary); }; });

  auto* s = app.add_subcommand("stratify", "intrinsic stratification");
  s->add_option("file", file)->required();
  s->callback([&] { action = [&] { return cmd_stratify(ctx, file); }; });

  auto* l = app.add_subcommand("links", "links of the singular strata");
  l->add_option("file", file)->required();
  l->callback([&] { action = [&] { return cmd_links(ctx, file); }; });

  auto* h = app.add_subcommand("homology", "simplicial homology");
  h->add_option("file", file)->required();
  h->add_option("--ring", ring);
  h->add_flag("--reduced", reduced);
  h->callback([&] { action = [&] { return cmd_homology(ctx, file, ring, reduced); }; });

  auto* ih = app.add_subcommand("ih", "intersection homology");
  ih->add_option("file", file)->required();
  ih->add_option("--perversity", perv);
  ih->add_option("--ring", ih_ring);
  ih->callback([&] { action = [&] { return cmd_ih(ctx, file, perv, ih_ring); }; });

  auto* c = app.add_subcommand("classify", "membership in a singularity class");
  c->add_option("file", file)->required();
  c->add_option("--class", cls)->required();
  c->add_option("--via", via)->check(CLI::IsMember({"stratified", "polyhedral", "both"}));
  c->callback([&] { action = [&] { return cmd_classify(ctx, file, cls, via); }; });

  auto* b = app.add_subcommand("bordism", "stratified bordism certificates");
  b->add_option("--to-intrinsic", to_intr);
  b->add_option("--between", between)->expected(2);
  b->add_option("--cylinder", cyl);
  b->add_option("--half-suspension", half);
  b->callback([&] { action = [&] { return cmd_bordism(ctx, to_intr, between, cyl, half); }; });

  auto* g = app.add_subcommand("glue", "glue two certificates along matching pieces");
  g->add_option("y1", file)->required();
  g->add_option("y2", file2)->required();
  g->add_option("--along", along)->required();
  g->callback([&] { action = [&] { return cmd_glue(ctx, file, file2, along); }; });

  auto* cat = app.add_subcommand("catalog", "shipped example spaces");
  cat->require_subcommand(1);
  auto* cl = cat->add_subcommand("list");
  cl->callback([&] {
    action = [&] {
      Json names = Json::array();
      for (const auto& n : catalog::list()) names.push_back(n);
      return Outcome{{{"entries", names}}};
    };
  });
  auto* ce = cat->add_subcommand("emit");
  ce->add_option("name", name)->required();
  ce->add_option("--stratification", strat_index);
  ce->add_option("--out", out_path);
  ce->callback([&] {
    action = [&] {
      const auto& e = catalog::get(name);
      if (strat_index < 0 || strat_index >= static_cast<int>(e.stratifications.size()))
        throw CLI::ValidationError("--stratification", "entry has " + std::to_string(e.stratifications.size()));
      FilteredComplex FX = e.stratifications[strat_index];
      FX.name = e.name;
      return Outcome{{{"emitted", io::filtered_to_json(FX)}}};
    };
  });
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  cat->get_subcommand("list")->fallthrough();
  cat->get_subcommand("emit")->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  omp_set_num_threads(jobs);
  ctx.exec = jobs > 1 ? Exec::Parallel : Exec::Serial;

  Json report;
  report["command"] = command_echo(args);
  int code = kOk;
  try {
    Outcome o = action();
    if (!out_path.empty() && o.result.contains("emitted")) {
      std::ofstream f(out_path);
      if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
      f << o.result.at("emitted").dump(1) << "\n";
    }
    report["result"] = std::move(o.result);
    report["heuristic"] = o.heuristic;
    code = o.code;
  } catch (const Error& e) {
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    err << e.what() << "\n";
    code = e.kind() == ErrorKind::InvariantBreach ? kBreach : kUsage;
  } catch (const CLI::Error& e) {
    report["error"] = {{"kind", "Usage"}, {"message", e.what()}};
    err << e.what() << "\n";
    code = kUsage;
  } catch (const Json::exception& e) {
    report["error"] = {{"kind", "ParseError"}, {"message", e.what()}};
    err << e.what() << "\n";
    code = kUsage;
  }
  report["inputs"] = ctx.inputs;
  report["exit"] = code;
  if (timing)
    report["timing"] = {
        {"wall_ms", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()}};
  out << (format == "text" ? render_text(report) : io::canonical(report) + "\n");
  return code;
}

}  // namespace strata::cli
