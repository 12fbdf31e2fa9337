#include "ffcurve/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ffcurve/bounds.hpp"
#include "ffcurve/error.hpp"
#include "ffcurve/gsbasis.hpp"
#include "ffcurve/numtheory.hpp"
#include "ffcurve/suites.hpp"
#include "ffcurve/sympoly.hpp"

namespace ffc::cli {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* k, std::vector<std::string> dflt = {}) {
  if (!j.contains(k)) return dflt;
  return j.at(k).get<std::vector<std::string>>();
}

std::vector<std::uint64_t> int_list(const json& j, const char* k, std::vector<std::uint64_t> dflt) {
  if (!j.contains(k)) return dflt;
  if (j.at(k).is_number()) return {j.at(k).get<std::uint64_t>()};
  return j.at(k).get<std::vector<std::uint64_t>>();
}

Field field_from_json(const json& j) {
  if (j.contains("field")) return gf::parse_field_spec(j.at("field").get<std::string>());
  if (j.contains("q")) return gf::field_of_order(j.at("q").get<std::uint64_t>());
  throw DomainError("spec needs \"field\" or \"q\"");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

RationalFunction rhs_from_json(const Field& F, const json& j) {
  const Polynomial num = from_terms(F, string_list(j, "rhs_num"));
  const Polynomial den = from_terms(F, string_list(j, "rhs_den", {"1"}));
  if (den.is_zero()) throw DomainError("rhs_den is zero");
  return RationalFunction(num, den);
}

std::string element_str(Element e) { return std::to_string(e.v); }

json profile_json(const curves::SplittingProfile& p) {
  json fin = json::array();
  for (const auto& f : p.finite) {
    json r = {{"x", f.x.v}, {"y_count", f.y_count}, {"class", curves::to_string(f.cls)}};
    if (f.pole_places) r["pole_places"] = *f.pole_places;
    fin.push_back(r);
  }
  json inf = {{"class", curves::to_string(p.infinity.cls)}, {"valuation", p.infinity.valuation},
              {"rule", p.infinity.rule}};
  if (p.infinity.degree_one_places) inf["degree_one_places"] = *p.infinity.degree_one_places;
  json out = {{"degree", p.degree}, {"finite", fin}, {"infinity", inf}, {"affine_total", p.affine_total}};
  out["degree_one_total"] = p.degree_one_total ? json(*p.degree_one_total) : json(nullptr);
  return out;
}

json level_json(const towers::TowerLevelReport& l) {
  json j = {{"level", l.level},
            {"affine", l.affine},
            {"infinity_branch", l.infinity_branch},
            {"tracked", l.tracked},
            {"step_degree", l.step_degree},
            {"full", l.full},
            {"deficient", l.deficient},
            {"pole_tuples", l.pole_tuples},
            {"untracked", l.untracked},
            {"ramified_successors_full", l.ramified_successors_full},
            {"ramified_successors_deficient", l.ramified_successors_deficient},
            {"complete_splitting", l.complete_splitting},
            {"within_degree_bound", l.within_degree_bound}};
  j["certificate"] = l.certificate ? json(*l.certificate) : json(nullptr);
  if (l.lambda_lower) j["lambda_lower"] = l.lambda_lower->str();
  if (l.genus_upper) j["genus_upper"] = l.genus_upper->str();
  if (l.exceeds_k_pow_j) j["exceeds_k_pow_j"] = *l.exceeds_k_pow_j;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int run_suite_cmd(const std::string& name, const std::string& format, std::uint64_t seed, std::ostream& out,
                  std::ostream& err) {
  std::vector<std::string> names;
  if (name == "all") {
    names = suites::suite_names();
  } else {
    names = {name};
  }
  if (format == "csv" && names != std::vector<std::string>{"table1"}) {
    throw DomainError("csv output is only available for suite table1");
  }
  std::size_t failed = 0;
  for (const auto& n : names) {
    const suites::SuiteResult r = suites::run_suite(n, seed);
    if (format == "csv") {
      out << "n,q,N,g_n,g_n-1,g_n-2,g_n-3,oesterle,computed_N,computed_g,computed_oesterle\n";
      for (const auto& rec : r.records) {
        out << rec["n"] << ',' << rec["q"] << ',' << rec["N"];
        const auto g = rec["g"].get<std::vector<std::int64_t>>();
        for (std::size_t i = 0; i < 4; ++i) {
          out << ',';
          if (i < g.size() && g[i] >= 0) out << g[i];
        }
        out << ',' << rec["oesterle"] << ',';
        if (rec.contains("computed_N")) {
          out << rec["computed_N"][0];
        } else {
          // the formula N is checked against the printed one
          out << curves::symmetric_invariants(rec["n"].get<unsigned>(), rec["n"].get<unsigned>(),
                                              rec["q"].get<std::uint64_t>()).N;
        }
        out << ',';
        if (rec["computed_g"].is_array()) {
          std::string sep;
          for (const auto& v : rec["computed_g"]) {
            out << sep << v;
            sep = ";";
          }
        } else {
          out << rec["computed_g"];
        }
        out << ',' << (rec.contains("computed_oesterle") ? rec["computed_oesterle"].dump() : "") << '\n';
      }
    } else {
      for (const auto& rec : r.records) emit(out, {{"suite", r.name}, {"record", rec}});
      for (const auto& c : r.checks) {
        emit(out, {{"suite", r.name}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      emit(out, {{"suite", r.name},
                 {"criterion", r.criterion},
                 {"checks", r.checks.size()},
                 {"failures", r.failures()},
                 {"passed", r.failures() == 0}});
    }
    err << "suite " << r.name << ": " << (r.checks.size() - r.failures()) << "/" << r.checks.size()
        << " checks passed in " << r.seconds << " s\n";
    if (r.failures() != 0) ++failed;
  }
  return failed == 0 ? kExitOk : kExitAssertion;
}

}  // namespace

curves::CurveSpec curve_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "hermitian") return curves::hermitian(j.at("q").get<std::uint64_t>());
    if (kind == "symmetric" || kind == "kummer-symmetric") {
      const unsigned n = j.at("n").get<unsigned>();
      const unsigned i = j.at("i").get<unsigned>();
      const std::uint64_t q = j.at("q").get<std::uint64_t>();
      return kind == "symmetric" ? curves::symmetric_curve(n, i, q) : curves::kummer_symmetric_curve(n, i, q);
    }
    const Field F = field_from_json(j);
    if (kind == "artin-schreier") {
      const std::uint64_t base = j.value("lhs_base", static_cast<std::uint64_t>(F.p()));
      std::vector<Element> c;
      for (auto v : int_list(j, "lhs_coeffs", {})) c.push_back(F.from_int(v));
      return curves::artin_schreier(LinearizedPolynomial(F, base, c), rhs_from_json(F, j));
    }
    if (kind == "kummer") return curves::kummer(j.at("kummer_exponent").get<std::uint64_t>(), rhs_from_json(F, j));
    throw DomainError("unknown curve kind: " + kind);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad curve spec: ") + e.what());
  }
}

towers::TowerSpec tower_from_json(const json& j) {
  try {
    const towers::Family fam = towers::family_from_string(j.at("family").get<std::string>());
    const json params = j.value("params", json::object());
    switch (fam) {
      case towers::Family::kFamily1:
      case towers::Family::kFamily2: {
        const auto p = j.at("p").get<std::uint32_t>();
        const auto n = j.at("n").get<unsigned>();
        const auto m = j.value("m", 1u);
        const auto a = int_list(params, "a", {1});
        const auto b = int_list(params, "b", {1});
        const auto r = int_list(params, fam == towers::Family::kFamily1 ? "r" : "s", {1});
        return fam == towers::Family::kFamily1 ? towers::family1(p, n, m, a, b, r) : towers::family2(p, n, m, a, b, r);
      }
      case towers::Family::kGs: return towers::gs_tower(j.at("q").get<std::uint64_t>());
      case towers::Family::kAbelian:
        return towers::abelian_tower(j.at("q").get<std::uint64_t>(), j.at("n").get<unsigned>(),
                                     params.at("alpha").get<std::uint64_t>());
      case towers::Family::kAllSplitAs:
        return towers::all_split_as(j.at("q").get<std::uint64_t>(), j.at("n").get<unsigned>(),
                                    string_list(params, "i_num"), string_list(params, "i_den"));
      case towers::Family::kKummerAllSplit:
        return towers::kummer_all_split(j.at("q").get<std::uint64_t>(), j.at("n").get<unsigned>(),
                                        string_list(params, "i_num"), string_list(params, "i_den"));
      case towers::Family::kCustom: {
        towers::TowerSpec spec;
        spec.family = fam;
        spec.constants = field_from_json(j);
        spec.p = spec.constants.p();
        spec.q = spec.constants.order();
        for (const auto& s : params.at("steps")) {
          json sj = s;
          sj["field"] = std::to_string(spec.constants.p()) + "^" + std::to_string(spec.constants.k());
          const curves::CurveSpec c = curve_from_json(sj);
          towers::Step st;
          st.kind = c.kind == curves::CurveKind::kArtinSchreier ? towers::StepKind::kArtinSchreier
                                                                 : towers::StepKind::kKummer;
          st.lhs = c.lhs;
          st.exponent = c.kummer_exponent;
          st.rhs = c.rhs;
          spec.steps.push_back(std::move(st));
        }
        if (spec.steps.empty()) throw DomainError("custom tower needs steps");
        return spec;
      }
    }
    throw DomainError("unsupported family");
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad tower spec: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (const char* cap = std::getenv("FFCURVE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) {
      err << "FFCURVE_CAP must be a positive integer\n";
      return kExitUsage;
    }
    gf::set_enumeration_cap(v);
  }

  CLI::App app{"Curves and towers over finite fields", "ffcurve"};
  app.require_subcommand(1, 1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for sampled checks")->capture_default_str();

  std::uint64_t q = 0, l = 0, g = 0, N = 0;
  unsigned n = 0, i = 0, m = 2, depth = 3, ext = 1;
  std::string field_spec, spec_path, format = "json", suite_name, terms_str;
  bool extend_poles = false;

  auto* field = app.add_subcommand("field", "finite field information");
  field->require_subcommand(1, 1);
  auto* field_info = field->add_subcommand("info", "modulus and generators of GF(p^k)");
  field_info->add_option("--field", field_spec, "p^k or q")->required();

  auto* sym = app.add_subcommand("sympoly", "(n,q)-elementary symmetric polynomials");
  sym->require_subcommand(1, 1);
  auto* snq = sym->add_subcommand("snq", "s_{n,i} as a term list");
  snq->add_option("--n", n)->required();
  snq->add_option("--i", i)->required();
  snq->add_option("--q", q)->required();
  snq->add_option("--field", field_spec, "coefficient field, default GF(p)");
  auto* qscheck = sym->add_subcommand("qscheck", "quasi-symmetry of s_{n,i} or of a term list over GF(q^n)");
  qscheck->add_option("--n", n)->required();
  qscheck->add_option("--q", q)->required();
  qscheck->add_option("--i", i);
  qscheck->add_option("--terms", terms_str, "comma-separated c*t^e terms");
  auto* dim = sym->add_subcommand("dim", "dimension of the quasi-symmetric space");
  dim->add_option("--n", n)->required();
  dim->add_option("--q", q)->required();

  auto* curve = app.add_subcommand("curve", "Artin-Schreier and Kummer curves");
  curve->require_subcommand(1, 1);
  auto* ccount = curve->add_subcommand("count", "affine solutions");
  auto* cprofile = curve->add_subcommand("profile", "splitting profile over the enumeration field");
  auto* cn2 = curve->add_subcommand("n2", "degree-m places via Mobius inversion");
  for (auto* c : {ccount, cprofile, cn2}) {
    c->add_option("--spec", spec_path, "curve spec JSON")->required();
    c->add_option("--field", field_spec, "enumeration field, default the constant field");
  }
  cn2->add_option("--m", m)->capture_default_str();
  auto* cinv = curve->add_subcommand("invariants", "symmetric curve invariants");
  cinv->add_option("--n", n)->required();
  cinv->add_option("--i", i)->required();
  cinv->add_option("--q", q)->required();
  auto* caut = curve->add_subcommand("automorphisms", "generalized Hermitian automorphism pairs");
  caut->add_option("--n", n)->required();
  caut->add_option("--q", q)->required();

  auto* bnd = app.add_subcommand("bounds", "bounds on the number of rational places");
  bnd->require_subcommand(1, 1);
  auto* hw = bnd->add_subcommand("hw", "Hasse-Weil maximum");
  hw->add_option("--l", l)->required();
  hw->add_option("--g", g)->required();
  auto* oe = bnd->add_subcommand("oesterle", "Oesterle minimum genus");
  oe->add_option("--q", q)->required();
  oe->add_option("--n", N, "number of rational places")->required();
  auto* dv = bnd->add_subcommand("dv", "Drinfeld-Vladut bound");
  dv->add_option("--q", q)->required();

  auto* tower = app.add_subcommand("tower", "recursive towers");
  tower->require_subcommand(1, 1);
  auto* tcensus = tower->add_subcommand("census", "degree-one places level by level");
  auto* tbounds = tower->add_subcommand("bounds", "family lambda and genus bounds");
  auto* tlocus = tower->add_subcommand("locus", "ramified locus check");
  for (auto* c : {tcensus, tbounds, tlocus}) {
    c->add_option("--spec", spec_path, "tower spec JSON")->required();
    c->add_option("--depth", depth, "overrides the spec depth");
  }
  tcensus->add_option("--extension", ext, "enumerate over GF(|K|^e)")->capture_default_str();
  tcensus->add_flag("--extend-poles", extend_poles, "follow places above finite poles");
  tlocus->add_option("--extension", ext, "extension degree for the ramification scan");

  auto* gsb = app.add_subcommand("gsbasis", "trace matrix and discriminants of the Garcia-Stichtenoth tower");
  gsb->add_option("--q", q)->required();
  gsb->add_option("--n", n)->required();

  auto* suite = app.add_subcommand("suite", "acceptance suites");
  std::string names = "all";
  for (const auto& s : suites::suite_names()) names += "|" + s;
  suite->add_option("name", suite_name, names)->required();
  suite->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const bool depth_given = (tcensus->count("--depth") + tbounds->count("--depth") + tlocus->count("--depth")) > 0;

  try {
    if (field_info->parsed()) {
      const Field F = gf::parse_field_spec(field_spec);
      emit(out, {{"field", F.name()}, {"p", F.p()}, {"k", F.k()}, {"order", F.order()},
                 {"modulus", F.modulus()}, {"tables", F.has_tables()},
                 {"generator", element_str(F.generator())}, {"primitive", element_str(F.primitive())}});
    } else if (snq->parsed()) {
      const Field F = field_spec.empty() ? gf::make_field(gf::field_of_order(q).p(), 1) : gf::parse_field_spec(field_spec);
      const Polynomial s = sympoly::elementary_symmetric_nq(n, i, q, F);
      emit(out, {{"n", n}, {"i", i}, {"q", q}, {"field", F.name()}, {"degree", s.degree()},
                 {"terms", to_terms(s)}, {"term_count", s.term_count()}});
    } else if (qscheck->parsed()) {
      const Field Fq = gf::field_of_order(q);
      const Field F = gf::make_field(Fq.p(), Fq.k() * n);
      Polynomial f;
      if (!terms_str.empty()) {
        std::vector<std::string> terms;
        std::stringstream ss(terms_str);
        for (std::string t; std::getline(ss, t, ',');) terms.push_back(t);
        f = from_terms(F, terms);
      } else if (i > 0) {
        f = sympoly::elementary_symmetric_nq(n, i, q, F);
      } else {
        throw DomainError("qscheck needs --i or --terms");
      }
      const auto rep = sympoly::is_quasi_symmetric(f, q);
      json orbits = json::array();
      for (const auto& o : rep.orbits) {
        json elems = json::array();
        for (auto e : o.orbit) elems.push_back(e.v);
        orbits.push_back({{"orbit", elems}, {"value", o.value.v}, {"constant", o.constant}});
      }
      emit(out, {{"quasi_symmetric", rep.quasi_symmetric}, {"values_in_subfield", rep.values_in_subfield},
                 {"orbits", orbits}});
    } else if (dim->parsed()) {
      std::uint64_t oracle = 0;
      for (auto d : nt::divisors(n)) oracle += nt::count_irreducible(q, static_cast<unsigned>(d));
      emit(out, {{"q", q}, {"n", n}, {"dimension", sympoly::qs_dimension(q, n)}, {"orbit_oracle", oracle}});
    } else if (ccount->parsed() || cprofile->parsed() || cn2->parsed()) {
      const curves::CurveSpec c = curve_from_json(read_json_file(spec_path));
      const Field F = field_spec.empty() ? c.constant_field() : gf::parse_field_spec(field_spec);
      if (ccount->parsed()) {
        emit(out, {{"field", F.name()}, {"degree", c.degree()}, {"affine", curves::count_affine(c, F)}});
      } else if (cprofile->parsed()) {
        json j = profile_json(curves::splitting_profile(c, F));
        j["field"] = F.name();
        emit(out, j);
      } else {
        const auto d = curves::degree_m_places(c, F, m);
        emit(out, {{"field", F.name()}, {"m", d.m}, {"counts", d.counts}, {"value", d.value}});
      }
    } else if (cinv->parsed()) {
      const auto s = curves::symmetric_invariants(n, i, q);
      json j = {{"n", n}, {"i", i}, {"q", q}, {"m", s.m}, {"m_coprime", s.m_coprime}, {"d", s.d}, {"g", s.g}, {"N", s.N}};
      const auto kp = curves::kummer_profile(n, i, q);
      j["kummer"] = {{"degree", kp.degree}, {"deg_diff", kp.deg_diff}, {"genus", kp.genus},
                     {"valuations_match", kp.valuations_match}};
      emit(out, j);
    } else if (caut->parsed()) {
      const auto a = curves::generalized_hermitian_automorphisms(n, q, seed);
      emit(out, {{"n", n}, {"q", q}, {"pairs", a.pair_count}, {"expected", a.expected},
                 {"pairs_checked", a.pairs_checked}, {"points", a.points}, {"verified", a.verified}});
      if (!a.verified) return kExitAssertion;
    } else if (hw->parsed()) {
      emit(out, {{"l", l}, {"g", g}, {"max", bounds::hasse_weil_max(l, g)},
                 {"exceeds_maximal_genus", bounds::exceeds_maximal_genus(l, g)}});
    } else if (oe->parsed()) {
      const auto t = bounds::oesterle_min_genus(q, N);
      emit(out, {{"q", t.q}, {"N", t.N}, {"m", t.m}, {"u", t.u}, {"theta0", t.theta0},
                 {"real_bound", t.real_bound}, {"genus_bound", t.genus_bound}});
    } else if (dv->parsed()) {
      const auto d = bounds::drinfeld_vladut(q);
      json j = {{"q", q}, {"value", d.value}};
      j["exact"] = d.exact ? json(*d.exact) : json(nullptr);
      emit(out, j);
    } else if (tcensus->parsed() || tbounds->parsed() || tlocus->parsed()) {
      const json spec_json = read_json_file(spec_path);
      const towers::TowerSpec spec = tower_from_json(spec_json);
      if (!depth_given) depth = spec_json.value("depth", 3u);
      if (tcensus->parsed()) {
        towers::CensusOptions opts;
        opts.extension_degree = ext;
        opts.extend.extend_poles = extend_poles;
        for (const auto& r : towers::tower_census(spec, depth, opts)) {
          json j = level_json(r);
          j["family"] = towers::to_string(spec.family);
          emit(out, j);
        }
      } else if (tbounds->parsed()) {
        for (unsigned j = 1; j <= depth; ++j) {
          const auto b = towers::family_bounds(spec, j);
          emit(out, {{"level", j}, {"lambda_lower", b.lambda_lower.str()}, {"genus_upper", b.genus_upper.str()},
                     {"deg_diff_upper", b.deg_diff_upper.str()}});
        }
      } else {
        const auto r = towers::ramified_locus_check(spec, depth, tlocus->count("--extension") ? ext : 2);
        json firsts = json::array();
        for (auto e : r.first_coordinates) firsts.push_back(e.v);
        json j = {{"holds", r.holds}, {"locus", r.locus}, {"deficient_over_constants", r.deficient_over_constants},
                  {"ramified_over_extension", r.ramified_over_extension}, {"first_coordinates", firsts}};
        if (r.prime_subfield_locus) j["prime_subfield_locus"] = *r.prime_subfield_locus;
        emit(out, j);
        if (!r.holds) return kExitAssertion;
      }
    } else if (gsb->parsed()) {
      const auto d = gsbasis::gs_discriminant_det(q, n);
      const auto v = gsbasis::gs_field_discriminant(q, n);
      json verdicts = json::array();
      for (const auto& lv : gsbasis::gs_local_basis_check(q, n)) {
        verdicts.push_back({{"place", lv.place}, {"set_valuation", lv.set_valuation},
                            {"field_valuation", lv.field_valuation}, {"is_basis", lv.is_basis}});
      }
      emit(out, {{"q", q},
                 {"n", n},
                 {"det", d.det},
                 {"structural_det", d.structural},
                 {"matrix_size", nt::ipow(q, n - 1)},
                 {"valuations", {{"P_inf", v.p_inf}, {"P_alpha", v.p_alpha}, {"P_0", v.p_zero}}},
                 {"dual_path_agree", v.paths_agree},
                 {"basis_verdicts", verdicts}});
      if (!d.unit || !v.paths_agree) return kExitAssertion;
    } else if (suite->parsed()) {
      return run_suite_cmd(suite_name, format, seed, out, err);
    }
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

}  // namespace ffc::cli
