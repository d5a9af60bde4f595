#include "iwahori/report.hpp"

#include <chrono>
#include <random>
#include <set>

#include "iwahori/descriptor.hpp"
#include "iwahori/hecke.hpp"

namespace iwahori {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json j_ivec(const IVec& v) {
  ordered_json a = ordered_json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

ordered_json j_word(const WeylElt& w) {
  ordered_json a = ordered_json::array();
  for (int i : w.word()) a.push_back(i + 1);
  return a;
}

ordered_json j_eps(const F2Vec& e) {
  ordered_json a = ordered_json::array();
  for (unsigned i = 0; i < e.dim(); ++i) a.push_back(e.get(i) ? 1 : 0);
  return a;
}

ordered_json j_ext(const ExtAffElt& x) {
  ordered_json o;
  o["lambda"] = j_ivec(x.lambda);
  o["word"] = j_word(x.w);
  return o;
}

ordered_json j_tits(const TitsElt& x) {
  ordered_json o;
  o["lambda"] = j_ivec(x.lambda);
  o["eps"] = j_eps(x.eps);
  o["word"] = j_word(x.w);
  return o;
}

ordered_json j_poly(const Poly& p) {
  ordered_json a = ordered_json::array();
  for (auto c : p.c) a.push_back(c);
  return a;
}

ordered_json j_affine_root(const AffineRoot& a) {
  ordered_json o;
  o["gradient"] = j_ivec(a.b);
  o["level"] = a.k;
  return o;
}

struct Checks {
  ordered_json arr = ordered_json::array();
  int failures = 0;

  void add(const std::string& name, bool pass, ordered_json witness = {}) {
    ordered_json o;
    o["name"] = name;
    o["status"] = pass ? "pass" : "fail";
    if (!witness.is_null() && !witness.empty()) o["witness"] = witness;
    arr.push_back(o);
    if (!pass) ++failures;
  }
  void add_line(const CheckLine& l) {
    ordered_json o;
    o["name"] = l.name;
    o["status"] = l.applicable ? (l.pass ? "pass" : "fail") : "skip";
    if (l.applicable && (!l.lhs.empty() || !l.rhs.empty())) {
      ordered_json w;
      w["lhs"] = l.lhs;
      w["rhs"] = l.rhs;
      o["witness"] = w;
    }
    arr.push_back(o);
    if (l.applicable && !l.pass) ++failures;
  }
};

bool has_e7(const RootDatum& rd) {
  for (const auto& c : rd.components())
    if (c.type == TypeLabel::E && c.rank == 7) return true;
  return false;
}

bool nontrivial_frobenius(const RealizedDescriptor& real) {
  if (real.inner != "trivial") return true;
  for (std::size_t i = 0; i < real.node_perm.size(); ++i)
    if (real.node_perm[i] != static_cast<int>(i)) return true;
  return false;
}

ExtAffElt random_word_elt(const RootDatum& rd,
                          const std::vector<ExtAffElt>& gens,
                          std::mt19937_64& rng, int steps) {
  ExtAffElt x = ea_identity(rd);
  for (int i = 0; i < steps; ++i)
    x = ea_mul(rd, x, gens[rng() % gens.size()]);
  return x;
}

void cmd_describe(const RealizedDescriptor& real, Checks& checks,
                  ordered_json& data) {
  const RootDatum& rd = *real.datum;
  data["type"] = rd.describe_type();
  data["ss_rank"] = rd.ss_rank();
  data["central_rank"] = rd.central_rank();
  data["weyl_order"] = rd.weyl_order();
  data["positive_roots"] = static_cast<long long>(rd.positive_roots().size());
  data["s2_dim"] = rd.coroot_span_mod2().rank();
  ordered_json delta = ordered_json::array();
  for (const auto& a : affine_simple_roots(rd)) delta.push_back(j_affine_root(a));
  data["affine_simple_roots"] = delta;
  OmegaGroup og = omega_group(rd);
  ordered_json omega;
  omega["finite"] = og.finite;
  if (og.finite) omega["order"] = og.order;
  ordered_json tor = ordered_json::array();
  for (auto t : og.torsion) tor.push_back(t);
  omega["torsion"] = tor;
  omega["free_rank"] = og.free_rank;
  ordered_json gens = ordered_json::array();
  for (const auto& g : og.generators) gens.push_back(j_ext(g.x));
  omega["generators"] = gens;
  data["omega"] = omega;
  checks.add("describe: datum constructed", true);
}

void cmd_verify_coxeter(const RealizedDescriptor& real, Checks& checks,
                        ordered_json& data) {
  const RootDatum& rd = *real.datum;
  TitsGroup tg(rd);
  ordered_json eps = ordered_json::array();
  for (std::size_t c = 0; c < rd.components().size(); ++c) {
    ordered_json o;
    o["component"] = static_cast<int>(c);
    o["chosen"] = j_eps(tg.extra_eps(static_cast<int>(c)));
    ordered_json cand = ordered_json::array();
    for (const auto& e : tg.extra_eps_candidates(static_cast<int>(c)))
      cand.push_back(j_eps(e));
    o["candidates"] = cand;
    eps.push_back(o);
  }
  data["extra_node_signs"] = eps;
  CoxeterReport rep = tg.verify_coxeter();
  for (const auto& sq : rep.squares) {
    ordered_json w;
    w["lhs"] = sq.lhs;
    w["rhs"] = sq.rhs;
    checks.add("square: m(s" + std::to_string(sq.i) +
                   ")^2 = gradient-coroot(-1)",
               sq.pass, w);
  }
  for (const auto& p : rep.pairs) {
    if (p.order == 0) {
      CheckLine l;
      l.name = "braid (" + std::to_string(p.i) + "," + std::to_string(p.j) +
               "): no relation";
      l.applicable = false;
      checks.add_line(l);
      continue;
    }
    ordered_json w;
    w["order"] = p.order;
    w["lhs"] = p.lhs;
    w["rhs"] = p.rhs;
    checks.add("braid (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                   ") of order " + std::to_string(p.order),
               p.pass, w);
  }
}

void cmd_ftg(const RealizedDescriptor& real, const CommandOptions& opt,
             Checks& checks, ordered_json& data) {
  const RootDatum& rd = *real.datum;
  FtgReport rep = check_ftg_identities(rd);
  for (const auto& l : rep.lines) checks.add_line(l);
  try {
    std::size_t group_size =
        (1u << rd.coroot_span_mod2().rank()) *
        static_cast<std::size_t>(rd.weyl_order());
    std::size_t sample = group_size <= 400 ? 0 : 10000;
    auto res = check_matrix_oracle(rd, sample, opt.seed);
    ordered_json w;
    w["pairs"] = static_cast<long long>(res.pairs_checked);
    w["mismatches"] = static_cast<long long>(res.mismatches);
    w["mode"] = sample == 0 ? "exhaustive" : "sampled";
    checks.add("rostami vs signed-matrix oracle", res.mismatches == 0 &&
                                                      res.injective,
               w);
  } catch (const std::domain_error& e) {
    CheckLine l;
    l.name = std::string("signed-matrix oracle: ") + e.what();
    l.applicable = false;
    checks.add_line(l);
  }
  data["s2_dim"] = rd.coroot_span_mod2().rank();
}

void cmd_ses(const RealizedDescriptor& real, const CommandOptions& opt,
             Checks& checks, ordered_json& data) {
  const RootDatum& rd = *real.datum;
  TitsGroup tg(rd);
  SesReport rep = tg.ses_check(opt.radius);
  data["radius"] = opt.radius;
  data["words_checked"] = rep.words_checked;
  data["null_words"] = rep.null_words;
  data["s2_dim"] = rep.s2_dim;
  checks.add("ses: null words land in S_2", rep.null_in_s2);
  checks.add("ses: identity fiber realizes all of S_2", rep.kernel_saturated);
  checks.add("ses: fibers are S_2-cosets of the expected size", rep.fibers_ok);
}

void cmd_descent(const RealizedDescriptor& real, const CommandOptions& opt,
                 Checks& checks, ordered_json& data) {
  const RootDatum& rd = *real.datum;
  TitsGroup tg(rd);
  FrobeniusData fd(rd, tg, real.node_perm, real.inner);
  if (fd.has_inner()) {
    ordered_json itw;
    itw["label"] = fd.inner().label;
    ordered_json beta = ordered_json::array();
    for (const auto& r : fd.inner().beta_ad) beta.push_back(r.str());
    itw["beta_ad"] = beta;
    itw["k"] = fd.inner().k;
    itw["eta"] = j_ivec(fd.inner().eta);
    itw["z_word"] = j_word(fd.inner().z);
    itw["g_z"] = j_tits(fd.inner().g_z);
    data["inner_twist"] = itw;
  }
  RelativeWeyl rw = relative_data(fd);
  ordered_json orbits = ordered_json::array();
  for (const auto& o : rw.orbits) {
    ordered_json oj;
    ordered_json nodes = ordered_json::array();
    for (int n : o.nodes) nodes.push_back(n);
    oj["nodes"] = nodes;
    oj["finite"] = o.finite;
    if (o.finite) {
      oj["w_X"] = j_ext(o.w_X);
      oj["param"] = o.param;
      oj["c_a"] = o.c_a.str();
    }
    orbits.push_back(oj);
  }
  data["orbits"] = orbits;
  data["relative_simple_count"] =
      static_cast<long long>(rw.simple_orbits.size());
  data["omega_fixed_count"] = static_cast<long long>(rw.omega_fixed.size());
  data["s2_dim"] = rw.s2_dim();

  StableSection sec = stable_cross_section(fd, rw);
  for (const auto& l : sec.report.lines) checks.add_line(l);
  RelativeCheckOptions rco;
  rco.kernel_radius = std::min(opt.radius, 4);
  rco.seed = opt.seed;
  RelativeCheckReport chk = relative_tits_check(fd, rw, sec, rco);
  for (const auto& l : chk.lines.lines) checks.add_line(l);
  data["rel_coroot_span_dim"] = chk.rel_coroot_span_dim;
}

void cmd_hecke(const RealizedDescriptor& real, const CommandOptions& opt,
               Checks& checks, ordered_json& data) {
  const RootDatum& rd = *real.datum;
  std::unique_ptr<TitsGroup> tg;
  std::unique_ptr<FrobeniusData> fd;
  std::unique_ptr<RelativeWeyl> rw;
  std::unique_ptr<HeckeAlgebra> alg;
  std::vector<ExtAffElt> gens;
  if (nontrivial_frobenius(real)) {
    tg = std::make_unique<TitsGroup>(rd);
    fd = std::make_unique<FrobeniusData>(rd, *tg, real.node_perm, real.inner);
    rw = std::make_unique<RelativeWeyl>(relative_data(*fd));
    alg = std::make_unique<HeckeAlgebra>(rd, *rw);
    for (const auto& om : rw->omega_fixed) gens.push_back(om.x);
  } else {
    alg = std::make_unique<HeckeAlgebra>(rd);
  }
  for (int s = 0; s < alg->num_simple(); ++s) gens.push_back(alg->simple(s));

  ordered_json params = ordered_json::array();
  for (int s = 0; s < alg->num_simple(); ++s) params.push_back(alg->param(s));
  data["parameters"] = params;

  bool quad_ok = true;
  for (int s = 0; s < alg->num_simple(); ++s) {
    HeckeElt ts = alg->basis(alg->simple(s));
    HeckeElt expect = alg->add(
        alg->scale(Poly::q_pow(alg->param(s)) - Poly::one(), ts),
        alg->scale(Poly::q_pow(alg->param(s)), alg->one()));
    if (!(alg->mul(ts, ts) == expect)) quad_ok = false;
  }
  checks.add("quadratic relation T_s^2 = (q^L - 1) T_s + q^L T_e", quad_ok);

  bool braid_ok = true;
  for (int i = 0; i < alg->num_simple(); ++i)
    for (int j = i + 1; j < alg->num_simple(); ++j) {
      int k = alg->braid_order(i, j);
      if (k == 0) continue;
      HeckeElt a = alg->one(), b = alg->one();
      for (int t = 0; t < k; ++t) {
        a = alg->mul(a, alg->basis(alg->simple(t % 2 ? j : i)));
        b = alg->mul(b, alg->basis(alg->simple(t % 2 ? i : j)));
      }
      if (!(a == b)) braid_ok = false;
    }
  checks.add("braid relations of T-generators", braid_ok);

  std::mt19937_64 rng(opt.seed);
  auto random_basis = [&]() {
    for (;;) {
      ExtAffElt x = random_word_elt(rd, gens, rng,
                                    static_cast<int>(rng() % 5));
      if (alg->length(x) >= 0 && alg->length(x) <= opt.hecke_len)
        return alg->basis(x);
    }
  };
  bool assoc_ok = true, q1_ok = true;
  for (int t = 0; t < opt.triples; ++t) {
    HeckeElt x = random_basis(), y = random_basis(), z = random_basis();
    if (!(alg->mul(alg->mul(x, y), z) == alg->mul(x, alg->mul(y, z))))
      assoc_ok = false;
    if (alg->specialize_q1(alg->mul(x, y)) !=
        alg->group_mul(alg->specialize_q1(x), alg->specialize_q1(y)))
      q1_ok = false;
  }
  checks.add("associativity on " + std::to_string(opt.triples) +
                 " random triples",
             assoc_ok);
  checks.add("q = 1 specialization is a ring homomorphism", q1_ok);
}

void cmd_emit(const RealizedDescriptor& real, const CommandOptions& opt,
              Checks& checks, ordered_json& data) {
  const RootDatum& rd = *real.datum;
  TitsGroup tg(rd);
  PresentationSchema ps;
  if (nontrivial_frobenius(real)) {
    FrobeniusData fd(rd, tg, real.node_perm, real.inner);
    RelativeWeyl rw = relative_data(fd);
    StableSection sec = stable_cross_section(fd, rw);
    ps = emit_presentation(fd, rw, sec, opt.level);
  } else {
    ps = emit_presentation(rd, tg, opt.level);
  }

  ordered_json schema;
  schema["level"] = ps.level;
  schema["relative"] = ps.relative;
  ordered_json gens = ordered_json::array();
  for (std::size_t s = 0; s < ps.params.size(); ++s) {
    ordered_json g;
    g["kind"] = "simple";
    g["index"] = static_cast<int>(s);
    g["element"] = j_ext(ps.constants.simples[s]);
    g["param"] = ps.params[s];
    gens.push_back(g);
  }
  for (std::size_t t = 0; t < ps.constants.taus.size(); ++t) {
    ordered_json g;
    g["kind"] = "omega";
    g["index"] = static_cast<int>(t);
    g["element"] = j_ext(ps.constants.taus[t]);
    gens.push_back(g);
  }
  {
    ordered_json g;
    g["kind"] = "iwahori_placeholder";
    g["family"] = "1_{I_n g I_n}, g in I";
    gens.push_back(g);
  }
  schema["generators"] = gens;

  ordered_json rel;
  ordered_json braid = ordered_json::array();
  for (const auto& b : ps.braid) {
    ordered_json o;
    o["s1"] = b.s1;
    o["s2"] = b.s2;
    o["order"] = b.order;
    braid.push_back(o);
  }
  rel["A_braid"] = braid;
  ordered_json quad = ordered_json::array();
  for (const auto& q : ps.quad) {
    ordered_json o;
    o["s"] = q.s;
    o["exponent"] = q.exponent;
    o["coefficient"] = j_poly(Poly::q_pow(q.exponent));
    o["index_set_size"] = "q^" + std::to_string(q.exponent);
    if (ps.level == 0) {
      // collapsed Iwahori-Matsumoto form
      o["collapsed_T_s_squared"] = ordered_json::array(
          {j_poly(Poly::q_pow(q.exponent) - Poly::one()),
           j_poly(Poly::q_pow(q.exponent))});
    }
    quad.push_back(o);
  }
  rel["A_quad"] = quad;
  ordered_json bmul = ordered_json::array();
  for (const auto& m : ps.omega_mul) {
    ordered_json o;
    o["t1"] = m.t1;
    o["t2"] = m.t2;
    o["t12"] = m.t12;
    o["c"] = j_eps(m.c);
    bmul.push_back(o);
  }
  rel["B_mul"] = bmul;
  ordered_json bconj = ordered_json::array();
  for (const auto& m : ps.omega_conj) {
    ordered_json o;
    o["t"] = m.t;
    o["s"] = m.s;
    o["s_conj"] = m.s_conj;
    o["c_ts"] = j_eps(m.c_ts);
    o["c_t_tinv"] = j_eps(m.c_t_tinv);
    bconj.push_back(o);
  }
  rel["B_conj"] = bconj;
  ordered_json sym = ordered_json::array();
  for (const auto& s : ps.symbolic) sym.push_back(s);
  rel["symbolic"] = sym;
  schema["relations"] = rel;
  data["schema"] = schema;
  checks.add("constants lie in S_2", ps.constants.all_in_kernel);
}

}  // namespace

Report run_command(const std::string& cmd, const std::string& descriptor_text,
                   const CommandOptions& opt) {
  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  ordered_json& body = rep.body;
  body["command"] = cmd;

  static const std::set<std::string> known{
      "describe",  "verify-coxeter", "ftg-identities",   "ses-check",
      "descent-check", "hecke-check", "emit-presentation"};
  if (!known.count(cmd)) {
    body["error"] = "unsupported command '" + cmd + "'";
    rep.exit_code = 2;
    return rep;
  }

  GroupDescriptor desc;
  RealizedDescriptor real;
  try {
    desc = parse_descriptor(descriptor_text);
    real = realize(desc);
  } catch (const std::exception& e) {
    body["error"] = std::string("descriptor: ") + e.what();
    rep.exit_code = 2;
    return rep;
  }
  body["descriptor"] = desc.serialize();
  ordered_json options;
  options["radius"] = opt.radius;
  options["seed"] = opt.seed;
  options["level"] = opt.level;
  options["include_e7"] = opt.include_e7;
  body["options"] = options;

  if (has_e7(*real.datum) && !opt.include_e7 &&
      (cmd == "ses-check" || cmd == "descent-check" || cmd == "hecke-check")) {
    body["error"] =
        "E7 sweeps are excluded from the default profile; pass --include-e7";
    rep.exit_code = 2;
    return rep;
  }

  Checks checks;
  ordered_json data;
  try {
    if (cmd == "describe") cmd_describe(real, checks, data);
    else if (cmd == "verify-coxeter") cmd_verify_coxeter(real, checks, data);
    else if (cmd == "ftg-identities") cmd_ftg(real, opt, checks, data);
    else if (cmd == "ses-check") cmd_ses(real, opt, checks, data);
    else if (cmd == "descent-check") cmd_descent(real, opt, checks, data);
    else if (cmd == "hecke-check") cmd_hecke(real, opt, checks, data);
    else if (cmd == "emit-presentation") cmd_emit(real, opt, checks, data);
  } catch (const std::exception& e) {
    body["error"] = e.what();
    rep.exit_code = 2;
    return rep;
  }

  body["data"] = data;
  body["checks"] = checks.arr;
  ordered_json summary;
  summary["checks"] = static_cast<long long>(checks.arr.size());
  summary["failures"] = checks.failures;
  body["summary"] = summary;
  rep.exit_code = checks.failures == 0 ? 0 : 1;
  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return rep;
}

std::string render_text(const Report& r) {
  std::string out;
  out += "command: " + r.body.value("command", std::string()) + "\n";
  if (r.body.contains("error")) {
    out += "error: " + r.body["error"].get<std::string>() + "\n";
    return out;
  }
  if (r.body.contains("checks"))
    for (const auto& c : r.body["checks"]) {
      std::string st = c["status"].get<std::string>();
      out += "[" + std::string(st == "pass" ? "PASS" : st == "fail" ? "FAIL"
                                                                    : "SKIP") +
             "] " + c["name"].get<std::string>() + "\n";
    }
  if (r.body.contains("summary"))
    out += "summary: " + std::to_string(r.body["summary"]["failures"]
                                            .get<long long>()) +
           " failure(s) out of " +
           std::to_string(r.body["summary"]["checks"].get<long long>()) +
           " check(s)\n";
  return out;
}

}  // namespace iwahori
