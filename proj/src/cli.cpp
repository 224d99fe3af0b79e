#include "bicoarse/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bicoarse/audit.hpp"
#include "bicoarse/serialize.hpp"

namespace bicoarse {

namespace {

struct Output {
  Json result;
  Json meta = Json::object();
  std::vector<std::string> plain;
  // When set, one JSON line (or plain line) per record instead of a single envelope.
  std::optional<std::vector<std::pair<Json, std::string>>> records;
};

std::string show(const ReducedWord& w) { return to_string(w); }
std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(const Z2& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }
Json dist_json(std::size_t d) { return d; }
Json dist_json(std::int64_t d) { return d; }
Json dist_json(double d) { return d; }
std::string dist_text(std::size_t d) { return std::to_string(d); }
std::string dist_text(std::int64_t d) { return std::to_string(d); }
std::string dist_text(double d) {
  std::ostringstream s;
  s.precision(17);
  s << d;
  return s.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t to_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer, got '" + text + "'");
}

ZGenSet parse_set(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "factorials" && parts.size() == 2) return ZGenSet::factorials(static_cast<int>(to_int(parts[1])));
  if (kind == "powers" && parts.size() == 3) {
    return ZGenSet::powers_of(to_int(parts[1]), static_cast<int>(to_int(parts[2])));
  }
  if (kind == "primes" && parts.size() == 2) return ZGenSet::primes(to_int(parts[1]));
  if (kind == "list" && parts.size() == 2) {
    std::vector<std::int64_t> members;
    for (const auto& m : split(parts[1], ',')) members.push_back(to_int(m));
    return ZGenSet::explicit_list(std::move(members));
  }
  throw Error(ErrorKind::InvalidInput,
              "generating set must be factorials:N, powers:B:E, primes:N or list:a,b,..., got '" + spec + "'");
}

Json parse_json_arg(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

template <class T, class Dist>
Json witnessed_json(const Witnessed<T, Dist>& w) {
  Json witness = Json::array();
  for (const auto& x : w.witness) witness.push_back(show(x));
  return Json{{"value", dist_json(w.value)}, {"witness", std::move(witness)}};
}

template <class T, class Dist>
std::string witnessed_text(const Witnessed<T, Dist>& w) {
  std::string out = dist_text(w.value);
  for (const auto& x : w.witness) out += " " + show(x);
  return out;
}

template <class T, class Dist>
Output audit_output(const MeteredMagma<T, Dist>& m, const std::vector<Dist>& radii) {
  const auto r = audit(m, radii);
  Output o;
  Json modulus = Json::array();
  o.plain.push_back("sample " + r.descriptor + " (" + std::to_string(r.sample_size) + " elements)");
  o.plain.push_back("metric_violations " + std::to_string(r.metric_violations));
  o.plain.push_back("assoc " + witnessed_text(r.assoc));
  o.plain.push_back("unit " + witnessed_text(r.unit));
  o.plain.push_back("inverse " + witnessed_text(r.inverse));
  o.plain.push_back("abelian " + witnessed_text(r.abelian));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    modulus.push_back({{"r", dist_json(radii[i])},
                       {"left", witnessed_json(r.equi_left[i])},
                       {"right", witnessed_json(r.equi_right[i])}});
    o.plain.push_back("rho " + dist_text(radii[i]) + " " + dist_text(std::max(r.equi_left[i].value, r.equi_right[i].value)));
  }
  o.result = Json{{"descriptor", r.descriptor},
                  {"sample_size", r.sample_size},
                  {"metric_violations", r.metric_violations},
                  {"assoc", witnessed_json(r.assoc)},
                  {"unit", witnessed_json(r.unit)},
                  {"inverse", witnessed_json(r.inverse)},
                  {"abelian", witnessed_json(r.abelian)},
                  {"modulus", std::move(modulus)}};
  return o;
}

Json power_json(const PowerDistance& p) { return Json{{"k", p.k}, {"distance", p.distance}}; }

struct Options {
  int rank = 2;
  bool json = false;

  std::vector<std::string> words;
  bool certificate = false;
  bool oracle = false;
  std::size_t cap = 64;
  bool emit_geodesic = false;

  std::string spec;
  std::string rule;
  std::size_t radius = 4;
  long power = 64;
  std::optional<std::string> defect;

  std::int64_t k = 0;
  std::string set;
  std::vector<std::int64_t> exclude;
  std::int64_t window_n = 0;
  std::size_t window_m = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t q = 0;
  std::size_t steps = 0;

  std::string preset;
  std::size_t audit_radius = 3;

  std::string beta = kDefaultSlope.to_string();
  std::int64_t n = 1;
  std::size_t defect_bound = 0;
  std::size_t beam = 2000;
  std::optional<std::string> u;
};

std::string zlen_text(const std::optional<std::size_t>& len) { return len ? std::to_string(*len) : "unreached"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation with bi-invariant word metrics, quasimorphisms and coarse groups.", "bicoarse"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--rank", o.rank, "Rank of the free group (1..26)")->capture_default_str();
  app.add_flag("--json", o.json, "Emit a JSON envelope {cmd, rank, result, meta}");

  std::function<Output()> handler;
  std::string cmd;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Output()> fn) {
    sub->fallthrough();
    sub->callback([&, name, fn] {
      cmd = name;
      handler = fn;
    });
  };
  auto alphabet = [&] { return Alphabet(o.rank); };
  auto word = [&](std::size_t i) { return parse_reduced(o.words.at(i), alphabet()); };

  // norm / dist
  auto* norm = app.add_subcommand("norm", "Cancellation norm |w|_x");
  norm->add_option("word", o.words, "Word (need not be reduced)")->required()->expected(1);
  norm->add_flag("--certificate", o.certificate, "Emit the deletion/matching certificate");
  norm->add_flag("--oracle", o.oracle, "Cross-check with the exhaustive deletion oracle");
  bind(norm, "norm", [&] {
    const Word w = parse(o.words[0], alphabet());
    Output r;
    const std::size_t len = cancellation_length(w);
    r.result = Json{{"norm", len}};
    r.plain.push_back(std::to_string(len));
    if (o.certificate) {
      r.result["certificate"] = to_json(certificate(w));
      r.plain.push_back(r.result["certificate"].dump());
    }
    if (o.oracle) {
      const std::size_t bound = oracle_bound_from_env();
      const std::size_t check = cancellation_length_oracle(w, bound);
      r.result["oracle"] = check;
      r.meta["oracle_bound"] = bound;
      r.plain.push_back("oracle " + std::to_string(check));
    }
    return r;
  });

  auto* dist = app.add_subcommand("dist", "Bi-invariant distance d_x(w1, w2)");
  dist->add_option("words", o.words, "w1 w2")->required()->expected(2);
  dist->add_flag("--certificate", o.certificate, "Certificate for w1^-1 w2");
  bind(dist, "dist", [&] {
    const auto w1 = word(0);
    const auto w2 = word(1);
    Output r;
    const std::size_t d = cancellation_distance(w1, w2);
    r.result = Json{{"distance", d}};
    r.plain.push_back(std::to_string(d));
    if (o.certificate) {
      r.result["certificate"] = to_json(certificate(multiply(invert(w1), w2)));
      r.plain.push_back(r.result["certificate"].dump());
    }
    return r;
  });

  // moves
  auto* moves = app.add_subcommand("moves", "Move-graph distance by cancellation/addition moves");
  moves->add_option("words", o.words, "w1 w2")->required()->expected(2);
  moves->add_option("--cap", o.cap, "Search depth cap")->capture_default_str();
  moves->add_flag("--emit-geodesic", o.emit_geodesic, "Emit one geodesic move sequence");
  bind(moves, "moves", [&] {
    const auto w1 = word(0);
    const auto w2 = word(1);
    Output r;
    r.meta["cap"] = o.cap;
    if (o.emit_geodesic) {
      const MoveSequence seq = geodesic_moves(w1, w2, o.cap);
      r.result = Json{{"distance", seq.moves.size()}, {"geodesic", to_json(seq)}};
      r.plain.push_back(std::to_string(seq.moves.size()));
      for (const auto& step : r.result["geodesic"]["path"]) r.plain.push_back(step.get<std::string>());
    } else {
      const auto d = move_distance(w1, w2, o.cap);
      if (!d) throw Error(ErrorKind::Unreached, "no move path within cap " + std::to_string(o.cap));
      r.result = Json{{"distance", *d}};
      r.plain.push_back(std::to_string(*d));
    }
    return r;
  });

  // qm
  auto* qm = app.add_subcommand("qm", "Quasimorphisms: evaluation, defects, homogenization");
  qm->require_subcommand(1);
  auto qm_spec = [&] { return quasimorphism_from_json(parse_json_arg(o.spec), alphabet()); };
  auto* qm_eval = qm->add_subcommand("eval", "phi(w)");
  qm_eval->add_option("--spec", o.spec, "Quasimorphism JSON")->required();
  qm_eval->add_option("word", o.words)->required()->expected(1);
  bind(qm_eval, "qm eval", [&] {
    const auto v = evaluate(qm_spec(), word(0));
    Output r;
    r.result = Json{{"value", to_string(v)}};
    r.plain.push_back(to_string(v));
    return r;
  });
  auto* qm_defect = qm->add_subcommand("defect", "Defect over the reduced ball");
  qm_defect->add_option("--spec", o.spec, "Quasimorphism JSON")->required();
  qm_defect->add_option("--radius", o.radius, "Ball radius")->capture_default_str();
  bind(qm_defect, "qm defect", [&] {
    const auto d = defect_on_ball(qm_spec(), o.radius, alphabet());
    Output r;
    r.result = Json{{"defect", to_string(d.value)}, {"g", to_string(d.g)}, {"h", to_string(d.h)}};
    r.meta = Json{{"radius", o.radius}, {"max_ball_size", kMaxBallSize}, {"scope", "lower bound over the ball"}};
    r.plain.push_back(to_string(d.value));
    return r;
  });
  auto* qm_homog = qm->add_subcommand("homog", "phi(w^n)/n with error bound D/n");
  qm_homog->add_option("--spec", o.spec, "Quasimorphism JSON")->required();
  qm_homog->add_option("--n", o.power, "Power n")->capture_default_str();
  qm_homog->add_option("--defect", o.defect, "Defect bound D (default: radius-4 ball defect)");
  qm_homog->add_option("word", o.words)->required()->expected(1);
  bind(qm_homog, "qm homog", [&] {
    std::optional<Rational> d;
    if (o.defect) d = parse_rational(*o.defect);
    const auto h = homogenize(qm_spec(), word(0), o.power, d);
    Output r;
    r.result = Json{{"estimate", to_string(h.estimate)}, {"error_bound", to_string(h.error_bound)}};
    r.meta = Json{{"n", o.power}, {"defect", o.defect ? Json(*o.defect) : Json("radius-4 ball defect")}};
    r.plain.push_back(to_string(h.estimate));
    r.plain.push_back(to_string(h.error_bound));
    return r;
  });
  auto* qm_modulus = qm->add_subcommand("modulus", "Controlledness modulus rho(r) on the ball");
  qm_modulus->add_option("--spec", o.spec, "Quasimorphism JSON")->required();
  qm_modulus->add_option("--radius", o.radius, "Ball radius")->capture_default_str();
  bind(qm_modulus, "qm modulus", [&] {
    const auto rho = controlledness_modulus(qm_spec(), o.radius, alphabet());
    Output r;
    r.result = Json::array();
    for (std::size_t i = 0; i < rho.size(); ++i) {
      r.result.push_back({{"r", i}, {"rho", to_string(rho[i])}});
      r.plain.push_back(std::to_string(i) + " " + to_string(rho[i]));
    }
    r.meta = Json{{"radius", o.radius}, {"max_ball_size", kMaxBallSize}};
    return r;
  });

  // hs
  auto* hs = app.add_subcommand("hs", "Word maps: replacement, wobbling, local rules");
  hs->require_subcommand(1);
  auto hs_cmd = [&](const char* name, std::function<ReducedWord(const Json&, const ReducedWord&)> apply) {
    auto* sub = hs->add_subcommand(name, std::string(name) + " map");
    sub->add_option("--rule", o.rule, "Rule JSON")->required();
    sub->add_option("word", o.words)->required()->expected(1);
    bind(sub, std::string("hs ") + name, [&, apply] {
      const ReducedWord image = apply(parse_json_arg(o.rule), word(0));
      Output r;
      r.result = Json{{"image", to_string(image)}};
      r.plain.push_back(to_string(image));
      return r;
    });
  };
  hs_cmd("replace", [&](const Json& j, const ReducedWord& g) {
    return replacement_apply(replacement_rule_from_json(j, alphabet()), g);
  });
  hs_cmd("wobble", [&](const Json& j, const ReducedWord& g) { return wobbling_apply(wobble_from_json(j, alphabet()), g); });
  hs_cmd("local", [&](const Json& j, const ReducedWord& g) { return local_apply(local_rule_from_json(j, alphabet()), g); });

  // z
  auto* z = app.add_subcommand("z", "Word metrics on the integers");
  z->require_subcommand(1);
  auto gen_set = [&] {
    ZGenSet s = parse_set(o.set);
    if (!o.exclude.empty()) s = s.excluding({o.exclude.begin(), o.exclude.end()});
    return s;
  };
  auto* z_len = z->add_subcommand("len", "|k|_S");
  z_len->add_option("k", o.k)->required();
  z_len->add_option("--set", o.set, "factorials:N | powers:B:E | primes:N | list:a,b,...")->required();
  z_len->add_option("--exclude", o.exclude, "Values removed from S")->delimiter(',');
  z_len->add_option("--cap", o.cap, "Length cap")->capture_default_str();
  bind(z_len, "z len", [&] {
    const ZGenSet s = gen_set();
    const auto len = z_word_length(o.k, s, o.cap);
    Output r;
    r.result = Json{{"length", len ? Json(*len) : Json(nullptr)}};
    r.meta = Json{{"set", s.describe()}, {"cap", o.cap}};
    r.plain.push_back(zlen_text(len));
    return r;
  });
  auto* z_window = z->add_subcommand("window", "Check |k|_S <= m for 1 <= k <= N");
  z_window->add_option("--set", o.set, "Generating set")->required();
  z_window->add_option("--exclude", o.exclude, "Values removed from S")->delimiter(',');
  z_window->add_option("--n", o.window_n, "Window end N")->required();
  z_window->add_option("--m", o.window_m, "Diameter bound m")->required();
  bind(z_window, "z window", [&] {
    const ZGenSet s = gen_set();
    const auto rep = window_diameter(s, o.window_n, o.window_m);
    Output r;
    r.result = Json{{"ok", rep.ok}, {"failures", rep.failures}, {"histogram", rep.histogram}};
    r.meta = Json{{"set", s.describe()}, {"N", o.window_n}, {"m", o.window_m}};
    r.plain.push_back(rep.ok ? "ok" : "fail");
    std::string fails = "failures";
    for (auto f : rep.failures) fails += " " + std::to_string(f);
    r.plain.push_back(fails);
    return r;
  });
  auto* z_prof = z->add_subcommand("profinite", "Witness sequence converging in the pro-Q topology");
  z_prof->add_option("--Q", o.primes, "Primes of Q")->required()->delimiter(',');
  z_prof->add_option("--q", o.q, "Prime q outside Q")->required();
  z_prof->add_option("--steps", o.steps, "Number of terms")->required();
  bind(z_prof, "z profinite", [&] {
    const auto w = profinite_witness(o.primes, o.q, o.steps);
    const auto checks = verify_witness(w);
    Output r;
    r.result = to_json(w);
    Json check_json = Json::array();
    bool all = true;
    for (const auto& c : checks) {
      check_json.push_back({{"name", c.name}, {"route", c.route}, {"ok", c.ok}});
      all = all && c.ok;
    }
    r.result["checks"] = std::move(check_json);
    r.result["verified"] = all;
    r.meta = Json{{"materialize_bits", kMaterializeBits}};
    for (const auto& step : r.result["steps"]) {
      std::string line = "k" + std::to_string(step["n"].get<std::size_t>()) + " ";
      if (step["k"].is_null()) {
        std::string f;
        for (const auto& [p, e] : step["k_factorization"].items()) f += (f.empty() ? "" : "*") + p + "^" + e.get<std::string>();
        line += f;
      } else {
        line += step["k"].get<std::string>();
      }
      r.plain.push_back(line);
    }
    for (const auto& c : checks) r.plain.push_back((c.ok ? "PASS " : "FAIL ") + c.name + " [" + c.route + "]");
    return r;
  });

  // audit
  auto* aud = app.add_subcommand("audit", "Sample audit of the coarse-group axioms");
  aud->add_option("--preset", o.preset, "f2-cancel | z2-euclid | perturbed")
      ->required()
      ->check(CLI::IsMember({"f2-cancel", "z2-euclid", "perturbed"}));
  aud->add_option("--radius", o.audit_radius, "Sample radius")->capture_default_str();
  bind(aud, "audit", [&]() -> Output {
    Output r;
    if (o.preset == "f2-cancel") {
      std::vector<std::size_t> radii;
      for (std::size_t i = 1; i <= o.audit_radius; ++i) radii.push_back(i);
      r = audit_output(f2_cancel_magma(o.audit_radius, alphabet()), radii);
    } else if (o.preset == "perturbed") {
      std::vector<std::int64_t> radii;
      for (std::size_t i = 1; i <= o.audit_radius; ++i) radii.push_back(static_cast<std::int64_t>(i));
      r = audit_output(perturbed_z_magma(static_cast<std::int64_t>(o.audit_radius)), radii);
    } else {
      std::vector<double> radii;
      for (std::size_t i = 1; i <= o.audit_radius; ++i) radii.push_back(static_cast<double>(i));
      r = audit_output(z2_euclid_magma(static_cast<std::int64_t>(o.audit_radius)), radii);
    }
    r.meta = Json{{"preset", o.preset}, {"radius", o.audit_radius}, {"scope", "suprema over the sample"}};
    return r;
  });

  // lab
  auto* lab = app.add_subcommand("lab", "Probes around the irrational-slope strip");
  lab->require_subcommand(1);
  lab->add_option("--beta", o.beta, "Rational slope p/q > 1")->capture_default_str();
  auto slope_meta = [&](const Slope& s) {
    return Json{{"beta", s.to_string()}, {"valid_for_n_at_most", s.denominator()}};
  };
  auto* lab_u = lab->add_subcommand("u", "u_n = a^floor(n beta) b^n");
  lab_u->add_option("n", o.n)->required();
  bind(lab_u, "lab u", [&] {
    const Slope s = Slope::parse(o.beta);
    const auto u = u_word(o.n, s);
    Output r;
    r.result = Json{{"u", to_string(u)}};
    r.meta = slope_meta(s);
    r.plain.push_back(to_string(u));
    return r;
  });
  auto* lab_phi = lab->add_subcommand("phi", "phi(w) and strip membership");
  lab_phi->add_option("word", o.words)->required()->expected(1);
  bind(lab_phi, "lab phi", [&] {
    const Slope s = Slope::parse(o.beta);
    const auto w = word(0);
    Output r;
    const bool strip = in_strip(w, s);
    r.result = Json{{"phi", to_string(phi(w, s))}, {"in_strip", strip}};
    r.meta = slope_meta(s);
    r.plain.push_back(to_string(phi(w, s)));
    r.plain.push_back(strip ? "true" : "false");
    return r;
  });
  auto* lab_defect = lab->add_subcommand("defect", "d_x(uW, Wu) and the nearest power of u");
  lab_defect->add_option("words", o.words, "u W")->required()->expected(2);
  lab_defect->add_option("--kmax", o.power, "Power scan bound")->capture_default_str();
  bind(lab_defect, "lab defect", [&] {
    const auto u = word(0);
    const auto w = word(1);
    const auto d = commutation_defect(u, w);
    const auto p = distance_to_powers(w, u, o.power);
    Output r;
    r.result = Json{{"defect", d}, {"nearest_power", power_json(p)}};
    r.meta = Json{{"kmax", o.power}};
    r.plain.push_back(std::to_string(d));
    r.plain.push_back(std::to_string(p.k) + " " + std::to_string(p.distance));
    return r;
  });
  auto* lab_search = lab->add_subcommand("search", "All W with d_x(uW, Wu) <= D within a length cap");
  lab_search->add_option("n", o.n, "Use u = u_n")->capture_default_str();
  lab_search->add_option("--u", o.u, "Explicit u instead of u_n");
  lab_search->add_option("--D", o.defect_bound, "Defect bound")->capture_default_str();
  std::size_t length_cap = 6;
  lab_search->add_option("--length-cap", length_cap, "Length cap on W")->capture_default_str();
  lab_search->add_option("--beam", o.beam, "Beam width beyond the exhaustive cap")->capture_default_str();
  bind(lab_search, "lab search", [&] {
    const Slope s = Slope::parse(o.beta);
    const ReducedWord u = o.u ? parse_reduced(*o.u, Alphabet(2)) : u_word(o.n, s);
    const auto res = almost_commuting_search(u, SearchOptions{o.defect_bound, length_cap, o.beam});
    Output r;
    r.meta = slope_meta(s);
    r.meta["u"] = to_string(u);
    r.meta["D"] = o.defect_bound;
    r.meta["length_cap"] = length_cap;
    r.meta["exhaustive"] = res.exhaustive;
    r.meta["beam_width"] = res.beam_width;
    r.records.emplace();
    for (const auto& rec : res.records) {
      Json j{{"W", to_string(rec.word)}, {"defect", rec.defect}, {"nearest_power", power_json(rec.nearest_power)}};
      r.records->emplace_back(std::move(j), to_string(rec.word) + " " + std::to_string(rec.defect) + " " +
                                                 std::to_string(rec.nearest_power.k) + " " +
                                                 std::to_string(rec.nearest_power.distance));
    }
    return r;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Alphabet checked(o.rank);
    (void)checked;
    const Output r = handler();
    if (r.records) {
      for (const auto& [j, line] : *r.records) {
        if (o.json) {
          out << Json{{"cmd", cmd}, {"rank", o.rank}, {"result", j}, {"meta", r.meta}}.dump() << '\n';
        } else {
          out << line << '\n';
        }
      }
    } else if (o.json) {
      out << Json{{"cmd", cmd}, {"rank", o.rank}, {"result", r.result}, {"meta", r.meta}}.dump() << '\n';
    } else {
      for (const auto& line : r.plain) out << line << '\n';
    }
    return kExitOk;
  } catch (const InvalidCharacterError& e) {
    if (o.json) {
      out << Json{{"cmd", cmd},
                  {"rank", o.rank},
                  {"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}, {"position", e.position()}}}}
                 .dump()
          << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const Error& e) {
    if (o.json) {
      out << Json{{"cmd", cmd}, {"rank", o.rank}, {"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}}
                 .dump()
          << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace bicoarse
