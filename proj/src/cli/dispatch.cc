// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "milnor/cli/dispatch.h"

#include <openssl/evp.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "milnor/arrangement/arrangement.h"
#include "milnor/cli/acceptance.h"
#include "milnor/fpgroups/arrangement_group.h"
#include "milnor/fpgroups/schreier.h"
#include "milnor/fpgroups/sweep.h"
#include "milnor/jumploci/jumploci.h"
#include "milnor/milnor/milnor.h"
#include "milnor/multinet/multinet.h"
#include "milnor/parallel/parallel.h"

namespace milnor {

namespace {

constexpr const char* kSchema = "milnor-report/1";

// Malformed or inconsistent user input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

struct Options {
  std::string arrangement, net, strat, presentation, chi, mult, hyperplane, out, fixtures;
  long order = 0, characteristic = 0, prime = 0, r = 0, r_cap = 30, max_n = 0, integral_cap = 5000;
  std::size_t degree = 1;
  bool affine = false, integral = false, forbid_two = false, exhaustive = false;
};

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    inputs_[path] = sha256_hex(ss.str());
    try {
      return nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  Arrangement arrangement() {
    if (o_.arrangement.empty()) throw InputError("an arrangement (-a) is required");
    return arrangement_from_json(read_json(o_.arrangement));
  }

  std::vector<long> multiplicities(const Arrangement& a) {
    std::vector<long> m;
    if (o_.mult.empty()) {
      nlohmann::json j = read_json(o_.arrangement);
      if (!j.contains("m")) throw InputError("multiplicities (-m) are required");
      m = multiplicities_from_json(j);
    } else if (std::filesystem::exists(o_.mult)) {
      m = multiplicities_from_json(read_json(o_.mult));
    } else {
      m = parse_list(o_.mult);
    }
    if (m.size() != a.size()) throw InputError("need one multiplicity per hyperplane");
    return m;
  }

  Character character(std::size_t n) {
    if (o_.chi.empty()) throw InputError("a character (--chi) is required");
    Character c;
    if (std::filesystem::exists(o_.chi)) {
      c = character_from_json(read_json(o_.chi));
      if (o_.order > 0) c.order = o_.order;
    } else {
      if (o_.order <= 0) throw InputError("--order is required with an inline character");
      c = Character{o_.order, parse_list(o_.chi)};
    }
    if (c.exponents.size() != n)
      throw InputError("character has " + std::to_string(c.exponents.size()) + " entries, expected " +
                       std::to_string(n));
    return c.canonical();
  }

  std::size_t hyperplane(const Arrangement& a, const std::optional<std::string>& fallback) {
    std::string h = o_.hyperplane.empty() ? fallback.value_or("") : o_.hyperplane;
    if (h.empty()) throw InputError("a distinguished hyperplane (--hyperplane) is required");
    if (auto i = a.find_label(h)) return *i;
    try {
      std::size_t pos = 0;
      long v = std::stol(h, &pos);
      if (pos == h.size() && v >= 0 && static_cast<std::size_t>(v) < a.size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError("unknown hyperplane " + h);
  }

  JumpSource source() {
    int given = !o_.arrangement.empty() + !o_.strat.empty() + !o_.presentation.empty();
    if (given != 1) throw InputError("give exactly one of -a, --strat, --presentation");
    if (!o_.strat.empty()) {
      // A stratification file lists the components someone found, nothing more.
      if (o_.characteristic > 0)
        warn("stratification may be incomplete in characteristic " + std::to_string(o_.characteristic) +
             "; dimensions are lower bounds");
      return JumpSource::stratified(stratification_from_json(read_json(o_.strat)));
    }
    if (!o_.presentation.empty()) return JumpSource::fox(presentation_from_json(read_json(o_.presentation)));
    return JumpSource::arrangement(arrangement());
  }

  void warn(const std::string& w) { warnings_.push_back(w); }
  const std::map<std::string, std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  static std::vector<long> parse_list(const std::string& s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t pos = 0;
        v.push_back(std::stol(tok, &pos));
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("not an integer list: " + s);
      }
    }
    if (v.empty()) throw InputError("empty list");
    return v;
  }

 private:
  const Options& o_;
  std::map<std::string, std::string> inputs_;
  std::vector<std::string> warnings_;
};

nlohmann::json poly_json(const IntPoly& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const Int& c : p) j.push_back(c.get_str());
  return j;
}

nlohmann::json group_json(const AbelianGroup& g) {
  nlohmann::json t = nlohmann::json::array();
  for (const Int& x : g.torsion) t.push_back(x.get_str());
  return {{"rank", g.rank}, {"torsion", t}, {"text", to_string(g)}};
}

using Handler = std::function<nlohmann::json(Session&)>;

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Torsion in Milnor fiber homology of (multi)arrangements", "milnor"};
  app.require_subcommand(1);
  std::string command;
  Handler handler;
  int selftest_status = kExitOk;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->callback([&, parent, s, h] {
      command = (parent == &app ? "" : parent->get_name() + " ") + s->get_name();
      handler = h;
    });
    s->add_option("--out", o.out, "write the report to a file");
    return s;
  };
  auto arr_opt = [&](CLI::App* s) { s->add_option("-a,--arrangement", o.arrangement, "arrangement file"); };
  auto mult_opt = [&](CLI::App* s) {
    s->add_option("-m,--multiplicities", o.mult, "multiplicity file or comma list");
  };
  auto chi_opt = [&](CLI::App* s) {
    s->add_option("--chi", o.chi, "character file or comma list of exponents");
    s->add_option("--order", o.order, "order of an inline character");
  };

  // arr
  CLI::App* arr = app.add_subcommand("arr", "arrangement utilities");
  arr->require_subcommand(1);
  arr_opt(leaf(arr, "validate", "parse and summarize", [](Session& s) {
    Arrangement a = s.arrangement();
    return nlohmann::json{{"hyperplanes", a.size()},  {"dim", a.dim()},
                          {"rank", a.rank()},         {"rational", a.is_rational()},
                          {"field_order", a.field_order()}, {"labels", a.labels()}};
  }));
  arr_opt(leaf(arr, "flats", "rank-2 flats", [](Session& s) {
    Arrangement a = s.arrangement();
    nlohmann::json fl = nlohmann::json::array();
    for (const auto& f : rank2_flats(a)) {
      nlohmann::json labels = nlohmann::json::array();
      for (auto h : f.hyperplanes) labels.push_back(a.labels()[h]);
      fl.push_back({{"hyperplanes", f.hyperplanes}, {"labels", labels}, {"multiplicity", f.hyperplanes.size()}});
    }
    return nlohmann::json{{"flats", fl}};
  }));
  arr_opt(leaf(arr, "poincare", "Poincare polynomial of the projective complement", [](Session& s) {
    IntPoly p = os_poincare_rank3(s.arrangement());
    return nlohmann::json{{"coefficients", poly_json(p)}, {"text", poly_to_string(p, "x")}};
  }));

  // multinet
  CLI::App* mn = app.add_subcommand("multinet", "multinet checks");
  mn->require_subcommand(1);
  auto net_opts = [&](CLI::App* s) {
    arr_opt(s);
    s->add_option("-n,--net", o.net, "multinet file")->required();
    s->add_option("--hyperplane", o.hyperplane, "distinguished hyperplane (label or index)");
  };
  net_opts(leaf(mn, "verify", "verify the multinet axioms and pointedness", [&](Session& s) {
    Arrangement a = s.arrangement();
    Multinet m = multinet_from_json(s.read_json(o.net), a);
    MultinetReport rep = verify_multinet(a, m);
    nlohmann::json j = to_json(rep);
    for (const auto& w : rep.warnings) s.warn(w);
    std::optional<std::string> fallback;
    if (m.pointed) fallback = std::to_string(*m.pointed);
    if (!o.hyperplane.empty() || m.pointed) {
      std::size_t h = s.hyperplane(a, fallback);
      PointedReport pr = verify_pointed(a, m, h);
      j["pointed"] = {{"hyperplane", a.labels()[h]},
                      {"valid", pr.pointed.has_value()},
                      {"violations", pr.violations}};
    }
    return j;
  }));
  net_opts(leaf(mn, "pencil", "small-pencil certificate on the deletion", [&](Session& s) {
    Arrangement a = s.arrangement();
    Multinet m = multinet_from_json(s.read_json(o.net), a);
    std::optional<std::string> fallback;
    if (m.pointed) fallback = std::to_string(*m.pointed);
    std::size_t h = s.hyperplane(a, fallback);
    PointedReport pr = verify_pointed(a, m, h);
    if (!pr.pointed) throw InputError("not a pointed multinet at " + a.labels()[h]);
    return to_json(deletion_pencil_certificate(a, *pr.pointed));
  }));

  // polarize
  {
    CLI::App* s = leaf(&app, "polarize", "polarization A||m", [&](Session& s) {
      Arrangement a = s.arrangement();
      return to_json(polarize(a, s.multiplicities(a)), true);
    });
    arr_opt(s);
    mult_opt(s);
  }

  // present
  CLI::App* pr = app.add_subcommand("present", "fundamental group presentations");
  pr->require_subcommand(1);
  {
    CLI::App* s = leaf(pr, "sweep", "braid monodromy presentation of a real line arrangement", [&](Session& s) {
      Arrangement a = s.arrangement();
      if (!a.is_rational()) throw InputError("sweep needs an arrangement defined over Q");
      Presentation p = sweep_presentation(a, !o.affine);
      return nlohmann::json{{"presentation", to_json(p)},
                            {"projective", !o.affine},
                            {"abelianization", to_string(abelianization(p))}};
    });
    arr_opt(s);
    s->add_flag("--affine", o.affine, "omit the projective relation");
  }

  // cover
  CLI::App* cv = app.add_subcommand("cover", "homology of finite cyclic covers");
  cv->require_subcommand(1);
  auto cover_opts = [&](CLI::App* s) {
    arr_opt(s);
    s->add_option("--strat", o.strat, "stratification file");
    s->add_option("--presentation", o.presentation, "presentation file");
    chi_opt(s);
    s->add_option("--char", o.characteristic, "characteristic (0 or a prime)");
    s->add_option("--degree", o.degree, "homological degree");
    s->add_flag("--exhaustive", o.exhaustive, "evaluate every character");
  };
  {
    CLI::App* s = leaf(cv, "h1", "dimension of H_q of the cover", [&](Session& s) {
      JumpSource src = s.source();
      Character chi = s.character(src.ambient());
      nlohmann::json j{{"degree", o.degree},
                       {"characteristic", o.characteristic},
                       {"order", chi.order},
                       {"dimension", cover_homology(src, chi, o.characteristic, o.degree, {o.exhaustive})}};
      if (o.integral) {
        if (o.degree != 1) throw InputError("--integral is only available in degree 1");
        if (!o.strat.empty()) throw InputError("--integral needs a presentation or an arrangement");
        if (src.group()) {
          j["integral"] = group_json(integral_h1_kernel(src.group()->presentation(), src.group()->transport(chi)));
        } else {
          j["integral"] = group_json(integral_h1_kernel(presentation_from_json(s.read_json(o.presentation)), chi));
        }
      }
      if (src.euler_completed() && o.degree == 2) s.warn("degree 2 is Euler-completed");
      return j;
    });
    cover_opts(s);
    s->add_flag("--integral", o.integral, "also compute H_1 of the cover over Z");
  }
  cover_opts(leaf(cv, "charpoly", "characteristic polynomial of the monodromy", [&](Session& s) {
    JumpSource src = s.source();
    Character chi = s.character(src.ambient());
    return to_json(monodromy_charpoly(src, chi, o.characteristic, o.degree, {o.exhaustive}));
  }));
  cover_opts(leaf(cv, "delta", "twisted Poincare generating polynomial", [&](Session& s) {
    JumpSource src = s.source();
    Character chi = s.character(src.ambient());
    UPoly u = delta_u_poly(src, chi, o.characteristic, {o.exhaustive});
    nlohmann::json j = to_json(u);
    j["specialized"] = poly_json(u.specialize());
    j["euler_completed"] = src.euler_completed();
    return j;
  }));

  // milnor
  CLI::App* mi = app.add_subcommand("milnor", "Milnor fiber covers");
  mi->require_subcommand(1);
  {
    CLI::App* s = leaf(mi, "character", "the classifying character of F(A, m)", [&](Session& s) {
      Arrangement a = s.arrangement();
      MilnorSpec spec = milnor_character(a, s.multiplicities(a));
      if (spec.gcd_warning) s.warn("gcd of the multiplicities exceeds 1");
      return to_json(spec);
    });
    arr_opt(s);
    mult_opt(s);
  }
  {
    CLI::App* s = leaf(mi, "recognize", "is the cover a Milnor fiber?", [&](Session& s) {
      Arrangement a = s.arrangement();
      auto m = recognize_milnor_cover(a, s.character(a.size()));
      nlohmann::json j{{"recognized", m.has_value()}};
      if (m) j["m"] = *m;
      return j;
    });
    arr_opt(s);
    chi_opt(s);
  }
  {
    CLI::App* s = leaf(mi, "find-m", "least multiplicities whose Milnor fiber covers U^chi", [&](Session& s) {
      Arrangement a = s.arrangement();
      auto c = find_multiplicities(a, s.character(a.size()), o.prime, {o.forbid_two, o.max_n});
      return nlohmann::json{{"m", c.m}, {"N", c.N}, {"k", c.k}};
    });
    arr_opt(s);
    chi_opt(s);
    s->add_option("--prime", o.prime, "prime not dividing N")->required();
    s->add_flag("--forbid-two", o.forbid_two, "avoid multiplicity 2");
    s->add_option("--max-n", o.max_n, "cap on N");
  }
  {
    CLI::App* s = leaf(mi, "pipeline", "torsion certificate from a pointed multinet", [&](Session& s) {
      Arrangement a = s.arrangement();
      Multinet m = multinet_from_json(s.read_json(o.net), a);
      std::optional<std::string> fallback;
      if (m.pointed) fallback = std::to_string(*m.pointed);
      std::size_t h = s.hyperplane(a, fallback);
      PointedReport prep = verify_pointed(a, m, h);
      if (!prep.pointed) throw InputError("not a pointed multinet at " + a.labels()[h]);
      PipelineOptions po;
      if (o.prime) po.prime = o.prime;
      if (o.r) po.r = o.r;
      po.r_cap = o.r_cap;
      po.forbid_two = o.forbid_two;
      po.integral = o.integral;
      po.integral_cap = o.integral_cap;
      PipelineResult res = multinet_torsion_pipeline(a, *prep.pointed, po);
      if (o.integral && !res.certificate.integral) s.warn("integral confirmation skipped: above the size cap");
      return nlohmann::json{{"certificate", to_json(res.certificate)},
                            {"r", res.r},
                            {"chi", to_json(res.chi)},
                            {"m", res.choice.m},
                            {"N", res.choice.N}};
    });
    arr_opt(s);
    s->add_option("-n,--net", o.net, "multinet file")->required();
    s->add_option("--hyperplane", o.hyperplane, "distinguished hyperplane (label or index)");
    s->add_option("--prime", o.prime, "prime dividing m_H (default: least)");
    s->add_option("--r", o.r, "order of the cover (default: least admissible)");
    s->add_option("--r-cap", o.r_cap, "largest r tried");
    s->add_flag("--forbid-two", o.forbid_two, "avoid multiplicity 2");
    s->add_flag("--integral", o.integral, "confirm over Z when small enough");
    s->add_option("--integral-cap", o.integral_cap, "N * generators cap for --integral");
  }
  {
    CLI::App* s = leaf(mi, "polar-torsion", "torsion in the Milnor fiber of A||m", [&](Session& s) {
      Arrangement a = s.arrangement();
      return to_json(polarization_torsion(a, s.multiplicities(a), o.prime));
    });
    arr_opt(s);
    mult_opt(s);
    s->add_option("--prime", o.prime, "prime")->required();
  }
  {
    CLI::App* s = leaf(mi, "delta", "monodromy of F(A||m) in one degree", [&](Session& s) {
      Arrangement a = s.arrangement();
      PolarDelta d = polarized_delta(a, s.multiplicities(a), o.characteristic);
      return nlohmann::json{{"degree", o.degree},
                            {"characteristic", o.characteristic},
                            {"hyperplanes", d.polarization.result.size()},
                            {"charpoly", to_json(d.charpoly(o.degree))},
                            {"delta", to_json(d.delta)}};
    });
    arr_opt(s);
    mult_opt(s);
    s->add_option("--char", o.characteristic, "characteristic (0 or a prime)");
    s->add_option("--degree", o.degree, "homological degree");
  }

  // selftest
  CLI::App* st = app.add_subcommand("selftest", "built-in checks");
  st->require_subcommand(1);
  {
    CLI::App* s = leaf(st, "fixtures", "run the acceptance checks on the shipped fixtures", [&](Session&) {
      nlohmann::json crit = nlohmann::json::array();
      bool ok = true;
      for (const auto& r : run_acceptance(o.fixtures.empty() ? MILNOR_FIXTURE_DIR : o.fixtures)) {
        crit.push_back(to_json(r));
        ok = ok && r.pass;
      }
      if (!ok) selftest_status = kExitInternal;
      return nlohmann::json{{"criteria", crit}, {"all_pass", ok}};
    });
    s->add_option("--fixtures", o.fixtures, "fixture directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInput;
  }

  Session session(o);
  const auto t0 = std::chrono::steady_clock::now();
  nlohmann::json results;
  try {
    results = handler(session);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());

  nlohmann::json args = nlohmann::json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  nlohmann::json report{{"schema", kSchema},
                        {"command", command},
                        {"argv", args},
                        {"inputs", session.inputs()},
                        {"results", results},
                        {"warnings", session.warnings()},
                        {"timing", {{"milliseconds", ms}}}};
  if (o.out.empty()) {
    out << report.dump(2) << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "input error: cannot write " << o.out << "\n";
      return kExitInput;
    }
    f << report.dump(2) << "\n";
  }
  return selftest_status;
}

}  // namespace milnor
