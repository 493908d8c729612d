#include "mukai_lab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mukai_lab/donaldson.hpp"
#include "mukai_lab/json_io.hpp"
#include "mukai_lab/theta.hpp"
#include "mukai_lab/verify.hpp"

namespace mukai_lab::cli {

namespace {

Rat parse_rat(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    fail(Err::bad_input, "malformed rational '" + text + "'");
  q.canonicalize();
  return q;
}

Polarization parse_polarization(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(Err::bad_input, "polarization must be 'a,b'");
  try {
    return Polarization{Int(text.substr(0, comma)), Int(text.substr(comma + 1))};
  } catch (const std::invalid_argument&) {
    fail(Err::bad_input, "polarization must be 'a,b' with integer entries");
  }
}

json parse_json_arg(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Err::bad_input, "malformed JSON argument");
  return j;
}

SurfaceModel load_surface(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv("MUKAI_LAB_SURFACE")) path = env;
  }
  if (path.empty()) return SurfaceModel::elliptic_k3();
  std::ifstream in(path);
  if (!in) fail(Err::bad_input, "cannot open surface file '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Err::bad_input, "malformed surface JSON");
  return surface_from_json(j);
}

std::string dump(const json& j) { return j.dump(); }

void print_walls(std::ostream& out, const std::vector<WallClass>& walls,
                 bool as_json) {
  if (as_json) {
    json a = json::array();
    for (const WallClass& w : walls) a.push_back(to_json(w));
    out << dump(a) << "\n";
    return;
  }
  for (const WallClass& w : walls)
    out << w.x << "*Sigma + " << w.y << "*C   L^2 = " << w.l_squared << "\n";
  out << walls.size() << " wall(s)\n";
}

std::string signature_string(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += (v > 0 ? '+' : '-');
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact lattice computations for moduli of sheaves on K3 "
               "surfaces"};
  app.require_subcommand(1);

  std::string surface_path;
  bool as_json = false;
  app.add_option("--surface", surface_path,
                 "surface model JSON file (default: built-in elliptic-k3; "
                 "MUKAI_LAB_SURFACE is used when the flag is absent)");
  app.add_flag("--json", as_json, "machine-readable output");

  long r = 0, n = 0, r_max = 8, n_max = 10;
  std::string k_text, h_text, h0_text, h1_text;
  std::string alpha_text, beta_text, gamma_text, v_text, plot_path;
  bool family = false;

  CLI::App* cmd_pair = app.add_subcommand("pair", "Mukai pairing <alpha, beta>");
  cmd_pair->add_option("--alpha", alpha_text, "Mukai element JSON")->required();
  cmd_pair->add_option("--beta", beta_text, "Mukai element JSON")->required();

  CLI::App* cmd_dim = app.add_subcommand("dim", "dim M_v for v = v_r(r, n)");
  cmd_dim->add_option("--r", r, "rank")->required();
  cmd_dim->add_option("--n", n, "half-dimension")->required();

  CLI::App* cmd_vr = app.add_subcommand("vr", "canonical Mukai vector v_r");
  cmd_vr->add_option("--r", r, "rank")->required();
  cmd_vr->add_option("--n", n, "half-dimension")->required();

  CLI::App* cmd_norm =
      app.add_subcommand("normalize", "equivalent vector with chi = 1");
  cmd_norm->add_option("--v", v_text, "Mukai element JSON")->required();

  CLI::App* cmd_walls = app.add_subcommand("walls", "k-walls meeting the cone");
  cmd_walls->add_option("--k", k_text, "positive rational bound")->required();
  cmd_walls->add_option("--plot", plot_path, "write an SVG of the wall rays");

  CLI::App* cmd_suit = app.add_subcommand("suitable", "k-suitability of H");
  cmd_suit->add_option("--H", h_text, "polarization a,b")->required();
  cmd_suit->add_option("--k", k_text, "positive rational bound")->required();

  CLI::App* cmd_chamber = app.add_subcommand("chamber", "chamber signature");
  cmd_chamber->add_option("--H", h_text, "polarization a,b")->required();
  cmd_chamber->add_option("--k", k_text, "positive rational bound")->required();

  CLI::App* cmd_sep = app.add_subcommand("separate", "walls separating H0, H1");
  cmd_sep->add_option("--H0", h0_text, "polarization a,b")->required();
  cmd_sep->add_option("--H1", h1_text, "polarization a,b")->required();
  cmd_sep->add_option("--k", k_text, "positive rational bound")->required();

  CLI::App* cmd_theta = app.add_subcommand("theta", "theta_{F^r}(alpha)");
  cmd_theta->add_option("--r", r, "rank")->required();
  cmd_theta->add_option("--n", n, "half-dimension")->required();
  cmd_theta->add_option("--alpha", alpha_text, "Mukai element JSON")->required();
  cmd_theta->add_flag("--family", family,
                      "rank two: use the family formula (any alpha) instead "
                      "of the reduced map on v_2-perp");

  CLI::App* cmd_vt = app.add_subcommand("verify-theta", "isometry reports");
  cmd_vt->add_option("--r-max", r_max, "largest rank (default 8)");
  cmd_vt->add_option("--n-max", n_max, "largest n (default 10)");

  CLI::App* cmd_beau = app.add_subcommand("beauville", "Beauville pairing");
  cmd_beau->add_option("--n", n, "number of points")->required();
  cmd_beau->add_option("--beta", beta_text, "Hilbert class JSON")->required();
  cmd_beau->add_option("--gamma", gamma_text, "Hilbert class JSON")->required();

  CLI::App* cmd_fuj = app.add_subcommand("fujiki", "Fujiki constant of S^[n]");
  cmd_fuj->add_option("--n", n, "number of points")->required();

  CLI::App* cmd_don =
      app.add_subcommand("donaldson", "q_v(alpha) for v = v_r(r, n)");
  cmd_don->add_option("--r", r, "rank")->required();
  cmd_don->add_option("--n", n, "half-dimension")->required();
  cmd_don->add_option("--alpha", alpha_text, "H^2 class JSON")->required();

  CLI::App* cmd_check =
      app.add_subcommand("check-all", "run the full invariant suite");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    SurfaceModel s = load_surface(surface_path);
    s.validate();

    if (*cmd_pair) {
      MukaiElement a = mukai_element_from_json(s, parse_json_arg(alpha_text));
      MukaiElement b = mukai_element_from_json(s, parse_json_arg(beta_text));
      out << mukai_pairing(s, a, b) << "\n";
    } else if (*cmd_dim) {
      out << dim_moduli(s, canonical_vr(s, r, n)) << "\n";
    } else if (*cmd_vr) {
      out << dump(to_json(canonical_vr(s, r, n))) << "\n";
    } else if (*cmd_norm) {
      MukaiElement v = mukai_element_from_json(s, parse_json_arg(v_text));
      out << dump(to_json(normalize(s, v))) << "\n";
    } else if (*cmd_walls) {
      Rat k = parse_rat(k_text);
      auto walls = enumerate_walls(s, k);
      if (!plot_path.empty()) {
        std::ofstream svg(plot_path);
        if (!svg) fail(Err::bad_input, "cannot write '" + plot_path + "'");
        svg << walls_svg(walls, k);
      }
      print_walls(out, walls, as_json);
    } else if (*cmd_suit) {
      Polarization h = parse_polarization(h_text);
      Rat k = parse_rat(k_text);
      bool generic = is_k_generic(s, h, k);
      bool suitable = is_k_suitable(s, h, k);
      bool criterion = suitable_by_criterion(h, k);
      if (as_json) {
        out << dump(json{{"generic", generic},
                         {"suitable", suitable},
                         {"by_criterion", criterion}})
            << "\n";
      } else {
        out << "k-generic:    " << (generic ? "yes" : "no") << "\n"
            << "k-suitable:   " << (suitable ? "yes" : "no") << "\n"
            << "b/a >= k+1:   " << (criterion ? "yes" : "no") << "\n";
      }
    } else if (*cmd_chamber) {
      auto signs =
          chamber_signature(s, parse_polarization(h_text), parse_rat(k_text));
      if (as_json) {
        out << dump(json(signs)) << "\n";
      } else {
        out << signature_string(signs) << "\n";
      }
    } else if (*cmd_sep) {
      auto walls = separating_walls(s, parse_polarization(h0_text),
                                    parse_polarization(h1_text),
                                    parse_rat(k_text));
      print_walls(out, walls, as_json);
    } else if (*cmd_theta) {
      MukaiElement a = mukai_element_from_json(s, parse_json_arg(alpha_text));
      HilbClass h;
      if (r == 2 && !family)
        h = theta2(s, n, a);
      else
        h = theta_apply(s, r, n, a);
      out << dump(to_json(h)) << "\n";
    } else if (*cmd_vt) {
      json arr = json::array();
      bool all_ok = true;
      for (long rr = 1; rr <= r_max; ++rr)
        for (long nn = 2; nn <= n_max; ++nn) {
          IsometryReport rep = verify_isometry(s, rr, nn);
          all_ok = all_ok && rep.surjective;
          if (as_json) {
            arr.push_back(to_json(rep));
          } else {
            out << "r=" << rr << " n=" << nn
                << (rep.surjective ? "  isometry onto the Beauville lattice"
                                   : "  FAILED")
                << "  |disc v_r-perp| = " << rep.disc_vperp_omega << "\n";
          }
        }
      if (as_json) out << dump(arr) << "\n";
      return all_ok ? 0 : 1;
    } else if (*cmd_beau) {
      HilbClass b = hilb_from_json(s, parse_json_arg(beta_text));
      HilbClass c = hilb_from_json(s, parse_json_arg(gamma_text));
      out << rat_to_json(beauville_pair_rat(s, n, b, c)).dump() << "\n";
    } else if (*cmd_fuj) {
      out << fujiki_lambda(n) << "\n";
    } else if (*cmd_don) {
      MukaiElement alpha =
          mukai_element_from_json(s, parse_json_arg(alpha_text));
      MukaiElement v = canonical_vr(s, r, n);
      Rat q = q_eval(s, v, alpha);
      if (as_json) {
        out << dump(json{{"r", r}, {"n", n}, {"q", rat_to_json(q)}}) << "\n";
      } else {
        out << q << "\n";
      }
    } else if (*cmd_bn) {
      MukaiElement v = mukai_element_from_json(s, parse_json_arg(v_text));
      out << brill_noether_codim(v, Int(d_text)) << "\n";
    } else if (*cmd_check) {
      CheckOptions opt;
      auto results = run_all_checks(opt);
      bool all_pass = true;
      if (as_json) {
        json arr = json::array();
        for (const CheckResult& cr : results) {
          arr.push_back(json{{"name", cr.name},
                             {"pass", cr.pass},
                             {"detail", cr.detail}});
          all_pass = all_pass && cr.pass;
        }
        out << dump(arr) << "\n";
      } else {
        for (const CheckResult& cr : results) {
          out << (cr.pass ? "PASS  " : "FAIL  ") << cr.name << " — "
              << cr.detail << "\n";
          all_pass = all_pass && cr.pass;
        }
      }
      return all_pass ? 0 : 1;
    }
  } catch (const DomainError& e) {
    err << dump(json{{"error", err_name(e.code())}, {"message", e.what()}})
        << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << dump(json{{"error", "BAD_INPUT"}, {"message", e.what()}}) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mukai_lab::cli
