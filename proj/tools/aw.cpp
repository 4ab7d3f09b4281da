#include "aw/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// aw <command> [--file PATH] [--depth D] [--threads T]
//
// Every command reads one JSON payload from stdin (or --file) and writes one
// JSON document to stdout.  Exit codes: 0 on success; 2 when the payload is
// well formed but mathematically invalid, with {"error","detail"} on stdout;
// 64 for usage errors, malformed JSON or schema violations, with a message
// on stderr.

namespace {

using aw::Json;

struct Options {
  std::string command;
  std::string file;
  aw::Int depth = 2;
  int threads = 1;
};

void usage(std::ostream& os) {
  os << "usage: aw <command> [--file PATH] [--depth D] [--threads T]\n"
        "       aw --help | --version\n"
        "\n"
        "diagram commands\n"
        "  transpose      conjugate diagram: {\"parts\",\"level\"} -> same shape\n"
        "  dominate       canonical orbit representative: {\"entries\",\"level\"}\n"
        "  conjugate      orbit equivalence: {\"a\",\"b\",\"level\"} -> {\"conjugate\"}\n"
        "  otvr           concatenation vs sum check: {\"factors\":[diagram,...]}\n"
        "\n"
        "quiver commands\n"
        "  wprime         weight coefficients: {\"v\",\"w\"} -> {\"coeffs\"}\n"
        "  uslovie        solvability of the weight condition: {\"v\",\"w\",\"blocks\"}\n"
        "  sigma          unfolded sigma sequence: {\"v\",\"w\",\"blocks\"}\n"
        "  mubar          diagram from w: {\"w\",\"n\"} -> {\"parts\",\"level\"}\n"
        "  mudegree       degree coordinates: {\"k\",\"lam\",\"d\",\"mu\"?,\"nu\"?,\"d_prime\"?}\n"
        "  tensor-mu      tensor weight: {\"mu\",\"mu_prime\",\"lam\",\"lam_prime\"}\n"
        "  tensor-quiver  tensor dimension data: {\"a\",\"b\"} -> {\"v\",\"w\"}\n"
        "  picard         weight-class quotient: {\"k\",\"blocks\"}\n"
        "  detclass       class of w' in the quotient: {\"v\",\"w\",\"blocks\"}\n"
        "\n"
        "geometry commands\n"
        "  zeta           complex stability vector of {\"blocks\",\"a\"}\n"
        "  zeta-bullet    real stability vector of {\"blocks\",\"eps\"?,\"sign\"?}\n"
        "  surface        deformed equation coefficients of {\"blocks\",\"a\"}\n"
        "  singular       singular points with A-types of {\"blocks\",\"a\"}\n"
        "  family         compactified family of {\"blocks\",\"a\"} (even total)\n"
        "  blowdown       kept exceptional curves of {\"blocks\"}\n"
        "\n"
        "character commands (--depth, default 2)\n"
        "  multiplicities weight multiplicities of {\"level\",\"finite\",\"degree\"?}\n"
        "  tensor         product character: {\"factors\":[weight,...]} (--threads)\n"
        "  decompose      product decomposition: {\"factors\":[weight,...]}\n"
        "  levelrank      transposed-side comparison: {\"factors\":[diagram,...]}\n"
        "  lr             finite product decomposition: {\"factors\":[[int,...],...]}\n";
}

aw::Int parse_int_arg(const std::string& s, const char* what) {
  std::size_t pos = 0;
  aw::Int value = 0;
  try {
    value = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " expects an integer, got \"" + s + "\"");
  }
  if (pos != s.size())
    throw std::invalid_argument(std::string(what) + " expects an integer, got \"" + s + "\"");
  return value;
}

std::string read_payload(const std::string& file) {
  std::ostringstream ss;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("cannot open \"" + file + "\"");
    ss << f.rdbuf();
  } else {
    ss << std::cin.rdbuf();
  }
  return ss.str();
}

std::vector<aw::AffineWeight> weights_from_factors(const Json& in) {
  const Json& f = aw::json_field(in, "factors");
  if (!f.is_array() || f.empty())
    throw std::invalid_argument("factors must be a nonempty array");
  std::vector<aw::AffineWeight> out;
  out.reserve(f.size());
  for (const auto& e : f) out.push_back(aw::weight_from_json(e));
  return out;
}

std::vector<aw::Gyd> gyds_from_factors(const Json& in) {
  const Json& f = aw::json_field(in, "factors");
  if (!f.is_array() || f.empty())
    throw std::invalid_argument("factors must be a nonempty array");
  std::vector<aw::Gyd> out;
  out.reserve(f.size());
  for (const auto& e : f) out.push_back(aw::gyd_from_json(e));
  return out;
}

Json run_command(const Options& opts, const Json& in) {
  const std::string& cmd = opts.command;

  if (cmd == "transpose") return aw::gyd_to_json(aw::transpose(aw::gyd_from_json(in)));

  if (cmd == "dominate")
    return aw::intseq_to_json(aw::dominant_representative(aw::intseq_from_json(in)));

  if (cmd == "conjugate") {
    aw::Int level = aw::json_int(aw::json_field(in, "level"), "level");
    bool same = aw::waff_conjugate(aw::IntSeq{aw::json_vec(aw::json_field(in, "a"), "a"), level},
                                   aw::IntSeq{aw::json_vec(aw::json_field(in, "b"), "b"), level});
    return Json{{"conjugate", same}};
  }

  if (cmd == "otvr") return Json{{"conjugate", aw::verify_otvr(gyds_from_factors(in))}};

  if (cmd == "wprime")
    return Json{{"coeffs", aw::vec_to_json(aw::wprime(aw::quiver_from_json(in)).coeffs)}};

  if (cmd == "uslovie")
    return Json{{"holds", aw::check_uslovie(aw::quiver_from_json(in), aw::blocks_from_json(in))}};

  if (cmd == "sigma") {
    aw::QuiverData q = aw::quiver_from_json(in);
    aw::BlockPartition p = aw::blocks_from_json(in);
    aw::SigmaResult r = aw::sigma_sequence(q, p);
    Json out{{"sigma", aw::intseq_to_json(r.sigma)}, {"feasible", r.feasible}};
    if (r.feasible) {
      Json lam = Json::array();
      for (const aw::Gyd& g : aw::lambda_blocks(r.sigma, p, r.sigma.level))
        lam.push_back(aw::gyd_to_json(g));
      out["lambda"] = lam;
    } else {
      out["violation"] = r.violation;
    }
    return out;
  }

  if (cmd == "mubar")
    return aw::gyd_to_json(aw::mu_bar_from_w(aw::json_vec(aw::json_field(in, "w"), "w"),
                                             aw::json_int(aw::json_field(in, "n"), "n")));

  if (cmd == "mudegree") {
    aw::Int k = aw::json_int(aw::json_field(in, "k"), "k");
    aw::Gyd lam = aw::validate_gyd(aw::json_vec(aw::json_field(in, "lam"), "lam"), k);
    aw::Int d = aw::json_int(aw::json_field(in, "d"), "d");
    Json out = Json::object();
    if (in.contains("mu")) {
      aw::Gyd mu = aw::validate_gyd(aw::json_vec(in.at("mu"), "mu"), k);
      out["mu_degree"] = aw::rat_to_json(aw::mu_degree(k, mu, lam, d));
    }
    if (in.contains("nu")) {
      aw::Gyd nu = aw::validate_gyd(aw::json_vec(in.at("nu"), "nu"), k);
      aw::Int d_prime = aw::json_int(aw::json_field(in, "d_prime"), "d_prime");
      out["nu_weight"] = aw::weight_to_json(aw::nu_weight(d, d_prime, nu, lam, k));
    }
    if (out.empty()) throw std::invalid_argument("mudegree needs \"mu\" or \"nu\"");
    return out;
  }

  if (cmd == "tensor-mu") {
    auto gyd_list = [](const Json& j, const char* what) {
      if (!j.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array of diagrams");
      std::vector<aw::Gyd> out;
      out.reserve(j.size());
      for (const auto& e : j) out.push_back(aw::gyd_from_json(e));
      return out;
    };
    return aw::weight_to_json(aw::tensor_mu(aw::weight_from_json(aw::json_field(in, "mu")),
                                            aw::weight_from_json(aw::json_field(in, "mu_prime")),
                                            gyd_list(aw::json_field(in, "lam"), "lam"),
                                            gyd_list(aw::json_field(in, "lam_prime"), "lam_prime")));
  }

  if (cmd == "tensor-quiver")
    return aw::quiver_to_json(aw::tensor_quiver(aw::quiver_from_json(aw::json_field(in, "a")),
                                                aw::quiver_from_json(aw::json_field(in, "b"))));

  if (cmd == "picard") {
    aw::Int k = aw::json_int(aw::json_field(in, "k"), "k");
    return aw::group_to_json(aw::picard_group(k, aw::blocks_from_json(in)));
  }

  if (cmd == "detclass") {
    aw::QuiverData q = aw::quiver_from_json(in);
    aw::BlockPartition p = aw::blocks_from_json(in);
    Json out = aw::element_to_json(aw::det_class(q, p));
    out["group"] = aw::group_to_json(aw::picard_group(p.k(), p));
    return out;
  }

  if (cmd == "zeta") return aw::rats_to_json(aw::zeta_complex(aw::point_from_json(in)).entries);

  if (cmd == "zeta-bullet") {
    aw::BlockPartition p = aw::blocks_from_json(in);
    Json out{{"bullet", aw::rats_to_json(aw::zeta_real_bullet(p).entries)}};
    bool has_eps = in.contains("eps"), has_sign = in.contains("sign");
    if (has_eps != has_sign) throw std::invalid_argument("\"eps\" and \"sign\" go together");
    if (has_eps) {
      aw::Rat eps = aw::rat_from_json(in.at("eps"));
      aw::Int sign = aw::json_int(in.at("sign"), "sign");
      out["shifted"] =
          aw::rats_to_json(aw::zeta_real_pm(p, eps, static_cast<int>(sign)).entries);
    }
    return out;
  }

  if (cmd == "surface") return aw::rats_to_json(aw::surface_poly(aw::point_from_json(in)));

  if (cmd == "singular") return aw::singular_to_json(aw::singular_locus(aw::point_from_json(in)));

  if (cmd == "family") return aw::family_to_json(aw::family_equation(aw::point_from_json(in)));

  if (cmd == "blowdown")
    return aw::vec_to_json(aw::blowdown_kept_curves(aw::blocks_from_json(in)));

  if (cmd == "multiplicities")
    return aw::entries_to_json(
        aw::weight_multiplicities(aw::weight_from_json(in), opts.depth).entries);

  if (cmd == "tensor")
    return aw::entries_to_json(
        aw::tensor_character(weights_from_factors(in), opts.depth, opts.threads).entries);

  if (cmd == "decompose")
    return aw::entries_to_json(
        aw::decompose(aw::tensor_character(weights_from_factors(in), opts.depth, opts.threads),
                      opts.depth)
            .entries);

  if (cmd == "levelrank")
    return aw::report_to_json(aw::level_rank_check(gyds_from_factors(in), opts.depth));

  if (cmd == "lr") {
    const Json& f = aw::json_field(in, "factors");
    if (!f.is_array() || f.empty())
      throw std::invalid_argument("factors must be a nonempty array");
    std::vector<aw::Gyd> gs;
    gs.reserve(f.size());
    for (const auto& e : f) {
      aw::Vec v = aw::json_vec(e, "factor");
      aw::Int width = 0;
      if (!v.empty()) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        width = *hi - *lo;
      }
      gs.push_back(aw::Gyd{std::move(v), std::max<aw::Int>(1, width)});
    }
    return aw::entries_to_json(aw::lr_finite(gs).entries);
  }

  throw std::invalid_argument("unknown command \"" + cmd + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--help" || a == "-h") {
        usage(std::cout);
        return 0;
      }
      if (a == "--version") {
        std::cout << "aw 1.0.0\n";
        return 0;
      }
      if (a == "--file" || a == "--depth" || a == "--threads") {
        if (i + 1 == args.size()) throw std::invalid_argument(a + " expects a value");
        const std::string& value = args[++i];
        if (a == "--file") {
          opts.file = value;
        } else if (a == "--depth") {
          opts.depth = parse_int_arg(value, "--depth");
          if (opts.depth < 0) throw std::invalid_argument("--depth must be nonnegative");
        } else {
          aw::Int t = parse_int_arg(value, "--threads");
          if (t < 1) throw std::invalid_argument("--threads must be at least 1");
          opts.threads = static_cast<int>(std::min<aw::Int>(t, 256));
        }
      } else if (!a.empty() && a[0] == '-') {
        throw std::invalid_argument("unknown option \"" + a + "\"");
      } else if (opts.command.empty()) {
        opts.command = a;
      } else {
        throw std::invalid_argument("unexpected argument \"" + a + "\"");
      }
    }
    if (opts.command.empty()) {
      usage(std::cerr);
      return 64;
    }

    Json in = Json::parse(read_payload(opts.file));
    Json out = run_command(opts, in);
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const aw::domain_error& e) {
    std::cout << Json{{"error", e.name}, {"detail", e.detail}}.dump() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "aw: invalid JSON payload: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "aw: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "aw: internal error: " << e.what() << "\n";
    return 70;
  }
}
