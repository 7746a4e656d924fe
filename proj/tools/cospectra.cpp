#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cospectra/classify.hpp"
#include "cospectra/config.hpp"
#include "cospectra/errors.hpp"
#include "cospectra/family.hpp"
#include "cospectra/format.hpp"
#include "cospectra/graph.hpp"
#include "cospectra/jacobi.hpp"
#include "cospectra/measure.hpp"
#include "cospectra/rationals.hpp"
#include "cospectra/schreier.hpp"
#include "cospectra/spectra.hpp"
#include "cospectra/ssrt.hpp"

namespace {

using namespace cospectra;

std::vector<int> parse_radii(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad radius '" + item + "' in --radii");
    }
  }
  if (out.empty()) throw ParseError("--radii must list at least one radius");
  return out;
}

BranchingSeq parse_branching(const std::string& text) {
  return parse_family("ssrt:" + text).branching;
}

nlohmann::json jacobi_json(const JacobiSpec& j) {
  nlohmann::json sq_prefix = nlohmann::json::array();
  for (const Rational& r : j.sq_prefix) sq_prefix.push_back(to_string(r));
  nlohmann::json sq_period = nlohmann::json::array();
  for (const Rational& r : j.sq_period) sq_period.push_back(to_string(r));
  return {{"sq_prefix", sq_prefix}, {"sq_period", sq_period}, {"scale", to_string(j.scale)}};
}

const char* norm_class_name(NormClass c) {
  switch (c) {
    case NormClass::IsRay:
      return "IsRay";
    case NormClass::IsDInfinity:
      return "IsDInfinity";
    case NormClass::IsLine:
      return "IsLine";
    case NormClass::NormExceeds2:
      return "NormExceeds2";
  }
  return "?";
}

const char* affine_name(AffineKind k) {
  switch (k) {
    case AffineKind::A:
      return "A";
    case AffineKind::D:
      return "D";
    case AffineKind::E:
      return "E";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable spectral theory for infinite graph families"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg = RunConfig::from_env();
  std::string radii_text, format, out_path;
  app.add_option("--budget", cfg.vertex_budget, "vertex budget for ball construction")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.eigen_tol, "eigenvalue bisection tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid-step", cfg.grid_step, "measure grid resolution")->check(CLI::PositiveNumber);
  app.add_option("--radii", radii_text, "comma-separated radius schedule (norm)");
  app.add_option("--format", format, "output format where both exist: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--threads", cfg.threads,
                 "worker pool size (reserved; outputs are thread-count independent)")
      ->check(CLI::PositiveNumber);

  std::function<void(std::ostream&)> action;

  // family show
  auto* family_cmd = app.add_subcommand("family", "family descriptors");
  family_cmd->require_subcommand(1);
  auto* family_show = family_cmd->add_subcommand("show", "print the family as JSON");
  std::string show_desc;
  family_show->add_option("--family", show_desc, "family descriptor, e.g. lattice:2")->required();
  family_show->callback([&] {
    action = [&](std::ostream& os) { os << family_to_json(parse_family(show_desc)) << "\n"; };
  });

  // ball
  auto* ball_cmd = app.add_subcommand("ball", "export a ball as an edge list");
  std::string ball_desc, ball_center;
  int ball_radius = 0;
  ball_cmd->add_option("--family", ball_desc)->required();
  ball_cmd->add_option("--radius", ball_radius)->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_option("--center", ball_center, "center key (default: origin)");
  ball_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const GraphFamily f = parse_family(ball_desc);
      const VertexKey c = ball_center.empty() ? origin_key(f) : parse_key(f, ball_center);
      export_edge_list(ball(f, c, ball_radius, cfg.vertex_budget), os);
    };
  });

  // walks
  auto* walks_cmd = app.add_subcommand("walks", "closed-walk count at a vertex");
  std::string walks_desc, walks_center;
  int walks_n = 0;
  walks_cmd->add_option("--family", walks_desc)->required();
  walks_cmd->add_option("--n", walks_n, "walk length")->required()->check(CLI::NonNegativeNumber);
  walks_cmd->add_option("--center", walks_center, "base vertex (default: origin)");
  walks_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const GraphFamily f = parse_family(walks_desc);
      const VertexKey c = walks_center.empty() ? origin_key(f) : parse_key(f, walks_center);
      os << walks_n << "," << closed_walk_count(f, c, walks_n, cfg.vertex_budget).str() << "\n";
    };
  });

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "exact spectral moments (walk counts)");
  std::string moments_desc, moments_center;
  int moments_up_to = 0;
  moments_cmd->add_option("--family", moments_desc)->required();
  moments_cmd->add_option("--up-to", moments_up_to, "highest order")->required()->check(CLI::NonNegativeNumber);
  moments_cmd->add_option("--center", moments_center, "base vertex (default: origin)");
  moments_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const GraphFamily f = parse_family(moments_desc);
      const VertexKey c = moments_center.empty() ? origin_key(f) : parse_key(f, moments_center);
      os << "order,count\n";
      for (int k = 0; k <= moments_up_to; ++k)
        os << k << "," << closed_walk_count(f, c, k, cfg.vertex_budget).str() << "\n";
    };
  });

  // jacobi eig / jacobi quadrature
  auto* jacobi_cmd = app.add_subcommand("jacobi", "finite Jacobi sections");
  jacobi_cmd->require_subcommand(1);
  std::string jx_desc;
  int jx_n = 0;
  auto* jacobi_eig = jacobi_cmd->add_subcommand("eig", "eigenvalues and first components");
  jacobi_eig->add_option("--jacobi", jx_desc, "operator descriptor, e.g. free, a2:4, branching:3|2")
      ->required();
  jacobi_eig->add_option("--n", jx_n, "section size")->required()->check(CLI::PositiveNumber);
  jacobi_eig->callback([&] {
    action = [&](std::ostream& os) {
      export_eigensystem_csv(eigen(truncate(parse_jacobi(jx_desc), jx_n), cfg.eigen_tol), os);
    };
  });
  auto* jacobi_quad = jacobi_cmd->add_subcommand("quadrature", "Gauss quadrature measure");
  jacobi_quad->add_option("--jacobi", jx_desc)->required();
  jacobi_quad->add_option("--n", jx_n, "node count")->required()->check(CLI::PositiveNumber);
  jacobi_quad->callback([&] {
    action = [&](std::ostream& os) {
      export_measure_csv(quadrature_measure(parse_jacobi(jx_desc), jx_n, cfg.eigen_tol), os,
                         cfg.grid_step);
    };
  });

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "tree adjacency as Jacobi components");
  std::string dec_desc;
  int dec_up_to = 0;
  decompose_cmd->add_option("--family", dec_desc, "tree family (rootedtree:d, tree:d, ssrt:...)")
      ->required();
  decompose_cmd->add_option("--up-to", dec_up_to, "highest component level")
      ->required()
      ->check(CLI::NonNegativeNumber);
  decompose_cmd->callback([&] {
    action = [&](std::ostream& os) {
      nlohmann::json arr = nlohmann::json::array();
      for (const DecompComponent& c : decompose(parse_family(dec_desc), dec_up_to))
        arr.push_back({{"level", c.level},
                       {"multiplicity", c.multiplicity.str()},
                       {"jacobi", jacobi_json(c.jacobi)}});
      os << arr.dump(2) << "\n";
    };
  });

  // verify-decomposition
  auto* verify_cmd = app.add_subcommand("verify-decomposition", "audit the decomposition on a ball");
  std::string verify_branching;
  int verify_depth = 0;
  verify_cmd->add_option("--branching", verify_branching, "branching sequence, e.g. 2 or 3|2,2")
      ->required();
  verify_cmd->add_option("--depth", verify_depth)->required()->check(CLI::NonNegativeNumber);
  verify_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const GraphFamily f = GraphFamily::ssrt(parse_branching(verify_branching));
      os << verify_report_json(verify_decomposition(f, verify_depth, 1e-8, 1e-10, cfg.vertex_budget))
         << "\n";
    };
  });

  // cospectral
  auto* cosp_cmd = app.add_subcommand("cospectral", "compare marked spectra with evidence");
  std::string cosp_a, cosp_b;
  cosp_cmd->add_option("--a", cosp_a)->required();
  cosp_cmd->add_option("--b", cosp_b)->required();
  cosp_cmd->callback([&] {
    action = [&](std::ostream& os) {
      os << cospectral_json(
                are_cospectral(parse_family(cosp_a), parse_family(cosp_b), cfg.vertex_budget))
         << "\n";
    };
  });

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "ball top-eigenvalue lower bounds");
  std::string norm_desc;
  norm_cmd->add_option("--family", norm_desc)->required();
  norm_cmd->callback([&] {
    action = [&](std::ostream& os) {
      std::vector<int> radii;
      if (!radii_text.empty()) radii = parse_radii(radii_text);
      const NormEstimate est = norm_estimate(parse_family(norm_desc), radii, cfg.vertex_budget);
      if (format == "json") {
        nlohmann::json j{{"radii", est.radii},
                         {"lower_bounds", est.lower_bounds},
                         {"extrapolated", est.extrapolated}};
        if (est.catalog) j["catalog"] = *est.catalog;
        os << j.dump(2) << "\n";
      } else {
        export_norm_csv(est, os);
      }
    };
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "norm <= 2 or a forbidden witness");
  std::string classify_desc;
  classify_cmd->add_option("--family", classify_desc)->required();
  classify_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const Classification c = classify_norm_le_2(parse_family(classify_desc), cfg.vertex_budget);
      nlohmann::json j{{"result", norm_class_name(c.result)}};
      if (c.witness) {
        j["witness"] = {{"kind", affine_name(c.witness->kind)},
                        {"n", c.witness->n},
                        {"embedding", c.witness->embedding}};
        j["radius"] = c.radius;
      }
      os << j.dump(2) << "\n";
    };
  });

  // dinfinity
  auto* dinf_cmd = app.add_subcommand("dinfinity", "kernel vector and section margins");
  dinf_cmd->callback([&] {
    action = [&](std::ostream& os) { os << dinfinity_report_json(dinfinity_checks()) << "\n"; };
  });

  // rotations
  auto* rot_cmd = app.add_subcommand("rotations", "compare rotations of a periodic branching");
  std::string rot_period;
  rot_cmd->add_option("--period", rot_period, "comma-separated period, e.g. 2,3")->required();
  rot_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const BranchingSeq seq = parse_branching(rot_period);
      if (!seq.prefix.empty()) throw NonPeriodic("rotations take a pure period (no '|' prefix)");
      os << rotation_report_json(compare_rotations(seq)) << "\n";
    };
  });

  // schreier graph / schreier spectrum
  auto* schreier_cmd = app.add_subcommand("schreier", "Fabrykowski-Gupta level graphs");
  schreier_cmd->require_subcommand(1);
  int schreier_n = 1;
  auto* schreier_graph = schreier_cmd->add_subcommand("graph", "level-n orbit graph edge list");
  schreier_graph->add_option("--level", schreier_n)->required()->check(CLI::PositiveNumber);
  schreier_graph->callback([&] {
    action = [&](std::ostream& os) {
      export_edge_list(schreier_level(schreier_n, std::min(cfg.vertex_budget, 100'000LL)), os);
    };
  });
  auto* schreier_spec = schreier_cmd->add_subcommand("spectrum", "level-n eigenvalues");
  schreier_spec->add_option("--level", schreier_n)->required()->check(CLI::PositiveNumber);
  schreier_spec->callback([&] {
    action = [&](std::ostream& os) {
      const std::vector<double> ev = level_spectrum(schreier_n, std::min(cfg.vertex_budget, 100'000LL));
      os << "index,eigenvalue\n";
      for (std::size_t i = 0; i < ev.size(); ++i) os << i << "," << format_double(ev[i]) << "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::ostringstream buf;
    action(buf);
    if (out_path.empty()) {
      std::cout << buf.str();
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + out_path);
      file << buf.str();
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
