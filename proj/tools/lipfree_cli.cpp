// lipfree: batch front end for the exact free-space toolkit. Loads or
// generates spaces, classifies molecules, emits certificates and norm
// reports, and runs the seeded property suites.
//
// Exit codes: 0 success, 1 falsified invariant (a defect, never expected),
// 2 parse error, 3 validation or domain failure, 4 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lipfree/document.hpp"
#include "lipfree/error.hpp"
#include "lipfree/norms.hpp"
#include "lipfree/random_space.hpp"
#include "lipfree/suite.hpp"

using namespace lipfree;
using doc::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return 2;
    case ErrorKind::InvariantViolated:
      return 1;
    default:
      return 3;
  }
}

struct Opts {
  std::string input;
  std::string out;
  std::string format = "table";
  std::uint64_t seed = 42;
  int n = 0;
  int count = 100;
  std::string profile = "generic";
  std::string alpha = "1/4";
  std::string eps = "1/4";
  std::string segment_eps;
};

// Plain-text table with fixed column order; columns sized to content.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::vector<std::size_t> width(header.size());
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    };
    widen(header);
    for (const auto& row : rows) widen(row);

    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c + 1 == row.size()) {
          out << row[c];
        } else {
          out << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
        }
      }
      out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out.str();
  }
};

std::string pair_str(const FiniteMetricSpace& M, PointPair pair) {
  return "(" + M.label(pair.x) + ", " + M.label(pair.y) + ")";
}

std::string join_labels(const FiniteMetricSpace& M,
                        const std::vector<int>& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ' ';
    out += M.label(points[i]);
  }
  return out;
}

std::string yes_no(bool flag) { return flag ? "yes" : "no"; }

SpacePtr load_space(const Opts& o, const CLI::App& cmd) {
  const bool has_input = cmd.count("--input") > 0;
  const bool has_n = cmd.count("--n") > 0;
  if (has_input == has_n) {
    throw UsageError("give exactly one of --input or --n");
  }
  if (has_input) {
    return doc::space_from_json(doc::read_document(o.input));
  }
  if (cmd.count("--seed") == 0) {
    throw UsageError("--seed is required when generating with --n");
  }
  return random_space(o.n, parse_profile(o.profile), o.seed);
}

std::vector<PointPair> ordered_pairs(const FiniteMetricSpace& M) {
  std::vector<PointPair> pairs;
  for (int p = 0; p < M.size(); ++p)
    for (int q = 0; q < M.size(); ++q)
      if (p != q) pairs.push_back({p, q});
  return pairs;
}

std::string function_table(const FiniteMetricSpace& M, const LipFunction& f,
                           const char* title) {
  std::string out = std::string(title) + ":\n";
  for (int x = 0; x < M.size(); ++x)
    out += "  " + M.label(x) + " " + format_rational(f.value(x)) + "\n";
  return out;
}

std::string run_validate(const Opts& o, const CLI::App& cmd) {
  SpacePtr M = load_space(o, cmd);
  if (o.format == "document") return doc::dump(doc::space_to_json(*M));
  std::ostringstream out;
  out << "valid space: " << M->size() << " points (";
  for (int x = 0; x < M->size(); ++x) out << (x ? " " : "") << M->label(x);
  out << "), base " << M->label(M->base()) << "\n";
  return out.str();
}

std::string run_segments(const Opts& o, const CLI::App& cmd) {
  SpacePtr M = load_space(o, cmd);
  std::optional<Rat> eps;
  if (cmd.count("--eps") > 0) eps = parse_rational(o.segment_eps);

  Json pairs = Json::array();
  Table table;
  table.header = {"pair", "segment"};
  if (eps) table.header.push_back("eps-segment");
  for (int x = 0; x < M->size(); ++x) {
    for (int y = x + 1; y < M->size(); ++y) {
      const std::vector<int> segment = M->segment(x, y);
      Json entry = Json::object();
      entry["pair"] = Json::array({M->label(x), M->label(y)});
      Json seg = Json::array();
      for (int z : segment) seg.push_back(M->label(z));
      entry["segment"] = std::move(seg);
      std::vector<std::string> row{pair_str(*M, {x, y}),
                                   join_labels(*M, segment)};
      if (eps) {
        const std::vector<int> relaxed = M->epsilon_segment(x, y, *eps);
        Json rel = Json::array();
        for (int z : relaxed) rel.push_back(M->label(z));
        entry["eps_segment"] = std::move(rel);
        row.push_back(join_labels(*M, relaxed));
      }
      pairs.push_back(std::move(entry));
      table.rows.push_back(std::move(row));
    }
  }

  if (o.format == "document") {
    Json j = doc::envelope("segments");
    j["space"] = doc::space_to_json(*M);
    if (eps) j["eps"] = doc::rational_to_json(*eps);
    j["pairs"] = std::move(pairs);
    return doc::dump(j);
  }
  return table.str();
}

std::string run_classify(const Opts& o, const CLI::App& cmd) {
  SpacePtr M = load_space(o, cmd);
  const std::vector<PointPair> pairs = ordered_pairs(*M);
  std::vector<MoleculeReport> reports(pairs.size());
  parallel_for_index(static_cast<int>(pairs.size()), 0, [&](int i) {
    reports[i] = classify_molecule(M, pairs[i]);
  });

  int extreme = 0, exposed = 0;
  for (const MoleculeReport& report : reports) {
    extreme += report.is_extreme ? 1 : 0;
    exposed += report.is_exposed ? 1 : 0;
  }
  const int neither = static_cast<int>(reports.size()) - extreme;

  if (o.format == "document") {
    Json j = doc::envelope("classification");
    j["space"] = doc::space_to_json(*M);
    Json body = Json::array();
    for (const MoleculeReport& report : reports)
      body.push_back(doc::report_body(*M, report));
    j["reports"] = std::move(body);
    Json summary = Json::object();
    summary["pairs"] = reports.size();
    summary["extreme"] = extreme;
    summary["exposed"] = exposed;
    summary["neither"] = neither;
    j["summary"] = std::move(summary);
    return doc::dump(j);
  }

  Table table;
  table.header = {"pair", "segment", "extreme", "exposed"};
  for (const MoleculeReport& report : reports) {
    table.rows.push_back({pair_str(*M, report.pair),
                          join_labels(*M, report.segment_points),
                          yes_no(report.is_extreme),
                          yes_no(report.is_exposed)});
  }
  std::ostringstream out;
  out << table.str();
  out << extreme << " of " << reports.size()
      << " ordered pairs extreme and exposed; " << neither << " neither\n";
  return out.str();
}

std::string run_expose(const Opts& o, const CLI::App& cmd) {
  SpacePtr M = load_space(o, cmd);
  std::vector<ExposureCertificate> certificates;
  for (int x = 0; x < M->size(); ++x) {
    for (int y = x + 1; y < M->size(); ++y) {
      if (M->segment(x, y).size() != 2) continue;
      ExposureCertificate cert = exposure_certificate(M, {x, y});
      if (!verify_certificate(M, cert)) {
        throw Error(ErrorKind::InvariantViolated,
                    "emitted certificate failed its replay");
      }
      certificates.push_back(std::move(cert));
    }
  }

  if (o.format == "document") {
    Json j = doc::envelope("certificate_list");
    j["space"] = doc::space_to_json(*M);
    Json list = Json::array();
    for (const ExposureCertificate& cert : certificates)
      list.push_back(doc::certificate_to_json(M, cert));
    j["certificates"] = std::move(list);
    return doc::dump(j);
  }

  Table table;
  table.header = {"pair", "margin"};
  for (const ExposureCertificate& cert : certificates)
    table.rows.push_back({pair_str(*M, cert.pair),
                          format_rational(cert.margin)});
  std::ostringstream out;
  out << table.str();
  out << certificates.size() << " certificate"
      << (certificates.size() == 1 ? "" : "s") << ", all verified\n";
  return out.str();
}

std::string run_norm(const Opts& o) {
  const FreeElement mu = doc::element_from_json(doc::read_document(o.input));
  const PrimalNorm primal = primal_norm(mu);
  const DualNorm dual = dual_norm_with_witness(mu);
  if (primal.value != dual.value) {
    throw Error(ErrorKind::InvariantViolated,
                "primal and dual norms disagree: " +
                    format_rational(primal.value) + " vs " +
                    format_rational(dual.value));
  }
  const FiniteMetricSpace& M = *mu.space();

  if (o.format == "document") {
    Json j = doc::envelope("norm_report");
    j["space"] = doc::space_to_json(M);
    Json coeffs = Json::object();
    for (int x = 0; x < M.size(); ++x) {
      if (x == M.base() || mu.coeff(x) == 0) continue;
      coeffs[M.label(x)] = doc::rational_to_json(mu.coeff(x));
    }
    j["coeffs"] = std::move(coeffs);
    j["norm"] = doc::rational_to_json(primal.value);
    j["representation"] = doc::representation_body(M, primal.representation);
    j["witness"] = doc::function_body(dual.witness);
    return doc::dump(j);
  }

  std::ostringstream out;
  out << "norm " << format_rational(primal.value) << "\n";
  out << "optimal representation:\n";
  for (const RepresentationTerm& term : primal.representation.terms)
    out << "  " << format_rational(term.weight) << " m"
        << pair_str(M, term.pair) << "\n";
  out << function_table(M, dual.witness, "witness");
  return out.str();
}

std::string run_dist(const Opts& o) {
  const doc::DistQuery query =
      doc::dist_query_from_json(doc::read_document(o.input));
  const SubspaceDistance result =
      dist_to_subspace(query.element, query.subset);
  const FiniteMetricSpace& M = *query.element.space();

  if (o.format == "document") {
    Json j = doc::envelope("dist_report");
    j["space"] = doc::space_to_json(M);
    Json coeffs = Json::object();
    for (int x = 0; x < M.size(); ++x) {
      if (x == M.base() || query.element.coeff(x) == 0) continue;
      coeffs[M.label(x)] = doc::rational_to_json(query.element.coeff(x));
    }
    j["coeffs"] = std::move(coeffs);
    Json subset = Json::array();
    for (int x : query.subset) subset.push_back(M.label(x));
    j["subset"] = std::move(subset);
    j["dist"] = doc::rational_to_json(result.value);
    j["witness"] = doc::function_body(result.witness);
    return doc::dump(j);
  }

  std::ostringstream out;
  out << "dist " << format_rational(result.value) << "\n";
  out << function_table(M, result.witness, "witness");
  return out.str();
}

std::string run_suite_cmd(const Opts& o, int& status) {
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.count = o.count;
  cfg.max_n = o.n > 0 ? o.n : 10;
  cfg.alpha = parse_rational(o.alpha);
  cfg.eps = parse_rational(o.eps);
  if (cfg.count < 1) throw UsageError("--count must be positive");
  if (cfg.max_n < cfg.min_n) throw UsageError("--n must be at least 3");
  const Rat half(1, 2);
  if (cfg.alpha <= 0 || cfg.alpha >= half || cfg.eps <= 0 || cfg.eps >= half) {
    throw Error(ErrorKind::PreconditionNotMet,
                "alpha and eps must lie in (0, 1/2)");
  }

  const SuiteReport report = run_suite(cfg);
  status = report.all_pass() ? 0 : 1;

  if (o.format == "document") {
    Json j = doc::envelope("suite_report");
    Json config = Json::object();
    config["seed"] = cfg.seed;
    config["count"] = cfg.count;
    config["min_n"] = cfg.min_n;
    config["max_n"] = cfg.max_n;
    config["alpha"] = doc::rational_to_json(cfg.alpha);
    config["eps"] = doc::rational_to_json(cfg.eps);
    j["config"] = std::move(config);
    Json checks = Json::array();
    for (const CheckStat& stat : report.checks) {
      Json entry = Json::object();
      entry["name"] = stat.name;
      entry["checked"] = stat.checked;
      entry["failed"] = stat.failed;
      checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.all_pass();
    j["failures"] = report.failures;
    return doc::dump(j);
  }

  Table table;
  table.header = {"check", "checked", "failed"};
  for (const CheckStat& stat : report.checks)
    table.rows.push_back({stat.name, std::to_string(stat.checked),
                          std::to_string(stat.failed)});
  table.rows.push_back({"total", std::to_string(report.total_checked()), ""});
  std::ostringstream out;
  out << table.str();
  out << "result: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const std::string& failure : report.failures)
    out << "failure: " << failure << "\n";
  return out.str();
}

std::string run_random(const Opts& o) {
  SpacePtr M = random_space(o.n, parse_profile(o.profile), o.seed);
  if (o.format == "document") return doc::dump(doc::space_to_json(*M));

  Table table;
  table.header = {"d"};
  for (int y = 0; y < M->size(); ++y) table.header.push_back(M->label(y));
  for (int x = 0; x < M->size(); ++x) {
    std::vector<std::string> row{M->label(x)};
    for (int y = 0; y < M->size(); ++y)
      row.push_back(format_rational(M->dist(x, y)));
    table.rows.push_back(std::move(row));
  }
  std::ostringstream out;
  out << "base " << M->label(M->base()) << "\n" << table.str();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in Lipschitz-free spaces over finite "
               "metric spaces"};
  app.require_subcommand(1);
  Opts o;

  auto add_space_source = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "space document to read");
    cmd->add_option("--n", o.n, "generate a random space with this many points");
    cmd->add_option("--profile", o.profile,
                    "generator profile: euclidean, shortest_path or generic");
    cmd->add_option("--seed", o.seed, "generator seed");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "write the artifact to this file");
    cmd->add_option("--format", o.format, "artifact format")
        ->check(CLI::IsMember({"table", "document"}));
  };

  CLI::App* validate =
      app.add_subcommand("validate", "check the metric axioms of a space");
  add_space_source(validate);
  add_output(validate);

  CLI::App* segments = app.add_subcommand(
      "segments", "list the metric segment of every unordered pair");
  add_space_source(segments);
  add_output(segments);
  segments->add_option("--eps", o.segment_eps,
                       "also list eps-segments, eps in (0,1)");

  CLI::App* classify = app.add_subcommand(
      "classify", "classify every molecule as extreme/exposed or neither");
  add_space_source(classify);
  add_output(classify);

  CLI::App* expose = app.add_subcommand(
      "expose", "emit a verified exposure certificate per trivial pair");
  add_space_source(expose);
  add_output(expose);

  CLI::App* norm =
      app.add_subcommand("norm", "free-space norm of an element document");
  norm->add_option("--input", o.input, "element document")->required();
  add_output(norm);

  CLI::App* dist = app.add_subcommand(
      "dist", "distance from an element to a subspace, from a query document");
  dist->add_option("--input", o.input, "dist_query document")->required();
  add_output(dist);

  CLI::App* suite = app.add_subcommand(
      "suite", "run the seeded lemma property suites");
  suite->add_option("--seed", o.seed, "corpus seed");
  suite->add_option("--count", o.count, "number of spaces");
  suite->add_option("--n", o.n, "largest space size (default 10)");
  suite->add_option("--alpha", o.alpha, "split parameter alpha in (0,1/2)");
  suite->add_option("--eps", o.eps, "split parameter eps in (0,1/2)");
  add_output(suite);

  CLI::App* random_cmd =
      app.add_subcommand("random", "generate a seeded random space");
  random_cmd->add_option("--n", o.n, "number of points")->required();
  random_cmd->add_option("--profile", o.profile,
                         "euclidean, shortest_path or generic");
  random_cmd->add_option("--seed", o.seed, "generator seed")->required();
  add_output(random_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  // The random artifact is the document itself unless a table is asked for.
  if (random_cmd->parsed() && random_cmd->count("--format") == 0) {
    o.format = "document";
  }

  int status = 0;
  std::string artifact;
  try {
    if (validate->parsed()) {
      artifact = run_validate(o, *validate);
    } else if (segments->parsed()) {
      artifact = run_segments(o, *segments);
    } else if (classify->parsed()) {
      artifact = run_classify(o, *classify);
    } else if (expose->parsed()) {
      artifact = run_expose(o, *expose);
    } else if (norm->parsed()) {
      artifact = run_norm(o);
    } else if (dist->parsed()) {
      artifact = run_dist(o);
    } else if (suite->parsed()) {
      artifact = run_suite_cmd(o, status);
    } else if (random_cmd->parsed()) {
      artifact = run_random(o);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    out << artifact;
  } else {
    std::cout << artifact;
  }
  return status;
}
