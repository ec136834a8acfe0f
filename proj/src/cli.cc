// Copyright 2026 The gkplat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkplat/cli.h"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gkplat/channel_sim.h"
#include "gkplat/classical_channel.h"
#include "gkplat/concatenated.h"
#include "gkplat/lattice_catalog.h"
#include "gkplat/lattice_decoder.h"
#include "gkplat/lattice_io.h"
#include "gkplat/philox.h"
#include "gkplat/rates.h"

namespace gkplat {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<double> grid_or_usage(const std::string& spec, const std::string& flag) {
  try {
    return parse_log_grid(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void dump_value(const ordered_json& j, int indent, int depth, std::string& out) {
  const auto pad = [&](int d) {
    if (indent >= 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent * d), ' ');
    }
  };
  switch (j.type()) {
    case ordered_json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ',';
        }
        first = false;
        pad(depth + 1);
        out += ordered_json(it.key()).dump();
        out += indent >= 0 ? ": " : ":";
        dump_value(it.value(), indent, depth + 1, out);
      }
      pad(depth);
      out += '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) {
          out += indent >= 0 ? ", " : ",";
        }
        first = false;
        dump_value(v, indent, depth + 1, out);
      }
      out += ']';
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

struct Context {
  std::vector<std::string> args;
  std::string out_path;
  std::ostream* out = nullptr;
};

ordered_json base_manifest(const Context& ctx) {
  ordered_json m;
  m["artifact"] = "gkplat";
  m["version"] = kArtifactVersion;
  m["command"] = ctx.args;
  m["rng"] = kRngAlgorithm;
  m["workers"] = default_worker_count();
  return m;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  f << text;
  if (!f) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

void emit(const Context& ctx, const std::string& text) {
  if (ctx.out_path.empty()) {
    *ctx.out << text;
  } else {
    write_text(ctx.out_path, text);
  }
}

// CSV: "# manifest_sha256=..." line, header, rows. With --out the manifest is also
// written next to the CSV.
void emit_csv(const Context& ctx, ordered_json manifest, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::string body;
  for (std::size_t i = 0; i < header.size(); ++i) {
    body += (i ? "," : "") + header[i];
  }
  body += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      body += (i ? "," : "") + row[i];
    }
    body += '\n';
  }
  manifest["outputs"] = {{"body_sha256", sha256_hex(body)}, {"rows", rows.size()}};
  const std::string manifest_text = dump_json(manifest) + "\n";
  emit(ctx, "# manifest_sha256=" + sha256_hex(manifest_text) + "\n" + body);
  if (!ctx.out_path.empty()) {
    write_text(ctx.out_path + ".manifest.json", manifest_text);
  }
}

void emit_json(const Context& ctx, ordered_json manifest, ordered_json result) {
  manifest["outputs"] = {{"result_sha256", sha256_hex(dump_json(result))}};
  result["manifest"] = std::move(manifest);
  emit(ctx, dump_json(result) + "\n");
}

ordered_json estimate_json(const ErrorEstimate& e) {
  ordered_json j;
  j["p_hat"] = e.p_hat;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["trials"] = e.trials;
  j["failures"] = e.failures;
  j["seed"] = e.seed;
  j["rng"] = kRngAlgorithm;
  return j;
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed point component '" + item + "'");
    }
    if (used != item.size()) {
      throw UsageError("malformed point component '" + item + "'");
    }
    v.push_back(x);
  }
  if (v.empty()) {
    throw UsageError("empty point");
  }
  return v;
}

ordered_json doubles_json(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) {
    a.push_back(x);
  }
  return a;
}

ordered_json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) {
    return static_cast<long long>(v.get_si());
  }
  return v.get_str();
}

void cmd_rates(const Context& ctx, const std::string& grid_spec, double hbar) {
  const auto grid = grid_or_usage(grid_spec, "--sigma-sq-grid");
  std::vector<std::vector<std::string>> rows;
  for (double s2 : grid) {
    const NoiseModel noise{s2, hbar};
    rows.push_back({format_number(s2), format_number(coherent_information(noise)),
                    format_number(hw_upper_bound(noise)), format_number(sphere_packing_rate(noise)),
                    format_number(best_integer_lambda(noise).rate)});
  }
  ordered_json m = base_manifest(ctx);
  m["grid"] = {{"sigma_sq", grid_spec}, {"spacing", "log"}};
  m["hbar"] = hbar;
  emit_csv(ctx, std::move(m), {"sigma_sq", "coherent_info", "hw_upper", "sphere_packing", "integer_lambda_rate"},
           rows);
}

void cmd_concat_rates(const Context& ctx, const std::string& sigma_grid, const std::string& sigma_sq_grid,
                      double hbar, unsigned long d_max) {
  std::vector<double> variances;
  ordered_json m = base_manifest(ctx);
  if (!sigma_grid.empty()) {
    for (double s : grid_or_usage(sigma_grid, "--sigma-grid")) {
      variances.push_back(s * s);
    }
    m["grid"] = {{"sigma", sigma_grid}, {"spacing", "log"}};
  } else {
    variances = grid_or_usage(sigma_sq_grid, "--sigma-sq-grid");
    m["grid"] = {{"sigma_sq", sigma_sq_grid}, {"spacing", "log"}};
  }
  std::vector<std::vector<std::string>> rows;
  for (double s2 : variances) {
    const NoiseModel noise{s2, hbar};
    const ConcatDesign design = optimize_qudit_dimension(noise, d_max);
    rows.push_back({format_number(s2), std::to_string(design.d_opt), format_number(design.p),
                    format_number(design.rate_qubits), format_number(design.c_sq),
                    format_number(coherent_information(noise))});
  }
  m["hbar"] = hbar;
  m["d_max"] = d_max;
  emit_csv(ctx, std::move(m), {"sigma_sq", "d_opt", "p", "rate", "c_sq", "coherent_info"}, rows);
}

void cmd_classical_rates(const Context& ctx, const std::string& grid_spec) {
  const auto grid = grid_or_usage(grid_spec, "--snr-grid");
  std::vector<std::vector<std::string>> rows;
  for (double snr : grid) {
    const ClassicalParams params{1.0, 1.0 / snr};
    const ClassicalDesign design = optimize_classical_d(params);
    rows.push_back({format_number(snr), format_number(shannon_capacity(params)),
                    format_number(minkowski_lattice_rate(params)), format_number(debuda_rate(params)),
                    std::to_string(design.d_opt), format_number(design.rate)});
  }
  ordered_json m = base_manifest(ctx);
  m["grid"] = {{"snr", grid_spec}, {"spacing", "log"}};
  m["power"] = 1.0;
  emit_csv(ctx, std::move(m), {"snr", "capacity", "minkowski_rate", "debuda_rate", "d_opt", "concat_rate"}, rows);
}

void cmd_simulate(const Context& ctx, const std::string& lattice_name, double sigma_sq, double hbar,
                  std::uint64_t trials, std::uint64_t seed, const std::string& criterion_name) {
  Criterion criterion;
  try {
    criterion = parse_criterion(criterion_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (trials == 0) {
    throw UsageError("--trials must be at least 1");
  }
  const NoiseModel noise{sigma_sq, hbar};
  validate(noise);
  const LatticeCode code = make_lattice_code(resolve_lattice(lattice_name));
  const ErrorEstimate e = estimate_error_probability(code, noise, trials, seed, criterion);
  ordered_json r = estimate_json(e);
  r["criterion"] = to_string(criterion);
  r["lattice"] = lattice_name;
  r["sigma_sq"] = sigma_sq;
  r["hbar"] = hbar;
  r["lattice_variance"] = noise.lattice_variance();
  r["code_dimension"] = mpz_json(code.dimension);
  ordered_json m = base_manifest(ctx);
  m["seeds"] = {seed};
  emit_json(ctx, std::move(m), std::move(r));
}

void cmd_concat_sim(const Context& ctx, const std::string& code_name, unsigned long d, double sigma_sq, double hbar,
                    std::uint64_t trials, std::uint64_t seed) {
  if (d < 2) {
    throw UsageError("--d must be at least 2");
  }
  if (trials == 0) {
    throw UsageError("--trials must be at least 1");
  }
  CssCode code = [&] {
    if (code_name == "shor9") {
      return shor9_code(d);
    }
    if (code_name == "trivial") {
      return trivial_code(d);
    }
    throw UsageError("unknown code '" + code_name + "' (expected shor9 or trivial)");
  }();
  const NoiseModel noise{sigma_sq, hbar};
  validate(noise);
  const ErrorEstimate e = simulate_concatenated(code, noise, trials, seed);
  ordered_json r = estimate_json(e);
  r["code"] = code_name;
  r["d"] = d;
  r["sigma_sq"] = sigma_sq;
  r["hbar"] = hbar;
  if (sigma_sq > 0.0) {
    r["qudit_error_bound"] = gkp_qudit_error_prob(d, noise);
  }
  ordered_json m = base_manifest(ctx);
  m["seeds"] = {seed};
  emit_json(ctx, std::move(m), std::move(r));
}

void cmd_lattice_info(const Context& ctx, const std::string& name) {
  std::optional<CatalogEntry> entry;
  try {
    entry = get_catalog_entry(name);
  } catch (const std::invalid_argument&) {
  }
  const Lattice lat = entry ? entry->lattice : read_lattice_file(name);
  ordered_json r;
  r["name"] = entry ? entry->name : name;
  r["n"] = lat.dim();
  r["lambda"] = format_rational(lat.scale_sq());
  r["det_basis"] = format_rational(lat.basis().determinant());
  const bool integral = is_symplectically_integral(lat);
  r["symplectically_integral"] = integral;
  if (integral) {
    const mpz_class m = code_dimension(lat);
    r["self_dual"] = m == 1;
    r["m"] = mpz_json(m);
    r["rate_qubits"] = std::log2(m.get_d()) / static_cast<double>(lat.modes());
  } else {
    r["self_dual"] = false;
    r["m"] = nullptr;
    r["rate_qubits"] = nullptr;
  }
  const LatticeDecoder decoder(lat);
  const ShortestVector sv = decoder.shortest_vector();
  r["shortest_vector"] = doubles_json(sv.vector);
  r["shortest_sq"] = sv.length_sq;
  r["packing_radius"] = std::sqrt(sv.length_sq) / 2.0;
  if (integral) {
    const ShortestVector nsv = LatticeDecoder(dual_lattice(lat)).shortest_vector();
    r["normalizer_shortest_sq"] = nsv.length_sq;
  }
  if (entry && entry->known_shortest_sq) {
    r["known_shortest_sq"] = format_rational(*entry->known_shortest_sq);
  }
  if (entry) {
    r["notes"] = entry->notes;
  }
  emit_json(ctx, base_manifest(ctx), std::move(r));
}

void cmd_decode(const Context& ctx, const std::string& name, const std::string& point_text) {
  const std::vector<double> x = parse_point(point_text);
  const Lattice lat = resolve_lattice(name);
  if (x.size() != lat.dim()) {
    throw UsageError("point has " + std::to_string(x.size()) + " components, lattice dimension is " +
                     std::to_string(lat.dim()));
  }
  const DecodeResult d = closest_point(lat, x);
  ordered_json r;
  r["closest"] = doubles_json(d.closest);
  r["coeffs"] = d.coeffs;
  r["dist_sq"] = d.dist_sq;
  r["tie"] = d.tie;
  r["in_voronoi_cell"] = !d.tie && std::all_of(d.coeffs.begin(), d.coeffs.end(), [](auto c) { return c == 0; });
  emit_json(ctx, base_manifest(ctx), std::move(r));
}

}  // namespace

std::vector<double> parse_log_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    parts.push_back(item);
  }
  if (parts.size() != 3) {
    throw std::invalid_argument("grid must be start:stop:points, got '" + spec + "'");
  }
  double start = 0.0;
  double stop = 0.0;
  long points = 0;
  try {
    std::size_t u0 = 0;
    std::size_t u1 = 0;
    std::size_t u2 = 0;
    start = std::stod(parts[0], &u0);
    stop = std::stod(parts[1], &u1);
    points = std::stol(parts[2], &u2);
    if (u0 != parts[0].size() || u1 != parts[1].size() || u2 != parts[2].size()) {
      throw std::invalid_argument(spec);
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed grid '" + spec + "'");
  }
  if (!(start > 0.0) || !(stop > 0.0) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw std::invalid_argument("log grid bounds must be positive, got '" + spec + "'");
  }
  if (points < 1 || points > 10'000'000) {
    throw std::invalid_argument("grid points must be in [1, 1e7], got '" + spec + "'");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  if (points == 1) {
    grid[0] = start;
    return grid;
  }
  const double l0 = std::log(start);
  const double l1 = std::log(stop);
  for (long i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  grid.front() = start;
  grid.back() = stop;
  return grid;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const ordered_json& j, int indent) {
  std::string out;
  dump_value(j, indent, 0, out);
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice stabilizer codes for the Gaussian quantum channel: rates, decoding, simulation", "gkplat"};
  app.require_subcommand(1);
  app.footer(
      "Grids are start:stop:points with logarithmic spacing, both ends included.\n"
      "hbar defaults to 1. GKPLAT_WORKERS sets the Monte Carlo worker count.");

  Context ctx;
  ctx.args = args;
  ctx.out = &out;

  std::string grid;
  std::string sigma_grid;
  std::string lattice_name;
  std::string criterion = "voronoi";
  std::string code_name = "shor9";
  std::string point;
  double hbar = 1.0;
  double sigma_sq = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned long d = 2;
  unsigned long d_max = 0;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", ctx.out_path, "Output file (default stdout)"); };

  auto* rates = app.add_subcommand("rates", "Closed-form quantum rates over a sigma^2 grid (CSV)");
  rates->add_option("--sigma-sq-grid", grid, "start:stop:points over sigma^2")->required();
  rates->add_option("--hbar", hbar, "Planck constant")->check(CLI::PositiveNumber);
  add_out(rates);

  auto* concat = app.add_subcommand("concat-rates", "Optimized concatenated-code rates (CSV)");
  auto* sg = concat->add_option("--sigma-grid", sigma_grid, "start:stop:points over sigma (standard deviation)");
  auto* ssg = concat->add_option("--sigma-sq-grid", grid, "start:stop:points over sigma^2");
  sg->excludes(ssg);
  concat->add_option("--hbar", hbar, "Planck constant")->check(CLI::PositiveNumber);
  concat->add_option("--d-max", d_max, "Largest qudit dimension scanned (default ceil(8 hbar / sigma^2))");
  add_out(concat);

  auto* classical = app.add_subcommand("classical-rates", "Classical channel rates over an SNR grid, P = 1 (CSV)");
  classical->add_option("--snr-grid", grid, "start:stop:points over P / sigma^2")->required();
  add_out(classical);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical error of a lattice code (JSON)");
  simulate->add_option("--lattice", lattice_name, "Catalog name (Zn:<n>, D4, E8, grid_qudit:<d>) or lattice file")
      ->required();
  simulate->add_option("--sigma-sq", sigma_sq, "Displacement variance per quadrature")->required()->check(
      CLI::NonNegativeNumber);
  simulate->add_option("--hbar", hbar, "Planck constant")->check(CLI::PositiveNumber);
  simulate->add_option("--trials", trials, "Number of trials")->required();
  simulate->add_option("--seed", seed, "Master seed")->required();
  simulate->add_option("--criterion", criterion, "voronoi or coset");
  add_out(simulate);

  auto* csim = app.add_subcommand("concat-sim", "Monte Carlo of a grid-qudit code concatenated with a CSS code (JSON)");
  csim->add_option("--code", code_name, "shor9 or trivial");
  csim->add_option("--d", d, "Qudit dimension")->required();
  csim->add_option("--sigma-sq", sigma_sq, "Displacement variance per quadrature")->required()->check(
      CLI::NonNegativeNumber);
  csim->add_option("--hbar", hbar, "Planck constant")->check(CLI::PositiveNumber);
  csim->add_option("--trials", trials, "Number of trials")->required();
  csim->add_option("--seed", seed, "Master seed")->required();
  add_out(csim);

  auto* info = app.add_subcommand("lattice-info", "Invariants of a catalog lattice or lattice file (JSON)");
  info->add_option("name", lattice_name, "Catalog name or lattice file")->required();
  add_out(info);

  auto* decode = app.add_subcommand("decode", "Closest lattice point (JSON)");
  decode->add_option("lattice", lattice_name, "Catalog name or lattice file")->required();
  decode->add_option("point", point, "Comma-separated coordinates")->required();
  add_out(decode);

  std::vector<const char*> argv{"gkplat"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (rates->parsed()) {
      cmd_rates(ctx, grid, hbar);
    } else if (concat->parsed()) {
      if (sigma_grid.empty() && grid.empty()) {
        throw UsageError("concat-rates needs --sigma-grid or --sigma-sq-grid");
      }
      cmd_concat_rates(ctx, sigma_grid, grid, hbar, d_max);
    } else if (classical->parsed()) {
      cmd_classical_rates(ctx, grid);
    } else if (simulate->parsed()) {
      cmd_simulate(ctx, lattice_name, sigma_sq, hbar, trials, seed, criterion);
    } else if (csim->parsed()) {
      cmd_concat_sim(ctx, code_name, d, sigma_sq, hbar, trials, seed);
    } else if (info->parsed()) {
      cmd_lattice_info(ctx, lattice_name);
    } else if (decode->parsed()) {
      cmd_decode(ctx, lattice_name, point);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace gkplat
