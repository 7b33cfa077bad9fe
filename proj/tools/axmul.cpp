// Command-line front end: table sweeps, single-design evaluation, Pareto
// analysis, catalog dumps and image blending.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <semaphore>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "axmul/compressors.hpp"
#include "axmul/cost_model.hpp"
#include "axmul/error_metrics.hpp"
#include "axmul/fa_cells.hpp"
#include "axmul/imaging.hpp"
#include "axmul/mult8.hpp"
#include "axmul/mult_compose.hpp"
#include "axmul/multiplier.hpp"

namespace {

using namespace axmul;

// Shortest decimal form that parses back to the same double.
std::string fmt_double(double v) {
  char buf[64];
  if (v == static_cast<double>(static_cast<long long>(v)) &&
      std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    return buf;
  }
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

constexpr const char* kSweepHeader =
    "name,mred,med,er,nmed,delay_ps,power_uw,size,pdp_fj,area_red_pct,"
    "pdp_red_pct";

struct SweepRow {
  std::string name;
  double mred, med, er, nmed;
  std::optional<double> delay_ps;
  double power_uw;
  long size;
  double pdp_fj;
  double area_red_pct;
  double pdp_red_pct;
};

std::string format_row(const SweepRow& r) {
  std::ostringstream out;
  out << r.name << ',' << fmt_double(r.mred) << ',' << fmt_double(r.med) << ','
      << fmt_double(r.er) << ',' << fmt_double(r.nmed) << ','
      << (r.delay_ps ? fmt_double(*r.delay_ps) : std::string()) << ','
      << fmt_double(r.power_uw) << ',' << r.size << ',' << fmt_double(r.pdp_fj)
      << ',' << fmt_double(r.area_red_pct) << ',' << fmt_double(r.pdp_red_pct);
  return out.str();
}

std::string exact_baseline_for(const std::string& cls) {
  if (cls == "mult8_array") return "EE";
  if (cls == "mult8_tree") return "CEE";
  if (cls == "mult16_array") return "16EE";
  if (cls == "mult16_tree") return "16CEE";
  if (cls == "cell") return "E";
  throw std::invalid_argument("no exact baseline for class " + cls);
}

SweepRow hardware_columns(const CatalogEntry& entry) {
  const Catalog& cat = Catalog::instance();
  const CatalogEntry& base = cat.lookup(exact_baseline_for(entry.cls));
  SweepRow row;
  row.name = entry.name;
  row.delay_ps = entry.delay_ps;
  row.power_uw = entry.power_unit == "nW" ? entry.power / 1000.0 : entry.power;
  row.size = entry.size;
  row.pdp_fj = pdp(entry);
  row.area_red_pct = reduction(base, entry, CostMetric::Area);
  row.pdp_red_pct = reduction(base, entry, CostMetric::Pdp);
  return row;
}

// Error metrics of a bare cell over its 8 input rows; ED is taken on the
// two-bit output value sum + 2*cout.
void cell_error_columns(FAKind kind, SweepRow& row) {
  uint64_t sum_ed = 0;
  int errs = 0;
  double red_sum = 0.0;
  int red_n = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const BitPair out = fa_eval(kind, static_cast<uint8_t>(a),
                                    static_cast<uint8_t>(b),
                                    static_cast<uint8_t>(c));
        const int exact = a + b + c;
        const int approx = out.sum + 2 * out.carry;
        const int dist = std::abs(exact - approx);
        if (dist != 0) ++errs;
        sum_ed += static_cast<uint64_t>(dist);
        if (exact != 0) {
          red_sum += static_cast<double>(dist) / exact;
          ++red_n;
        }
      }
  row.er = errs / 8.0;
  row.med = static_cast<double>(sum_ed) / 8.0;
  row.nmed = row.med / 3.0;  // max exact output of a full adder
  row.mred = red_sum / red_n;
}

ErrorReport evaluate_design(const std::string& name, bool sampled,
                            uint64_t samples, uint64_t seed, int workers) {
  const auto m = make_multiplier(name);
  EvalOptions opts;
  opts.workers = workers;
  if (sampled) return eval_sampled(*m, samples, seed, opts);
  return eval_exhaustive(*m, opts);
}

nlohmann::json report_json(const ErrorReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["mode"] = r.mode == EvalMode::Exhaustive ? "exhaustive" : "sampled";
  j["er"] = r.er;
  j["med"] = r.med;
  j["nmed"] = r.nmed;
  j["mred"] = r.mred;
  j["max_ed"] = r.max_ed;
  j["mred_skipped"] = r.mred_skipped;
  if (r.mode == EvalMode::Sampled) {
    j["samples"] = r.sample_count;
    j["seed"] = r.seed;
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

int cmd_cells_list() {
  std::cout << "kind,size,power_nw,delay_ps,pdp_fj,error_rows\n";
  for (FAKind kind : kAllFAKinds) {
    const CellMetrics& m = cell_metrics(kind);
    std::cout << fa_short_name(kind) << ',' << m.size << ','
              << fmt_double(m.power_nw) << ',' << fmt_double(m.delay_ps) << ','
              << fmt_double(m.pdp_fj) << ',' << fa_error_rows(kind) << '\n';
  }
  return 0;
}

int cmd_cells_truth(const std::string& kind_name) {
  const auto kind = parse_fa_kind(kind_name);
  if (!kind) throw std::invalid_argument("unknown cell kind: " + kind_name);
  std::cout << "a b cin : sum cout\n";
  for (int row = 0; row < 8; ++row) {
    const uint8_t a = static_cast<uint8_t>(row >> 2);
    const uint8_t b = static_cast<uint8_t>((row >> 1) & 1);
    const uint8_t c = static_cast<uint8_t>(row & 1);
    const BitPair out = fa_eval(*kind, a, b, c);
    std::printf("%d %d %d   : %d   %d\n", a, b, c, out.sum, out.carry);
  }
  return 0;
}

std::string dump_net_json(const std::string& name) {
  const auto m = make_multiplier(name);
  if (const auto* m8 = dynamic_cast<const Mult8*>(m.get()))
    return m8->net().to_json();
  const auto* comp = dynamic_cast<const ComposedMultiplier*>(m.get());
  nlohmann::json j;
  j["name"] = name;
  for (const auto& [key, block] :
       {std::pair{"hh", &comp->hh()}, {"hl", &comp->hl()},
        {"lh", &comp->lh()}, {"ll", &comp->ll()}}) {
    const auto* b8 = dynamic_cast<const Mult8*>(block);
    j[key] = nlohmann::json::parse(b8->net().to_json());
    j[key]["design"] = b8->name();
  }
  return j.dump(2);
}

int cmd_eval(const std::string& design, const std::string& mode,
             uint64_t samples, uint64_t seed, int threads,
             const std::string& csv_path, const std::string& dump_net) {
  const auto m = make_multiplier(design);  // validates the name up front
  bool sampled = m->width() > 12;
  if (mode == "exhaustive") sampled = false;
  else if (mode == "sampled") sampled = true;
  else if (!mode.empty() && mode != "auto")
    throw std::invalid_argument("unknown mode: " + mode);
  if (!sampled && m->width() > 12)
    throw std::invalid_argument("exhaustive mode is limited to width 12");

  const ErrorReport r = evaluate_design(design, sampled, samples, seed, threads);
  std::cout << report_json(r).dump(2) << '\n';

  if (!csv_path.empty()) {
    SweepRow row = hardware_columns(Catalog::instance().lookup(design));
    row.mred = r.mred;
    row.med = r.med;
    row.er = r.er;
    row.nmed = r.nmed;
    write_text_file(csv_path,
                    std::string(kSweepHeader) + '\n' + format_row(row) + '\n');
  }
  if (!dump_net.empty()) write_text_file(dump_net, dump_net_json(design) + "\n");
  return 0;
}

int cmd_sweep(const std::string& set, const std::string& mode,
              const std::string& out_path, uint64_t samples, uint64_t seed,
              int threads) {
  const Catalog& cat = Catalog::instance();
  std::ostringstream out;
  out << kSweepHeader << '\n';

  if (set == "cells") {
    for (FAKind kind : kAllFAKinds) {
      SweepRow row = hardware_columns(cat.lookup(std::string(fa_short_name(kind))));
      cell_error_columns(kind, row);
      out << format_row(row) << '\n';
    }
  } else {
    const std::map<std::string, std::string> set_class = {
        {"array8", "mult8_array"},
        {"tree8", "mult8_tree"},
        {"array16", "mult16_array"},
        {"tree16", "mult16_tree"}};
    const auto it = set_class.find(set);
    if (it == set_class.end())
      throw std::invalid_argument("unknown sweep set: " + set);
    const auto designs = cat.by_class(it->second);
    bool sampled = set == "array16" || set == "tree16";
    if (mode == "exhaustive") sampled = false;
    else if (mode == "sampled") sampled = true;
    else if (!mode.empty() && mode != "auto")
      throw std::invalid_argument("unknown mode: " + mode);

    // Designs evaluate concurrently; the row order stays the catalog
    // (table) order.
    std::vector<ErrorReport> reports(designs.size());
    {
      std::counting_semaphore<256> slots(std::max(1, threads));
      std::vector<std::jthread> workers;
      workers.reserve(designs.size());
      for (size_t i = 0; i < designs.size(); ++i) {
        slots.acquire();
        workers.emplace_back([&, i] {
          reports[i] =
              evaluate_design(designs[i]->name, sampled, samples, seed, 1);
          slots.release();
        });
      }
    }
    for (size_t i = 0; i < designs.size(); ++i) {
      SweepRow row = hardware_columns(*designs[i]);
      row.mred = reports[i].mred;
      row.med = reports[i].med;
      row.er = reports[i].er;
      row.nmed = reports[i].nmed;
      out << format_row(row) << '\n';
    }
  }

  if (out_path.empty())
    std::cout << out.str();
  else
    write_text_file(out_path, out.str());
  return 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

int cmd_pareto(const std::string& in_path, const std::string& max_cols,
               const std::string& min_cols, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open " + in_path);
  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error("empty CSV: " + in_path);
  const auto columns = split(header, ',');
  std::map<std::string, size_t> col_index;
  for (size_t i = 0; i < columns.size(); ++i) col_index[columns[i]] = i;
  if (!col_index.count("name"))
    throw std::runtime_error("CSV has no name column");

  ObjectiveSchema schema;
  std::vector<size_t> obj_cols;
  const auto add_objectives = [&](const std::string& list, Direction dir) {
    if (list.empty()) return;
    for (const std::string& col : split(list, ',')) {
      const auto it = col_index.find(col);
      if (it == col_index.end())
        throw std::runtime_error("no such column: " + col);
      schema.names.push_back(col);
      schema.directions.push_back(dir);
      obj_cols.push_back(it->second);
    }
  };
  add_objectives(max_cols, Direction::Maximize);
  add_objectives(min_cols, Direction::Minimize);
  if (schema.names.empty())
    throw std::runtime_error("no objectives given (use --max/--min)");

  std::vector<ParetoPoint> points;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() < columns.size())
      throw std::runtime_error("malformed CSV row: " + line);
    ParetoPoint p;
    p.name = fields[col_index["name"]];
    for (size_t c : obj_cols) p.values.push_back(std::stod(fields[c]));
    points.push_back(std::move(p));
    lines.push_back(line);
  }
  const auto front = pareto_front(schema, points);

  std::map<std::string, bool> on_front;
  for (const ParetoPoint& p : front) on_front[p.name] = true;
  std::ostringstream out;
  out << header << '\n';
  for (size_t i = 0; i < points.size(); ++i)
    if (on_front.count(points[i].name)) out << lines[i] << '\n';
  if (out_path.empty())
    std::cout << out.str();
  else
    write_text_file(out_path, out.str());
  return 0;
}

int cmd_blend(const std::string& a_path, const std::string& b_path,
              const std::string& design, const std::string& out_path,
              const std::string& ref_out_path) {
  const GrayImage a = read_pgm_file(a_path);
  const GrayImage b = read_pgm_file(b_path);
  const auto m = make_multiplier(design);
  const GrayImage blended = blend(a, b, *m);
  const GrayImage reference = blend_exact(a, b);
  write_pgm_file(blended, out_path);
  if (!ref_out_path.empty()) write_pgm_file(reference, ref_out_path);

  const Catalog& cat = Catalog::instance();
  const CatalogEntry& entry = cat.lookup(design);
  const double pdp_red =
      reduction(cat.lookup(exact_baseline_for(entry.cls)), entry, CostMetric::Pdp);
  const double quality = snr(reference, blended);

  nlohmann::json j;
  j["design"] = design;
  if (std::isfinite(quality))
    j["snr_db"] = quality;
  else
    j["snr_db"] = quality > 0 ? "inf" : "-inf";
  j["pdp_red_pct"] = pdp_red;
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_catalog_dump() {
  std::cout << "name,class,delay_ps,power,power_unit,size,source_table\n";
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    std::cout << e.name << ',' << e.cls << ','
              << (e.delay_ps ? fmt_double(*e.delay_ps) : std::string()) << ','
              << fmt_double(e.power) << ',' << e.power_unit << ',' << e.size
              << ',' << e.source_table << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate multiplier simulator and design-space explorer"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --threads appear after the subcommand too
  int threads = default_threads();
  app.add_option("--threads", threads, "worker thread cap")
      ->check(CLI::PositiveNumber);

  auto* cells = app.add_subcommand("cells", "cell truth tables and metrics");
  cells->require_subcommand(1);
  cells->add_subcommand("list", "CSV of all 12 cell kinds");
  auto* truth = cells->add_subcommand("truth", "print a cell truth table");
  std::string kind_name;
  truth->add_option("kind", kind_name, "cell kind (short or long name)")
      ->required();

  auto* eval = app.add_subcommand("eval", "evaluate one design");
  std::string design, mode = "auto", csv_path, dump_net_path;
  uint64_t samples = 1'000'000, seed = 42;
  eval->add_option("--design", design, "design name")->required();
  eval->add_option("--mode", mode, "auto|exhaustive|sampled");
  eval->add_option("--samples", samples, "sample count (sampled mode)");
  eval->add_option("--seed", seed, "sample stream seed");
  eval->add_option("--csv", csv_path, "also write a one-row CSV here");
  eval->add_option("--dump-net", dump_net_path,
                   "write the structural net listing (JSON) here");

  auto* sweep = app.add_subcommand("sweep", "evaluate a whole design set");
  std::string set, sweep_mode = "auto", sweep_out;
  uint64_t sweep_samples = 1'000'000, sweep_seed = 42;
  sweep->add_option("--set", set, "cells|array8|tree8|array16|tree16")
      ->required();
  sweep->add_option("--mode", sweep_mode, "auto|exhaustive|sampled");
  sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
  sweep->add_option("--samples", sweep_samples, "samples per 16x16 design");
  sweep->add_option("--seed", sweep_seed, "sample stream seed");

  auto* pareto = app.add_subcommand("pareto", "extract the Pareto front");
  std::string pareto_in, max_cols, min_cols, pareto_out;
  pareto->add_option("--in", pareto_in, "input CSV (from sweep)")->required();
  pareto->add_option("--max", max_cols, "comma list of maximized columns");
  pareto->add_option("--min", min_cols, "comma list of minimized columns");
  pareto->add_option("--out", pareto_out, "output CSV path (default stdout)");

  auto* blendc = app.add_subcommand("blend", "pixel-wise multiply two images");
  std::string a_path, b_path, blend_design, blend_out, ref_out;
  blendc->add_option("--a", a_path, "first PGM image")->required();
  blendc->add_option("--b", b_path, "second PGM image")->required();
  blendc->add_option("--design", blend_design, "multiplier design")->required();
  blendc->add_option("--out", blend_out, "output PGM path")->required();
  blendc->add_option("--ref-out", ref_out, "also write the exact blend here");

  auto* catalog = app.add_subcommand("catalog", "hardware catalog access");
  catalog->require_subcommand(1);
  catalog->add_subcommand("dump", "CSV of every catalog row");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cells->parsed()) {
      if (cells->get_subcommand("list")->parsed()) return cmd_cells_list();
      return cmd_cells_truth(kind_name);
    }
    if (eval->parsed())
      return cmd_eval(design, mode, samples, seed, threads, csv_path,
                      dump_net_path);
    if (sweep->parsed())
      return cmd_sweep(set, sweep_mode, sweep_out, sweep_samples, sweep_seed,
                       threads);
    if (pareto->parsed())
      return cmd_pareto(pareto_in, max_cols, min_cols, pareto_out);
    if (blendc->parsed())
      return cmd_blend(a_path, b_path, blend_design, blend_out, ref_out);
    if (catalog->parsed()) return cmd_catalog_dump();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
