// Command-line front end: exact counts, table sweeps, strip and family
// constant estimation, chart data export, and oracle verification runs.

#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hsq/cache.hpp"
#include "hsq/constants.hpp"
#include "hsq/errors.hpp"
#include "hsq/reference.hpp"
#include "hsq/tensor_oracle.hpp"
#include "hsq/transfer.hpp"

using namespace hsq;

namespace {

struct Options {
  std::string topology = "grid";
  std::string family = "plane";
  int m = 0, n = 0;
  int max_m = 0, max_n = 0;
  int digits = 15;
  std::string backend = "bigint";
  int threads = 0;
  std::string cache_path;
  std::string out_path;
  std::string format = "csv";
  std::string sequence_label;
  long offset = 1;
  int tail = kDefaultTail;
  int ratio = 1;
  int cap = 24;
  bool verbose = false;
};

Topology need_topology(const Options& o) {
  Topology t;
  if (!parse_topology(o.topology, &t))
    throw CLI::ValidationError("--topology", "unknown topology '" + o.topology + "'");
  return t;
}

Family need_family(const Options& o) {
  Family f;
  if (!parse_family(o.family, &f))
    throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
  return f;
}

Backend need_backend(const Options& o) {
  Backend b;
  if (!parse_backend(o.backend, &b))
    throw CLI::ValidationError("--backend", "unknown backend '" + o.backend + "'");
  return b;
}

GridInstance instance_from(const Options& o) {
  Topology t = need_topology(o);
  if (t == Topology::TriTriangle) {
    if (o.m > 0)
      throw CLI::ValidationError("--m", "tri-triangle takes a single size parameter --n");
    if (o.n < 1) throw CLI::ValidationError("--n", "required");
    return GridInstance::triangle(o.n);
  }
  if (o.m < 1 || o.n < 1) throw CLI::ValidationError("--m/--n", "required and >= 1");
  return GridInstance(t, o.m, o.n);
}

std::unique_ptr<CountCache> open_cache(const Options& o) {
  if (o.cache_path.empty()) return std::make_unique<CountCache>();
  return std::make_unique<CountCache>(o.cache_path);
}

std::ostream& open_out(const Options& o, std::ofstream& file) {
  if (o.out_path.empty()) return std::cout;
  file.open(o.out_path);
  if (!file.is_open()) throw std::runtime_error("cannot open output file " + o.out_path);
  return file;
}

uint64_t state_space_size(const GridInstance& inst) {
  switch (inst.topology) {
    case Topology::Cylinder: return cyclic_state_count(inst.m);
    case Topology::TriTriangle: return path_state_count(inst.n);
    default: return path_state_count(inst.m);
  }
}

// ---------------------------------------------------------------------- count

int cmd_count(const Options& o) {
  GridInstance inst = instance_from(o);
  auto cache = open_cache(o);
  Engine engine({}, cache.get());
  ExactCount c = engine.count(inst, need_backend(o));
  std::cout << c.get_str() << "\n";
  if (o.verbose) {
    std::cerr << "# instance: " << inst.str() << "\n";
    std::cerr << "# state space: " << state_space_size(inst) << "\n";
    std::cerr << "# backend: " << o.backend << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------- table

int cmd_table(const Options& o) {
  Topology topo = need_topology(o);
  const bool tri = topo == Topology::TriTriangle;
  if (o.max_n < 1 || (!tri && o.max_m < 1))
    throw CLI::ValidationError("--max-m/--max-n", "required and >= 1");
  const bool bfile = o.format == "bfile";
  if (!bfile && o.format != "csv")
    throw CLI::ValidationError("--format", "table supports csv or bfile");

  auto cache = open_cache(o);
  Engine engine({}, cache.get());
  Backend backend = need_backend(o);
  std::ofstream file;
  std::ostream& out = open_out(o, file);

  const int max_m = tri ? 1 : o.max_m;
  std::vector<std::vector<ExactCount>> columns(max_m + 1);
  std::string capacity_failure;
  for (int m = 1; m <= max_m; ++m) {
    try {
      columns[m] = engine.column_counts(topo, tri ? o.max_n : m, o.max_n, backend);
    } catch (const CapacityError& e) {
      capacity_failure = e.what();
      break;
    }
  }

  if (bfile) {
    if (!o.sequence_label.empty()) out << "# " << o.sequence_label << "\n";
    long index = o.offset;
    if (tri) {
      for (int n = 1; n <= o.max_n && n <= int(columns[1].size()); ++n)
        out << index++ << " " << columns[1][n - 1].get_str() << "\n";
    } else {
      // antidiagonal order: m+n ascending, then m ascending. A truncated
      // sweep stops at the first incomplete antidiagonal so the emitted
      // indices stay a clean prefix of the enumeration.
      bool complete = true;
      for (int d = 2; d <= max_m + o.max_n && complete; ++d)
        for (int m = 1; m <= max_m && m < d; ++m) {
          int n = d - m;
          if (n < 1 || n > o.max_n) continue;
          if (columns[m].empty()) {
            complete = false;
            break;
          }
          out << index++ << " " << columns[m][n - 1].get_str() << "\n";
        }
    }
  } else {
    out << "m,n,count\n";
    for (int m = 1; m <= max_m; ++m)
      for (int n = 1; n <= int(columns[m].size()); ++n)
        out << (tri ? n : m) << "," << n << "," << columns[m][n - 1].get_str() << "\n";
  }
  out.flush();
  if (!capacity_failure.empty()) {
    std::cerr << "table: sweep truncated: " << capacity_failure << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------- strip

void print_bracket(std::ostream& out, const std::string& prefix, const Bracket& b, int digits) {
  out << prefix << ".lower = " << b.lower.str(digits) << "\n";
  out << prefix << ".upper = " << b.upper.str(digits) << "\n";
  out << prefix << ".digits_agreed = " << b.digits_agreed << "\n";
}

int cmd_strip(const Options& o) {
  Topology topo = need_topology(o);
  if (o.m < 1 || o.max_n < 5) throw CLI::ValidationError("--m/--max-n", "required");
  auto cache = open_cache(o);
  Engine engine({}, cache.get());
  std::ofstream file;
  std::ostream& out = open_out(o, file);
  StripConstants sc = strip_constants(engine, topo, o.m, o.max_n, o.digits, o.tail);
  out << "strip.topology = " << o.topology << "\n";
  out << "strip.m = " << o.m << "\n";
  out << "strip.max_n = " << o.max_n << "\n";
  out << "strip.digits = " << o.digits << "\n";
  out << "strip.tail = " << o.tail << "\n";
  print_bracket(out, "strip.f", sc.f_strip, o.digits);
  print_bracket(out, "strip.k", sc.k_strip, o.digits);
  return 0;
}

// ------------------------------------------------------------------ constants

int cmd_constants(const Options& o) {
  Family family = need_family(o);
  FamilyBudget budget = default_budget(family);
  int m_max = o.max_m > 0 ? o.max_m : budget.m_max;
  int n_max = o.max_n > 0 ? o.max_n : budget.n_max;
  auto cache = open_cache(o);
  Engine engine({}, cache.get());
  std::ofstream file;
  std::ostream& out = open_out(o, file);

  ConstantReport report = estimate_family_constants(engine, family, m_max, n_max, o.digits, o.tail);
  const std::string fam = family_name(family);
  out << fam << ".m_max = " << report.m_max << "\n";
  out << fam << ".n_max = " << report.n_max << "\n";
  out << fam << ".digits = " << report.digits << "\n";
  out << fam << ".tail = " << report.tail << "\n";
  out << fam << ".pair_gap = " << report.pair_gap << "\n";
  size_t failed = 0;
  for (const auto& rec : report.records) {
    if (rec.bracket) {
      print_bracket(out, fam + "." + rec.name, *rec.bracket, o.digits);
    } else {
      out << fam << "." << rec.name << ".error = " << rec.error << "\n";
      ++failed;
    }
  }
  if (failed == report.records.size()) {
    std::cerr << "constants: no constant stabilized\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------- chart

int cmd_chart(const std::string& id, const Options& o) {
  auto cache = open_cache(o);
  Engine engine({}, cache.get());
  std::ofstream file;
  std::ostream& out = open_out(o, file);

  auto strip_for = [&](Topology t, int m) {
    return strip_constants(engine, t, m, o.max_n > 0 ? o.max_n : 64, o.digits, o.tail);
  };

  if (id == "f-vs-n-ratio") {
    Topology topo = need_topology(o);
    if (o.ratio < 1 || o.max_n < 1) throw CLI::ValidationError("--ratio/--max-n", "required");
    out << "n,f,f_minus\n";
    for (int n = 1; n <= o.max_n; ++n) {
      GridInstance inst(topo, n, o.ratio * n);
      FreeEnergySample s = free_energy(inst, engine.count(inst), o.digits);
      out << n << "," << s.f.str() << "," << s.fminus().str() << "\n";
    }
  } else if (id == "f-small") {
    Topology topo = need_topology(o);
    if (o.max_m < 1 || o.max_n < 1) throw CLI::ValidationError("--max-m/--max-n", "required");
    out << "m,n,f,f_minus\n";
    for (int m = 1; m <= o.max_m; ++m) {
      auto counts = engine.column_counts(topo, m, o.max_n);
      for (int n = 1; n <= o.max_n; ++n) {
        FreeEnergySample s = free_energy(GridInstance(topo, m, n), counts[n - 1], o.digits);
        out << m << "," << n << "," << s.f.str() << "," << s.fminus().str() << "\n";
      }
    }
  } else if (id == "strip-f" || id == "strip-k") {
    Topology topo = need_topology(o);
    if (o.max_m < 1) throw CLI::ValidationError("--max-m", "required");
    out << "m,lower,upper\n";
    for (int m = 1; m <= o.max_m; ++m) {
      StripConstants sc = strip_for(topo, m);
      const Bracket& b = id == "strip-f" ? sc.f_strip : sc.k_strip;
      out << m << "," << b.lower.str() << "," << b.upper.str() << "\n";
    }
  } else if (id == "strip-compare") {
    if (o.max_m < 1) throw CLI::ValidationError("--max-m", "required");
    out << "m,grid_lower,grid_upper,cylinder_lower,cylinder_upper,twisted_lower,twisted_upper\n";
    for (int m = 1; m <= o.max_m; ++m) {
      out << m;
      for (Topology t : {Topology::PlaneGrid, Topology::Cylinder, Topology::TwistedCylinder}) {
        StripConstants sc = strip_for(t, m);
        out << "," << sc.f_strip.lower.str() << "," << sc.f_strip.upper.str();
      }
      out << "\n";
    }
  } else if (id == "tilde-k") {
    // adjacent-pair slope of the strip constants against 1/m
    Family family = need_family(o);
    Topology topo = family_topology(family);
    if (o.max_m < 2) throw CLI::ValidationError("--max-m", "required, >= 2");
    out << "m,ktilde\n";
    std::optional<BigFloat> prev;
    for (int m = 1; m <= o.max_m; ++m) {
      BigFloat fs = strip_for(topo, m).f_strip.mid();
      if (prev) {
        auto [icpt, slope] =
            two_point_extrapolate(BigFloat::ratio(1, m - 1, o.digits), *prev,
                                  BigFloat::ratio(1, m, o.digits), fs);
        (void)icpt;
        out << m << "," << slope.str() << "\n";
      }
      prev = fs;
    }
  } else {
    throw CLI::ValidationError("chart", "unknown chart id '" + id + "'");
  }
  return 0;
}

// --------------------------------------------------------------------- verify

int cmd_verify(const Options& o) {
  auto cache = open_cache(o);
  Engine engine({}, cache.get());
  int failures = 0;
  for (Topology topo : kAllTopologies) {
    int checked = 0;
    for (int m = 1; m <= o.cap; ++m) {
      for (int n = 1; n <= o.cap; ++n) {
        if (topo == Topology::TriTriangle && m != n) continue;
        GridInstance inst(topo, m, n);
        if (inst.vertex_count() > o.cap) continue;
        ExactCount expected = brute_force_count(inst, o.cap);
        ExactCount big = engine.count(inst, Backend::Bigint);
        ExactCount crt = engine.count(inst, Backend::Crt);
        ExactCount ref = reference_count(inst);
        bool ok = big == expected && crt == expected && ref == expected;
        if (topo == Topology::PlaneGrid && m <= 5 && n <= 5)
          ok = ok && contract_network(NetworkLayout::grid(m, n)) == expected;
        if (topo == Topology::TriTriangle && n <= 6)
          ok = ok && contract_network(NetworkLayout::triangle(n)) == expected;
        if (!ok) {
          std::cerr << "verify: MISMATCH at " << inst.str() << "\n";
          ++failures;
        }
        ++checked;
      }
    }
    std::cout << "verify " << topology_name(topo) << ": " << checked << " instances ok\n";
  }
  if (failures) {
    std::cerr << "verify: " << failures << " mismatches\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact independent-set counts and entropy constants on grid-graph families"};
  app.require_subcommand(1);
  Options o;

  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--digits", o.digits, "significant-digit budget");
    cmd->add_option("--backend", o.backend, "bigint|crt");
    cmd->add_option("--threads", o.threads, "worker threads (default: all cores)");
    cmd->add_option("--cache", o.cache_path, "count cache file (TSV)");
    cmd->add_option("--out", o.out_path, "output file (default: stdout)");
  };

  CLI::App* count = app.add_subcommand("count", "exact count of one instance");
  count->add_option("--topology", o.topology, "grid|tri-para|tri-triangle|cylinder|twisted");
  count->add_option("--m", o.m, "width / circumference");
  count->add_option("--n", o.n, "height (triangle width for tri-triangle)");
  count->add_flag("--verbose", o.verbose, "also report state-space size and backend");
  add_shared(count);

  CLI::App* table = app.add_subcommand("table", "sweep counts to CSV or OEIS b-file");
  table->add_option("--topology", o.topology, "family to sweep");
  table->add_option("--max-m", o.max_m, "largest width");
  table->add_option("--max-n", o.max_n, "largest height");
  table->add_option("--format", o.format, "csv|bfile");
  table->add_option("--offset", o.offset, "first b-file index");
  table->add_option("--sequence-label", o.sequence_label, "b-file comment label");
  add_shared(table);

  CLI::App* strip = app.add_subcommand("strip", "strip constants f(m,inf), k(m,inf)");
  strip->add_option("--topology", o.topology, "row family");
  strip->add_option("--m", o.m, "strip width");
  strip->add_option("--max-n", o.max_n, "length budget");
  strip->add_option("--tail", o.tail, "parity-monotonicity tail length");
  add_shared(strip);

  CLI::App* constants = app.add_subcommand("constants", "family constant brackets");
  constants->add_option("--family", o.family, "plane|triangular|cylinder|twisted");
  constants->add_option("--max-m", o.max_m, "width budget (default per family)");
  constants->add_option("--max-n", o.max_n, "length budget (default per family)");
  constants->add_option("--tail", o.tail, "parity-monotonicity tail length");
  add_shared(constants);

  CLI::App* chart = app.add_subcommand("chart", "numeric series behind the charts");
  std::string chart_id;
  chart->add_option("id", chart_id, "f-vs-n-ratio|f-small|strip-f|strip-k|strip-compare|tilde-k")
      ->required();
  chart->add_option("--topology", o.topology, "topology for per-topology charts");
  chart->add_option("--family", o.family, "family for tilde-k");
  chart->add_option("--max-m", o.max_m, "width range");
  chart->add_option("--max-n", o.max_n, "length range");
  chart->add_option("--ratio", o.ratio, "aspect ratio for f-vs-n-ratio");
  chart->add_option("--tail", o.tail, "parity tail");
  add_shared(chart);

  CLI::App* verify = app.add_subcommand("verify", "oracle-equivalence suite");
  verify->add_option("--cap", o.cap, "vertex cap (default 24)");
  add_shared(verify);

  CLI11_PARSE(app, argc, argv);

  if (o.threads > 0) omp_set_num_threads(o.threads);

  try {
    if (count->parsed()) return cmd_count(o);
    if (table->parsed()) return cmd_table(o);
    if (strip->parsed()) return cmd_strip(o);
    if (constants->parsed()) return cmd_constants(o);
    if (chart->parsed()) return cmd_chart(chart_id, o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 1;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
