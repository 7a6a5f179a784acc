#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "radgeo/complex.hpp"
#include "radgeo/gens_io.hpp"
#include "radgeo/leech.hpp"
#include "radgeo/morse.hpp"
#include "radgeo/radical.hpp"
#include "radgeo/suites.hpp"

using namespace radgeo;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct OutputFlags {
  std::string report_path;
  bool json_stdout = false;
};

void add_output_flags(CLI::App* app, OutputFlags& o) {
  app->add_option("--report", o.report_path, "write the JSON report to this path");
  app->add_flag("--json", o.json_stdout, "print the JSON report instead of the text summary");
}

int emit(const Report& rep, json meta, const OutputFlags& o) {
  json doc = std::move(meta);
  doc["version"] = kVersion;
  doc["checks"] = rep.to_json();
  doc["summary"] = {{"pass", rep.count(Status::Pass)},
                    {"fail", rep.count(Status::Fail)},
                    {"skipped", rep.count(Status::Skipped)},
                    {"unverified", rep.count(Status::Unverified)}};
  if (!o.report_path.empty()) {
    std::ofstream out(o.report_path);
    if (!out) throw InputError("cannot write report to " + o.report_path);
    out << doc.dump(2) << "\n";
  }
  if (o.json_stdout)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << rep.summary();
  return rep.exit_code();
}

std::string file_digest(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::ostringstream hex;
  hex << std::hex << std::hash<std::string>{}(ss.str());
  return hex.str();
}

/// Per-suite report cache keyed by generator digest and seed. A file that does
/// not parse or belongs to other generators is discarded.
class ReportCache {
 public:
  ReportCache(const std::string& dir, const std::string& digest, std::uint64_t seed) {
    if (dir.empty()) return;
    fs::create_directories(dir);
    path_ = fs::path(dir) / ("co3-" + digest + "-" + std::to_string(seed) + ".json");
    if (std::ifstream in(path_); in) {
      data_ = json::parse(in, nullptr, false);
      if (data_.is_discarded() || !data_.is_object() || data_.value("digest", "") != digest) data_ = json::object();
    }
    data_["digest"] = digest;
  }
  bool enabled() const { return !path_.empty(); }
  std::optional<Report> get(const std::string& suite) const {
    if (!enabled() || !data_.contains("suites") || !data_["suites"].contains(suite)) return std::nullopt;
    Report rep;
    try {
      for (const auto& e : data_["suites"][suite]) {
        const std::string st = e.at("status");
        Status s = st == "pass" ? Status::Pass : st == "fail" ? Status::Fail : st == "skipped" ? Status::Skipped
                                                                                              : Status::Unverified;
        rep.add({e.at("check_id"), e.at("paper_anchor"), s, e.at("expected"), e.at("actual"),
                 e.at("runtime_ms").get<double>()});
      }
    } catch (const json::exception&) {
      return std::nullopt;
    }
    return rep;
  }
  void put(const std::string& suite, const Report& rep) {
    if (!enabled()) return;
    data_["suites"][suite] = rep.to_json();
    std::ofstream out(path_);
    out << data_.dump(1) << "\n";
  }

 private:
  fs::path path_;
  json data_ = json::object();
};

TypedComplex named_complex(const std::string& name, const std::string& gens_path, const Co3Options& opts) {
  if (name == "delta-fixed") {
    auto ctx = Co3Context::calibrate(read_generators(gens_path), opts);
    return delta_fixed_z(*ctx, point_residue(*ctx)).complex;
  }
  const auto colon = name.find(':');
  if (colon == std::string::npos)
    throw InputError("complex name must be delta-fixed or <quillen|bouc|distinguished|benson>:<group>");
  const auto kind = name.substr(0, colon), group = name.substr(colon + 1);
  FiniteGroup g(small_group(group));
  const auto lat = p_subgroups(g, 2);
  if (kind == "quillen") return order_complex(quillen_poset(g, lat).poset);
  if (kind == "bouc") return order_complex(bouc_poset(g, lat).poset);
  if (kind == "distinguished") return order_complex(distinguished_poset(g, lat).poset);
  if (kind == "benson") return order_complex(benson_closure(g, lat).poset);
  throw InputError("unknown collection '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radical subgroup and 2-local geometry verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string gens_path = std::string(RADGEO_DATA_DIR) + "/co3_276.gens";
  std::uint64_t seed = 1;
  std::string cache_dir;
  std::size_t max_mem = 2048;
  bool no_2b = false;
  OutputFlags out;

  auto* co3 = app.add_subcommand("co3", "checks on the sporadic group on 276 points");
  std::string suite;
  std::vector<std::string> suites = co3_suite_names();
  suites.push_back("all");
  co3->add_option("suite", suite, "suite to run")->required()->check(CLI::IsMember(suites));
  co3->add_option("--gens", gens_path, "generator file (276 points)");
  co3->add_option("--seed", seed, "random seed");
  co3->add_option("--cache", cache_dir, "directory for cached suite reports");
  co3->add_option("--max-mem", max_mem, "memory budget in MB");
  co3->add_flag("--no-2b", no_2b, "skip enumerating the non-central involution class");
  add_output_flags(co3, out);

  auto* selftest = app.add_subcommand("selftest", "oracle checks with known answers");
  add_output_flags(selftest, out);

  auto* small = app.add_subcommand("small-groups", "S4, S5, GL(3,2) class tables and collection comparisons");
  std::string golden_dir = std::string(RADGEO_SOURCE_DIR) + "/tests/golden";
  small->add_option("--golden", golden_dir, "directory with the golden class tables");
  add_output_flags(small, out);

  auto* rad = app.add_subcommand("radical-enum", "2-subgroup class table of a small group as JSON");
  std::string group, collection;
  rad->add_option("group", group, "S4, S5, GL32, C2 or C2xC2")->required();
  rad->add_option("--collection", collection, "also summarize quillen, bouc, distinguished or benson");
  std::string compare_file;
  rad->add_option("--compare", compare_file, "exit 1 unless the class table equals this JSON file");

  auto* dump = app.add_subcommand("dump-complex", "write a complex in the text dump format");
  std::string complex_name, dump_out;
  dump->add_option("name", complex_name, "delta-fixed or <collection>:<group>, e.g. bouc:S4")->required();
  dump->add_option("-o,--output", dump_out, "output file (default stdout)");
  dump->add_option("--gens", gens_path, "generator file for delta-fixed");
  dump->add_option("--seed", seed, "random seed");

  auto* collapse = app.add_subcommand("collapse", "replay a schedule, or collapse greedily");
  std::string complex_file, schedule_file, cert_out;
  collapse->add_option("complex", complex_file, "complex in dump format")->required();
  collapse->add_option("--schedule", schedule_file, "schedule to replay");
  collapse->add_option("--certificate", cert_out, "write the resulting certificate here");

  auto* convert = app.add_subcommand("convert-gens", "convert generators between image and cycle notation");
  std::string conv_in, conv_out;
  bool conv_cycles = false;
  convert->add_option("input", conv_in)->required();
  convert->add_option("output", conv_out)->required();
  convert->add_flag("--cycles", conv_cycles, "write cycle notation instead of image lists");

  auto* make = app.add_subcommand("make-gens", "build the 276-point generators from the Leech lattice");
  std::string make_out;
  std::uint64_t make_seed = 7;
  make->add_option("output", make_out)->required();
  make->add_option("--seed", make_seed, "seed for the random search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*co3) {
      Co3Options opts;
      opts.seed = seed;
      opts.max_mem_mb = max_mem;
      opts.enumerate_2b = !no_2b;
      const auto digest = file_digest(gens_path);
      ReportCache cache(cache_dir, digest + (no_2b ? "-no2b" : ""), seed);
      std::unique_ptr<Co3Session> session;
      Report rep;
      std::size_t hits = 0;
      const auto plan = suite == "all" ? co3_suite_names() : std::vector<std::string>{suite};
      for (const auto& s : plan) {
        if (auto cached = cache.get(s)) {
          ++hits;
          rep.append(*cached);
          continue;
        }
        if (!session) session = std::make_unique<Co3Session>(read_generators(gens_path), opts);
        auto r = session->run(s);
        cache.put(s, r);
        rep.append(r);
      }
      return emit(rep, {{"suite", "co3 " + suite}, {"seed", seed}, {"generators", digest}, {"cache_hits", hits}},
                  out);
    }
    if (*selftest) return emit(selftest_suite(), {{"suite", "selftest"}}, out);
    if (*small) return emit(small_group_suite(golden_dir), {{"suite", "small-groups"}}, out);
    if (*rad) {
      FiniteGroup g(small_group(group));
      const auto lat = p_subgroups(g, 2);
      json doc = class_table_json(group, lat);
      if (!collection.empty()) {
        CollectionPoset c = collection == "quillen"         ? quillen_poset(g, lat)
                            : collection == "bouc"          ? bouc_poset(g, lat)
                            : collection == "distinguished" ? distinguished_poset(g, lat)
                            : collection == "benson"        ? benson_closure(g, lat)
                                                            : throw InputError("unknown collection " + collection);
        const auto oc = order_complex(c.poset);
        doc["collection"] = {{"name", collection_name(c.kind)},
                             {"members", c.members.size()},
                             {"reduced_euler", oc.euler_reduced()},
                             {"reduced_betti", oc.betti().reduced}};
      }
      std::cout << doc.dump(2) << "\n";
      if (!compare_file.empty()) {
        std::ifstream in(compare_file);
        if (!in) throw InputError("cannot read " + compare_file);
        const auto other = json::parse(in, nullptr, false);
        if (other.is_discarded()) throw InputError(compare_file + " is not valid JSON");
        const bool same = class_table_json(group, lat) == other;
        std::cerr << (same ? "matches " : "differs from ") << compare_file << "\n";
        return same ? 0 : 1;
      }
      return 0;
    }
    if (*dump) {
      Co3Options opts;
      opts.seed = seed;
      opts.enumerate_2b = false;
      const auto c = named_complex(complex_name, gens_path, opts);
      if (dump_out.empty()) {
        c.dump(std::cout);
      } else {
        std::ofstream f(dump_out);
        if (!f) throw InputError("cannot write " + dump_out);
        c.dump(f);
      }
      return 0;
    }
    if (*collapse) {
      std::ifstream in(complex_file);
      if (!in) throw InputError("cannot read " + complex_file);
      auto c = TypedComplex::parse(in);
      CollapseCertificate cert;
      bool ok = true;
      std::string why;
      if (schedule_file.empty()) {
        auto r = greedy_collapse(c);
        cert = r.certificate;
        ok = r.reached_point;
        if (!ok) why = "stuck with " + std::to_string(c.size()) + " simplices";
      } else {
        std::ifstream sin(schedule_file);
        if (!sin) throw InputError("cannot read " + schedule_file);
        std::optional<std::uint64_t> expected;
        const auto steps = parse_schedule(sin, &expected);
        try {
          cert = replay_schedule(c, steps);
          if (expected && *expected != cert.terminal_hash) {
            ok = false;
            why = "terminal hash differs from the schedule's";
          }
        } catch (const CollapseError& e) {
          ok = false;
          why = e.what();
        }
      }
      if (!cert_out.empty()) {
        std::ofstream f(cert_out);
        write_certificate(f, cert);
      }
      std::cout << (ok ? "ok" : "failed") << ": " << cert.steps.size() << " steps, terminal size " << c.size()
                << ", terminal hash " << std::hex << c.content_hash() << std::dec;
      if (!why.empty()) std::cout << " (" << why << ")";
      std::cout << "\n";
      return ok ? 0 : 1;
    }
    if (*make) {
      GeneratorFile g;
      g.degree = 276;
      g.gens = construct_co3_276(make_seed);
      std::ofstream f(make_out);
      if (!f) throw InputError("cannot write " + make_out);
      write_generators(f, g);
      std::cout << "wrote " << g.gens.size() << " generators to " << make_out << "\n";
      return 0;
    }
    if (*convert) {
      const auto g = read_generators(conv_in);
      std::ofstream f(conv_out);
      if (!f) throw InputError("cannot write " + conv_out);
      write_generators(f, g, conv_cycles);
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource error: out of memory\n";
    return 2;
  } catch (const ComplexError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PermError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
