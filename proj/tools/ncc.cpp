#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncc/ncc.hpp"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kParse = 3, kDimension = 4, kDomain = 5, kSizeLimit = 6, kIo = 7 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kExitCodes =
    "Exit status:\n"
    "  0  success\n"
    "  1  verify: at least one property failed\n"
    "  2  usage error (unknown subcommand, flag or value)\n"
    "  3  parse error in an input file\n"
    "  4  dimension error (mismatched variables, orders or sizes)\n"
    "  5  domain error (invalid argument, non-invertible element)\n"
    "  6  size limit exceeded\n"
    "  7  I/O error\n"
    "Errors are reported on stderr as one line: error: <kind>: <message>";

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

ncc::Law read_law(const std::string& path) { return ncc::law_read(read_input(path)); }

const CLI::Validator kRational(
    [](std::string& s) {
      try {
        ncc::parse_rational(s);
      } catch (const ncc::ParseError& e) {
        return std::string(e.what());
      }
      return std::string();
    },
    "RATIONAL");

int fail(const char* kind, const std::string& msg, int code) {
  std::string line = msg;
  for (char& c : line)
    if (c == '\n') c = ' ';
  std::cerr << "error: " << kind << ": " << line << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact free, Boolean and monotone cumulants of infinitesimal laws", "ncc"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  std::string in = "-", out, with, family = "free", kind = "free", to, param, suite = "all";
  int order = 5, samples = 3, n = 4;
  std::uint64_t seed = 1;
  bool allow_negative = false, shuffle = false, inverse = false, stats = false;
  const auto families = CLI::IsMember({"free", "boolean", "monotone"});
  const auto kinds = CLI::IsMember({"free", "boolean"});

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", in, "input file, '-' for stdin")->capture_default_str();
    sub->add_option("--out", out, "output file (default stdout)");
  };

  auto* cumulants = app.add_subcommand("cumulants", "Grassmann cumulant table of a law");
  add_io(cumulants);
  cumulants->add_option("--family", family, "free | boolean | monotone")->check(families)->capture_default_str();
  cumulants->add_flag("--shuffle", shuffle, "compute with the shuffle-algebra engine");

  auto* moments = app.add_subcommand("moments", "law of a cumulant table");
  add_io(moments);

  auto* convert = app.add_subcommand("convert", "convert a cumulant table to another family");
  add_io(convert);
  convert->add_option("--to", to, "free | boolean | monotone")->check(families)->required();

  auto* convolve = app.add_subcommand("convolve", "free or Boolean additive convolution of two laws");
  add_io(convolve);
  convolve->add_option("--with", with, "second law file")->required();
  convolve->add_option("--kind", kind, "free | boolean")->check(kinds)->capture_default_str();

  auto* power = app.add_subcommand("power", "convolution power mu^s");
  add_io(power);
  power->add_option("--s", param, "exponent")->check(kRational)->required();
  power->add_option("--kind", kind, "free | boolean")->check(kinds)->capture_default_str();
  power->add_flag("--allow-negative", allow_negative, "accept a negative exponent");

  auto* bp = app.add_subcommand("bp", "infinitesimal Boolean Bercovici-Pata map B_t");
  add_io(bp);
  bp->add_option("--t", param, "semigroup parameter")->check(kRational)->default_val("1");
  bp->add_flag("--allow-negative", allow_negative, "accept a negative parameter");
  bp->add_flag("--shuffle", shuffle, "compute through the shuffle algebra");
  bp->add_flag("--inverse", inverse, "apply the inverse of B = B_1 instead");

  auto* join = app.add_subcommand("join", "joint law of two univariate laws, free or Boolean independent");
  add_io(join);
  join->add_option("--with", with, "second univariate law file")->required();
  join->add_option("--kind", kind, "free | boolean")->check(kinds)->capture_default_str();

  auto* parts = app.add_subcommand("partitions", "enumerate partitions of [n]");
  parts->add_option("--n", n, "ground-set size")->capture_default_str();
  parts->add_option("--family", family, "all | noncrossing | interval | irreducible_nc")
      ->check(CLI::IsMember({"all", "noncrossing", "interval", "irreducible_nc"}))
      ->default_val("noncrossing");
  parts->add_flag("--stats", stats, "append tau(pi)! and m(pi) (non-crossing families)");
  parts->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a named property suite on seeded random laws");
  std::string suite_help = "suite name or 'all':";
  for (const auto& s : ncc::suite_names()) suite_help += " " + s;
  auto suite_names = ncc::suite_names();
  suite_names.push_back("all");
  verify->add_option("--suite", suite, suite_help)->check(CLI::IsMember(suite_names))->capture_default_str();
  verify->add_option("--order", order, "truncation order of the random laws")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  verify->add_option("--seed", seed, "generator seed")->capture_default_str();
  verify->add_option("--samples", samples, "random laws per property")->check(CLI::Range(1, 1000))->capture_default_str();
  verify->add_option("--out", out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kUsage);
  }

  try {
    if (*cumulants) {
      const auto fam = ncc::parse_cumulant_family(family);
      const auto law = read_law(in);
      if (shuffle) {
        auto all = ncc::cumulants_via_shuffle(law);
        const auto& table = fam == ncc::CumulantFamily::free      ? all.free
                            : fam == ncc::CumulantFamily::boolean ? all.boolean
                                                                  : all.monotone;
        write_output(out, ncc::cumulant_table_write(table));
      } else {
        write_output(out, ncc::cumulant_table_write(ncc::moments_to_cumulants(law, fam)));
      }
    } else if (*moments) {
      write_output(out, ncc::law_write(ncc::cumulants_to_moments(ncc::cumulant_table_read(read_input(in)))));
    } else if (*convert) {
      auto table = ncc::cumulant_table_read(read_input(in));
      write_output(out, ncc::cumulant_table_write(ncc::cumulant_to_cumulant(table, ncc::parse_cumulant_family(to))));
    } else if (*convolve) {
      auto k = ncc::parse_convolution_kind(kind);
      write_output(out, ncc::law_write(ncc::convolve_laws(read_law(in), read_law(with), k)));
    } else if (*power) {
      auto k = ncc::parse_convolution_kind(kind);
      write_output(out, ncc::law_write(ncc::law_power(read_law(in), ncc::parse_rational(param), k, allow_negative)));
    } else if (*bp) {
      auto law = read_law(in);
      ncc::Rational t = ncc::parse_rational(param);
      ncc::Law result = inverse ? ncc::bp_inverse(law)
                        : shuffle ? ncc::bp_map_shuffle(law, t, allow_negative)
                                  : ncc::bp_map(law, t, allow_negative);
      write_output(out, ncc::law_write(result));
    } else if (*join) {
      auto k = ncc::parse_convolution_kind(kind);
      write_output(out, ncc::law_write(ncc::join_independent(read_law(in), read_law(with), k)));
    } else if (*parts) {
      auto fam = ncc::parse_partition_family(family);
      std::ostringstream text;
      for (const auto& pi : ncc::enumerate(n, fam)) {
        text << pi.to_string();
        if (stats) {
          if (!pi.is_noncrossing()) throw ncc::DomainError("--stats needs a non-crossing family");
          auto st = ncc::nesting_stats(pi);
          text << " tau! " << st.tree_factorial << " m " << st.monotone_count;
        }
        text << '\n';
      }
      write_output(out, text.str());
    } else if (*verify) {
      ncc::VerifyOptions opt{order, seed, samples};
      std::vector<ncc::CheckResult> results;
      if (suite == "all") {
        for (const auto& s : ncc::suite_names()) {
          auto r = ncc::run_suite(s, opt);
          results.insert(results.end(), r.begin(), r.end());
        }
      } else {
        results = ncc::run_suite(suite, opt);
      }
      write_output(out, ncc::format_report(results));
      for (const auto& r : results)
        if (!r.passed) return kVerifyFailed;
    }
  } catch (const ncc::ParseError& e) {
    return fail("parse", e.what(), kParse);
  } catch (const ncc::DimensionError& e) {
    return fail("dimension", e.what(), kDimension);
  } catch (const ncc::NonInvertibleError& e) {
    return fail("non-invertible", e.what(), kDomain);
  } catch (const ncc::DomainError& e) {
    return fail("domain", e.what(), kDomain);
  } catch (const ncc::SizeLimitError& e) {
    return fail("size-limit", e.what(), kSizeLimit);
  } catch (const IoError& e) {
    return fail("io", e.what(), kIo);
  }
  return kOk;
}
