#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "csl/csm.hpp"
#include "csl/error.hpp"
#include "csl/orders.hpp"
#include "csl/series.hpp"
#include "csl/verify.hpp"
#include "json.hpp"

namespace csl::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Config {
  std::string order = "hurwitz";
  std::string series_case;  // empty: derived from the order
  std::size_t max = 30;
  std::uint64_t cap = kDefaultCap;
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string lattice;
  std::string kind = "phi";
  std::string suite = "all";
  std::size_t n = 100;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return static_cast<T>(v);
  } catch (const std::exception&) {
    throw ParseError("config key '" + key + "' needs a nonnegative integer, got '" + value + "'");
  }
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  throw ParseError("unknown format '" + f + "'");
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto num = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("expected a positive integer or a range a..b, got '" + text + "'");
    }
    return std::stoull(s);
  };
  std::uint64_t a = 0, b = 0;
  if (dots == std::string::npos) {
    a = b = num(trim(text));
  } else {
    a = num(trim(text.substr(0, dots)));
    b = num(trim(text.substr(dots + 2)));
  }
  if (a == 0 || b < a) throw ParseError("empty or invalid range '" + text + "'");
  return {a, b};
}

bool looks_like_matrix(const std::string& s) { return s.find(';') != std::string::npos || s.find('[') != std::string::npos; }

json vec_json(const Vec3K& v) { return json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])}); }

json mat_json(const Mat3K& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(json::array({to_string(m(r, 0)), to_string(m(r, 1)), to_string(m(r, 2))}));
  return rows;
}

std::string basis_text(const OModule& m) {
  std::string out;
  for (const auto& row : m.basis()) {
    out += out.empty() ? "(" : " (";
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? ", " : "") + to_string(row[c]);
    out += ")";
  }
  return out;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

struct Context {
  Config cfg;
  Format format = Format::Text;
  std::ostream& out;
  std::ostream& err;

  OrderBasis order() const { return OrderBasis::from_name(cfg.order); }
  SeriesCase series_case() const {
    if (!cfg.series_case.empty()) return parse_series_case(cfg.series_case);
    return series_case_of(order());
  }
};

// ---------------------------------------------------------------- sigma

Quat rotation_input(const std::string& text, FieldTag tag, std::optional<Mat3K>& matrix) {
  if (looks_like_matrix(text)) {
    matrix = parse_matrix(text, tag);
    return rotation_to_quat(*matrix);
  }
  const Quat q = parse_quat(text, tag);
  if (q.is_zero()) throw DomainError("the zero quaternion defines no rotation");
  return q;
}

int cmd_sigma(Context& ctx, const std::string& text) {
  const OrderBasis o = ctx.order();
  std::optional<Mat3K> matrix;
  const Quat q = rotation_input(text, o.field(), matrix);
  const Quat reduced = o.is_maximal() ? o.reduce_generator(integral_multiple(q)) : integral_multiple(q);
  const mpz_class sigma = o.is_maximal() ? sigma_index(o, q) : mpz_class(0);
  const CsmResult brute = csm_bruteforce(gamma_of(o), q);
  const Mat3K r = cayley_matrix(q);
  std::optional<AxisAngle> aa;
  if (!q.is_scalar()) aa = axis_angle(q);

  if (ctx.format == Format::Json) {
    json j{{"order", o.name()},
           {"input", text},
           {"q", to_string(reduced)},
           {"sigma", o.is_maximal() ? json(sigma.get_str()) : json(nullptr)},
           {"sigma_bruteforce", brute.sigma.get_str()},
           {"axis", aa ? vec_json(aa->axis) : json(nullptr)},
           {"cos_angle", aa ? to_string(aa->cos_angle) : std::string("1")},
           {"rotation", mat_json(r)},
           {"csm", to_json(brute.csm)}};
    ctx.out << j.dump(2) << "\n";
  } else if (ctx.format == Format::Csv) {
    ctx.out << "order,q,sigma,sigma_bruteforce\n"
            << o.name() << ",\"" << to_string(reduced) << "\"," << (o.is_maximal() ? sigma.get_str() : "") << ","
            << brute.sigma << "\n";
  } else {
    ctx.out << "order             " << o.name() << "\n"
            << "q (reduced)       " << reduced << "\n";
    if (o.is_maximal()) ctx.out << "sigma             " << sigma << "\n";
    ctx.out << "sigma (module)    " << brute.sigma << "\n"
            << "axis              " << (aa ? to_string(aa->axis) : std::string("none")) << "\n"
            << "cos(angle)        " << (aa ? to_string(aa->cos_angle) : std::string("1")) << "\n"
            << "rotation          " << to_string(r) << "\n"
            << "csm basis         " << basis_text(brute.csm) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- count

int cmd_count(Context& ctx, const std::string& range) {
  const OrderBasis o = ctx.order();
  const auto [a, b] = parse_range(range);
  if (b > ctx.cfg.cap) {
    throw ResourceError("index " + std::to_string(b) + " exceeds the enumeration cap " + std::to_string(ctx.cfg.cap));
  }
  const CoeffSeries f = phi_coefficients(series_case_of(o), b);
  json records = json::array();
  if (ctx.format == Format::Text) ctx.out << std::setw(6) << "m" << std::setw(10) << "count" << std::setw(10) << "series" << "  match\n";
  if (ctx.format == Format::Csv) ctx.out << "m,count,series,match\n";
  for (std::uint64_t m = a; m <= b; ++m) {
    const CountResult res = count_csms(o, m, {ctx.cfg.cap, ctx.cfg.workers});
    const bool match = static_cast<std::int64_t>(res.count()) == f(m);
    switch (ctx.format) {
      case Format::Text:
        ctx.out << std::setw(6) << m << std::setw(10) << res.count() << std::setw(10) << f(m) << "  "
                << (match ? "yes" : "NO") << "\n";
        break;
      case Format::Csv:
        ctx.out << m << "," << res.count() << "," << f(m) << "," << (match ? "true" : "false") << "\n";
        break;
      case Format::Json: {
        json reps = json::array();
        for (const auto& rec : res.csms) {
          reps.push_back({{"q", to_string(rec.q)}, {"sigma", rec.sigma.get_str()}, {"csm_basis", to_json(rec.csm)["basis"]}});
        }
        records.push_back({{"order", o.name()},
                           {"m", m},
                           {"count", res.count()},
                           {"series", f(m)},
                           {"matches", match},
                           {"representatives", std::move(reps)}});
        break;
      }
    }
  }
  if (ctx.format == Format::Json) ctx.out << (a == b ? records[0] : records).dump(2) << "\n";
  return kOk;
}

// --------------------------------------------------------------- series

SeriesKind parse_kind(const std::string& k) {
  if (k == "phi") return SeriesKind::Phi;
  if (k == "zetaK") return SeriesKind::ZetaK;
  if (k == "zetaO") return SeriesKind::ZetaO;
  if (k == "zetaOO") return SeriesKind::ZetaOO;
  throw ParseError("unknown series kind '" + k + "'");
}

int cmd_series(Context& ctx) {
  const SeriesCase c = ctx.series_case();
  const SeriesKind kind = parse_kind(ctx.cfg.kind);
  const std::size_t M = ctx.cfg.max;
  if (M == 0) throw ParseError("--max must be positive");
  const CoeffSeries s = series_coefficients(c, kind, M);
  json rows = json::array();
  if (ctx.format == Format::Text) {
    ctx.out << std::setw(8) << "m" << std::setw(14) << "f(m)" << std::setw(16) << "F(m)" << std::setw(14) << "F/(m^2/2)" << "\n";
  }
  if (ctx.format == Format::Csv) ctx.out << "m,f,F,ratio\n";
  std::int64_t F = 0;
  for (std::size_t m = 1; m <= M; ++m) {
    F += s(m);
    const double ratio = 2.0 * static_cast<double>(F) / (static_cast<double>(m) * static_cast<double>(m));
    switch (ctx.format) {
      case Format::Text:
        ctx.out << std::setw(8) << m << std::setw(14) << s(m) << std::setw(16) << F << std::setw(14) << fixed(ratio, 6) << "\n";
        break;
      case Format::Csv:
        ctx.out << m << "," << s(m) << "," << F << "," << fixed(ratio, 9) << "\n";
        break;
      case Format::Json:
        rows.push_back({{"m", m}, {"f", s(m)}, {"F", F}, {"ratio", ratio}});
        break;
    }
  }
  if (ctx.format == Format::Json) {
    json j{{"case", std::string(to_string(c))}, {"kind", std::string(to_string(kind))}, {"max", M}, {"rows", rows}};
    if (kind == SeriesKind::Phi) j["rho"] = residue_rho(c);
    ctx.out << j.dump(2) << "\n";
  } else if (ctx.format == Format::Text && kind == SeriesKind::Phi) {
    ctx.out << "rho = " << fixed(residue_rho(c), 10) << "\n";
  }
  return kOk;
}

// ------------------------------------------------------------- spectrum

std::string representation_text(SeriesCase c, const std::vector<long>& r) {
  std::ostringstream s;
  if (c == SeriesCase::Cub) {
    s << "(a,b,c,d)=(" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << ")";
  } else {
    s << "(k,l)=(" << r[0] << "," << r[1] << ")";
  }
  return s.str();
}

int cmd_spectrum(Context& ctx, const std::string& range) {
  const SeriesCase c = ctx.series_case();
  const auto [a, b] = parse_range(range);
  json rows = json::array();
  if (ctx.format == Format::Csv) ctx.out << "m,member,representation\n";
  for (std::uint64_t m = a; m <= b; ++m) {
    const bool member = spectrum_member(c, m);
    const auto rep = spectrum_representation(c, m);
    const std::string rept = rep ? representation_text(c, *rep) : "";
    switch (ctx.format) {
      case Format::Text:
        ctx.out << m << ": " << (member ? "yes" : "no") << (rep ? ", " + rept : "") << "\n";
        break;
      case Format::Csv:
        ctx.out << m << "," << (member ? "true" : "false") << "," << rept << "\n";
        break;
      case Format::Json:
        rows.push_back({{"case", std::string(to_string(c))},
                        {"m", m},
                        {"member", member},
                        {"representation", rep ? json(*rep) : json(nullptr)}});
        break;
    }
  }
  if (ctx.format == Format::Json) ctx.out << (a == b ? rows[0] : rows).dump(2) << "\n";
  return kOk;
}

// --------------------------------------------------------------- verify

int cmd_verify(Context& ctx, bool max_given) {
  const std::string& suite = ctx.cfg.suite;
  const OrderBasis o = ctx.order();
  auto bound = [&](std::uint64_t fallback) { return max_given ? static_cast<std::uint64_t>(ctx.cfg.max) : fallback; };
  const std::uint64_t oracle_default = o.order_tag() == OrderTag::Hurwitz ? 50 : 20;
  std::vector<SuiteOutcome> results;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "formula-oracle") {
    known = true;
    results.push_back(suite_formula_oracle(o, bound(oracle_default), ctx.cfg.workers));
  }
  if (all || suite == "ideal-correspondence") {
    known = true;
    results.push_back(suite_ideal_correspondence(o, bound(20), ctx.cfg.workers));
  }
  if (all || suite == "cubic-index") {
    known = true;
    results.push_back(suite_cubic_index(ctx.cfg.n, ctx.cfg.seed, bound(99)));
  }
  if (all || suite == "counts") {
    known = true;
    results.push_back(suite_counts(o, bound(o.order_tag() == OrderTag::Hurwitz ? 19 : 11), ctx.cfg.workers));
  }
  if (all || suite == "zeta") {
    known = true;
    for (SeriesCase c : {SeriesCase::Cub, SeriesCase::Ico, SeriesCase::Oct}) {
      results.push_back(suite_zeta(c, bound(c == SeriesCase::Cub ? 100 : 50)));
    }
  }
  if (all || suite == "spectrum") {
    known = true;
    for (SeriesCase c : {SeriesCase::Cub, SeriesCase::Ico, SeriesCase::Oct}) results.push_back(suite_spectrum(c, bound(500)));
  }
  if (!known) throw ParseError("unknown suite '" + suite + "'");

  bool ok = true;
  json arr = json::array();
  if (ctx.format == Format::Csv) ctx.out << "suite,passed,cases,detail\n";
  for (const auto& r : results) {
    ok = ok && r.passed;
    switch (ctx.format) {
      case Format::Text:
        ctx.out << (r.passed ? "pass " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        break;
      case Format::Csv:
        ctx.out << r.name << "," << (r.passed ? "true" : "false") << "," << r.cases << ",\"" << r.detail << "\"\n";
        break;
      case Format::Json:
        arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        break;
    }
  }
  if (ctx.format == Format::Json) ctx.out << arr.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

// ------------------------------------------------------------ intersect

int cmd_intersect(Context& ctx, const std::string& text) {
  OModule gamma;
  std::string name;
  FieldTag tag = FieldTag::Rational;
  if (ctx.cfg.lattice.empty()) {
    const OrderBasis o = ctx.order();
    gamma = gamma_of(o);
    name = "Im(" + o.name() + ")";
    tag = o.field();
  } else {
    gamma = lattice(parse_lattice_kind(ctx.cfg.lattice));
    name = ctx.cfg.lattice;
    tag = gamma.tag();
  }
  std::optional<Mat3K> matrix;
  const Quat q = rotation_input(text, tag, matrix);
  const CsmResult res = matrix ? csm_bruteforce(gamma, *matrix) : csm_bruteforce(gamma, q);
  if (ctx.format == Format::Json) {
    ctx.out << json{{"lattice", name}, {"q", to_string(q)}, {"index", res.sigma.get_str()}, {"csm", to_json(res.csm)}}.dump(2)
            << "\n";
  } else if (ctx.format == Format::Csv) {
    ctx.out << "lattice,q,index\n" << name << ",\"" << to_string(q) << "\"," << res.sigma << "\n";
  } else {
    ctx.out << "lattice   " << name << "\n"
            << "q         " << q << "\n"
            << "index     " << res.sigma << "\n"
            << "basis     " << basis_text(res.csm) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coincidence site lattices and modules via quaternion orders", "cslcalc"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  std::map<std::string, CLI::Option*> opts;
  opts["order"] = app.add_option("--order", cfg.order, "hurwitz, icosian, icosian-conj, octahedral, lipschitz-q|r5|r2");
  opts["case"] = app.add_option("--case", cfg.series_case, "cub, ico or oct");
  opts["max"] = app.add_option("--max", cfg.max, "coefficient or index bound");
  opts["cap"] = app.add_option("--cap", cfg.cap, "largest index the enumerators accept");
  opts["format"] = app.add_option("--format", cfg.format, "text, json or csv");
  opts["seed"] = app.add_option("--seed", cfg.seed, "seed for randomised suites");
  opts["workers"] = app.add_option("--workers", cfg.workers, "worker threads");
  app.add_option("--config", config_path, "key=value file with defaults for the flags");

  std::string rotation, range;
  CLI::App* sigma = app.add_subcommand("sigma", "coincidence index and CSM of a rotation");
  sigma->add_option("rotation", rotation, "quaternion such as \"2+i\" or matrix \"a,b,c; d,e,f; g,h,i\"")->required();
  CLI::App* count = app.add_subcommand("count", "number of CSMs of index m");
  count->add_option("m", range, "index m or range a..b")->required();
  CLI::App* series = app.add_subcommand("series", "Dirichlet series coefficients and summatory function");
  opts["kind"] = series->add_option("--kind", cfg.kind, "phi, zetaK, zetaO or zetaOO");
  CLI::App* spectrum = app.add_subcommand("spectrum", "membership in the coincidence spectrum");
  spectrum->add_option("m", range, "index m or range a..b")->required();
  CLI::App* verify = app.add_subcommand("verify", "run self-check suites");
  opts["suite"] = verify->add_option("--suite", cfg.suite,
                                     "formula-oracle, ideal-correspondence, cubic-index, counts, zeta, spectrum or all");
  opts["n"] = verify->add_option("--n", cfg.n, "number of random rotations for cubic-index");
  CLI::App* inter = app.add_subcommand("intersect", "intersection of a lattice with a rotated copy");
  inter->add_option("rotation", rotation, "quaternion or matrix")->required();
  opts["lattice"] = inter->add_option("--lattice", cfg.lattice, "cubic, fcc, bcc, mb or mf (default: Im of the order)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (!config_path.empty()) {
      for (const auto& [key, value] : read_config(config_path)) {
        const auto it = opts.find(key);
        if (it == opts.end()) throw ParseError("unknown config key '" + key + "'");
        if (it->second->count() > 0) continue;
        if (key == "order") cfg.order = value;
        else if (key == "case") cfg.series_case = value;
        else if (key == "max") cfg.max = parse_number<std::size_t>(key, value);
        else if (key == "cap") cfg.cap = parse_number<std::uint64_t>(key, value);
        else if (key == "format") cfg.format = value;
        else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "workers") cfg.workers = parse_number<unsigned>(key, value);
        else if (key == "kind") cfg.kind = value;
        else if (key == "suite") cfg.suite = value;
        else if (key == "n") cfg.n = parse_number<std::size_t>(key, value);
        else if (key == "lattice") cfg.lattice = value;
      }
    }
    if (cfg.cap == 0) throw ParseError("--cap must be at least 1");
    if (cfg.workers == 0) throw ParseError("--workers must be at least 1");
    Context ctx{cfg, parse_format(cfg.format), out, err};
    OrderBasis::from_name(cfg.order);  // validate early
    if (*sigma) return cmd_sigma(ctx, rotation);
    if (*count) return cmd_count(ctx, range);
    if (*series) return cmd_series(ctx);
    if (*spectrum) return cmd_spectrum(ctx, range);
    if (*verify) return cmd_verify(ctx, opts["max"]->count() > 0);
    if (*inter) return cmd_intersect(ctx, rotation);
    err << "error: no subcommand\n";
    return kParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace csl::cli
