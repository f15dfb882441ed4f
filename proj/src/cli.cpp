#include "tzeta/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tzeta/error.hpp"
#include "tzeta/germ.hpp"
#include "tzeta/io.hpp"

namespace tzeta {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kUsage = 2;
constexpr int kValidation = 3;
constexpr int kDeskScale = 4;
constexpr std::int64_t kOrderGuard = 200;

struct Options {
  std::string germ;
  std::string file;
  std::string side = "plus";
  std::int64_t order = 20;
  std::string format = "text";
  std::string assignment = "both";
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ojson int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

FiberSide parse_side(const std::string& s) { return s == "minus" ? FiberSide::Minus : FiberSide::Plus; }

// Germ or presentation file, exactly one.
struct Input {
  BlockSum blocks;
  std::string label;
};

Input read_input(const Options& o) {
  if (o.germ.empty() == o.file.empty()) throw UsageError("exactly one of --germ and --file is required");
  if (!o.germ.empty()) {
    MonomialGerm g = parse_germ(o.germ);
    return {compile_monomial(g, parse_side(o.side)), "germ " + g.str() + " side " + o.side};
  }
  return {load_presentation(o.file), "file " + o.file};
}

bool want(const Options& o, const char* which) { return o.assignment == "both" || o.assignment == which; }

std::string limit_text(const RationalZeta& z, std::optional<LaurentPoly>& value) {
  try {
    value = limit_at_infinity(z);
    return value->str("v");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoLimit) throw;
    return "none";
  }
}

void cmd_zeta(const Options& o, std::ostream& out) {
  if (o.order < 0) throw UsageError("--order must be >= 0");
  if (o.order > kOrderGuard) throw Error(ErrorKind::DeskScaleExceeded, "--order is limited to 200");
  Input in = read_input(o);
  GermZeta z = zeta_of_presentation(in.blocks);
  std::optional<LaurentPoly> lp, lm;
  std::string lpt = limit_text(z.plus, lp), lmt = limit_text(z.minus, lm);

  if (o.format == "csv") {
    out << "m,plus,minus\n";
    for (std::int64_t m = 1; m <= o.order; ++m)
      out << m << "," << coefficient(z.plus, m).str() << "," << coefficient(z.minus, m).str() << "\n";
    return;
  }
  if (o.format == "json") {
    ojson j;
    j["input"] = in.label;
    j["ambient_vf_dim"] = in.blocks.ambient_vf_dim;
    j["ledger"] = render(z.ledger);
    auto part = [&](const RationalZeta& s, const std::optional<LaurentPoly>& lim) {
      ojson p;
      p["closed_form"] = render(s);
      ojson c = ojson::array();
      for (std::int64_t m = 1; m <= o.order; ++m) c.push_back(int_json(coefficient(s, m).coeff(0)));
      p["coefficients"] = c;
      p["limit"] = lim ? int_json(lim->coeff(0)) : ojson(nullptr);
      return p;
    };
    if (want(o, "plus")) j["plus"] = part(z.plus, lp);
    if (want(o, "minus")) j["minus"] = part(z.minus, lm);
    out << j.dump(2) << "\n";
    return;
  }
  out << "input: " << in.label << "\n";
  out << "ambient_vf_dim: " << in.blocks.ambient_vf_dim << "\n";
  out << "ledger  " << render(z.ledger) << "\n";
  if (want(o, "plus")) out << "plus    " << render(z.plus) << "\n";
  if (want(o, "minus")) out << "minus   " << render(z.minus) << "\n";
  out << "m";
  if (want(o, "plus")) out << "\tplus";
  if (want(o, "minus")) out << "\tminus";
  out << "\n";
  for (std::int64_t m = 1; m <= o.order; ++m) {
    out << m;
    if (want(o, "plus")) out << "\t" << coefficient(z.plus, m).str();
    if (want(o, "minus")) out << "\t" << coefficient(z.minus, m).str();
    out << "\n";
  }
  if (want(o, "plus")) out << "limit plus: " << lpt << "\n";
  if (want(o, "minus")) out << "limit minus: " << lmt << "\n";
}

void cmd_invariants(const Options& o, std::ostream& out) {
  Input in = read_input(o);
  const BlockSum& b = in.blocks;
  RvRingElem cls = rv_class(b);
  Z2Elem g = int_G(b);
  BigInt rg = int_R_g(b), rb = int_R_b(b);
  std::optional<RPair> pm;
  try {
    pm = int_R_pm(b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDoublyBounded) throw;
  }
  if (o.format == "json") {
    ojson j;
    j["input"] = in.label;
    j["rv_class"] = cls.str();
    j["int_G"] = g.str();
    j["int_R_g"] = int_json(rg);
    j["int_R_b"] = int_json(rb);
    if (want(o, "plus")) j["int_R_plus"] = pm ? ojson(pm->plus.str()) : ojson(nullptr);
    if (want(o, "minus")) j["int_R_minus"] = pm ? ojson(pm->minus.str()) : ojson(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  if (o.format == "csv") {
    out << "invariant,value\n";
    out << "rv_class," << cls.str() << "\nint_G," << g.str() << "\nint_R_g," << rg << "\nint_R_b," << rb << "\n";
    if (want(o, "plus")) out << "int_R_plus," << (pm ? pm->plus.str() : "") << "\n";
    if (want(o, "minus")) out << "int_R_minus," << (pm ? pm->minus.str() : "") << "\n";
    return;
  }
  out << "input: " << in.label << "\n";
  out << "rv_class: " << cls.str() << "\n";
  out << "int_G: " << g.str() << "\n";
  out << "int_R_g: " << rg << "\n";
  out << "int_R_b: " << rb << "\n";
  const std::string na = "n/a (not doubly bounded)";
  if (want(o, "plus")) out << "int_R_plus: " << (pm ? pm->plus.str() : na) << "\n";
  if (want(o, "minus")) out << "int_R_minus: " << (pm ? pm->minus.str() : na) << "\n";
}

void cmd_chi(const Options& o, std::ostream& out) {
  if (o.file.empty() || !o.germ.empty()) throw UsageError("chi takes a Γ-set file via --file");
  GammaSet s = load_gamma_set(o.file);
  auto d = gamma_dim(s);
  std::string dim = d ? std::to_string(*d) : "-inf";
  if (o.format == "json") {
    ojson j;
    j["dim"] = d ? ojson(*d) : ojson(nullptr);
    j["chi_g"] = int_json(chi_g(s));
    j["chi_b"] = int_json(chi_b(s));
    j["class"] = gamma_class(s).str();
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "dim,chi_g,chi_b,class\n" << dim << "," << chi_g(s) << "," << chi_b(s) << "," << gamma_class(s).str() << "\n";
  } else {
    out << "dim: " << dim << "\nchi_g: " << chi_g(s) << "\nchi_b: " << chi_b(s)
        << "\nclass: " << gamma_class(s).str() << "\n";
  }
}

bool cmd_check(const Options& o, std::ostream& out) {
  auto results = run_self_checks();
  bool ok = true;
  if (o.format == "json") {
    ojson a = ojson::array();
    for (const auto& r : results) a.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    out << a.dump(2) << "\n";
  }
  for (const auto& r : results) {
    ok = ok && r.ok;
    if (o.format != "json") out << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  }
  return ok;
}

void cmd_convert(const Options& o, std::ostream& out) { out << dump_presentation(read_input(o).blocks); }

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return kUsage;
    case ErrorKind::DeskScaleExceeded: return kDeskScale;
    default: return kValidation;
  }
}

void report(std::ostream& err, bool json, const std::string& kind, const std::string& msg, int code) {
  if (json) {
    ojson j{{"error", kind}, {"message", msg}, {"exit_code", code}};
    err << j.dump() << "\n";
  } else {
    err << "error (" << kind << "): " << msg << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact motivic zeta functions and Euler-characteristic invariants"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json", "csv"};
  auto add_common = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("--germ", o.germ, "monomial germ, e.g. \"x^2*y^3\" or \"-x1*x2\"");
      sub->add_option("--file", o.file, "presentation file (JSON)");
      sub->add_option("--side", o.side, "Milnor fibre side")->check(CLI::IsMember({"plus", "minus"}));
    }
    sub->add_option("--order", o.order, "coefficient table order (default 20, at most 200)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--assignment", o.assignment, "which evaluation to show")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    sub->add_option("--out", o.out, "write output to PATH");
  };
  auto* zeta = app.add_subcommand("zeta", "closed form, coefficient table and Y -> oo limits");
  auto* inv = app.add_subcommand("invariants", "rv class, ∫G, ∫R^g, ∫R^b and ∫R^±");
  auto* chi = app.add_subcommand("chi", "dimension, χ_g, χ_b and class of a Γ-set file");
  auto* check = app.add_subcommand("check", "built-in oracle and identity suites");
  auto* convert = app.add_subcommand("convert", "canonicalise a presentation");
  add_common(zeta, true);
  add_common(inv, true);
  add_common(chi, true);
  add_common(check, false);
  add_common(convert, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    bool json = std::find(args.begin(), args.end(), "json") != args.end();
    report(err, json, "Usage", e.what(), kUsage);
    return kUsage;
  }

  const bool json = o.format == "json";
  std::ostringstream buf;
  int code = 0;
  try {
    if (zeta->parsed()) cmd_zeta(o, buf);
    if (inv->parsed()) cmd_invariants(o, buf);
    if (chi->parsed()) cmd_chi(o, buf);
    if (check->parsed()) code = cmd_check(o, buf) ? 0 : 1;
    if (convert->parsed()) cmd_convert(o, buf);
  } catch (const UsageError& e) {
    report(err, json, "Usage", e.what(), kUsage);
    return kUsage;
  } catch (const Error& e) {
    int c = exit_code(e.kind());
    report(err, json, std::string(to_string(e.kind())), e.what(), c);
    return c;
  }
  if (o.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      report(err, json, "Usage", "cannot write " + o.out, kUsage);
      return kUsage;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace tzeta
