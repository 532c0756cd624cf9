#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "dualbent/codebook.hpp"
#include "dualbent/error.hpp"
#include "verify.hpp"

namespace dualbent::cli {

namespace {

using nlohmann::json;

/// At most five decimals, trailing zeros dropped: 0.5, 0.39528, 1.26491.
std::string short_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
  f << j.dump(1) << "\n";
  if (!f) throw Error("failed writing '" + path + "'");
}

json read_json(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string spectrum_path(const std::string& codebook_path) {
  const std::string ext = ".json";
  if (codebook_path.size() > ext.size() && codebook_path.compare(codebook_path.size() - ext.size(), ext.size(), ext) == 0)
    return codebook_path.substr(0, codebook_path.size() - ext.size()) + ".spectrum.json";
  return codebook_path + ".spectrum.json";
}

Code parse_code(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v > 0xffffffffu)
    throw InvalidArgument(std::string(what) + " = '" + text + "' is not an element code");
  return static_cast<Code>(v);
}

std::string sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

// values below 1e-9 are summation noise around an exact zero
double clean(double v) { return std::abs(v) < 1e-9 ? 0.0 : round_sig12(v) + 0.0; }

void add_instance_options(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--p", cfg.p, "odd prime characteristic")->capture_default_str();
  sub.add_option("--n", cfg.n, "domain dimension n");
  sub.add_option("--degrees", cfg.degrees, "component degrees n_1,...,n_s")->delimiter(',');
  sub.add_option("--m", cfg.m, "codomain degree m");
  sub.add_option("--t", cfg.t, "scaling subfield degree t (default m)");
  sub.add_option("--family", cfg.family,
                 "pair-monomial, ext-square, diag-quadratic, unitary-form or composite-maiorana")
      ->capture_default_str();
  sub.add_option("--e", cfg.e, "element code or 'primitive'")->capture_default_str();
  sub.add_option("--u", cfg.u, "pair-monomial exponent u")->capture_default_str();
  sub.add_option("--alphas", cfg.alphas, "alpha codes")->delimiter(',');
  sub.add_option("--beta", cfg.beta, "composite-maiorana beta");
  sub.add_option("--gamma", cfg.gamma, "composite-maiorana gamma");
  sub.add_option("--lcoeffs", cfg.l_coeffs, "coefficients of L(y) = sum a_i y^{p^{mi}}")->delimiter(',');
  sub.add_option("--threads", cfg.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
}

// ---------------------------------------------------------------- commands

int cmd_field(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.n) throw InvalidArgument("field needs --n (the extension degree)");
  const auto f = get_field(cfg.p, *cfg.n);
  json j = {{"p", f->characteristic()},
            {"k", f->degree()},
            {"q", f->size()},
            {"modulus", f->modulus()},
            {"primitive", f->primitive()}};
  if (cfg.a) {
    const Code x = parse_element(*cfg.a, cfg.p, *cfg.n, "a");
    json e = {{"code", x}, {"trace", f->trace(x)}, {"eta", f->eta(x)}};
    if (x != 0) {
      e["log"] = f->log(x);
      e["order"] = f->order(x);
      e["inverse"] = f->inv(x);
    }
    j["element"] = e;
  }
  out << j.dump(1) << "\n";
  if (!cfg.out.empty()) write_json(cfg.out, j);
  return kPass;
}

int cmd_sum(const std::string& kind_name, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto kind = parse_sum_kind(kind_name);
  if (!cfg.a && !cfg.all) throw InvalidArgument("sum needs --a <code> or --all");
  if (cfg.a && cfg.all) throw InvalidArgument("--a and --all are exclusive");
  const auto ctx = BentContext::prepare(build_spec(cfg), cfg.threads);
  std::optional<MultChar> psi;
  if (kind == SumKind::s_hat1 || kind == SumKind::s_hat2) {
    if (!cfg.psi_index) throw InvalidArgument(to_string(kind) + " needs --psi-index j (a character of order > 2)");
    psi.emplace(ctx.spec.codomain, *cfg.psi_index);
  }
  std::vector<Code> as;
  if (cfg.a) {
    as.push_back(parse_code(*cfg.a, "a"));
    if (as[0] >= ctx.spec.space->size()) throw InvalidArgument("a is outside V_n");
  } else {
    for (Code a = 1; a < ctx.spec.space->size(); ++a) as.push_back(a);
  }
  const double tol = sum_tolerance(ctx.spec.space->size());
  json rows = json::array();
  std::map<std::string, std::uint64_t> classes;
  std::map<std::pair<double, double>, std::uint64_t> multiset;
  bool ok = true;
  for (Code a : as) {
    const auto d = hybrid_sum(ctx, kind, psi, a, Method::direct);
    const auto c = hybrid_sum(ctx, kind, psi, a, Method::closed);
    const double r = std::abs(d.value - c.value);
    ok = ok && r < tol;
    rows.push_back({{"a", a},
                    {"value_re", clean(d.value.real())},
                    {"value_im", clean(d.value.imag())},
                    {"classification", to_string(d.classification)},
                    {"closed_re", clean(c.value.real())},
                    {"closed_im", clean(c.value.imag())},
                    {"residual", r}});
    ++classes[to_string(d.classification)];
    ++multiset[{clean(d.value.real()), clean(d.value.imag())}];
  }
  json j = {{"sum", to_string(kind)}, {"spec", to_json(ctx.spec)}, {"tolerance", tol}, {"rows", rows}};
  if (psi) j["psi_index"] = psi->index();
  if (cfg.all) {
    json ms = json::array();
    for (const auto& [v, n] : multiset) ms.push_back({{"value", {v.first, v.second}}, {"count", n}});
    j["multiset"] = ms;
    j["classes"] = classes;
  }
  j["pass"] = ok;
  out << j.dump(1) << "\n";
  if (!cfg.out.empty()) write_json(cfg.out, j);
  if (!ok) err << "direct and closed values differ beyond tolerance " << sig12(tol) << "\n";
  return ok ? kPass : kVerifyFailed;
}

Codebook build_codebook(Construction c, const BentContext& ctx) {
  switch (c) {
    case Construction::cd: return build_cd(ctx);
    case Construction::cd1: return build_cd1(ctx);
    case Construction::hadamard: return build_partial_hadamard(ctx);
  }
  throw InvalidArgument("unknown construction");
}

SpectrumMode pick_mode(const RunConfig& cfg, Construction c) {
  if (!cfg.mode.empty()) return parse_spectrum_mode(cfg.mode);
  return c == Construction::hadamard ? SpectrumMode::pairwise : SpectrumMode::translate;
}

bool matches(const Spectrum& a, const Spectrum& b) {
  if (a.N != b.N || a.K != b.K || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (std::abs(a.entries[i].magnitude - b.entries[i].magnitude) > 1e-9 || a.entries[i].count != b.entries[i].count)
      return false;
  return true;
}

int cmd_codebook(const std::string& name, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto c = parse_construction(name);
  const auto ctx = BentContext::prepare(build_spec(cfg), cfg.threads);
  const auto C = build_codebook(c, ctx);
  const auto s = spectrum(C, pick_mode(cfg, c), cfg.threads);
  if (!cfg.out.empty()) {
    write_json(cfg.out, to_json(C));
    write_json(spectrum_path(cfg.out), to_json(s));
  }
  out << s.N << " " << s.K << " " << short_num(s.imax) << " " << short_num(s.welch) << " " << short_num(s.ratio)
      << "\n";
  int rc = kPass;
  if (!C.rows_distinct()) {
    err << "codewords are not distinct\n";
    rc = kVerifyFailed;
  }
  if (!matches(s, closed_spectrum(c, ctx))) {
    err << "spectrum differs from the closed-form distribution\n";
    rc = kVerifyFailed;
  }
  return rc;
}

int cmd_spectrum(const std::string& target, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Spectrum s;
  int rc = kPass;
  if (target == "cd" || target == "cd1" || target == "hadamard") {
    const auto c = parse_construction(target);
    const auto ctx = BentContext::prepare(build_spec(cfg), cfg.threads);
    s = spectrum(build_codebook(c, ctx), pick_mode(cfg, c), cfg.threads);
    if (!matches(s, closed_spectrum(c, ctx))) {
      err << "spectrum differs from the closed-form distribution\n";
      rc = kVerifyFailed;
    }
  } else {
    const auto C = codebook_from_json(read_json(target));
    s = spectrum(C, pick_mode(cfg, C.construction), cfg.threads);
  }
  const auto j = to_json(s);
  out << j.dump(1) << "\n";
  if (!cfg.out.empty()) write_json(cfg.out, j);
  return rc;
}

int cmd_seq_xcorr(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto ctx = BentContext::prepare(build_spec(cfg), cfg.threads);
  const auto d = seq_crosscorr(ctx);
  const auto c = seq_crosscorr_closed(ctx);
  auto as_json = [](const std::vector<CorrelationValue>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back({{"value", clean(e.value)}, {"count", e.count}});
    return a;
  };
  bool same = d.size() == c.size();
  for (std::size_t i = 0; same && i < d.size(); ++i)
    same = std::abs(d[i].value - c[i].value) < 1e-9 && d[i].count == c[i].count;
  const json j = {{"spec", to_json(ctx.spec)}, {"direct", as_json(d)}, {"closed", as_json(c)}, {"pass", same}};
  out << j.dump(1) << "\n";
  if (!cfg.out.empty()) write_json(cfg.out, j);
  if (!same) err << "cross-correlation distribution differs from the closed form\n";
  return same ? kPass : kVerifyFailed;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& which, std::ostream& out) {
  VerifyReport rep;
  if (suite == "characters") rep = verify_characters(cfg);
  else if (suite == "bent") rep = verify_bent(cfg);
  else if (suite == "sums") rep = verify_sums(cfg);
  else if (suite == "codebooks") rep = verify_codebooks(cfg);
  else if (suite == "tables") rep = verify_tables(which, cfg.threads);
  else throw InvalidArgument("unknown suite '" + suite + "' (expected characters, bent, sums, codebooks or tables)");
  rep.print(out);
  if (!cfg.out.empty()) write_json(cfg.out, rep.to_json());
  return rep.ok() ? kPass : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid character sums and codebooks from vectorial dual-bent functions", "dualbent"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string positional, which;

  auto* field = app.add_subcommand("field", "describe GF(p^n) and optionally one element");
  field->add_option("--p", cfg.p, "odd prime")->capture_default_str();
  field->add_option("--n", cfg.n, "extension degree")->required();
  field->add_option("--a", cfg.a, "element code or 'primitive'");
  field->add_option("--out", cfg.out, "also write the JSON here");

  auto* sum = app.add_subcommand("sum", "hybrid sum by direct summation and closed form");
  sum->add_option("kind", positional, "s1, s_hat1, s2, s_hat2 or t")->required();
  add_instance_options(*sum, cfg);
  sum->add_option("--a", cfg.a, "a in V_n (code)");
  sum->add_flag("--all", cfg.all, "every a != 0");
  sum->add_option("--psi-index", cfg.psi_index, "index j of psi_j for the hat sums");
  sum->add_option("--out", cfg.out, "also write the JSON here");

  auto* book = app.add_subcommand("codebook", "build a codebook and its spectrum");
  book->add_option("construction", positional, "cd, cd1 or hadamard")->required();
  add_instance_options(*book, cfg);
  book->add_option("--mode", cfg.mode, "pairwise or translate");
  book->add_option("--out", cfg.out, "codebook file; the spectrum goes next to it as *.spectrum.json");

  auto* spec = app.add_subcommand("spectrum", "spectrum of a construction or of a codebook file");
  spec->add_option("target", positional, "cd, cd1, hadamard, or a codebook JSON path")->required();
  add_instance_options(*spec, cfg);
  spec->add_option("--mode", cfg.mode, "pairwise or translate");
  spec->add_option("--out", cfg.out, "also write the JSON here");

  auto* seq = app.add_subcommand("seq-xcorr", "cross-correlation of the m-sequence and the residue sequence");
  add_instance_options(*seq, cfg);
  seq->add_option("--out", cfg.out, "also write the JSON here");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", positional, "characters, bent, sums, codebooks or tables")->required();
  add_instance_options(*ver, cfg);
  ver->add_option("--which", which, "table row, e.g. tab1-row1");
  ver->add_option("--out", cfg.out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidConfig;
  }

  try {
    if (field->parsed()) return cmd_field(cfg, out);
    if (sum->parsed()) return cmd_sum(positional, cfg, out, err);
    if (book->parsed()) return cmd_codebook(positional, cfg, out, err);
    if (spec->parsed()) return cmd_spectrum(positional, cfg, out, err);
    if (seq->parsed()) return cmd_seq_xcorr(cfg, out, err);
    if (ver->parsed()) return cmd_verify(positional, cfg, which, out);
  } catch (const NotBent& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const InvalidArgument& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const OutsideDomain& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const DomainMismatch& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kInvalidConfig;
}

}  // namespace dualbent::cli
