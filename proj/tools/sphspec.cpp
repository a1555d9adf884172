#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "sphspec/harmonic.hpp"
#include "sphspec/json_io.hpp"

using namespace sphspec;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

// Flag combinations CLI11 cannot check on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  io::Format fmt() const { return format == "tsv" ? io::Format::tsv : io::Format::json; }
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "json (JSON lines) or tsv")->check(CLI::IsMember({"json", "tsv"}));
}

SphereRealization sphere(const std::string& tag, std::optional<int> n) {
  SphereRealization r{parse_sphere_kind(tag), 0};
  if (r.kind == SphereKind::O || r.kind == SphereKind::U || r.kind == SphereKind::SpSp1) {
    if (!n) throw UsageError("--n is required for realization " + tag);
    r.n = *n;
  }
  validate(r);
  return r;
}

struct SpectrumArgs {
  Common common;
  std::string realization;
  std::optional<int> n;
  std::int64_t cutoff = 0;
  bool aggregate = false;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const SphereRealization r = sphere(a.realization, a.n);
  io::Writer out(a.common.fmt());
  if (a.aggregate)
    for (const auto& [ev, m] : laplace_spectrum(r, a.cutoff)) out.add(io::eigenvalue(r, ev, m));
  else
    for (const auto& e : spectrum(r, a.cutoff)) out.add(io::spectrum_entry(r, e));
  out.write(std::cout);
  return exit_ok;
}

struct BranchArgs {
  Common common;
  std::string from = "o";
  std::string to;
  std::optional<int> n;
  std::int64_t a = 0;
  bool oracle = false;
  bool compare = false;
};

int cmd_branch(const BranchArgs& b) {
  const SphereRealization r = sphere(b.to, b.n);
  const auto emb = ambient_embedding(r);
  std::vector<Rational> c(root_datum(emb.supergroup).coordinate_count, 0);
  if (b.a < 0) throw DomainError("level a must be non-negative");
  c[0] = b.a;
  const Weight hw = make_weight(emb.supergroup, c);
  io::Writer out(b.common.fmt());
  int code = exit_ok;
  if (b.compare) {
    const auto rule = branch_rule(r, b.a);
    const auto oracle = branch_oracle(emb, hw);
    out.add(io::irrep_decomp(rule, "rule", b.a));
    out.add(io::irrep_decomp(oracle, "oracle", b.a));
    io::Json cmp;
    cmp["schema_version"] = io::schema_version;
    cmp["type"] = "comparison";
    cmp["embedding"] = emb.name;
    cmp["level"] = b.a;
    cmp["result"] = rule == oracle ? "MATCH" : "MISMATCH";
    out.add(std::move(cmp));
    if (!(rule == oracle)) code = exit_fail;
  } else if (b.oracle) {
    out.add(io::irrep_decomp(branch_oracle(emb, hw), "oracle", b.a));
  } else {
    out.add(io::irrep_decomp(branch_rule(r, b.a), "rule", b.a));
  }
  out.write(std::cout);
  return code;
}

struct HypArgs {
  Common common;
  std::string space;
  int p = 0, q = 0;
  int series = 1;
  std::optional<std::int64_t> ell, x, y;
  std::int64_t bound = 4;
  std::optional<std::int64_t> ymax;
  std::int64_t cutoff = 4;
};

HypRealization hyp(const HypArgs& h) {
  HypRealization r;
  if (h.space == "o") r = {HypKind::O, h.p, h.q};
  else if (h.space == "upq") r = {HypKind::U, h.p, h.q};
  else if (h.space == "sppq") r = {HypKind::Sp, h.p, h.q};
  else if (h.space == "spin81") r = {HypKind::Spin81, 0, 0};
  else if (h.space == "g2s") r = {h.series == 2 ? HypKind::G2s34 : HypKind::G2s43, 0, 0};
  else if (h.space == "spin34") r = {HypKind::Spin34p, 0, 0};
  else r = {HypKind::GLnR, h.p, 0};
  validate(r);
  return r;
}

// The single parameter selected by --ell / --x / --y.
DiscreteSeriesParam param(const HypArgs& h, const HypRealization& r) {
  switch (r.kind) {
    case HypKind::U:
    case HypKind::Sp: {
      if (!h.x || (!h.ell && !h.y)) throw UsageError("--x and one of --ell, --y are required");
      const std::int64_t ell = h.ell ? *h.ell : *h.x + *h.y;
      const std::int64_t y = h.y ? *h.y : ell - *h.x;
      return make_param(r, ell, *h.x, y);
    }
    case HypKind::Spin81:
      if (!h.x || !h.y) throw UsageError("--x and --y are required for spin81");
      return make_param(r, 2 * *h.x + *h.y, *h.x, *h.y);
    default:
      if (!h.ell) throw UsageError("--ell is required");
      return make_param(r, *h.ell);
  }
}

int cmd_hyperboloid(const std::string& sub, const HypArgs& h) {
  io::Writer out(h.common.fmt());
  int code = exit_ok;
  if (sub == "consistency") {
    if (h.space != "upq" && h.space != "sppq") throw UsageError("consistency needs --space upq or sppq");
    if (!h.ell) throw UsageError("--ell is required");
    const HypKind k = h.space == "upq" ? HypKind::U : HypKind::Sp;
    const auto rep = consistency_check(k, h.p, h.q, *h.ell, h.cutoff);
    out.add(io::consistency(k, h.p, h.q, *h.ell, h.cutoff, rep));
    if (!rep.pass) code = exit_fail;
  } else {
    const HypRealization r = hyp(h);
    if (sub == "ds") {
      if (!has_discrete_series(r)) {
        io::Json j;
        j["schema_version"] = io::schema_version;
        j["type"] = "no_discrete_series";
        j["realization"] = to_string(r);
        out.add(std::move(j));
      }
      const std::int64_t bound = r.kind == HypKind::Spin81 && h.ymax ? *h.ymax : h.bound;
      for (const auto& d : ds_params(r, bound)) out.add(io::discrete_series(d));
    } else if (sub == "ktypes") {
      const auto d = param(h, r);
      out.add(io::ktype_sum(d, ds_ktypes(d, h.cutoff)));
    } else {
      const auto d = param(h, r);
      out.add(io::range_class(d, classify_range(d)));
    }
  }
  out.write(std::cout);
  return code;
}

struct OracleArgs {
  Common common;
  int n = 0;
  int a = 0;
  bool weights = false;
  bool serial = false;
};

int cmd_oracle(const OracleArgs& o) {
  const Exec exec = o.serial ? Exec::serial : Exec::parallel;
  io::Json j;
  j["schema_version"] = io::schema_version;
  j["type"] = "harmonic_oracle";
  j["n"] = o.n;
  j["a"] = o.a;
  j["dim"] = harmonic::harmonic_dim(o.n, o.a);
  j["casimir"] = io::rational(harmonic::casimir_scalar(o.n, o.a, exec));
  if (o.weights) {
    io::Json w = io::Json::array();
    for (const auto& [wt, m] : harmonic::torus_weights(o.n, o.a, exec).entries) {
      io::Json e;
      e["weight"] = io::weight(wt);
      e["multiplicity"] = m;
      w.push_back(std::move(e));
    }
    j["torus_weights"] = std::move(w);
  }
  io::Writer out(o.common.fmt());
  out.add(std::move(j));
  out.write(std::cout);
  return exit_ok;
}

struct VerifyArgs {
  Common common;
  std::string suite = "all";
  bool failures_only = false;
};

int cmd_verify(const VerifyArgs& v) {
  std::vector<std::string> suites;
  if (v.suite == "all") suites = suite_names();
  else suites = {v.suite};
  io::Writer out(v.common.fmt());
  bool ok = true;
  for (const auto& s : suites) {
    const auto rep = run_suite(s);
    for (const auto& a : rep.assertions)
      if (!v.failures_only || !a.pass) out.add(io::assertion(s, a));
    out.add(io::verify_summary(rep));
    ok = ok && rep.pass();
  }
  out.write(std::cout);
  return ok ? exit_ok : exit_fail;
}

void error_record(const std::string& kind, const std::string& msg) {
  io::Json j;
  j["schema_version"] = io::schema_version;
  j["type"] = "error";
  j["kind"] = kind;
  j["message"] = msg;
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of spheres and hyperboloids"};
  app.require_subcommand(1);

  SpectrumArgs sa;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spherical harmonics of a realization");
  spectrum_cmd->add_option("--realization", sa.realization)->required()
      ->check(CLI::IsMember({"o", "u", "sp", "spin9", "g2", "spin7p"}));
  spectrum_cmd->add_option("--n", sa.n, "rank index for o, u, sp");
  spectrum_cmd->add_option("--cutoff", sa.cutoff, "largest O(N) level")->required();
  spectrum_cmd->add_flag("--aggregate", sa.aggregate, "(eigenvalue, multiplicity) pairs");
  add_format(spectrum_cmd, sa.common);

  BranchArgs ba;
  auto* branch_cmd = app.add_subcommand("branch", "Restrict pi^{O(N)}_a to a sphere group");
  branch_cmd->add_option("--from", ba.from)->check(CLI::IsMember({"o"}));
  branch_cmd->add_option("--to", ba.to)->required()->check(CLI::IsMember({"o", "u", "sp", "spin9", "g2", "spin7p"}));
  branch_cmd->add_option("--n", ba.n, "rank index for u, sp");
  branch_cmd->add_option("--a", ba.a, "level")->required();
  auto* oracle_flag = branch_cmd->add_flag("--oracle", ba.oracle, "use the Freudenthal path");
  branch_cmd->add_flag("--compare", ba.compare, "run both paths, exit 1 on mismatch")->excludes(oracle_flag);
  add_format(branch_cmd, ba.common);

  HypArgs ha;
  std::string hyp_sub;
  auto* hyp_cmd = app.add_subcommand("hyperboloid", "Discrete series of hyperboloids");
  hyp_cmd->require_subcommand(1);
  for (const char* name : {"ds", "ktypes", "classify", "consistency"}) {
    auto* s = hyp_cmd->add_subcommand(name);
    s->add_option("--space", ha.space)->required()
        ->check(CLI::IsMember({"o", "upq", "sppq", "spin81", "g2s", "spin34", "glnr"}));
    s->add_option("--p", ha.p);
    s->add_option("--q", ha.q);
    s->add_option("--series", ha.series, "split G2 series")->check(CLI::IsMember({1, 2}));
    s->add_option("--ell", ha.ell);
    s->add_option("--x", ha.x);
    s->add_option("--y", ha.y);
    s->add_option("--bound", ha.bound, "parameter bound for ds");
    s->add_option("--ymax", ha.ymax, "y bound for spin81 ds");
    s->add_option("--cutoff", ha.cutoff, "K-type truncation");
    add_format(s, ha.common);
    s->callback([&hyp_sub, name] { hyp_sub = name; });
  }

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Harmonic polynomials by elimination");
  oracle_cmd->add_option("--n", oa.n)->required();
  oracle_cmd->add_option("--a", oa.a)->required();
  oracle_cmd->add_flag("--weights", oa.weights, "also emit torus weights (even n)");
  oracle_cmd->add_flag("--serial", oa.serial, "serial reference kernels");
  add_format(oracle_cmd, oa.common);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  verify_cmd->add_option("--suite", va.suite)->check(CLI::IsMember(names));
  verify_cmd->add_flag("--failures-only", va.failures_only, "omit passing assertions");
  add_format(verify_cmd, va.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(sa);
    if (*branch_cmd) return cmd_branch(ba);
    if (*hyp_cmd) return cmd_hyperboloid(hyp_sub, ha);
    if (*oracle_cmd) return cmd_oracle(oa);
    return cmd_verify(va);
  } catch (const UsageError& e) {
    error_record("usage", e.what());
    return exit_usage;
  } catch (const DomainError& e) {
    error_record("domain", e.what());
    return exit_fail;
  }
}
