#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "detthick/cli.hpp"
#include "detthick/kodaira.hpp"
#include "detthick/parallel.hpp"
#include "detthick/schur.hpp"
#include "detthick/zset.hpp"
#include "json_io.hpp"
#include "render.hpp"

namespace detthick::cli {

namespace {

ordered_json pairs_json(const ZSet& zs) {
  ordered_json out = ordered_json::array();
  for (const auto& [z, l] : zs.pairs()) {
    out.push_back({{"z", partition_json(z)}, {"l", l}});
  }
  return out;
}

ordered_json weight_json(const Weight& w) { return ordered_json(w.entries()); }

ordered_json component_json(const ExtComponent& c) {
  return {{"z", partition_json(c.zpair.z)},
          {"l", c.zpair.l},
          {"s", c.tuple.s},
          {"t", c.tuple.t},
          {"lambda", weight_json(c.lambda)},
          {"lambda_s", weight_json(c.lambda_s)},
          {"degree", c.degree},
          {"dim", c.dim.str()}};
}

ordered_json table_json(const GradedTable& t) {
  ordered_json out = ordered_json::object();
  for (const auto& [deg, dim] : t) out[std::to_string(deg)] = dim.str();
  return out;
}

BigInt table_total(const GradedTable& t) {
  BigInt total = 0;
  for (const auto& [deg, dim] : t) total += dim;
  return total;
}

void put_ext(ordered_json& out, const ExtGraded& e) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : e.components) comps.push_back(component_json(c));
  out["components"] = std::move(comps);
  out["table"] = table_json(e.table);
  out["total"] = table_total(e.table).str();
}

ordered_json window_json(const DegreeWindow& w) { return {{"lo", w.lo}, {"hi", w.hi}}; }

const IdealSpec& need(const std::optional<IdealSpec>& x, const char* what) {
  if (!x) throw std::invalid_argument(std::string("missing --") + what);
  return *x;
}

long long need_cohdeg(const Request& req) {
  if (!req.cohdeg) throw std::invalid_argument("missing --cohdeg");
  return *req.cohdeg;
}

void check_window(const DegreeWindow& w) {
  if (w.lo > w.hi) throw std::invalid_argument("degree window has lo > hi");
}

void check_dims(const Request& req) {
  if (req.n < 1) throw std::invalid_argument("n must be at least 1");
  if (req.m < req.n) {
    throw std::invalid_argument(
        "m < n is not supported: the standing convention is m >= n (transpose the matrix "
        "and swap m and n)");
  }
  for (const auto* x : {&req.ideal, &req.sub, &req.super}) {
    if (*x && (*x)->n() != req.n) throw std::invalid_argument("ideal was built for another n");
  }
}

// Each command fills `doc` and may complete `req` (e.g. a default window).
void cmd_zset(Request&, ordered_json& doc, const Request& req) {
  doc["pairs"] = pairs_json(zset_of_quotient(need(req.ideal, "ideal")));
}

void cmd_ext(Request& resolved, ordered_json& doc, const Request& req) {
  const IdealSpec& x = need(req.ideal, "ideal");
  const long long j = need_cohdeg(req);
  const ZSet zs = zset_of_quotient(x);
  DegreeWindow w = req.window ? *req.window : default_window(zs, j, req.m);
  check_window(w);
  resolved.window = w;
  doc["cohdeg"] = j;
  doc["window"] = window_json(w);
  if (w.vanishes) doc["vanishes"] = true;
  put_ext(doc, ext_graded(zs, j, req.m, w));
}

void cmd_ext_map(Request& resolved, ordered_json& doc, const Request& req) {
  const IdealSpec& sub = need(req.sub, "sub");
  const IdealSpec& sup = need(req.super, "super");
  const long long j = need_cohdeg(req);
  DegreeWindow w;
  if (req.window) {
    w = *req.window;
  } else {
    const DegreeWindow a = default_window(zset_of_quotient(sub), j, req.m);
    const DegreeWindow b = default_window(zset_of_quotient(sup), j, req.m);
    if (a.vanishes) w = b;
    else if (b.vanishes) w = a;
    else w = DegreeWindow{std::min(a.lo, b.lo), std::min(a.lo, b.lo) + 10, false};
  }
  check_window(w);
  resolved.window = w;
  const ExtMapParts parts = ext_map_parts(sub, sup, j, req.m, w);
  doc["cohdeg"] = j;
  doc["window"] = window_json(w);
  auto block = [&](const ZSet& zs, const ExtGraded& e) {
    ordered_json b;
    b["pairs"] = pairs_json(zs);
    put_ext(b, e);
    return b;
  };
  doc["ker"] = block(parts.ker_pairs, parts.ker);
  doc["im"] = block(parts.im_pairs, parts.im);
  doc["coker"] = block(parts.coker_pairs, parts.coker);
}

void cmd_reg(Request&, ordered_json& doc, const Request& req) {
  const IdealSpec& x = need(req.ideal, "ideal");
  const RegValue rq = reg_quotient(x, req.m);
  // The unit ideal is S itself (regularity 0); the zero ideal is the zero
  // module.
  const RegValue ri = x.is_unit() ? RegValue(0) : x.is_zero() ? RegValue::neg_inf() : rq.plus(1);
  doc["reg_quotient"] = reg_json(rq);
  doc["reg"] = reg_json(ri);
  std::vector<ZPair> best;
  if (x.is_proper_nonzero()) {
    const ZSet zs = zset_general(x);
    for (const auto& zp : zs.pairs()) {
      if (RegValue(reg_j(zp.z, zp.l, x.n())) == rq) best.push_back(zp);
    }
  }
  doc["attained_by"] = pairs_json(ZSet(x.n(), std::move(best)));
}

void cmd_reg_powers(Request&, ordered_json& doc, const Request& req) {
  if (req.dmax < 1) throw std::invalid_argument("--dmax must be at least 1");
  ordered_json rows = ordered_json::array();
  for (int d = 1; d <= req.dmax; ++d) {
    const PowerReg r = reg_power_family(req.p, d, req.m, req.n, req.kind);
    ordered_json per_l = ordered_json::object();
    for (const auto& [l, v] : r.per_l) per_l[std::to_string(l)] = reg_json(v);
    rows.push_back({{"kind", to_string(req.kind)},
                    {"p", req.p},
                    {"d", d},
                    {"m", req.m},
                    {"n", req.n},
                    {"reg", reg_json(r.reg)},
                    {"per_l", std::move(per_l)},
                    {"pd", static_cast<long long>(req.p) * d}});
  }
  doc["rows"] = std::move(rows);
}

void cmd_hilbert(Request&, ordered_json& doc, const Request& req) {
  const IdealSpec& x = need(req.ideal, "ideal");
  if (req.rmax < 0) throw std::invalid_argument("--rmax must be nonnegative");
  const ZSet zs = x.is_zero() ? ZSet(x.n(), {}) : zset_of_quotient(x);
  bool consistent = true;
  ordered_json rows = ordered_json::array();
  for (int r = 0; r <= req.rmax; ++r) {
    const BigInt direct = quotient_graded_dim(x, r, req.m);
    if (!x.is_zero()) {
      BigInt via = 0;
      for (const auto& [z, l] : zs.pairs()) via += j_graded_dim(z, l, r, req.m, req.n);
      consistent = consistent && via == direct;
    }
    rows.push_back({{"r", r}, {"dim", direct.str()}});
  }
  doc["rows"] = std::move(rows);
  doc["filtration_consistent"] = consistent;
}

void cmd_kodaira(Request&, ordered_json& doc, const Request& req) {
  const IdealSpec& x = need(req.ideal, "ideal");
  const VanishingReport rep = kodaira_check(x, req.m, req.jmax);
  doc["kmax"] = rep.kmax;
  doc["jmax"] = rep.jmax;
  doc["pass"] = rep.pass();
  doc["mechanism_holds"] = rep.mechanism_holds;
  const int p = radical_index(x);
  if (p >= 2) doc["sing_codim"] = sing_codim(p, req.m, req.n);
  ordered_json v = ordered_json::array();
  for (const auto& c : rep.violations) v.push_back(component_json(c));
  doc["violations"] = std::move(v);
}

void cmd_linear_res(Request&, ordered_json& doc, const Request& req) {
  const RegValue r = reg_power_family(req.p, req.d, req.m, req.n, PowerKind::power).reg;
  doc["reg"] = reg_json(r);
  doc["pd"] = static_cast<long long>(req.p) * req.d;
  doc["linear"] = has_linear_resolution(req.p, req.d, req.m, req.n);
}

void cmd_bblsz(Request&, ordered_json& doc, const Request& req) {
  if (req.m != 3 || req.n != 3) throw std::invalid_argument("bblsz-table is fixed to m = n = 3");
  if (req.dmax < 1) throw std::invalid_argument("--dmax must be at least 1");
  ordered_json rows = ordered_json::array();
  for (int d = 1; d <= req.dmax; ++d) {
    ordered_json groups = ordered_json::array();
    long long size = -1;
    const ZSet flat = zset_general(power_gens(2, d, 3)).with_l(0);
    for (const auto& [z, l] : flat.pairs()) {
      if (z.size() != size) {
        groups.push_back(ordered_json::array());
        size = z.size();
      }
      groups.back().push_back(partition_json(z));
    }
    rows.push_back({{"d", d}, {"groups", std::move(groups)}});
  }
  doc["rows"] = std::move(rows);
}

using Handler = void (*)(Request&, ordered_json&, const Request&);

Handler handler_for(const std::string& cmd) {
  static const std::map<std::string, Handler> table = {
      {"zset", cmd_zset},       {"ext", cmd_ext},         {"ext-map", cmd_ext_map},
      {"reg", cmd_reg},         {"reg-powers", cmd_reg_powers},
      {"hilbert", cmd_hilbert}, {"kodaira", cmd_kodaira}, {"linear-res", cmd_linear_res},
      {"bblsz-table", cmd_bblsz},
  };
  const auto it = table.find(cmd);
  if (it == table.end()) throw std::invalid_argument("unknown command '" + cmd + "'");
  return it->second;
}

std::string render(const Request& req) {
  check_dims(req);
  Request resolved = req;
  resolved.emit_m2.clear();
  ordered_json body;
  handler_for(req.command)(resolved, body, req);

  ordered_json doc;
  doc["schema"] = "detthick." + req.command + "/1";
  doc["request"] = request_json(resolved);
  for (auto& [k, v] : body.items()) doc[k] = std::move(v);

  if (!req.emit_m2.empty()) {
    std::ofstream f(req.emit_m2);
    if (!f) throw std::invalid_argument("cannot write " + req.emit_m2);
    f << macaulay2_script(resolved);
  }
  switch (req.format) {
    case Format::json: return doc.dump(2) + "\n";
    case Format::latex: return render_latex(doc);
    case Format::text: break;
  }
  return render_text(doc);
}

}  // namespace

Outcome run(const Request& req) {
  Outcome out;
  try {
    out.out = render(req);
  } catch (const std::invalid_argument& e) {
    out = Outcome{1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    out = Outcome{1, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::overflow_error& e) {
    out = Outcome{1, "", std::string("error: input too large: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    out = Outcome{2, "", std::string("internal error: ") + e.what() + "\n"};
  }
  return out;
}

Outcome run_args(const std::vector<std::string>& args) {
  CLI::App app{"Equivariant thickenings of determinantal varieties: Z-sets, Ext, regularity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "detthick 0.1.0");

  Request req;
  bool json = false;
  bool latex = false;
  int threads = 0;
  std::optional<int> m;
  std::string ideal, sub, super, kind = "power", replay_file;
  std::optional<long long> deg, lo, hi, cohdeg;

  app.add_flag("--json", json, "JSON output");
  app.add_flag("--latex", latex, "LaTeX table output");
  app.add_option("--threads", threads, "worker threads (default: DETTHICK_THREADS or all cores)");

  auto dims = [&](CLI::App* c, bool with_n = true) {
    c->add_option("--m", m, "rows of the matrix (default n)");
    if (with_n) c->add_option("--n", req.n, "columns of the matrix")->required();
  };
  auto window = [&](CLI::App* c) {
    c->add_option("--cohdeg", cohdeg, "cohomological degree j")->required();
    auto* d = c->add_option("--deg", deg, "single internal degree");
    c->add_option("--lo", lo, "lowest internal degree")->excludes(d);
    c->add_option("--hi", hi, "highest internal degree")->excludes(d);
  };

  auto* zset = app.add_subcommand("zset", "list Z(X)");
  dims(zset);
  zset->add_option("--ideal", ideal, "ideal spec")->required();

  auto* ext = app.add_subcommand("ext", "graded pieces of Ext^j(S/I_X, S)");
  dims(ext);
  ext->add_option("--ideal", ideal, "ideal spec")->required();
  window(ext);
  ext->add_option("--emit-m2", req.emit_m2, "write a Macaulay2 script computing the same");

  auto* emap = app.add_subcommand("ext-map", "kernel, image, cokernel of Ext(S/I_super) -> Ext(S/I_sub)");
  dims(emap);
  emap->add_option("--sub", sub, "smaller ideal")->required();
  emap->add_option("--super", super, "larger ideal")->required();
  window(emap);

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of I_X");
  dims(reg);
  reg->add_option("--ideal", ideal, "ideal spec")->required();
  reg->add_option("--emit-m2", req.emit_m2, "write a Macaulay2 script computing the same");

  auto* regp = app.add_subcommand("reg-powers", "regularity of I_p^d, (I_p^d)^sat or I_p^(d), d = 1..dmax");
  dims(regp);
  regp->add_option("--p", req.p, "minor size")->required();
  regp->add_option("--dmax", req.dmax, "largest exponent")->required();
  regp->add_option("--kind", kind, "power, satpower or symbolic");

  auto* hilb = app.add_subcommand("hilbert", "Hilbert function of S/I_X");
  dims(hilb);
  hilb->add_option("--ideal", ideal, "ideal spec")->required();
  hilb->add_option("--rmax", req.rmax, "largest degree")->required();

  auto* kod = app.add_subcommand("kodaira", "check Ext^{mn-1-k}(S/I_X, S)_j = 0 for k < m+n-2, j > -mn");
  dims(kod);
  kod->add_option("--ideal", ideal, "ideal spec")->required();
  kod->add_option("--jmax", req.jmax, "number of twists to check")->capture_default_str();

  auto* lin = app.add_subcommand("linear-res", "does I_p^d have a linear resolution");
  dims(lin);
  lin->add_option("--p", req.p, "minor size")->required();
  lin->add_option("--d", req.d, "exponent")->required();

  auto* table = app.add_subcommand("bblsz-table", "the l=0 part of Z(X_2^d) for 3x3 matrices");
  table->add_option("--dmax", req.dmax, "largest d")->required();

  auto* replay = app.add_subcommand("replay", "rerun the request embedded in a JSON output");
  replay->add_option("file", replay_file, "JSON file")->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return Outcome{0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return Outcome{0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::CallForVersion& e) {
    return Outcome{0, std::string(e.what()) + "\n", ""};
  } catch (const CLI::ParseError& e) {
    return Outcome{1, "", std::string("error: ") + e.what() + "\n"};
  }

  if (threads > 0) set_max_threads(static_cast<unsigned>(threads));
  try {
    if (replay->parsed()) {
      std::ifstream f(replay_file);
      const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      return run(request_from_json(text));
    }
    CLI::App* chosen = app.get_subcommands().front();
    req.command = chosen->get_name();
    if (req.command == "bblsz-table") req.n = 3;
    req.m = m.value_or(req.n);
    if (req.n < 1) throw std::invalid_argument("n must be at least 1");
    if (!ideal.empty()) req.ideal = parse_ideal_spec(ideal, req.n);
    if (!sub.empty()) req.sub = parse_ideal_spec(sub, req.n);
    if (!super.empty()) req.super = parse_ideal_spec(super, req.n);
    req.cohdeg = cohdeg;
    if (deg) req.window = DegreeWindow{*deg, *deg, false};
    if (lo || hi) {
      if (!lo || !hi) throw std::invalid_argument("--lo and --hi go together");
      req.window = DegreeWindow{*lo, *hi, false};
    }
    req.kind = parse_power_kind(kind);
    if (json && latex) throw std::invalid_argument("--json and --latex are exclusive");
    req.format = json ? Format::json : latex ? Format::latex : Format::text;
    if (!req.emit_m2.empty() && req.command != "ext" && req.command != "reg") {
      throw std::invalid_argument("--emit-m2 applies to ext and reg");
    }
  } catch (const std::invalid_argument& e) {
    return Outcome{1, "", std::string("error: ") + e.what() + "\n"};
  }
  return run(req);
}

}  // namespace detthick::cli
