#include "render.hpp"

#include <sstream>
#include <stdexcept>

#include "detthick/schur.hpp"

namespace detthick::cli {

namespace {

std::vector<long long> ints(const ordered_json& j) { return j.get<std::vector<long long>>(); }

Partition part(const ordered_json& j) { return Partition(j.get<std::vector<int>>()); }

std::string reg_text(const ordered_json& j) {
  return j.is_null() ? std::string("-inf") : std::to_string(j.get<long long>());
}

std::string ideal_text(const ordered_json& gens) {
  std::string out = "{";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += paren(part(gens[i]));
  }
  return out + "}";
}

std::string header(const ordered_json& doc) {
  const auto& req = doc["request"];
  std::ostringstream os;
  os << "m=" << req["m"].get<int>() << " n=" << req["n"].get<int>();
  if (req.contains("ideal")) os << " X=" << ideal_text(req["ideal"]);
  return os.str();
}

void component_lines(std::ostringstream& os, const ordered_json& comps, const char* indent) {
  for (const auto& c : comps) {
    const auto lam = ints(c["lambda"]);
    const auto lam_s = ints(c["lambda_s"]);
    const BigInt dn = schur_dim(Weight(lam));
    const BigInt dm = schur_dim(Weight(lam_s));
    os << indent << "z=" << paren(part(c["z"])) << " l=" << c["l"].get<int>()
       << " s=" << c["s"].get<int>() << " t=" << paren(ints(c["t"]))
       << " lambda=" << paren(lam);
    if (lam_s != lam) os << " lambda(s)=" << paren(lam_s);
    os << " degree=" << c["degree"].get<long long>() << " dim=" << c["dim"].get<std::string>()
       << " (" << dm << "*" << dn << ")\n";
  }
}

void ext_block(std::ostringstream& os, const ordered_json& block, const char* indent) {
  for (const auto& [deg, dim] : block["table"].items()) {
    os << indent << "degree " << deg << ": " << dim.get<std::string>() << "\n";
    ordered_json here = ordered_json::array();
    for (const auto& c : block["components"]) {
      if (std::to_string(c["degree"].get<long long>()) == deg) here.push_back(c);
    }
    component_lines(os, here, (std::string(indent) + "  ").c_str());
  }
}

void pairs_line(std::ostringstream& os, const ordered_json& pairs) {
  bool first = true;
  for (const auto& p : pairs) {
    os << (first ? "" : ", ") << paren(part(p["z"])) << ":" << p["l"].get<int>();
    first = false;
  }
  os << "\n";
}

std::string text_zset(const ordered_json& doc) {
  std::ostringstream os;
  os << "Z(X) " << header(doc) << ": " << doc["pairs"].size() << " pairs\n";
  for (const auto& p : doc["pairs"]) {
    os << "  z=" << paren(part(p["z"])) << " l=" << p["l"].get<int>() << "\n";
  }
  return os.str();
}

std::string text_ext(const ordered_json& doc) {
  std::ostringstream os;
  const auto& w = doc["window"];
  os << "Ext^" << doc["cohdeg"].get<long long>() << "(S/I_X, S) " << header(doc)
     << " degrees [" << w["lo"].get<long long>() << "," << w["hi"].get<long long>() << "]\n";
  if (doc.value("vanishes", false)) os << "  no feasible index tuple: the module vanishes\n";
  if (doc["table"].empty()) os << "  zero in this window\n";
  ext_block(os, doc, "  ");
  os << "  total " << doc["total"].get<std::string>() << "\n";
  return os.str();
}

std::string text_ext_map(const ordered_json& doc) {
  std::ostringstream os;
  const auto& req = doc["request"];
  const auto& w = doc["window"];
  os << "Ext^" << doc["cohdeg"].get<long long>() << "(S/I_super, S) -> Ext^"
     << doc["cohdeg"].get<long long>() << "(S/I_sub, S) m=" << req["m"].get<int>()
     << " n=" << req["n"].get<int>() << " sub=" << ideal_text(req["sub"])
     << " super=" << ideal_text(req["super"]) << " degrees [" << w["lo"].get<long long>()
     << "," << w["hi"].get<long long>() << "]\n";
  for (const char* part_name : {"ker", "im", "coker"}) {
    const auto& b = doc[part_name];
    os << part_name << ": " << b["pairs"].size() << " pairs, total " << b["total"].get<std::string>()
       << "\n  pairs: ";
    pairs_line(os, b["pairs"]);
    ext_block(os, b, "  ");
  }
  return os.str();
}

std::string text_reg(const ordered_json& doc) {
  std::ostringstream os;
  os << "regularity " << header(doc) << "\n"
     << "  reg(S/I) = " << reg_text(doc["reg_quotient"]) << "\n"
     << "  reg(I)   = " << reg_text(doc["reg"]) << "\n";
  if (!doc["attained_by"].empty()) {
    os << "  attained by: ";
    pairs_line(os, doc["attained_by"]);
  }
  return os.str();
}

std::string text_reg_powers(const ordered_json& doc) {
  std::ostringstream os;
  const auto& req = doc["request"];
  os << "reg of " << req["kind"].get<std::string>() << " p=" << req["p"].get<int>()
     << " m=" << req["m"].get<int>() << " n=" << req["n"].get<int>() << "\n";
  os << "   d   reg   p*d   R_l\n";
  for (const auto& row : doc["rows"]) {
    std::ostringstream rl;
    bool first = true;
    for (const auto& [l, v] : row["per_l"].items()) {
      rl << (first ? "" : " ") << "R" << l << "=" << reg_text(v);
      first = false;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%4d %5s %5lld   ", row["d"].get<int>(),
                  reg_text(row["reg"]).c_str(), row["pd"].get<long long>());
    os << buf << rl.str() << "\n";
  }
  return os.str();
}

std::string text_hilbert(const ordered_json& doc) {
  std::ostringstream os;
  os << "Hilbert function of S/I_X " << header(doc) << "\n";
  for (const auto& row : doc["rows"]) {
    os << "  r=" << row["r"].get<int>() << " dim=" << row["dim"].get<std::string>() << "\n";
  }
  os << "  filtration check: " << (doc["filtration_consistent"].get<bool>() ? "ok" : "MISMATCH")
     << "\n";
  return os.str();
}

std::string text_kodaira(const ordered_json& doc) {
  std::ostringstream os;
  os << "vanishing check " << header(doc) << " k=0.." << doc["kmax"].get<int>()
     << " twists 1.." << doc["jmax"].get<int>() << "\n"
     << "  " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << ", "
     << doc["violations"].size() << " violations, s=0 mechanism "
     << (doc["mechanism_holds"].get<bool>() ? "holds" : "fails") << "\n";
  if (doc.contains("sing_codim")) {
    os << "  singular codimension of the reduced locus: " << doc["sing_codim"].get<int>() << "\n";
  }
  component_lines(os, doc["violations"], "  ");
  return os.str();
}

std::string text_linear_res(const ordered_json& doc) {
  std::ostringstream os;
  const auto& req = doc["request"];
  os << "I_" << req["p"].get<int>() << "^" << req["d"].get<int>() << " m=" << req["m"].get<int>()
     << " n=" << req["n"].get<int>() << ": reg=" << reg_text(doc["reg"]) << " p*d="
     << doc["pd"].get<long long>() << " -> "
     << (doc["linear"].get<bool>() ? "linear resolution" : "not linear") << "\n";
  return os.str();
}

std::string table_groups(const ordered_json& groups, const char* sep, bool latex) {
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) out += sep;
    for (std::size_t i = 0; i < groups[g].size(); ++i) {
      if (i) out += ", ";
      const std::string z = exponent_form(part(groups[g][i]));
      out += latex ? "$" + z + "$" : z;
    }
  }
  return out;
}

std::string text_bblsz(const ordered_json& doc) {
  std::ostringstream os;
  os << "z with (z,0) in Z(X_2^d), m=n=3\n d | z\n";
  for (const auto& row : doc["rows"]) {
    os << " " << row["d"].get<int>() << " |";
    const std::string body = table_groups(row["groups"], " || ", false);
    if (!body.empty()) os << " " << body;
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string paren(const std::vector<long long>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::string paren(const Partition& x) {
  return paren(std::vector<long long>(x.parts().begin(), x.parts().end()));
}

std::string exponent_form(const Partition& x) {
  std::string out = "(";
  const auto p = x.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t k = i;
    while (k < p.size() && p[k] == p[i]) ++k;
    if (i) out += ",";
    out += std::to_string(p[i]);
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  return out + ")";
}

std::string render_text(const ordered_json& doc) {
  const std::string cmd = doc["request"]["command"].get<std::string>();
  if (cmd == "zset") return text_zset(doc);
  if (cmd == "ext") return text_ext(doc);
  if (cmd == "ext-map") return text_ext_map(doc);
  if (cmd == "reg") return text_reg(doc);
  if (cmd == "reg-powers") return text_reg_powers(doc);
  if (cmd == "hilbert") return text_hilbert(doc);
  if (cmd == "kodaira") return text_kodaira(doc);
  if (cmd == "linear-res") return text_linear_res(doc);
  if (cmd == "bblsz-table") return text_bblsz(doc);
  throw std::logic_error("no text renderer for " + cmd);
}

std::string render_latex(const ordered_json& doc) {
  const std::string cmd = doc["request"]["command"].get<std::string>();
  std::ostringstream os;
  if (cmd == "bblsz-table") {
    os << "\\begin{tabular}{c|c}\n$d$ & $\\underline{z}$ \\\\\n";
    for (const auto& row : doc["rows"]) {
      os << "\\hline\n" << row["d"].get<int>() << " & "
         << table_groups(row["groups"], "\\ $||$\\ ", true) << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else if (cmd == "ext") {
    os << "\\begin{tabular}{r|r}\ndegree & $\\dim \\operatorname{Ext}^{"
       << doc["cohdeg"].get<long long>() << "}$ \\\\\n\\hline\n";
    for (const auto& [deg, dim] : doc["table"].items()) {
      os << "$" << deg << "$ & " << dim.get<std::string>() << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else if (cmd == "reg-powers") {
    os << "\\begin{tabular}{r|r|r}\n$d$ & $\\operatorname{reg}$ & $pd$ \\\\\n\\hline\n";
    for (const auto& row : doc["rows"]) {
      const std::string r = reg_text(row["reg"]);
      os << row["d"].get<int>() << " & " << (r == "-inf" ? "$-\\infty$" : r) << " & "
         << row["pd"].get<long long>() << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else if (cmd == "hilbert") {
    os << "\\begin{tabular}{r|r}\n$r$ & $\\dim (S/I)_r$ \\\\\n\\hline\n";
    for (const auto& row : doc["rows"]) {
      os << row["r"].get<int>() << " & " << row["dim"].get<std::string>() << " \\\\\n";
    }
    os << "\\end{tabular}\n";
  } else {
    throw std::invalid_argument("--latex is available for ext, hilbert, reg-powers and bblsz-table");
  }
  return os.str();
}

}  // namespace detthick::cli
