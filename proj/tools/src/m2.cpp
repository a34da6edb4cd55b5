#include <sstream>
#include <stdexcept>

#include "detthick/cli.hpp"
#include "detthick/schur.hpp"

namespace detthick::cli {

namespace {

std::string m2_list(const Partition& cols) {
  std::string out = "{";
  for (std::size_t i = 0; i < cols.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(cols[i]);
  }
  return out + "}";
}

// I_X as the ideal spanned by random GL_m x GL_n translates of the highest
// weight vectors det_x = product of leading principal minors of sizes x'_1,
// x'_2, ... Twice dim(S_x C^m ⊗ S_x C^n) translates span the irreducible
// with high probability over a large prime field.
void ideal_block(std::ostringstream& os, const IdealSpec& x, int m, int n) {
  os << "I = ideal(0_R);\n";
  if (x.is_unit()) {
    os << "I = ideal(1_R);\n";
    return;
  }
  for (const auto& g : x.gens()) {
    const BigInt count = 2 * schur_dim(g, m) * schur_dim(g, n);
    os << "I = I + orbitIdeal(" << m2_list(conjugate(g)) << ", " << count << "); -- x = ("
       << to_string(g) << ")\n";
  }
  os << "I = trim I;\n";
}

}  // namespace

std::string macaulay2_script(const Request& req) {
  if (!req.ideal) throw std::invalid_argument("--emit-m2 needs an ideal");
  const int m = req.m;
  const int n = req.n;
  std::ostringstream os;
  os << "-- detthick cross-check script\n"
     << "kk = ZZ/32003;\n"
     << "R = kk[x_(1,1)..x_(" << m << "," << n << ")];\n"
     << "M = transpose genericMatrix(R, x_(1,1), " << n << ", " << m << ");\n"
     << "hw = (N, cols) -> product(cols, k -> det submatrix(N, toList(0..k-1), toList(0..k-1)));\n"
     << "orbitIdeal = (cols, count) -> ideal apply(count, i -> (\n"
     << "    A := sub(random(kk^" << m << ", kk^" << m << "), R);\n"
     << "    B := sub(random(kk^" << n << ", kk^" << n << "), R);\n"
     << "    hw(A * M * B, cols)));\n";
  ideal_block(os, *req.ideal, m, n);
  if (req.command == "reg") {
    os << "print(\"reg(I) = \" | toString regularity I);\n";
  } else if (req.command == "ext") {
    if (!req.cohdeg || !req.window) throw std::invalid_argument("ext script needs cohdeg and window");
    os << "E = Ext^" << *req.cohdeg << "(comodule I, R);\n"
       << "for r from " << req.window->lo << " to " << req.window->hi
       << " do print(toString r | \": \" | toString hilbertFunction(r, E));\n";
  } else {
    throw std::invalid_argument("--emit-m2 applies to ext and reg");
  }
  return os.str();
}

}  // namespace detthick::cli
