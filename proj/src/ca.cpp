#include "relwb/ca.hpp"

namespace relwb {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Df: return "Df";
    case Flavor::Ca: return "Ca";
    case Flavor::Pta: return "Pta";
    case Flavor::Ta: return "Ta";
    case Flavor::Pea: return "Pea";
  }
  return "?";
}

Flavor flavor_from_name(const std::string& s) {
  if (s == "Df") return Flavor::Df;
  if (s == "Ca") return Flavor::Ca;
  if (s == "Pta") return Flavor::Pta;
  if (s == "Ta") return Flavor::Ta;
  if (s == "Pea") return Flavor::Pea;
  throw UsageError("unknown flavor: " + s);
}

CheckReport CaAtomStructure::validate() const {
  CheckReport rep;
  rep.name = "ca-structure";
  rep.stats["atoms"] = k;
  rep.stats["dim"] = dim;
  if (dim < 1) rep.fail("dimension", std::to_string(dim));
  for (int i = 0; i < dim; ++i) {
    for (int a = 0; a < k; ++a) {
      if (!cyl[i][a].test(a))
        rep.fail("cylacc-reflexive",
                 "i=" + std::to_string(i) + " atom " + std::to_string(a));
      cyl[i][a].for_each([&](int b) {
        if (!cyl[i][b].test(a))
          rep.fail("cylacc-symmetric", "i=" + std::to_string(i) + " (" +
                                           std::to_string(a) + "," +
                                           std::to_string(b) + ")");
      });
    }
  }
  if (hasSubst()) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        const auto& p = subst[pairIndex(i, j)];
        if (int(p.size()) != k) {
          rep.fail("subst-size", "[" + std::to_string(i) + "," + std::to_string(j) + "]");
          continue;
        }
        std::vector<bool> seen(k, false);
        for (int a = 0; a < k; ++a) {
          if (p[a] < 0 || p[a] >= k || seen[p[a]]) {
            rep.fail("subst-bijection",
                     "[" + std::to_string(i) + "," + std::to_string(j) +
                         "] atom " + std::to_string(a));
            break;
          }
          seen[p[a]] = true;
        }
      }
  }
  return rep;
}

} // namespace relwb
