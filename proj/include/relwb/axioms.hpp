#pragma once
#include <string>

#include "relwb/ca.hpp"
#include "relwb/report.hpp"

namespace relwb {

enum class AxVariant { CA, PTA, TA, PEA };

std::string variant_name(AxVariant v);
AxVariant variant_from_name(const std::string& s);

// Checks the chosen axiom list in Cm(S). Quantification: singleton atoms plus
// unions of <=2 atoms (plus 0 and 1); fullPowerset switches to all subsets
// (<= 16 atoms). jobs = 1 forces the serial reference scan.
CheckReport check_ca_axioms(const CaAtomStructure& S, AxVariant variant,
                            int jobs = 0, bool fullPowerset = false);

} // namespace relwb
