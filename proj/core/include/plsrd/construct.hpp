#pragma once

#include "plsrd/family.hpp"
#include "plsrd/labeling.hpp"

namespace plsrd {

struct BoundsRecord;

/// A constructive upper-bound certificate: the labeling validates on
/// generate(family) and its weight equals claimed_weight.
struct ConstructionResult {
    Labeling labeling;
    int claimed_weight = 0;
    FamilySpec family;
};

/// Deterministic constructive labeler for every closed-form family.
///
/// The claimed weight per family: K_n -> n-1, K_{p,n} -> p+n-2, S_n -> n,
/// W_n -> ceil(n/2)+1 when 4 | n else ceil((n+1)/2)+1, P_n -> floor(2n/3),
/// C_n -> ceil(2n/3), L_n -> ceil(6n/5), prism -> ceil(6n/5) plus 1 when
/// n = 4 or 5 (mod 10), grid3 -> 2n, J_{2n+1} -> 5n+3 (even n) / 5n+4 (odd).
///
/// Every emitted labeling is re-checked through validate() before returning;
/// CertificateInvalid is thrown if a pattern fails on its instance.
/// ExplicitTree is not handled here (see tree_construction); throws
/// UnsupportedFamily.
ConstructionResult construct(const FamilySpec& spec);

/// Thin wrapper over closed_form so callers can print formula next to
/// construction weight.
BoundsRecord formula_value(const FamilySpec& spec);

}  // namespace plsrd
