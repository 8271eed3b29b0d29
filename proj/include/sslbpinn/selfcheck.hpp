#pragma once

// Built-in property suite behind the `check` CLI subcommand: Kronecker/vec
// identities, DNN Jacobians vs finite differences, the plant skew-symmetry
// property, projection behaviour, and the dual-form observer agreement.
// Returns the number of failed checks.

#include <ostream>

namespace sslb {

int self_check(std::ostream& out);

}  // namespace sslb
