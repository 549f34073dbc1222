#pragma once

#include "syzlab/lab.hpp"

namespace syzlab::lab {

/// Omega^n from a resolution of length >= n + 1 (n = 0 gives the module).
PresentedModule syzygy_from(const Resolution& res, int n);
/// Signature of Omega^n read off the resolution, Hilbert data computed.
ModuleSignature syzygy_signature(const Resolution& res, int n, int hilbert_bound);

/// sum over parts of rank * HS(R(-j)), given HS(R).
HilbertSeries free_series(const HilbertSeries& ring_series, const std::vector<std::pair<int, std::int64_t>>& parts);

}  // namespace syzlab::lab
