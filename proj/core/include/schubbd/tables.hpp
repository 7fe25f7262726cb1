#pragma once

#include <vector>

#include "schubbd/signed_permutation.hpp"

namespace schubbd {

// The two worked product expansions shipped as reference data: the B4
// product S_{234 1bar} . S_{2341} (table 1, 44 rows of length 7) and
// the D4 product S_{2314} . S_{23 4bar 1bar} (table 2, 28 rows of
// length 5).  Row order is fixed by the reference data.
struct ReferenceTableRow {
  const char* word;  // e.g. "[2, 1, 3, 2, 4, 3, 4]"
  const char* clan;  // e.g. "(1,2,-,-,-,-,-,2,1)"
  int coefficient;
};

struct ReferenceTable {
  LieType type;
  int rank;
  const char* u;  // max-rep one-line notation, e.g. "-2,-3,-4,1"
  const char* v;  // min-rep one-line notation
  std::vector<ReferenceTableRow> rows;
};

// which = 1 or 2; throws std::out_of_range otherwise.
const ReferenceTable& reference_table(int which);

}  // namespace schubbd
