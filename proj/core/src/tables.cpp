#include "schubbd/tables.hpp"

#include <stdexcept>

namespace schubbd {

namespace {

const ReferenceTable kTable1{
    LieType::B, 4, "-2,-3,-4,1", "2,3,4,1",
    {
        {"[1, 2, 1, 4, 3, 2, 1]", "(1,-,-,2,-,1,-,-,2)", 0},
        {"[3, 2, 1, 4, 3, 2, 1]", "(-,1,2,-,-,-,1,2,-)", 0},
        {"[1, 3, 2, 4, 3, 2, 1]", "(1,-,2,-,-,-,1,-,2)", 0},
        {"[2, 3, 2, 4, 3, 2, 1]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[2, 1, 3, 4, 3, 2, 1]", "(-,1,-,2,-,2,-,1,-)", 0},
        {"[1, 2, 3, 4, 3, 2, 1]", "(1,-,-,2,-,2,-,-,1)", 0},
        {"[1, 3, 2, 1, 4, 3, 2]", "(1,-,2,-,-,-,1,-,2)", 0},
        {"[2, 3, 2, 1, 4, 3, 2]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[4, 3, 2, 1, 4, 3, 2]", "(-,1,2,-,-,-,1,2,-)", 0},
        {"[2, 1, 3, 2, 4, 3, 2]", "(1,2,-,-,-,-,-,1,2)", 0},
        {"[1, 2, 3, 2, 4, 3, 2]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[1, 2, 1, 3, 4, 3, 2]", "(1,-,-,2,-,2,-,-,1)", 0},
        {"[2, 1, 3, 2, 1, 4, 3]", "(1,2,-,-,-,-,-,1,2)", 0},
        {"[1, 2, 3, 2, 1, 4, 3]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[1, 4, 3, 2, 1, 4, 3]", "(1,-,2,-,-,-,1,-,2)", 0},
        {"[2, 4, 3, 2, 1, 4, 3]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[3, 4, 3, 2, 1, 4, 3]", "(-,1,2,-,-,-,1,2,-)", 0},
        {"[1, 2, 1, 3, 2, 4, 3]", "(1,2,-,-,-,-,-,2,1)", 1},
        {"[2, 1, 4, 3, 2, 4, 3]", "(1,2,-,-,-,-,-,1,2)", 0},
        {"[1, 2, 4, 3, 2, 4, 3]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[3, 2, 4, 3, 2, 4, 3]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[1, 3, 4, 3, 2, 4, 3]", "(1,-,2,-,-,-,1,-,2)", 0},
        {"[2, 3, 4, 3, 2, 4, 3]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[1, 2, 1, 3, 2, 1, 4]", "(1,-,-,-,+,-,-,-,1)", 0},
        {"[2, 1, 4, 3, 2, 1, 4]", "(-,1,-,2,-,2,-,1,-)", 0},
        {"[1, 2, 4, 3, 2, 1, 4]", "(1,-,-,2,-,2,-,-,1)", 0},
        {"[3, 2, 4, 3, 2, 1, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[1, 3, 4, 3, 2, 1, 4]", "(-,-,1,2,-,2,1,-,-)", 0},
        {"[2, 3, 4, 3, 2, 1, 4]", "(-,1,-,2,-,2,-,1,-)", 0},
        {"[1, 2, 1, 4, 3, 2, 4]", "(1,-,-,2,-,2,-,-,1)", 0},
        {"[3, 2, 1, 4, 3, 2, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[1, 3, 2, 4, 3, 2, 4]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[2, 3, 2, 4, 3, 2, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[2, 1, 3, 4, 3, 2, 4]", "(-,1,-,2,-,2,-,1,-)", 0},
        {"[1, 2, 3, 4, 3, 2, 4]", "(1,-,-,2,-,2,-,-,1)", 0},
        {"[1, 3, 2, 1, 4, 3, 4]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[2, 3, 2, 1, 4, 3, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[4, 3, 2, 1, 4, 3, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[2, 1, 3, 2, 4, 3, 4]", "(1,2,-,-,-,-,-,2,1)", 2},
        {"[1, 2, 3, 2, 4, 3, 4]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[1, 4, 3, 2, 4, 3, 4]", "(1,-,2,-,-,-,2,-,1)", 0},
        {"[2, 4, 3, 2, 4, 3, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[3, 4, 3, 2, 4, 3, 4]", "(-,1,2,-,-,-,2,1,-)", 0},
        {"[1, 2, 1, 3, 4, 3, 4]", "(1,-,-,2,-,2,-,-,1)", 0},
    }};

const ReferenceTable kTable2{
    LieType::D, 4, "-2,-3,4,1", "2,3,1,4",
    {
        {"[2, 1, 3, 2, 1]", "(1,-,-,1,2,-,-,2)", 0},
        {"[1, 2, 3, 2, 1]", "(1,-,-,1,2,-,-,2)", 0},
        {"[2, 1, 4, 2, 1]", "(1,2,-,-,-,-,1,2)", 0},
        {"[1, 2, 4, 2, 1]", "(1,-,2,-,-,2,-,1)", 0},
        {"[3, 2, 4, 2, 1]", "(-,1,2,-,-,2,1,-)", 0},
        {"[1, 3, 4, 2, 1]", "(1,-,2,-,-,1,-,2)", 0},
        {"[2, 3, 4, 2, 1]", "(-,1,2,-,-,2,1,-)", 0},
        {"[1, 2, 1, 3, 2]", "(1,-,-,1,2,-,-,2)", 0},
        {"[4, 2, 1, 3, 2]", "(1,-,2,-,-,1,-,2)", 0},
        {"[1, 2, 1, 4, 2]", "(1,2,-,-,-,-,2,1)", 1},
        {"[3, 2, 1, 4, 2]", "(1,2,-,-,-,-,1,2)", 0},
        {"[1, 3, 2, 4, 2]", "(1,-,2,-,-,2,-,1)", 0},
        {"[2, 3, 2, 4, 2]", "(-,1,2,-,-,2,1,-)", 0},
        {"[2, 1, 3, 4, 2]", "(1,2,-,-,-,-,1,2)", 0},
        {"[1, 2, 3, 4, 2]", "(1,-,2,-,-,2,-,1)", 0},
        {"[1, 4, 2, 1, 3]", "(1,-,2,-,-,1,-,2)", 0},
        {"[2, 4, 2, 1, 3]", "(-,1,2,-,-,2,1,-)", 0},
        {"[3, 4, 2, 1, 3]", "(-,1,2,-,-,1,2,-)", 0},
        {"[2, 1, 4, 2, 3]", "(1,2,-,-,-,-,1,2)", 0},
        {"[1, 2, 4, 2, 3]", "(1,-,2,-,-,2,-,1)", 0},
        {"[3, 2, 4, 2, 3]", "(-,1,2,-,-,2,1,-)", 0},
        {"[1, 3, 4, 2, 3]", "(1,-,2,-,-,1,-,2)", 0},
        {"[2, 3, 4, 2, 3]", "(-,1,2,-,-,2,1,-)", 0},
        {"[1, 3, 2, 1, 4]", "(1,-,2,-,-,2,-,1)", 0},
        {"[2, 3, 2, 1, 4]", "(-,1,2,-,-,2,1,-)", 0},
        {"[2, 1, 3, 2, 4]", "(1,2,-,-,-,-,2,1)", 1},
        {"[1, 2, 3, 2, 4]", "(1,-,2,-,-,2,-,1)", 0},
        {"[1, 2, 1, 3, 4]", "(1,-,-,2,2,-,-,1)", 0},
    }};

}  // namespace

const ReferenceTable& reference_table(int which) {
  if (which == 1) return kTable1;
  if (which == 2) return kTable2;
  throw std::out_of_range("no such table");
}

}  // namespace schubbd
