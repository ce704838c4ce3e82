#include "apolar/classify.hpp"

namespace apolar {

namespace {

// Rows 1..4 of a codimension 4, socle degree 5 table, columns 1..3; the
// corners b_{0,0} = b_{4,9} = 1 are added.
ConjecturedTable make(std::string label, std::vector<std::vector<long>> middle) {
  std::vector<std::vector<long>> rows{{1}};
  for (auto& r : middle) {
    r.insert(r.begin(), 0);
    rows.push_back(std::move(r));
  }
  rows.push_back({0, 0, 0, 0, 1});
  return {std::move(label), betti_from_rows(4, rows)};
}

}  // namespace

const std::vector<ConjecturedTable>& conjectured_tables() {
  // Printed grid order, then the separately listed (1,8,14,8,1) table.
  // T3 and T5 carry the symmetric corrections of two misprinted cells each;
  // T8 is printed under a (1,6,10,6,1) header but its entries total
  // (1,11,20,11,1).
  static const std::vector<ConjecturedTable> tables{
      make("T1", {{3, 0, 0}, {1, 3, 0}, {0, 3, 1}, {0, 0, 3}}),
      make("T2", {{3, 2, 0}, {3, 3, 0}, {0, 3, 3}, {0, 2, 3}}),
      make("T3", {{3, 1, 0}, {2, 4, 1}, {1, 4, 2}, {0, 1, 3}}),
      make("T4", {{3, 0, 0}, {1, 6, 3}, {3, 6, 1}, {0, 0, 3}}),
      make("T5", {{3, 2, 0}, {3, 4, 1}, {1, 4, 3}, {0, 2, 3}}),
      make("T6", {{3, 2, 0}, {3, 6, 3}, {3, 6, 3}, {0, 2, 3}}),
      make("T7", {{3, 3, 1}, {4, 5, 1}, {1, 5, 4}, {1, 3, 3}}),
      make("T8", {{3, 3, 1}, {4, 7, 3}, {3, 7, 4}, {1, 3, 3}}),
      make("T9", {{3, 1, 0}, {2, 6, 3}, {3, 6, 2}, {0, 1, 3}}),
  };
  return tables;
}

}  // namespace apolar
