#ifndef SIMPERM_TESTS_PRINTED_TABLES_HPP
#define SIMPERM_TESTS_PRINTED_TABLES_HPP

#include <string_view>
#include <vector>

namespace simperm::testing {

// Reference order-6 and order-10 tables, transcribed verbatim.
struct PrintedRow {
  std::string_view square_class;
  int first_image;
  std::vector<int> images;
};

inline const std::vector<PrintedRow>& printed_mixed_rows() {
  static const std::vector<PrintedRow> rows = {
      {"alpha|alpha", 6, {6, 4, 5, 1, 2, 3}},
      {"alpha|alpha", 5, {5, 6, 4, 2, 3, 1}},
      {"alpha|alpha", 4, {4, 5, 6, 3, 1, 2}},
      {"beta|beta", 4, {4, 5, 6, 2, 3, 1}},
      {"beta|beta", 5, {5, 6, 4, 1, 2, 3}},
      {"beta|beta", 6, {6, 4, 5, 3, 1, 2}},
      {"alpha|beta", 4, {4, 6, 5, 3, 1, 2}},
      {"alpha|beta", 5, {5, 4, 6, 1, 3, 2}},
      {"alpha|beta", 6, {6, 5, 4, 2, 1, 3}},
      {"beta|alpha", 4, {4, 6, 5, 2, 1, 3}},
      {"beta|alpha", 5, {5, 4, 6, 3, 2, 1}},
      {"beta|alpha", 6, {6, 5, 4, 1, 3, 2}},
      {"alpha|alpha", 6, {6, 7, 8, 9, 10, 5, 4, 2, 1, 3}},
      {"alpha|alpha", 7, {7, 10, 6, 8, 9, 2, 5, 1, 3, 4}},
      {"alpha|alpha", 8, {8, 6, 9, 10, 7, 4, 3, 5, 2, 1}},
      {"alpha|alpha", 9, {9, 8, 10, 7, 6, 3, 1, 4, 5, 2}},
      {"alpha|alpha", 10, {10, 9, 7, 6, 8, 1, 2, 3, 4, 5}},
      {"beta|beta", 6, {6, 7, 8, 9, 10, 3, 5, 4, 2, 1}},
      {"beta|beta", 7, {7, 8, 10, 6, 9, 2, 3, 5, 1, 4}},
      {"beta|beta", 8, {8, 10, 9, 7, 6, 1, 2, 3, 4, 5}},
      {"beta|beta", 9, {9, 6, 7, 10, 8, 5, 4, 1, 3, 2}},
      {"beta|beta", 10, {10, 9, 6, 8, 7, 4, 1, 2, 5, 3}},
      {"alpha|beta", 6, {6, 7, 9, 10, 8, 5, 4, 3, 2, 1}},
      {"alpha|beta", 7, {7, 8, 6, 9, 10, 2, 5, 4, 1, 3}},
      {"alpha|beta", 8, {8, 10, 7, 6, 9, 1, 2, 5, 3, 4}},
      {"alpha|beta", 9, {9, 6, 10, 8, 7, 4, 3, 1, 5, 2}},
      {"alpha|beta", 10, {10, 9, 8, 7, 6, 3, 1, 2, 4, 5}},
      {"beta|alpha", 6, {6, 7, 10, 8, 9, 3, 5, 2, 1, 4}},
      {"beta|alpha", 7, {7, 10, 9, 6, 8, 2, 3, 1, 4, 5}},
      {"beta|alpha", 8, {8, 6, 7, 9, 10, 5, 4, 3, 2, 1}},
      {"beta|alpha", 9, {9, 8, 6, 10, 7, 4, 1, 5, 3, 2}},
      {"beta|alpha", 10, {10, 9, 8, 7, 6, 1, 2, 4, 5, 3}},
  };
  return rows;
}

}  // namespace simperm::testing

#endif
