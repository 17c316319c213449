#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mhtest/settings.hpp"
#include "mhtest/test_id.hpp"

namespace mhtest {

enum class TableId {
  tab8,    // W_k, Setting 1
  tab88,   // W_k', Setting 1
  trv1,    // V_k, Setting 1
  trv2,    // V_k', Setting 1
  tab2,    // Tests 1-3, Setting 1, d = 5
  tab3,    // Tests 1-3, Setting 1, d = 10
  tab4,    // Tests 1-3, Setting 1, d = 20
  tab5,    // Tests 1-3, Setting 2, d = 5
  tab6,    // Tests 1-3, Setting 2, d = 10
  rev1,    // Tests 4-7, Setting 1, d = 5
  rev2,    // Tests 4-7, Setting 1, d = 10
  rev3,    // Tests 4-7, Setting 1, d = 20
  power1,  // Tests 1-3 and pooled chi-square, Setting 3
  power2,  // same, Setting 4
  power3,  // same, Setting 5
  powerCM, // per-group bootstrap with the min-p rule, Settings 3-5
};

inline constexpr TableId kAllTables[] = {
    TableId::tab8, TableId::tab88, TableId::trv1, TableId::trv2,   TableId::tab2,   TableId::tab3,
    TableId::tab4, TableId::tab5,  TableId::tab6, TableId::rev1,   TableId::rev2,   TableId::rev3,
    TableId::power1, TableId::power2, TableId::power3, TableId::powerCM};

std::string_view to_string(TableId t) noexcept;
/// Throws UnknownTable.
TableId parse_table_id(std::string_view name);

/// One published rejection rate.
struct ReferenceCell {
  TableId table;
  TestId test;
  int setting;
  int d;
  int k;
  int n1;
  int n2;
  Pi0 pi0;
  double value;
};

std::span<const ReferenceCell> reference_cells() noexcept;
std::vector<ReferenceCell> reference_cells(TableId table);

/// 1000 for powerCM, 10000 otherwise.
std::int64_t default_reps(TableId table) noexcept;

}  // namespace mhtest
