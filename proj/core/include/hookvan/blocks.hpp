#pragma once

#include <nlohmann/json.hpp>

#include "hookvan/partition.hpp"
#include "hookvan/sym_groups.hpp"

namespace hookvan {

/// p-block data of the character labelled by a partition.
///
/// Always satisfies nu_p_degree = sylow_log - defect + height.
struct BlockData {
  GroupContext group;
  int p = 2;
  Partition core;  // block label: the p-core
  int weight = 0;  // w_p
  int defect = 0;
  int sylow_log = 0;
  int height = 0;
  int nu_p_degree = 0;

  friend bool operator==(const BlockData&, const BlockData&) = default;
};

/// nu_p(chi^lam(1)) = (n - digit sum) / (p - 1) - sum_{i >= 1} w_{p^i}(lam),
/// evaluated from weights without forming the degree.
int nu_p_degree(const Partition& lam, int p);

BlockData block_data_sym(const Partition& lam, int p);

/// Block data of the A_n character(s) covered by chi^lam. For p = 2 the
/// defect drops by one (clamped at zero), the Sylow order halves, and the
/// degree halves when lam is self-conjugate. Throws DomainError for n < 2.
BlockData block_data_alt(const Partition& lam, int p);

/// Sym block of the same p-core.
bool same_block(const Partition& lam, const Partition& mu, int p);

nlohmann::json block_to_json(const BlockData& block);

}  // namespace hookvan
