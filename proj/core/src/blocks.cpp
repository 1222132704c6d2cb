#include "hookvan/blocks.hpp"

#include <algorithm>

#include "hookvan/abacus.hpp"
#include "hookvan/errors.hpp"

namespace hookvan {

namespace {

void require_prime(int p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
}

int weight_sum(const Partition& lam, int p) {
  int total = 0;
  for (auto [i, w] : prime_power_weights(lam, p)) total += w;
  return total;
}

}  // namespace

int nu_p_degree(const Partition& lam, int p) {
  require_prime(p);
  return legendre(lam.size(), p) - weight_sum(lam, p);
}

BlockData block_data_sym(const Partition& lam, int p) {
  require_prime(p);
  const CoreQuotient cq = core_and_quotient(lam, p);
  BlockData out;
  out.group = GroupContext{lam.size(), GroupKind::Sym, p};
  out.p = p;
  out.core = cq.core;
  out.weight = cq.weight;
  out.defect = legendre(p * cq.weight, p);
  out.sylow_log = sylow_log_order(out.group);
  out.height = out.defect - weight_sum(lam, p);
  out.nu_p_degree = nu_p_degree(lam, p);
  return out;
}

BlockData block_data_alt(const Partition& lam, int p) {
  require_prime(p);
  if (lam.size() < 2) throw DomainError("A_n block data needs n >= 2");
  BlockData out = block_data_sym(lam, p);
  out.group.kind = GroupKind::Alt;
  if (p != 2) return out;
  out.defect = std::max(legendre(2 * out.weight, 2) - 1, 0);
  out.sylow_log = sylow_log_order(out.group);
  if (is_self_conjugate(lam)) out.nu_p_degree -= 1;
  out.height = out.nu_p_degree - out.sylow_log + out.defect;
  return out;
}

bool same_block(const Partition& lam, const Partition& mu, int p) {
  return lam.size() == mu.size() && core(lam, p) == core(mu, p);
}

nlohmann::json block_to_json(const BlockData& block) {
  return {{"core", block.core.str()},
          {"weight", block.weight},
          {"defect", block.defect},
          {"height", block.height},
          {"nu_p_degree", block.nu_p_degree}};
}

}  // namespace hookvan
