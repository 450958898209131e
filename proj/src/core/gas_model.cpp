// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/gas_model.hpp"

#include <nlohmann/json.hpp>

namespace zeth::gas
{
GasSchedule GasSchedule::istanbul()
{
    GasSchedule s;
    s.ecadd = 150;
    s.ecmul = 6000;
    s.pairing_base = 45000;
    s.pairing_per_point = 34000;
    return s;
}

VerifierCostBreakdown verifier_gas(std::uint64_t n, const GasSchedule& sched)
{
    VerifierCostBreakdown b;
    b.linear_combination = n * (sched.ecmul + sched.ecadd) + sched.ecadd;
    b.knowledge_commitments = 3 * (sched.pairing_base + 2 * sched.pairing_per_point);
    b.coefficient_check = sched.pairing_base + 3 * sched.pairing_per_point + 2 * sched.ecadd;
    b.qap_divisibility = sched.pairing_base + 3 * sched.pairing_per_point + sched.ecadd;
    b.total = b.linear_combination + b.knowledge_commitments + b.coefficient_check + b.qap_divisibility;
    return b;
}

MixCallEstimate mix_call_gas(const CircuitConfig& config, const GasSchedule& sched, std::uint64_t n)
{
    MixCallEstimate e;
    e.verification = verifier_gas(n, sched);
    e.intrinsic = sched.intrinsic_tx;
    // leaves, serials, the new root, and one slot of bookkeeping
    e.storage = (config.n_outputs + config.n_inputs + 2) * sched.storage_write;
    e.total = e.intrinsic + e.verification.total + e.storage;
    return e;
}

std::uint64_t packed_instance_elements(const CircuitConfig& config)
{
    return 1 + 2 * (config.n_inputs + config.n_outputs);
}

nlohmann::json to_json(const GasSchedule& s)
{
    return {{"ECADD_GAS", s.ecadd}, {"ECMUL_GAS", s.ecmul}, {"PAIRING_BASE_GAS", s.pairing_base},
        {"PAIRING_PER_POINT_GAS", s.pairing_per_point}, {"intrinsic_tx_gas", s.intrinsic_tx},
        {"storage_write_gas", s.storage_write}, {"contract_call_gas", s.contract_call}};
}

GasSchedule schedule_from_json(const nlohmann::json& j)
{
    GasSchedule s;
    s.ecadd = j.value("ECADD_GAS", s.ecadd);
    s.ecmul = j.value("ECMUL_GAS", s.ecmul);
    s.pairing_base = j.value("PAIRING_BASE_GAS", s.pairing_base);
    s.pairing_per_point = j.value("PAIRING_PER_POINT_GAS", s.pairing_per_point);
    s.intrinsic_tx = j.value("intrinsic_tx_gas", s.intrinsic_tx);
    s.storage_write = j.value("storage_write_gas", s.storage_write);
    s.contract_call = j.value("contract_call_gas", s.contract_call);
    return s;
}

nlohmann::json to_json(const VerifierCostBreakdown& b)
{
    return {{"linear_combination", b.linear_combination}, {"knowledge_commitments", b.knowledge_commitments},
        {"coefficient_check", b.coefficient_check}, {"qap_divisibility", b.qap_divisibility},
        {"total", b.total}};
}

nlohmann::json to_json(const MixCallEstimate& e)
{
    return {{"verification", to_json(e.verification)}, {"intrinsic_estimate", e.intrinsic},
        {"storage_estimate", e.storage}, {"total_estimate", e.total},
        {"verification_share", e.verification_share()}};
}

}  // namespace zeth::gas
