// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/joinsplit.hpp"

#include <nlohmann/json_fwd.hpp>

namespace zeth::gas
{
/// Per-operation gas costs. The group operation in the pairing target group is
/// folded into pairing_per_point.
struct GasSchedule
{
    std::uint64_t ecadd = 500;
    std::uint64_t ecmul = 40000;
    std::uint64_t pairing_base = 100000;
    std::uint64_t pairing_per_point = 80000;
    std::uint64_t intrinsic_tx = 21000;
    std::uint64_t storage_write = 20000;
    /// Flat cost of entering a contract; not part of mix_call_gas.
    std::uint64_t contract_call = 700;

    /// bn256 precompile prices after Byzantium (the defaults).
    static GasSchedule byzantium() { return {}; }
    /// Reduced precompile prices of EIP-1108 (Istanbul).
    static GasSchedule istanbul();
    static GasSchedule zero() { return {0, 0, 0, 0, 0, 0, 0}; }

    bool operator==(const GasSchedule&) const = default;
};

/// Default number of field elements in the packed joinsplit instance for
/// (N, M) = (2, 2).
inline constexpr std::uint64_t default_instance_elements = 9;

struct VerifierCostBreakdown
{
    std::uint64_t linear_combination = 0;
    std::uint64_t knowledge_commitments = 0;
    std::uint64_t coefficient_check = 0;
    std::uint64_t qap_divisibility = 0;
    std::uint64_t total = 0;

    bool operator==(const VerifierCostBreakdown&) const = default;
};

/// Cost of verifying one proof over an n-element instance:
///   linear combination     n*(ECMUL + ECADD) + ECADD
///   knowledge commitments  3*(PAIRING_BASE + 2*PAIRING_PER_POINT)
///   coefficient check      PAIRING_BASE + 3*PAIRING_PER_POINT + 2*ECADD
///   QAP divisibility       PAIRING_BASE + 3*PAIRING_PER_POINT + ECADD
VerifierCostBreakdown verifier_gas(std::uint64_t n, const GasSchedule& sched);

struct MixCallEstimate
{
    VerifierCostBreakdown verification;
    std::uint64_t intrinsic = 0;
    /// (M + N + 2) storage writes; an estimate, not a measured cost.
    std::uint64_t storage = 0;
    std::uint64_t total = 0;

    double verification_share() const noexcept
    {
        return total == 0 ? 0.0 : static_cast<double>(verification.total) / static_cast<double>(total);
    }
};

MixCallEstimate mix_call_gas(const CircuitConfig& config, const GasSchedule& sched, std::uint64_t n);

/// Instance element count for a given (N, M): each serial and commitment
/// takes two field elements, the root shares one element with the packed
/// v_in and v_out. Gives 1 + 2(N + M), i.e. 9 for (2, 2).
std::uint64_t packed_instance_elements(const CircuitConfig& config);

nlohmann::json to_json(const GasSchedule& s);
/// Missing fields keep their Byzantium defaults.
GasSchedule schedule_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerifierCostBreakdown& b);
nlohmann::json to_json(const MixCallEstimate& e);

}  // namespace zeth::gas
