// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/merkle_tree.hpp"
#include "zeth/notes.hpp"

#include <nlohmann/json_fwd.hpp>

namespace zeth
{
/// Shape of the joinsplit: N inputs, M outputs, tree depth d.
struct CircuitConfig
{
    std::size_t n_inputs = 2;
    std::size_t n_outputs = 2;
    unsigned depth = 16;

    bool operator==(const CircuitConfig&) const = default;

    /// Throws ShapeMismatch on N == 0, M == 0 or an invalid depth.
    void validate() const;
};

/// Public (primary) inputs of the joinsplit relation.
struct Instance
{
    Digest256 root;
    std::vector<Digest256> serials;
    std::vector<Digest256> commitments;
    std::uint64_t v_in = 0;
    std::uint64_t v_out = 0;

    bool operator==(const Instance&) const = default;

    /// Canonical byte encoding bound into proofs:
    /// root | u32 N | sn... | u32 M | cm... | v_in_be8 | v_out_be8.
    Bytes encode() const;
};

struct InputWitness
{
    std::uint64_t address = 0;
    ZethNote note;
    MerklePath path;
    Bytes32 a_sk{};

    bool operator==(const InputWitness&) const = default;
};

/// Auxiliary (private) inputs of the joinsplit relation.
struct Witness
{
    std::vector<InputWitness> inputs;
    std::vector<ZethNote> outputs;

    bool operator==(const Witness&) const = default;
};

/// The six clauses of the relation.
enum class Clause
{
    OutputCommitment,  // (a) cm_new_j opens to note_new_j
    InputStructure,    // (b) cm_old_i recomputed; its path is anchored at cmAddr_i
    Ownership,         // (c) a_pk_old_i = prf_addr(a_sk_old_i, 0)
    SerialNumber,      // (d) sn_old_i = prf_sn(a_sk_old_i, rho_old_i)
    Membership,        // (e) v_old_i * (1 - e_i) = 0
    Balance,           // (f) v_in + sum v_old = sum v_new + v_out
};

std::string_view clause_name(Clause c) noexcept;

struct Violation
{
    Clause clause;
    /// Input or output index; 0 for the balance clause.
    std::size_t index = 0;

    bool operator==(const Violation&) const = default;
};

struct RelationReport
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool violates(Clause c) const noexcept;
    std::string describe() const;
};

/// Evaluates every clause and reports all violations. Throws ShapeMismatch
/// when the instance or witness does not have the configured (N, M, d) shape.
RelationReport check_relation(const CircuitConfig& config, const Instance& x, const Witness& w);

struct SpendInput
{
    ZethNote note;
    Bytes32 a_sk{};
    std::uint64_t address = 0;
    MerklePath path;
};

/// Assembles (x, w) from wallet data. Serial numbers are derived here, so a
/// key that does not own its note fails with NotOwner. No relation check is
/// performed: inconsistent values produce a pair that check_relation rejects.
std::pair<Instance, Witness> build_instance(const CircuitConfig& config,
    const std::vector<SpendInput>& inputs, const std::vector<ZethNote>& outputs,
    std::uint64_t v_in, std::uint64_t v_out, const Digest256& root);

nlohmann::json to_json(const Instance& x);
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CircuitConfig& c);
CircuitConfig circuit_config_from_json(const nlohmann::json& j);

}  // namespace zeth
