// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/joinsplit.hpp"

#include <nlohmann/json_fwd.hpp>

/// Proof-system interface (setup, prove, verify, simulate) with a mock
/// backend.
///
/// WARNING: the backend is designated-verifier. The verification key carries
/// the same binding secret as the proving key, so whoever holds it can forge
/// proofs. That is acceptable only because the verifier here is the
/// in-process mixer. A deployment must replace this module with a publicly
/// verifiable, simulation-extractable zkSNARK; the functions below are the
/// swap point.
///
/// Soundness in the simulation comes from the prover: prove() refuses any
/// witness that fails check_relation(), and nothing outside this module can
/// compute a binding tag without the secret.
namespace zeth::proof
{
/// Pins (N, M, d) so keys from one circuit are never used with another.
Digest256 circuit_fingerprint(const CircuitConfig& config);

struct ProvingKey
{
    CircuitConfig config;
    Digest256 fingerprint;
    Bytes32 binding_secret{};

    bool operator==(const ProvingKey&) const = default;
};

struct VerificationKey
{
    CircuitConfig config;
    Digest256 fingerprint;
    Bytes32 binding_secret{};

    bool operator==(const VerificationKey&) const = default;
};

struct Trapdoor
{
    Digest256 fingerprint;
    Bytes32 simulation_secret{};

    bool operator==(const Trapdoor&) const = default;
};

struct Crs
{
    ProvingKey proving_key;
    VerificationKey verification_key;
    Trapdoor trapdoor;

    bool operator==(const Crs&) const = default;
};

inline constexpr std::size_t proof_size = 33;

struct Proof
{
    Digest256 binding_tag;
    /// Set on simulated proofs. Not part of equality.
    bool simulated = false;

    bool operator==(const Proof& other) const noexcept { return binding_tag == other.binding_tag; }

    /// binding_tag || sim_flag
    std::array<std::uint8_t, proof_size> serialize() const noexcept;
    /// Throws Parse unless exactly 33 bytes with flag 0 or 1.
    static Proof parse(ByteView bytes);
};

/// Deterministic in `randomness`.
Crs setup(const CircuitConfig& config, const Bytes32& randomness);

/// Throws InvalidWitness (message carries the clause report) when (x, w) is
/// not in the relation, FingerprintMismatch when x or w has a different
/// shape than the key's circuit.
Proof prove(const ProvingKey& pk, const Instance& x, ByteView aux_binding, const Witness& w);

/// Constant-time tag comparison. Any change to x, aux_binding or the proof
/// makes it reject.
bool verify(const VerificationKey& vk, const Instance& x, ByteView aux_binding, const Proof& proof);

/// Witness-free accepting proof. Needs the trapdoor.
Proof simulate(const VerificationKey& vk, const Trapdoor& td, const Instance& x, ByteView aux_binding);

nlohmann::json to_json(const ProvingKey& pk);
ProvingKey proving_key_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VerificationKey& vk);
VerificationKey verification_key_from_json(const nlohmann::json& j);
/// CRS file: {"config", "fingerprint", "proving_key", "verification_key", "trapdoor"}.
nlohmann::json to_json(const Crs& crs);
Crs crs_from_json(const nlohmann::json& j);

}  // namespace zeth::proof
