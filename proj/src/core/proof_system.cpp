// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/proof_system.hpp"
#include "zeth/crypto.hpp"

#include <nlohmann/json.hpp>

namespace zeth::proof
{
namespace
{
Digest256 binding_tag(const Bytes32& secret, const Instance& x, ByteView aux_binding)
{
    const auto aux_digest = crypto::hash(aux_binding);
    return crypto::Hasher{}
        .update(crypto::tag::proof)
        .update(secret)
        .update(x.encode())
        .update(aux_digest)
        .finish();
}

bool shape_matches(const CircuitConfig& config, const Instance& x) noexcept
{
    return x.serials.size() == config.n_inputs && x.commitments.size() == config.n_outputs;
}

bool shape_matches(const CircuitConfig& config, const Witness& w) noexcept
{
    if (w.inputs.size() != config.n_inputs || w.outputs.size() != config.n_outputs)
        return false;
    for (const auto& in : w.inputs)
        if (in.path.siblings.size() != config.depth)
            return false;
    return true;
}
}  // namespace

Digest256 circuit_fingerprint(const CircuitConfig& config)
{
    const auto n = be64(config.n_inputs);
    const auto m = be64(config.n_outputs);
    const auto d = be64(config.depth);
    return crypto::Hasher{}
        .update(crypto::tag::crs)
        .update(crypto::hash(std::string_view{"zeth.circuit.joinsplit"}))
        .update(ByteView{n})
        .update(ByteView{m})
        .update(ByteView{d})
        .finish();
}

std::array<std::uint8_t, proof_size> Proof::serialize() const noexcept
{
    std::array<std::uint8_t, proof_size> out{};
    std::ranges::copy(binding_tag.bytes, out.begin());
    out[32] = simulated ? 1 : 0;
    return out;
}

Proof Proof::parse(ByteView bytes)
{
    if (bytes.size() != proof_size || bytes[32] > 1)
        fail(ErrorCode::Parse, "proof must be 33 bytes: tag || flag");
    Proof p;
    std::copy_n(bytes.begin(), 32, p.binding_tag.bytes.begin());
    p.simulated = bytes[32] == 1;
    return p;
}

Crs setup(const CircuitConfig& config, const Bytes32& randomness)
{
    config.validate();
    const auto fp = circuit_fingerprint(config);
    const auto secret =
        crypto::Hasher{}.update(crypto::tag::crs).update(randomness).update(fp).update(0x00).finish().bytes;

    Crs crs;
    crs.proving_key = ProvingKey{config, fp, secret};
    crs.verification_key = VerificationKey{config, fp, secret};
    // In a designated-verifier mock the simulation trapdoor is the binding
    // secret itself.
    crs.trapdoor = Trapdoor{fp, secret};
    return crs;
}

Proof prove(const ProvingKey& pk, const Instance& x, ByteView aux_binding, const Witness& w)
{
    if (pk.fingerprint != circuit_fingerprint(pk.config))
        fail(ErrorCode::FingerprintMismatch, "proving key fingerprint does not match its circuit");
    if (!shape_matches(pk.config, x) || !shape_matches(pk.config, w))
        fail(ErrorCode::FingerprintMismatch, "statement shape differs from the proving key's circuit");
    const auto report = check_relation(pk.config, x, w);
    if (!report.ok())
        fail(ErrorCode::InvalidWitness, "witness violates: " + report.describe());
    return Proof{binding_tag(pk.binding_secret, x, aux_binding), false};
}

bool verify(const VerificationKey& vk, const Instance& x, ByteView aux_binding, const Proof& proof)
{
    if (!shape_matches(vk.config, x))
        return false;
    const auto expected = binding_tag(vk.binding_secret, x, aux_binding);
    return crypto::equal_ct(expected.view(), proof.binding_tag.view());
}

Proof simulate(const VerificationKey& vk, const Trapdoor& td, const Instance& x, ByteView aux_binding)
{
    if (td.fingerprint != vk.fingerprint
        || !crypto::equal_ct(ByteView{td.simulation_secret}, ByteView{vk.binding_secret}))
        fail(ErrorCode::InvalidArgument, "trapdoor does not belong to this verification key");
    return Proof{binding_tag(td.simulation_secret, x, aux_binding), true};
}

nlohmann::json to_json(const ProvingKey& pk)
{
    return {{"config", to_json(pk.config)}, {"fingerprint", to_hex(pk.fingerprint)},
        {"binding_secret", to_hex(pk.binding_secret)}};
}

ProvingKey proving_key_from_json(const nlohmann::json& j)
{
    ProvingKey pk{circuit_config_from_json(j.at("config")),
        digest_from_hex(j.at("fingerprint").get<std::string>()),
        bytes32_from_hex(j.at("binding_secret").get<std::string>())};
    if (pk.fingerprint != circuit_fingerprint(pk.config))
        fail(ErrorCode::FingerprintMismatch, "proving key fingerprint does not match its circuit");
    return pk;
}

nlohmann::json to_json(const VerificationKey& vk)
{
    return {{"config", to_json(vk.config)}, {"fingerprint", to_hex(vk.fingerprint)},
        {"binding_secret", to_hex(vk.binding_secret)}};
}

VerificationKey verification_key_from_json(const nlohmann::json& j)
{
    VerificationKey vk{circuit_config_from_json(j.at("config")),
        digest_from_hex(j.at("fingerprint").get<std::string>()),
        bytes32_from_hex(j.at("binding_secret").get<std::string>())};
    if (vk.fingerprint != circuit_fingerprint(vk.config))
        fail(ErrorCode::FingerprintMismatch, "verification key fingerprint does not match its circuit");
    return vk;
}

nlohmann::json to_json(const Crs& crs)
{
    return {{"config", to_json(crs.proving_key.config)},
        {"fingerprint", to_hex(crs.proving_key.fingerprint)},
        {"proving_key", to_json(crs.proving_key)},
        {"verification_key", to_json(crs.verification_key)},
        {"trapdoor",
            {{"fingerprint", to_hex(crs.trapdoor.fingerprint)},
                {"simulation_secret", to_hex(crs.trapdoor.simulation_secret)}}}};
}

Crs crs_from_json(const nlohmann::json& j)
{
    Crs crs;
    crs.proving_key = proving_key_from_json(j.at("proving_key"));
    crs.verification_key = verification_key_from_json(j.at("verification_key"));
    const auto& td = j.at("trapdoor");
    crs.trapdoor.fingerprint = digest_from_hex(td.at("fingerprint").get<std::string>());
    crs.trapdoor.simulation_secret = bytes32_from_hex(td.at("simulation_secret").get<std::string>());
    return crs;
}

}  // namespace zeth::proof
