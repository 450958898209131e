// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "relation_fixture.hpp"

#include <nlohmann/json.hpp>

using namespace zeth;
using zeth::test::filled;
using zeth::test::ValidPair;

TEST_SUITE("proof_system")
{
TEST_CASE("setup is deterministic in its randomness")
{
    const CircuitConfig c{2, 2, 4};
    CHECK(proof::setup(c, filled(1)) == proof::setup(c, filled(1)));
    CHECK_FALSE(proof::setup(c, filled(1)) == proof::setup(c, filled(2)));
    CHECK(proof::circuit_fingerprint(c) != proof::circuit_fingerprint(CircuitConfig{2, 2, 5}));
}

TEST_CASE("honest proofs verify")
{
    const ValidPair p;
    const auto crs = proof::setup(p.config, filled(3));
    const Bytes aux{1, 2, 3};
    const auto pi = proof::prove(crs.proving_key, p.x, aux, p.w);
    CHECK(proof::verify(crs.verification_key, p.x, aux, pi));
    CHECK(proof::Proof::parse(pi.serialize()) == pi);
}

TEST_CASE("any change to x, aux or the proof is rejected")
{
    const ValidPair p;
    const auto crs = proof::setup(p.config, filled(3));
    const Bytes aux{1, 2, 3};
    const auto pi = proof::prove(crs.proving_key, p.x, aux, p.w);

    const auto enc = p.x.encode();
    auto x = p.x;
    x.v_out += 1;
    CHECK_FALSE(proof::verify(crs.verification_key, x, aux, pi));
    x = p.x;
    x.root.bytes[31] ^= 1;
    CHECK_FALSE(proof::verify(crs.verification_key, x, aux, pi));
    x = p.x;
    std::swap(x.commitments[0], x.commitments[1]);
    CHECK_FALSE(proof::verify(crs.verification_key, x, aux, pi));

    CHECK_FALSE(proof::verify(crs.verification_key, p.x, Bytes{1, 2, 4}, pi));
    CHECK_FALSE(proof::verify(crs.verification_key, p.x, Bytes{}, pi));

    const auto wire = pi.serialize();
    for (std::size_t i = 0; i < 32; ++i)
    {
        auto bad = wire;
        bad[i] ^= 0x80;
        CHECK_FALSE(proof::verify(crs.verification_key, p.x, aux, proof::Proof::parse(bad)));
    }
    CHECK(enc == p.x.encode());
}

TEST_CASE("keys from another setup reject")
{
    const ValidPair p;
    const auto a = proof::setup(p.config, filled(3));
    const auto b = proof::setup(p.config, filled(4));
    const auto pi = proof::prove(a.proving_key, p.x, {}, p.w);
    CHECK_FALSE(proof::verify(b.verification_key, p.x, {}, pi));
}

TEST_CASE("the prover refuses bad witnesses and foreign shapes")
{
    ValidPair p;
    const auto crs = proof::setup(p.config, filled(3));
    auto x = p.x;
    x.v_in = 100;
    CHECK_ZETH_ERROR(proof::prove(crs.proving_key, x, {}, p.w), ErrorCode::InvalidWitness);
    const auto other = proof::setup(CircuitConfig{2, 2, 5}, filled(3));
    CHECK_ZETH_ERROR(proof::prove(other.proving_key, p.x, {}, p.w), ErrorCode::FingerprintMismatch);
}

TEST_CASE("simulation needs only the trapdoor")
{
    const ValidPair p;
    const auto crs = proof::setup(p.config, filled(3));
    auto x = p.x;
    x.v_out = 1'000'000;  // no witness exists
    const auto pi = proof::simulate(crs.verification_key, crs.trapdoor, x, {});
    CHECK(pi.simulated);
    CHECK(proof::verify(crs.verification_key, x, {}, pi));
    const auto other = proof::setup(p.config, filled(9));
    CHECK_THROWS_AS(proof::simulate(crs.verification_key, other.trapdoor, x, {}), zeth::Error);
}

TEST_CASE("proof parsing")
{
    CHECK_ZETH_ERROR(proof::Proof::parse(Bytes(32, 0)), ErrorCode::Parse);
    auto wire = Bytes(proof::proof_size, 0);
    wire.back() = 2;
    CHECK_ZETH_ERROR(proof::Proof::parse(wire), ErrorCode::Parse);
}

TEST_CASE("crs json round trip")
{
    const auto crs = proof::setup(CircuitConfig{2, 2, 4}, filled(3));
    CHECK(proof::crs_from_json(proof::to_json(crs)) == crs);
    CHECK(proof::verification_key_from_json(proof::to_json(crs.verification_key)) == crs.verification_key);
    CHECK(proof::proving_key_from_json(proof::to_json(crs.proving_key)) == crs.proving_key);
}
}
