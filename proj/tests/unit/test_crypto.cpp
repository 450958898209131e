// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fixture.hpp"

#include "zeth/crypto.hpp"

using namespace zeth;
using zeth::test::filled;

TEST_SUITE("crypto")
{
TEST_CASE("sha256 known answers")
{
    CHECK(to_hex(crypto::hash(std::string_view{""}))
          == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(to_hex(crypto::hash(std::string_view{"abc"}))
          == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("hasher matches one-shot hash")
{
    const Bytes data{1, 2, 3, 4, 5};
    crypto::Hasher h;
    h.update(ByteView{data}.subspan(0, 2)).update(ByteView{data}.subspan(2));
    CHECK(h.finish() == crypto::hash(ByteView{data}));
}

TEST_CASE("tagged primitives")
{
    const Bytes32 z{};
    CHECK(to_hex(crypto::prf_addr(z, 0)) == "eb142b0cae0baa72a767ebc0823d1be94e14c5bfc52d8e417fc4302fceb6240c");
    CHECK(to_hex(crypto::prf_sn(z, z)) == "ae0798d0ecaed2b778eddebf18f071a561c53658c05e76cedecc27cafbdbc577");
    const auto k = crypto::commit_inner(z, Digest256{}, z);
    CHECK(to_hex(k) == "a11c15e514a104107d7291e448b9513d748d33f2d52b6979b0e06aba6429458a");
    CHECK(to_hex(crypto::commit_outer(z, 0, Digest256{}))
          == "3934bb3dde2c26ce70b62521917b420e954d10d3d8e963d6cc45b49936886273");
    CHECK(to_hex(crypto::commit_outer(z, 0, k)) == "041336365bc84335496cd3d46c6eafb4a7ea3b8efe3efb681c484d4f52b68429");
}

TEST_CASE("roles never collide on equal inputs")
{
    const Bytes32 z{};
    CHECK(crypto::prf_sn(z, z) != crypto::commit_inner(z, Digest256{}, z));
    CHECK(crypto::prf_addr(z, 0) != crypto::prf_addr(z, 1));
}

TEST_CASE("every bit of rho reaches the serial")
{
    const Bytes32 a_sk = filled(3);
    const auto base = crypto::prf_sn(a_sk, Bytes32{});
    for (std::size_t bit = 0; bit < 256; ++bit)
    {
        Bytes32 rho{};
        rho[bit / 8] = static_cast<std::uint8_t>(1U << (bit % 8));
        CHECK(crypto::prf_sn(a_sk, rho) != base);
    }
}

TEST_CASE("hybrid encryption known answer")
{
    const auto keys = crypto::enc_keygen(filled(0x11));
    CHECK(to_hex(keys.k_pk) == "7b4e909bbe7ffe44c465a220037d608ee35897d31ef972f07f74892cb0f73f13");
    const Bytes msg{'z', 'e', 't', 'h'};
    const auto c = crypto::enc(keys.k_pk, msg, filled(0x22));
    CHECK(to_hex(c.ephemeral_pk) == "0faa684ed28867b97f4a6a2dee5df8ce974e76b7018e3f22a1c4cf2678570f20");
    CHECK(to_hex(c.body) == "e7c94f6f");
    CHECK(to_hex(ByteView{c.tag}) == "f8766db06f43aa100fba587e9b259699");
    const auto m = crypto::dec(keys.k_sk, c);
    REQUIRE(m.has_value());
    CHECK(*m == msg);
}

TEST_CASE("decryption fails for the wrong key and for any tampering")
{
    const auto alice = crypto::enc_keygen(filled(0x31));
    const auto bob = crypto::enc_keygen(filled(0x32));
    const Bytes msg(40, 0xab);
    const auto c = crypto::enc(alice.k_pk, msg, filled(0x33));
    CHECK_FALSE(crypto::dec(bob.k_sk, c).has_value());

    const auto wire = c.serialize();
    for (std::size_t i = 0; i < wire.size(); ++i)
    {
        auto bad = wire;
        bad[i] ^= 0x01;
        const auto parsed = crypto::NoteCiphertext::parse(bad);
        REQUIRE(parsed.has_value());
        CHECK_FALSE(crypto::dec(alice.k_sk, *parsed).has_value());
    }
    CHECK_FALSE(crypto::NoteCiphertext::parse(ByteView{wire}.subspan(0, crypto::ciphertext_overhead - 1)).has_value());
}

TEST_CASE("cipher seam round trip")
{
    const auto& cipher = crypto::default_cipher();
    const auto keys = crypto::enc_keygen(filled(0x41));
    const Bytes msg(168, 0x5a);
    const auto sealed = cipher.seal(keys.k_pk, msg, filled(0x42));
    CHECK(sealed.size() == msg.size() + crypto::ciphertext_overhead);
    CHECK(cipher.open(keys.k_sk, sealed) == msg);
    CHECK_FALSE(cipher.open(filled(0x43), sealed).has_value());
}

TEST_CASE("low-order recipient keys are refused")
{
    CHECK_THROWS_AS(crypto::enc(Bytes32{}, Bytes{1}, filled(1)), zeth::Error);
}

TEST_CASE("hex helpers")
{
    CHECK(to_hex(from_hex("00FFa0")) == "00ffa0");
    CHECK_THROWS_AS(from_hex("abc"), zeth::Error);
    CHECK_THROWS_AS(from_hex("zz"), zeth::Error);
    CHECK(read_be64(be64(0x0102030405060708ULL)) == 0x0102030405060708ULL);
}

TEST_CASE("rng is deterministic per seed")
{
    Rng a{42};
    Rng b{42};
    Rng c{43};
    const auto x = a.bytes32();
    CHECK(x == b.bytes32());
    CHECK(x != c.bytes32());
    for (int i = 0; i < 100; ++i)
        CHECK(a.uniform(7) < 7);
}
}
