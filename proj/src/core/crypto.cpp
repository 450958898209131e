// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/crypto.hpp"

#include <algorithm>

namespace zeth::crypto
{
Hasher::Hasher()
{
    ensure_sodium();
    crypto_hash_sha256_init(&state_);
}

Hasher& Hasher::update(ByteView data)
{
    crypto_hash_sha256_update(&state_, data.data(), data.size());
    return *this;
}

Hasher& Hasher::update(std::uint8_t byte)
{
    crypto_hash_sha256_update(&state_, &byte, 1);
    return *this;
}

Digest256 Hasher::finish()
{
    Digest256 out;
    crypto_hash_sha256_final(&state_, out.bytes.data());
    return out;
}

Digest256 hash(ByteView data)
{
    return Hasher{}.update(data).finish();
}

Digest256 hash(std::string_view text)
{
    return hash(ByteView{reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

Digest256 prf_addr(const Bytes32& a_sk, std::uint8_t index)
{
    return Hasher{}.update(tag::addr).update(a_sk).update(index).finish();
}

Digest256 prf_sn(const Bytes32& a_sk, const Bytes32& rho)
{
    return Hasher{}.update(tag::sn).update(a_sk).update(rho).finish();
}

Digest256 commit_inner(const Bytes32& r, const Digest256& a_pk, const Bytes32& rho)
{
    return Hasher{}.update(tag::com_k).update(r).update(a_pk).update(rho).finish();
}

Digest256 commit_outer(const Bytes32& s, std::uint64_t value, const Digest256& k)
{
    const auto v = be64(value);
    return Hasher{}.update(tag::com_cm).update(s).update(ByteView{v}).update(k).finish();
}

Bytes32 enc_public_key(const Bytes32& k_sk)
{
    ensure_sodium();
    Bytes32 pk;
    crypto_scalarmult_base(pk.data(), k_sk.data());
    return pk;
}

EncKeyPair enc_keygen(const Bytes32& seed)
{
    return EncKeyPair{seed, enc_public_key(seed)};
}

Bytes NoteCiphertext::serialize() const
{
    Bytes out;
    out.reserve(ciphertext_overhead + body.size());
    out.insert(out.end(), ephemeral_pk.begin(), ephemeral_pk.end());
    out.insert(out.end(), body.begin(), body.end());
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

std::optional<NoteCiphertext> NoteCiphertext::parse(ByteView bytes)
{
    if (bytes.size() < ciphertext_overhead)
        return std::nullopt;
    NoteCiphertext c;
    std::copy_n(bytes.begin(), 32, c.ephemeral_pk.begin());
    const auto body_len = bytes.size() - ciphertext_overhead;
    c.body.assign(bytes.begin() + 32, bytes.begin() + 32 + static_cast<std::ptrdiff_t>(body_len));
    std::copy_n(bytes.end() - ciphertext_tag_size, ciphertext_tag_size, c.tag.begin());
    return c;
}

namespace
{
using AeadKey = std::array<std::uint8_t, crypto_aead_chacha20poly1305_ietf_KEYBYTES>;
constexpr std::array<std::uint8_t, crypto_aead_chacha20poly1305_ietf_NPUBBYTES> zero_nonce{};

AeadKey derive_key(const Bytes32& shared, const Bytes32& ephemeral_pk, const Bytes32& k_pk)
{
    const auto d = Hasher{}.update(tag::kdf).update(shared).update(ephemeral_pk).update(k_pk).finish();
    AeadKey key;
    std::ranges::copy(d.bytes, key.begin());
    return key;
}
}  // namespace

NoteCiphertext enc(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness)
{
    ensure_sodium();
    NoteCiphertext c;
    crypto_scalarmult_base(c.ephemeral_pk.data(), randomness.data());

    Bytes32 shared;
    if (crypto_scalarmult(shared.data(), randomness.data(), k_pk.data()) != 0)
        fail(ErrorCode::InvalidKey, "recipient encryption key is a low-order point");
    auto key = derive_key(shared, c.ephemeral_pk, k_pk);
    sodium_memzero(shared.data(), shared.size());

    c.body.resize(plaintext.size());
    unsigned long long tag_len = 0;
    crypto_aead_chacha20poly1305_ietf_encrypt_detached(c.body.data(), c.tag.data(), &tag_len,
        plaintext.data(), plaintext.size(), nullptr, 0, nullptr, zero_nonce.data(), key.data());
    sodium_memzero(key.data(), key.size());
    return c;
}

std::optional<Bytes> dec(const Bytes32& k_sk, const NoteCiphertext& c)
{
    ensure_sodium();
    Bytes32 shared;
    if (crypto_scalarmult(shared.data(), k_sk.data(), c.ephemeral_pk.data()) != 0)
        return std::nullopt;
    const auto k_pk = enc_public_key(k_sk);
    auto key = derive_key(shared, c.ephemeral_pk, k_pk);
    sodium_memzero(shared.data(), shared.size());

    Bytes plaintext(c.body.size());
    const int rc = crypto_aead_chacha20poly1305_ietf_decrypt_detached(plaintext.data(), nullptr,
        c.body.data(), c.body.size(), c.tag.data(), nullptr, 0, zero_nonce.data(), key.data());
    sodium_memzero(key.data(), key.size());
    if (rc != 0)
        return std::nullopt;
    return plaintext;
}

Bytes HybridCipher::seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const
{
    return enc(k_pk, plaintext, randomness).serialize();
}

std::optional<Bytes> HybridCipher::open(const Bytes32& k_sk, ByteView ciphertext) const
{
    const auto c = NoteCiphertext::parse(ciphertext);
    if (!c)
        return std::nullopt;
    return dec(k_sk, *c);
}

const NoteCipher& default_cipher()
{
    static const HybridCipher cipher;
    return cipher;
}

bool equal_ct(ByteView a, ByteView b) noexcept
{
    if (a.size() != b.size())
        return false;
    ensure_sodium();
    return sodium_memcmp(a.data(), b.data(), a.size()) == 0;
}

}  // namespace zeth::crypto
