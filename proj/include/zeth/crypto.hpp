// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/common.hpp"

#include <sodium.h>

#include <memory>

/// Hash, PRF, commitment and key-private encryption primitives.
///
/// Every hash-derived primitive is sha256 over a preimage whose first byte is
/// a role tag, so outputs of different roles never share a preimage.
namespace zeth::crypto
{
namespace tag
{
inline constexpr std::uint8_t addr = 0x00;
inline constexpr std::uint8_t sn = 0x01;
inline constexpr std::uint8_t com_k = 0x02;
inline constexpr std::uint8_t com_cm = 0x03;
inline constexpr std::uint8_t seed = 0x04;
inline constexpr std::uint8_t kdf = 0x05;
inline constexpr std::uint8_t proof = 0x06;
inline constexpr std::uint8_t crs = 0x07;
}  // namespace tag

Digest256 hash(ByteView data);
Digest256 hash(std::string_view text);

/// Incremental sha256 for multi-part preimages.
class Hasher
{
public:
    Hasher();
    Hasher& update(ByteView data);
    Hasher& update(std::uint8_t byte);
    Hasher& update(const Digest256& d) { return update(d.view()); }
    Hasher& update(const Bytes32& b) { return update(ByteView{b}); }
    Digest256 finish();

private:
    crypto_hash_sha256_state state_{};
};

/// a_pk = H(0x00 || a_sk || index)
Digest256 prf_addr(const Bytes32& a_sk, std::uint8_t index);
/// sn = H(0x01 || a_sk || rho), all 256 bits of rho enter the preimage.
Digest256 prf_sn(const Bytes32& a_sk, const Bytes32& rho);
/// k = H(0x02 || r || a_pk || rho)
Digest256 commit_inner(const Bytes32& r, const Digest256& a_pk, const Bytes32& rho);
/// cm = H(0x03 || s || v_be8 || k)
Digest256 commit_outer(const Bytes32& s, std::uint64_t value, const Digest256& k);

struct EncKeyPair
{
    Bytes32 k_sk{};
    Bytes32 k_pk{};
};

/// X25519 keypair; k_sk is the seed itself and k_pk = k_sk * G.
EncKeyPair enc_keygen(const Bytes32& seed);
Bytes32 enc_public_key(const Bytes32& k_sk);

inline constexpr std::size_t ciphertext_tag_size = 16;
inline constexpr std::size_t ciphertext_overhead = 32 + ciphertext_tag_size;

struct NoteCiphertext
{
    Bytes32 ephemeral_pk{};
    Bytes body;
    std::array<std::uint8_t, ciphertext_tag_size> tag{};

    /// ephemeral_pk || body || tag
    Bytes serialize() const;
    /// Fails (nullopt) when shorter than the fixed overhead.
    static std::optional<NoteCiphertext> parse(ByteView bytes);

    bool operator==(const NoteCiphertext&) const = default;
};

/// Hybrid encryption: ephemeral X25519 key from `randomness`, symmetric key
/// H(0x05 || shared || ephemeral_pk || k_pk), ChaCha20-Poly1305 with a zero
/// nonce (the key is single-use). Throws InvalidKey for low-order k_pk.
NoteCiphertext enc(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness);

/// nullopt on any authentication failure: wrong recipient and tampering are
/// reported identically.
std::optional<Bytes> dec(const Bytes32& k_sk, const NoteCiphertext& c);

/// Encryption seam used by wallets and the security games. The production
/// scheme is HybridCipher; the games swap in deliberately broken variants to
/// check that they can detect leakage.
class NoteCipher
{
public:
    virtual ~NoteCipher() = default;
    virtual Bytes seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const = 0;
    virtual std::optional<Bytes> open(const Bytes32& k_sk, ByteView ciphertext) const = 0;
    virtual std::string_view name() const noexcept = 0;
};

class HybridCipher final : public NoteCipher
{
public:
    Bytes seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const override;
    std::optional<Bytes> open(const Bytes32& k_sk, ByteView ciphertext) const override;
    std::string_view name() const noexcept override { return "hybrid-x25519-chacha20poly1305"; }
};

const NoteCipher& default_cipher();

/// Constant-time equality.
bool equal_ct(ByteView a, ByteView b) noexcept;

}  // namespace zeth::crypto
