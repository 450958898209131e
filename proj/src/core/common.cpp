// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/common.hpp"

#include <sodium.h>

#include <algorithm>

namespace zeth
{
namespace
{
struct SodiumInit
{
    SodiumInit()
    {
        if (sodium_init() < 0)
            throw std::runtime_error("libsodium initialisation failed");
    }
};

int hex_value(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

void ensure_sodium()
{
    static const SodiumInit init;
}

bool Digest256::is_zero() const noexcept
{
    return std::ranges::all_of(bytes, [](std::uint8_t b) { return b == 0; });
}

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code)
    {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorCode::TreeFull: return "TreeFull";
    case ErrorCode::AddressUnused: return "AddressUnused";
    case ErrorCode::NotOwner: return "NotOwner";
    case ErrorCode::MalformedNote: return "MalformedNote";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::AuthFailure: return "AuthFailure";
    case ErrorCode::InvalidKey: return "InvalidKey";
    case ErrorCode::InsufficientFunds: return "InsufficientFunds";
    case ErrorCode::IntrinsicGasTooLow: return "IntrinsicGasTooLow";
    case ErrorCode::OutOfGas: return "OutOfGas";
    case ErrorCode::UnknownContract: return "UnknownContract";
    case ErrorCode::UnknownRoot: return "UnknownRoot";
    case ErrorCode::DoubleSpend: return "DoubleSpend";
    case ErrorCode::InvalidProof: return "InvalidProof";
    case ErrorCode::ValueMismatch: return "ValueMismatch";
    case ErrorCode::InsufficientContractBalance: return "InsufficientContractBalance";
    case ErrorCode::MalformedTransaction: return "MalformedTransaction";
    case ErrorCode::InsufficientNotes: return "InsufficientNotes";
    case ErrorCode::TooManyRecipients: return "TooManyRecipients";
    case ErrorCode::UnbalancedRequest: return "UnbalancedRequest";
    case ErrorCode::InconsistentPair: return "InconsistentPair";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::AlreadyExists: return "AlreadyExists";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

std::string to_hex(ByteView bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (const auto b : bytes)
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

Bytes from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        fail(ErrorCode::Parse, "hex string has odd length");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
    {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            fail(ErrorCode::Parse, "invalid hex digit");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

Bytes32 bytes32_from_hex(std::string_view hex)
{
    const auto raw = from_hex(hex);
    if (raw.size() != 32)
        fail(ErrorCode::Parse, "expected 32 bytes of hex, got " + std::to_string(raw.size()));
    Bytes32 out;
    std::ranges::copy(raw, out.begin());
    return out;
}

Digest256 digest_from_hex(std::string_view hex)
{
    return Digest256{bytes32_from_hex(hex)};
}

std::array<std::uint8_t, 8> be64(std::uint64_t v) noexcept
{
    std::array<std::uint8_t, 8> out{};
    for (int i = 7; i >= 0; --i)
    {
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return out;
}

std::uint64_t read_be64(ByteView bytes)
{
    if (bytes.size() < 8)
        fail(ErrorCode::Parse, "need 8 bytes for a big-endian u64");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 8; ++i)
        v = (v << 8) | bytes[i];
    return v;
}

Rng::Rng(std::uint64_t seed)
{
    const auto enc = be64(seed);
    std::ranges::copy(enc, seed_.begin());
}

Rng Rng::from_os()
{
    ensure_sodium();
    Bytes32 seed;
    randombytes_buf(seed.data(), seed.size());
    return Rng{seed};
}

void Rng::fill(std::span<std::uint8_t> out)
{
    ensure_sodium();
    // Each draw keys a fresh ChaCha20 stream with H(seed || counter).
    std::array<std::uint8_t, 40> preimage{};
    std::ranges::copy(seed_, preimage.begin());
    const auto ctr = be64(counter_++);
    std::ranges::copy(ctr, preimage.begin() + 32);
    std::array<std::uint8_t, randombytes_SEEDBYTES> stream_seed{};
    crypto_hash_sha256(stream_seed.data(), preimage.data(), preimage.size());
    randombytes_buf_deterministic(out.data(), out.size(), stream_seed.data());
}

Bytes32 Rng::bytes32()
{
    Bytes32 out;
    fill(out);
    return out;
}

std::uint64_t Rng::next_u64()
{
    std::array<std::uint8_t, 8> buf{};
    fill(buf);
    return read_be64(buf);
}

std::uint64_t Rng::uniform(std::uint64_t bound)
{
    if (bound == 0)
        fail(ErrorCode::InvalidArgument, "uniform bound must be positive");
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    for (;;)
    {
        const auto v = next_u64();
        if (v < limit)
            return v % bound;
    }
}

Rng Rng::fork()
{
    return Rng{bytes32()};
}

}  // namespace zeth
