// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zeth
{
using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Arbitrary-precision integer used for Wei balances and balance sums.
using BigInt = boost::multiprecision::cpp_int;

/// Fixed 32-byte value. Secrets (a_sk, k_sk, rho, r, s) and public keys use
/// this directly; hash outputs use the distinct Digest256 type.
using Bytes32 = std::array<std::uint8_t, 32>;

struct Digest256
{
    Bytes32 bytes{};

    constexpr auto operator<=>(const Digest256&) const = default;

    ByteView view() const noexcept { return bytes; }
    bool is_zero() const noexcept;
};

/// Every failure the library reports. Values are stable: they are exported
/// through the C API as error codes.
enum class ErrorCode : int
{
    Ok = 0,
    InvalidArgument = 1,
    DepthOutOfRange = 2,
    TreeFull = 3,
    AddressUnused = 4,
    NotOwner = 5,
    MalformedNote = 6,
    ShapeMismatch = 7,
    InvalidWitness = 8,
    FingerprintMismatch = 9,
    AuthFailure = 10,
    InvalidKey = 11,
    InsufficientFunds = 12,
    IntrinsicGasTooLow = 13,
    OutOfGas = 14,
    UnknownContract = 15,
    UnknownRoot = 16,
    DoubleSpend = 17,
    InvalidProof = 18,
    ValueMismatch = 19,
    InsufficientContractBalance = 20,
    MalformedTransaction = 21,
    InsufficientNotes = 22,
    TooManyRecipients = 23,
    UnbalancedRequest = 24,
    InconsistentPair = 25,
    Io = 26,
    Parse = 27,
    NotFound = 28,
    AlreadyExists = 29,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

/// Idempotent libsodium initialisation; called by every entry point that
/// touches sodium.
void ensure_sodium();

std::string to_hex(ByteView bytes);
inline std::string to_hex(const Digest256& d) { return to_hex(d.view()); }
inline std::string to_hex(const Bytes32& b) { return to_hex(ByteView{b}); }

/// Lowercase or uppercase, no 0x prefix. Throws Error(Parse).
Bytes from_hex(std::string_view hex);
Bytes32 bytes32_from_hex(std::string_view hex);
Digest256 digest_from_hex(std::string_view hex);

/// 8-byte big-endian encoding used inside every hash preimage.
std::array<std::uint8_t, 8> be64(std::uint64_t v) noexcept;
std::uint64_t read_be64(ByteView bytes);

/// Deterministic randomness source. Every random choice in the library flows
/// through one of these so that a seed reproduces a whole run.
class Rng
{
public:
    explicit Rng(std::uint64_t seed);
    explicit Rng(const Bytes32& seed) : seed_(seed) {}

    /// Seeded from the operating system.
    static Rng from_os();

    Bytes32 bytes32();
    void fill(std::span<std::uint8_t> out);
    std::uint64_t next_u64();
    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t uniform(std::uint64_t bound);
    bool coin() { return (next_u64() & 1U) != 0; }

    /// Independent child stream; the parent advances by one draw.
    Rng fork();

private:
    Bytes32 seed_{};
    std::uint64_t counter_ = 0;
};

}  // namespace zeth
