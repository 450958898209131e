// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/common.hpp"

#include <nlohmann/json_fwd.hpp>

namespace zeth
{
struct AddressPublic
{
    Digest256 a_pk;
    Bytes32 k_pk{};

    bool operator==(const AddressPublic&) const = default;
};

struct AddressSecret
{
    Bytes32 a_sk{};
    Bytes32 k_sk{};

    bool operator==(const AddressSecret&) const = default;
};

/// A party's key bundle: spend keys (a_sk, a_pk) and encryption keys
/// (k_sk, k_pk).
struct ZethAddress
{
    AddressPublic pub;
    AddressSecret sec;

    bool operator==(const ZethAddress&) const = default;
};

/// Expands one seed into both secrets: a_sk = H(0x04 || seed || 0x00),
/// k_sk = H(0x04 || seed || 0x01).
ZethAddress gen_address(const Bytes32& seed);

/// Recomputes the public half and checks it against `addr.pub`.
bool address_consistent(const ZethAddress& addr);

struct ZethNote
{
    Digest256 a_pk;
    std::uint64_t value = 0;
    Bytes32 rho{};
    Bytes32 r{};
    Bytes32 s{};

    bool operator==(const ZethNote&) const = default;
};

/// Fresh note for `a_pk` with random rho, r, s.
ZethNote make_note(const Digest256& a_pk, std::uint64_t value, Rng& rng);

/// cm = commit_outer(s, v, commit_inner(r, a_pk, rho))
Digest256 commitment(const ZethNote& note);

/// prf_sn(a_sk, rho). Throws NotOwner when prf_addr(a_sk, 0) != note.a_pk.
Digest256 serial_number(const ZethNote& note, const Bytes32& a_sk);

/// Wire layout of an encrypted note payload:
/// format_tag(32) | a_pk(32) | v_be8(8) | rho(32) | r(32) | s(32).
inline constexpr std::size_t serialized_note_size = 168;
const Digest256& note_format_tag();
Bytes serialize_note(const ZethNote& note);
/// Throws MalformedNote on wrong length or format tag.
ZethNote deserialize_note(ByteView bytes);

nlohmann::json to_json(const AddressPublic& pub);
AddressPublic address_public_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ZethAddress& addr);
ZethAddress address_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ZethNote& note);
ZethNote note_from_json(const nlohmann::json& j);

}  // namespace zeth
