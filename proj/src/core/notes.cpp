// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/notes.hpp"
#include "zeth/crypto.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace zeth
{
ZethAddress gen_address(const Bytes32& seed)
{
    using crypto::Hasher;
    ZethAddress addr;
    addr.sec.a_sk = Hasher{}.update(crypto::tag::seed).update(seed).update(0x00).finish().bytes;
    addr.sec.k_sk = Hasher{}.update(crypto::tag::seed).update(seed).update(0x01).finish().bytes;
    addr.pub.a_pk = crypto::prf_addr(addr.sec.a_sk, 0);
    addr.pub.k_pk = crypto::enc_public_key(addr.sec.k_sk);
    return addr;
}

bool address_consistent(const ZethAddress& addr)
{
    return crypto::prf_addr(addr.sec.a_sk, 0) == addr.pub.a_pk
        && crypto::enc_public_key(addr.sec.k_sk) == addr.pub.k_pk;
}

ZethNote make_note(const Digest256& a_pk, std::uint64_t value, Rng& rng)
{
    ZethNote note;
    note.a_pk = a_pk;
    note.value = value;
    note.rho = rng.bytes32();
    note.r = rng.bytes32();
    note.s = rng.bytes32();
    return note;
}

Digest256 commitment(const ZethNote& note)
{
    return crypto::commit_outer(note.s, note.value, crypto::commit_inner(note.r, note.a_pk, note.rho));
}

Digest256 serial_number(const ZethNote& note, const Bytes32& a_sk)
{
    if (crypto::prf_addr(a_sk, 0) != note.a_pk)
        fail(ErrorCode::NotOwner, "spending key does not own this note");
    return crypto::prf_sn(a_sk, note.rho);
}

const Digest256& note_format_tag()
{
    static const Digest256 tag = crypto::hash(std::string_view{"zeth.note.v1"});
    return tag;
}

Bytes serialize_note(const ZethNote& note)
{
    Bytes out;
    out.reserve(serialized_note_size);
    const auto append = [&out](ByteView b) { out.insert(out.end(), b.begin(), b.end()); };
    append(note_format_tag().view());
    append(note.a_pk.view());
    const auto v = be64(note.value);
    append(v);
    append(note.rho);
    append(note.r);
    append(note.s);
    return out;
}

ZethNote deserialize_note(ByteView bytes)
{
    if (bytes.size() != serialized_note_size)
        fail(ErrorCode::MalformedNote,
            "serialized note must be 168 bytes, got " + std::to_string(bytes.size()));
    if (!std::ranges::equal(bytes.first(32), note_format_tag().bytes))
        fail(ErrorCode::MalformedNote, "unknown note format tag");
    ZethNote note;
    auto rest = bytes.subspan(32);
    const auto take32 = [&rest](Bytes32& dst) {
        std::copy_n(rest.begin(), 32, dst.begin());
        rest = rest.subspan(32);
    };
    take32(note.a_pk.bytes);
    note.value = read_be64(rest);
    rest = rest.subspan(8);
    take32(note.rho);
    take32(note.r);
    take32(note.s);
    return note;
}

nlohmann::json to_json(const AddressPublic& pub)
{
    return {{"a_pk", to_hex(pub.a_pk)}, {"k_pk", to_hex(pub.k_pk)}};
}

AddressPublic address_public_from_json(const nlohmann::json& j)
{
    return AddressPublic{digest_from_hex(j.at("a_pk").get<std::string>()),
        bytes32_from_hex(j.at("k_pk").get<std::string>())};
}

nlohmann::json to_json(const ZethAddress& addr)
{
    auto j = to_json(addr.pub);
    j["a_sk"] = to_hex(addr.sec.a_sk);
    j["k_sk"] = to_hex(addr.sec.k_sk);
    return j;
}

ZethAddress address_from_json(const nlohmann::json& j)
{
    ZethAddress addr;
    addr.pub = address_public_from_json(j);
    addr.sec.a_sk = bytes32_from_hex(j.at("a_sk").get<std::string>());
    addr.sec.k_sk = bytes32_from_hex(j.at("k_sk").get<std::string>());
    if (!address_consistent(addr))
        fail(ErrorCode::Parse, "address public keys do not match its secret keys");
    return addr;
}

nlohmann::json to_json(const ZethNote& note)
{
    return {{"a_pk", to_hex(note.a_pk)}, {"value", note.value}, {"rho", to_hex(note.rho)},
        {"r", to_hex(note.r)}, {"s", to_hex(note.s)}};
}

ZethNote note_from_json(const nlohmann::json& j)
{
    ZethNote note;
    note.a_pk = digest_from_hex(j.at("a_pk").get<std::string>());
    note.value = j.at("value").get<std::uint64_t>();
    note.rho = bytes32_from_hex(j.at("rho").get<std::string>());
    note.r = bytes32_from_hex(j.at("r").get<std::string>());
    note.s = bytes32_from_hex(j.at("s").get<std::string>());
    return note;
}

}  // namespace zeth
