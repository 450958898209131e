// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/joinsplit.hpp"
#include "zeth/crypto.hpp"

#include <nlohmann/json.hpp>

namespace zeth
{
void CircuitConfig::validate() const
{
    if (n_inputs == 0 || n_outputs == 0)
        fail(ErrorCode::ShapeMismatch, "joinsplit needs at least one input and one output");
    if (depth < 1 || depth > max_tree_depth)
        fail(ErrorCode::ShapeMismatch, "joinsplit tree depth must be in [1, 32]");
}

namespace
{
void append_u32(Bytes& out, std::size_t v)
{
    const auto enc = be64(static_cast<std::uint64_t>(v));
    out.insert(out.end(), enc.begin() + 4, enc.end());
}

void append(Bytes& out, ByteView b)
{
    out.insert(out.end(), b.begin(), b.end());
}
}  // namespace

Bytes Instance::encode() const
{
    Bytes out;
    out.reserve(32 * (1 + serials.size() + commitments.size()) + 24);
    append(out, root.view());
    append_u32(out, serials.size());
    for (const auto& sn : serials)
        append(out, sn.view());
    append_u32(out, commitments.size());
    for (const auto& cm : commitments)
        append(out, cm.view());
    append(out, be64(v_in));
    append(out, be64(v_out));
    return out;
}

std::string_view clause_name(Clause c) noexcept
{
    switch (c)
    {
    case Clause::OutputCommitment: return "output_commitment";
    case Clause::InputStructure: return "input_structure";
    case Clause::Ownership: return "ownership";
    case Clause::SerialNumber: return "serial_number";
    case Clause::Membership: return "membership";
    case Clause::Balance: return "balance";
    }
    return "unknown";
}

bool RelationReport::violates(Clause c) const noexcept
{
    for (const auto& v : violations)
        if (v.clause == c)
            return true;
    return false;
}

std::string RelationReport::describe() const
{
    if (ok())
        return "ok";
    std::string out;
    for (const auto& v : violations)
    {
        if (!out.empty())
            out += ", ";
        out += std::string{clause_name(v.clause)} + "[" + std::to_string(v.index) + "]";
    }
    return out;
}

RelationReport check_relation(const CircuitConfig& config, const Instance& x, const Witness& w)
{
    config.validate();
    if (x.serials.size() != config.n_inputs || w.inputs.size() != config.n_inputs
        || x.commitments.size() != config.n_outputs || w.outputs.size() != config.n_outputs)
        fail(ErrorCode::ShapeMismatch, "instance/witness shape does not match the circuit");
    for (const auto& in : w.inputs)
        if (in.path.siblings.size() != config.depth || in.path.directions.size() != config.depth)
            fail(ErrorCode::ShapeMismatch, "merkle path length does not match the tree depth");

    RelationReport report;
    const auto flag = [&report](Clause c, std::size_t i) { report.violations.push_back({c, i}); };

    for (std::size_t j = 0; j < config.n_outputs; ++j)
        if (commitment(w.outputs[j]) != x.commitments[j])
            flag(Clause::OutputCommitment, j);

    BigInt lhs = x.v_in;
    BigInt rhs = x.v_out;
    for (std::size_t i = 0; i < config.n_inputs; ++i)
    {
        const auto& in = w.inputs[i];
        const auto cm_old = commitment(in.note);

        // The path must address the leaf at cmAddr; directions are checked
        // against the address during path verification.
        const bool anchored = in.path.leaf_address == in.address
            && (config.depth >= 64 || (in.address >> config.depth) == 0);
        if (!anchored)
            flag(Clause::InputStructure, i);

        if (crypto::prf_addr(in.a_sk, 0) != in.note.a_pk)
            flag(Clause::Ownership, i);
        if (crypto::prf_sn(in.a_sk, in.note.rho) != x.serials[i])
            flag(Clause::SerialNumber, i);

        const bool e = anchored && verify_path(cm_old, in.path, x.root);
        if (in.note.value != 0 && !e)
            flag(Clause::Membership, i);

        lhs += in.note.value;
    }
    for (const auto& out : w.outputs)
        rhs += out.value;
    if (lhs != rhs)
        flag(Clause::Balance, 0);
    return report;
}

std::pair<Instance, Witness> build_instance(const CircuitConfig& config,
    const std::vector<SpendInput>& inputs, const std::vector<ZethNote>& outputs,
    std::uint64_t v_in, std::uint64_t v_out, const Digest256& root)
{
    config.validate();
    if (inputs.size() != config.n_inputs || outputs.size() != config.n_outputs)
        fail(ErrorCode::ShapeMismatch,
            "expected " + std::to_string(config.n_inputs) + " inputs and "
                + std::to_string(config.n_outputs) + " outputs");

    Instance x;
    Witness w;
    x.root = root;
    x.v_in = v_in;
    x.v_out = v_out;
    for (const auto& in : inputs)
    {
        x.serials.push_back(serial_number(in.note, in.a_sk));
        w.inputs.push_back(InputWitness{in.address, in.note, in.path, in.a_sk});
    }
    for (const auto& note : outputs)
    {
        x.commitments.push_back(commitment(note));
        w.outputs.push_back(note);
    }
    return {std::move(x), std::move(w)};
}

nlohmann::json to_json(const Instance& x)
{
    nlohmann::json sns = nlohmann::json::array();
    for (const auto& sn : x.serials)
        sns.push_back(to_hex(sn));
    nlohmann::json cms = nlohmann::json::array();
    for (const auto& cm : x.commitments)
        cms.push_back(to_hex(cm));
    return {{"root", to_hex(x.root)}, {"serials", sns}, {"commitments", cms}, {"v_in", x.v_in},
        {"v_out", x.v_out}};
}

Instance instance_from_json(const nlohmann::json& j)
{
    Instance x;
    x.root = digest_from_hex(j.at("root").get<std::string>());
    for (const auto& sn : j.at("serials"))
        x.serials.push_back(digest_from_hex(sn.get<std::string>()));
    for (const auto& cm : j.at("commitments"))
        x.commitments.push_back(digest_from_hex(cm.get<std::string>()));
    x.v_in = j.at("v_in").get<std::uint64_t>();
    x.v_out = j.at("v_out").get<std::uint64_t>();
    return x;
}

nlohmann::json to_json(const Witness& w)
{
    nlohmann::json ins = nlohmann::json::array();
    for (const auto& in : w.inputs)
        ins.push_back({{"address", in.address}, {"note", to_json(in.note)}, {"path", path_to_json(in.path)},
            {"a_sk", to_hex(in.a_sk)}});
    nlohmann::json outs = nlohmann::json::array();
    for (const auto& note : w.outputs)
        outs.push_back(to_json(note));
    return {{"inputs", ins}, {"outputs", outs}};
}

Witness witness_from_json(const nlohmann::json& j)
{
    Witness w;
    for (const auto& in : j.at("inputs"))
        w.inputs.push_back(InputWitness{in.at("address").get<std::uint64_t>(), note_from_json(in.at("note")),
            path_from_json(in.at("path")), bytes32_from_hex(in.at("a_sk").get<std::string>())});
    for (const auto& out : j.at("outputs"))
        w.outputs.push_back(note_from_json(out));
    return w;
}

nlohmann::json to_json(const CircuitConfig& c)
{
    return {{"n_inputs", c.n_inputs}, {"n_outputs", c.n_outputs}, {"depth", c.depth}};
}

CircuitConfig circuit_config_from_json(const nlohmann::json& j)
{
    CircuitConfig c;
    c.n_inputs = j.at("n_inputs").get<std::size_t>();
    c.n_outputs = j.at("n_outputs").get<std::size_t>();
    c.depth = j.at("depth").get<unsigned>();
    c.validate();
    return c;
}

}  // namespace zeth
