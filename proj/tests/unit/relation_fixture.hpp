// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fixture.hpp"

namespace zeth::test
{
/// A satisfying (x, w) for (2, 2, depth 4): two notes of 5 and 3 in a tree,
/// spent into 6 and 1 with v_in = 0 and v_out = 1.
struct ValidPair
{
    CircuitConfig config{2, 2, 4};
    ZethAddress owner = gen_address(filled(0x51));
    MerkleTree tree{4};
    Instance x;
    Witness w;

    explicit ValidPair(std::uint64_t seed = 1)
    {
        Rng rng{seed};
        const auto n0 = make_note(owner.pub.a_pk, 5, rng);
        const auto n1 = make_note(owner.pub.a_pk, 3, rng);
        tree.append(crypto::hash(std::string_view{"filler"}));
        const auto a0 = tree.append(commitment(n0));
        const auto a1 = tree.append(commitment(n1));
        const std::vector<SpendInput> inputs{
            {n0, owner.sec.a_sk, a0, tree.path(a0)}, {n1, owner.sec.a_sk, a1, tree.path(a1)}};
        const std::vector<ZethNote> outputs{make_note(owner.pub.a_pk, 6, rng), make_note(owner.pub.a_pk, 1, rng)};
        std::tie(x, w) = build_instance(config, inputs, outputs, 0, 1, tree.root());
    }
};
}  // namespace zeth::test
