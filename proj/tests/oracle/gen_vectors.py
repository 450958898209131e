#!/usr/bin/env python3
# Copyright 2026 The zethsim Authors.
# SPDX-License-Identifier: Apache-2.0
#
# Independent oracle for the golden vectors frozen into tests/unit/*.cpp and
# tests/acceptance/acceptance.cpp. Uses hashlib and the `cryptography` package
# only; nothing here shares code with the C++ implementation.
#
#   python3 tests/oracle/gen_vectors.py

import hashlib

from cryptography.hazmat.primitives.asymmetric.x25519 import X25519PrivateKey
from cryptography.hazmat.primitives.ciphers.aead import ChaCha20Poly1305
from cryptography.hazmat.primitives import serialization


def H(*parts):
    return hashlib.sha256(b"".join(parts)).digest()


def x25519_pub(sk):
    return X25519PrivateKey.from_private_bytes(sk).public_key().public_bytes(
        serialization.Encoding.Raw, serialization.PublicFormat.Raw)


def x25519(sk, pk):
    from cryptography.hazmat.primitives.asymmetric.x25519 import X25519PublicKey
    return X25519PrivateKey.from_private_bytes(sk).exchange(X25519PublicKey.from_public_bytes(pk))


Z32 = bytes(32)


def show(name, value):
    if isinstance(value, bytes):
        value = value.hex()
    print(f"{name} = {value}")


show("sha256('')", H(b""))
show("sha256('abc')", H(b"abc"))
show("prf_addr(0^32, 0)", H(b"\x00", Z32, b"\x00"))
show("prf_sn(0^32, 0^32)", H(b"\x01", Z32, Z32))
show("commit_inner(0,0,0)", H(b"\x02", bytes(96)))
k0 = H(b"\x02", bytes(96))
show("commit_outer(0,0,0)", H(b"\x03", Z32, bytes(8), Z32))
show("commitment(all-zero note)", H(b"\x03", Z32, bytes(8), k0))

# Merkle empty roots Z_i
z = Z32
for d in range(1, 5):
    z = H(z, z)
    show(f"empty_root(depth={d})", z)

# Note wire layout: tag(32) | a_pk(32) | v_be8 | rho | r | s
note_tag = H(b"zeth.note.v1")
show("note_format_tag", note_tag)
show("serialize(all-zero note)", note_tag + bytes(136))

# Address derivation from seed 0^32
a_sk = H(b"\x04", Z32, b"\x00")
k_sk = H(b"\x04", Z32, b"\x01")
show("gen_address(0^32).a_sk", a_sk)
show("gen_address(0^32).k_sk", k_sk)
show("gen_address(0^32).a_pk", H(b"\x00", a_sk, b"\x00"))
show("gen_address(0^32).k_pk", x25519_pub(k_sk))

# Hybrid encryption vector: recipient seed = 0x11*32, randomness = 0x22*32,
# plaintext = "zeth"
rk_sk = bytes([0x11]) * 32
rk_pk = x25519_pub(rk_sk)
eph_sk = bytes([0x22]) * 32
eph_pk = x25519_pub(eph_sk)
shared = x25519(eph_sk, rk_pk)
key = H(b"\x05", shared, eph_pk, rk_pk)
sealed = ChaCha20Poly1305(key).encrypt(bytes(12), b"zeth", None)
show("enc.k_pk", rk_pk)
show("enc.ephemeral_pk", eph_pk)
show("enc.body", sealed[:-16])
show("enc.tag", sealed[-16:])

# Verification gas, four-term formula
def verifier_gas(n, ecadd, ecmul, pb, ppp):
    lin = n * (ecmul + ecadd) + ecadd
    kc = 3 * (pb + 2 * ppp)
    coef = pb + 3 * ppp + 2 * ecadd
    qap = pb + 3 * ppp + ecadd
    return lin, kc, coef, qap, lin + kc + coef + qap


show("verifier_gas(n=0, ones)", verifier_gas(0, 1, 1, 1, 1))
show("verifier_gas(n=9, byzantium)", verifier_gas(9, 500, 40000, 100000, 80000))
show("verifier_gas(n=9, istanbul)", verifier_gas(9, 150, 6000, 45000, 34000))
v = verifier_gas(9, 500, 40000, 100000, 80000)[4]
show("mix_call_gas(N=M=2, n=9, byzantium)", 21000 + v + (2 + 2 + 2) * 20000)
print("max n below 2M:", max(n for n in range(64) if verifier_gas(n, 500, 40000, 100000, 80000)[4] < 2_000_000))
