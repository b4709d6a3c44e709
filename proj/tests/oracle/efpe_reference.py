#!/usr/bin/env python3
"""Straight-line reference model of the eFPE cipher.

Used only to produce and re-check the frozen vectors under tests/data. It
shares no code with the C++ library: the S-box is rebuilt from the GF(2^8)
inverse plus the AES affine map, and the seeded generator is a plain
transcription of mt19937_64.

    efpe_reference.py kat --seed 0123456789abcdef --count 32 > kat_v1.txt
    efpe_reference.py fixed > kat_fixed.txt
    efpe_reference.py values
    efpe_reference.py check <data-dir>
"""

import argparse
import pathlib
import sys

MASK32 = 0xFFFFFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF
SCHEDULE_CONST = 0xA5A5A5A5


def gf_mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return r


def gf_inv(a):
    if a == 0:
        return 0
    for x in range(1, 256):
        if gf_mul(a, x) == 1:
            return x
    raise AssertionError("no inverse")


def build_sbox():
    box = []
    for v in range(256):
        x = gf_inv(v)
        y = x
        for shift in range(1, 5):
            y ^= ((x << shift) | (x >> (8 - shift))) & 0xFF
        box.append(y ^ 0x63)
    return box


SBOX = build_sbox()


def prf_core(word, k0, k1):
    s = word
    for k in (k0, k1):
        b = [(s >> 24) & 0xFF, (s >> 16) & 0xFF, (s >> 8) & 0xFF, s & 0xFF]
        b = [SBOX[x] for x in b]
        s = (b[0] << 24) | (b[1] << 16) | (b[2] << 8) | b[3]
        s ^= k
        s = ((s << 8) | (s >> 24)) & MASK32
    return s


def prf_wide(lo, hi, i, k0, k1):
    ib = (i * 0x01010101) & MASK32
    s1 = prf_core(lo ^ ib, k0, k1)
    s2 = prf_core(s1 ^ hi ^ 1, k0, k1)
    s3 = prf_core(s2 ^ 2, k0, k1)
    return (s3 << 32) | s2


def round_keys(key128, rounds=8):
    w = [(key128 >> (96 - 32 * j)) & MASK32 for j in range(4)]
    out = []
    for i in range(rounds):
        a = prf_core(SCHEDULE_CONST ^ ((i << 8) | 0), w[0], w[1])
        b = prf_core(SCHEDULE_CONST ^ ((i << 8) | 1), w[2], w[3])
        out.append((a, b))
    return out


def round_f(r, keys, i, m):
    mod = 10 ** m
    assert r < mod
    return prf_wide(r & MASK32, r >> 32, i, keys[0], keys[1]) % mod


def encrypt(key128, digits, rounds=8):
    n = len(digits)
    assert n % 2 == 0 and 2 <= n <= 32 and digits.isdigit()
    m = n // 2
    mod = 10 ** m
    ks = round_keys(key128, rounds)
    left, right = int(digits[:m]), int(digits[m:])
    for i in range(rounds):
        f = round_f(right, ks[i], i, m)
        left, right = right, (left + f) % mod
    return str(left).zfill(m) + str(right).zfill(m)


def decrypt(key128, digits, rounds=8):
    n = len(digits)
    m = n // 2
    mod = 10 ** m
    ks = round_keys(key128, rounds)
    left, right = int(digits[:m]), int(digits[m:])
    for i in reversed(range(rounds)):
        prev_r = left
        f = round_f(prev_r, ks[i], i, m)
        prev_l = (right - f) % mod
        left, right = prev_l, prev_r
    return str(left).zfill(m) + str(right).zfill(m)


class Mt19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.mt[0] = seed & MASK64
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK64
        self.idx = 312

    def _twist(self):
        upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF
        for i in range(312):
            x = (self.mt[i] & upper) | (self.mt[(i + 1) % 312] & lower)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.idx = 0

    def next(self):
        if self.idx >= 312:
            self._twist()
        y = self.mt[self.idx]
        self.idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK64

    def below(self, bound):
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def kat_text(records, rounds=8):
    lines = ["# eFPE KAT v1", "ROUNDS = %d" % rounds]
    for idx, (key, pt, ct) in enumerate(records):
        lines += ["", "COUNT = %d" % idx, "KEY = %032x" % key, "PT = " + pt, "CT = " + ct]
    return "\n".join(lines) + "\n"


def generate(seed, count, lengths):
    rng = Mt19937_64(seed)
    records = []
    for idx in range(count):
        n = lengths[idx % len(lengths)]
        hi = rng.next()
        lo = rng.next()
        key = (hi << 64) | lo
        pt = "".join(str(rng.below(10)) for _ in range(n))
        ct = encrypt(key, pt)
        assert decrypt(key, ct) == pt
        records.append((key, pt, ct))
    return kat_text(records)


GOLDEN_SEED = 0x0123456789ABCDEF
GOLDEN_COUNT = 32
GOLDEN_LENGTHS = list(range(2, 33, 2))
FIXED_KEY = 0x000102030405060708090A0B0C0D0E0F
FIXED_PT = "1234567890123456"


def fixed_text():
    return kat_text([(FIXED_KEY, FIXED_PT, encrypt(FIXED_KEY, FIXED_PT))])


def print_values():
    print("sbox[0x00,0x63,0x9c] = %02x %02x %02x" % (SBOX[0], SBOX[0x63], SBOX[0x9C]))
    print("prf_core(0,(0,0)) = %08x" % prf_core(0, 0, 0))
    print("prf_core(0,(ffffffff,0)) = %08x" % prf_core(0, MASK32, 0))
    print("prf_core(a5a5a5a5,(0,0)) = %08x" % prf_core(SCHEDULE_CONST, 0, 0))
    print("prf_core(12345678,(deadbeef,cafebabe)) = %08x" % prf_core(0x12345678, 0xDEADBEEF, 0xCAFEBABE))
    print("prf_wide(0,0,0,(0,0)) = %016x" % prf_wide(0, 0, 0, 0, 0))
    print("prf_wide(5,0,3,(01234567,89abcdef)) = %016x" % prf_wide(5, 0, 3, 0x01234567, 0x89ABCDEF))
    print("round_f(0,(0,0),0,m=2) = %d" % round_f(0, (0, 0), 0, 2))
    for i, (a, b) in enumerate(round_keys(0)):
        print("zero-key round %d = %08x %08x" % (i, a, b))
    for i, (a, b) in enumerate(round_keys(FIXED_KEY)):
        print("fixed-key round %d = %08x %08x" % (i, a, b))
    print("encrypt(fixed, %s) = %s" % (FIXED_PT, encrypt(FIXED_KEY, FIXED_PT)))
    print("encrypt(zero, 00) = %s" % encrypt(0, "00"))
    rng = Mt19937_64(5489)
    for _ in range(9999):
        rng.next()
    print("mt19937_64 default 10000th = %d" % rng.next())


def check(data_dir):
    d = pathlib.Path(data_dir)
    ok = True
    expected = {
        "kat_v1.txt": generate(GOLDEN_SEED, GOLDEN_COUNT, GOLDEN_LENGTHS),
        "kat_fixed.txt": fixed_text(),
    }
    for name, text in expected.items():
        actual = (d / name).read_bytes()
        if actual != text.encode():
            print("MISMATCH", name)
            ok = False
        else:
            print("ok", name)
    return 0 if ok else 1


def main():
    ap = argparse.ArgumentParser()
    sub = ap.add_subparsers(dest="cmd", required=True)
    k = sub.add_parser("kat")
    k.add_argument("--seed", default="%016x" % GOLDEN_SEED)
    k.add_argument("--count", type=int, default=GOLDEN_COUNT)
    sub.add_parser("fixed")
    sub.add_parser("values")
    c = sub.add_parser("check")
    c.add_argument("data_dir")
    args = ap.parse_args()
    if args.cmd == "kat":
        sys.stdout.write(generate(int(args.seed, 16), args.count, GOLDEN_LENGTHS))
    elif args.cmd == "fixed":
        sys.stdout.write(fixed_text())
    elif args.cmd == "values":
        print_values()
    else:
        return check(args.data_dir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
