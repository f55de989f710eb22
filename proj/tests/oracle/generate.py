#!/usr/bin/env python3
"""Regenerates oracle_values.hpp from independent Python computations.

Nothing here calls the C++ library. Carmichael numbers come from a plain
smallest-prime-factor sieve plus Korselt; group invariants from sympy; the
nu sums from a per-norm multiplicative formula rather than ideal enumeration.
"""
import itertools
import math
import sys
from fractions import Fraction
from pathlib import Path

import mpmath
import numpy as np
import sympy
from sympy import factorint
from sympy.functions.combinatorial.numbers import reduced_totient, totient

HERE = Path(__file__).resolve().parent


def spf_table(n):
    spf = np.zeros(n + 1, dtype=np.int64)
    for p in range(2, int(n ** 0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    idx = np.nonzero(spf == 0)[0]
    spf[idx] = idx
    return spf


def carmichael_upto(n):
    spf = spf_table(n)
    out = []
    for x in range(3, n + 1, 2):
        ps = []
        y = x
        ok = True
        while y > 1:
            p = int(spf[y])
            y //= p
            if y % p == 0:
                ok = False
                break
            ps.append(p)
        if not ok or len(ps) < 2:
            continue
        if all((x - 1) % (p - 1) == 0 for p in ps):
            out.append((x, ps))
    return out


def unit_group_invariants(n):
    """Invariant factors of (Z/n)^x from prime-power components."""
    comps = []
    for p, e in factorint(n).items():
        if p == 2:
            if e == 2:
                comps.append(2)
            elif e >= 3:
                comps += [2, 2 ** (e - 2)]
        else:
            comps.append((p - 1) * p ** (e - 1))
    # primary decomposition, then invariant factors
    primary = {}
    for c in comps:
        for q, k in factorint(c).items():
            primary.setdefault(q, []).append(q ** k)
    width = max((len(v) for v in primary.values()), default=0)
    inv = [1] * width
    for q, pows in primary.items():
        pows.sort(reverse=True)
        for i, v in enumerate(pows):
            inv[width - 1 - i] *= v
    return [d for d in inv if d > 1]


def davenport_bruteforce(orders):
    """Longest zero-sum-free sequence plus one, by exhaustive multiset search."""
    elems = list(itertools.product(*[range(o) for o in orders]))
    zero = tuple(0 for _ in orders)
    nonzero = [e for e in elems if e != zero]

    def add(a, b):
        return tuple((x + y) % o for x, y, o in zip(a, b, orders))

    best = 0

    def extend(start, sums, length):
        nonlocal best
        best = max(best, length)
        for i in range(start, len(nonzero)):
            g = nonzero[i]
            if tuple((-x) % o for x, o in zip(g, orders)) in sums:
                continue
            new = set(sums)
            new.add(g)
            for s in sums:
                new.add(add(s, g))
            if zero in new:
                continue
            extend(i, new, length + 1)

    extend(0, set(), 0)
    return best + 1


def chi3(d):
    return 0 if d % 3 == 0 else (1 if d % 3 == 1 else -1)


def block_abs_nu_split(k):
    """Sum of |nu| over ideals of norm p^k above a split p."""
    total = 0
    for a in range(k + 1):
        b = k - a
        i = a + b
        distinct = (a > 0) + (b > 0)
        if i == 0:
            v = 1
        elif distinct == i:
            v = i - 1
        elif distinct == i - 1:
            v = 1
        else:
            v = 0
        total += v
    return total


def abs_nu_norm_sums(Q):
    """f(n) = sum of |nu(I)| over ideals I coprime to 3 of norm n, for n <= Q."""
    f = [0] * (Q + 1)
    f[1] = 1
    spf = spf_table(Q)
    for n in range(2, Q + 1):
        p = int(spf[n])
        k = 0
        m = n
        while m % p == 0:
            m //= p
            k += 1
        if p == 3:
            local = 0
        elif p % 3 == 1:
            local = block_abs_nu_split(k)
        else:
            local = (1 if k == 2 else 0) if k % 2 == 0 else 0
            if k == 0:
                local = 1
        f[n] = f[m] * local
    return f


def ideal_count(Q):
    return sum(sum(chi3(d) for d in sympy.divisors(n)) for n in range(1, Q + 1) if n % 3 != 0)


def erdos(count):
    terms = [3]
    q = 3
    while len(terms) < count:
        q = sympy.nextprime(q)
        if all((q - 1) % t != 0 for t in terms):
            terms.append(q)
    return terms


def main():
    mpmath.mp.dps = 60
    lines = ["#pragma once", "", "// Generated by tests/oracle/generate.py; do not edit by hand.", "",
             "#include <array>", "#include <cstdint>", "#include <string_view>", "#include <utility>", "",
             "namespace oracle {", ""]

    carm = carmichael_upto(10 ** 7)
    counts = {10 ** k: sum(1 for n, _ in carm if n <= 10 ** k) for k in range(3, 8)}
    lines.append("// Carmichael counts up to 10^3 .. 10^7.")
    lines.append("inline constexpr std::array<std::pair<std::uint64_t, std::size_t>, 5> kCarmichaelCounts{{")
    for b, c in counts.items():
        lines.append(f"    {{{b}u, {c}u}},")
    lines.append("}};")
    lines.append(f"inline constexpr std::uint64_t kCarmichaelSumTo1e7 = {sum(n for n, _ in carm)}u;")
    lines.append("inline constexpr std::array<std::uint64_t, %d> kCarmichaelTo1e6{{" % counts[10 ** 6])
    lines.append("    " + ", ".join(f"{n}u" for n, _ in carm if n <= 10 ** 6) + "}};")
    lines.append("")

    lines.append("// Sums of phi and lambda over 1..10^4, and of the Jacobi symbol (a/n) over a < n, odd n < 500.")
    lines.append(f"inline constexpr std::uint64_t kPhiSum1e4 = {sum(int(totient(n)) for n in range(1, 10 ** 4 + 1))}u;")
    lines.append(f"inline constexpr std::uint64_t kLambdaSum1e4 = {sum(int(reduced_totient(n)) for n in range(1, 10 ** 4 + 1))}u;")
    jsum = sum(sympy.jacobi_symbol(a, n) * (a + n) for n in range(3, 500, 2) for a in range(n))
    lines.append(f"inline constexpr std::int64_t kJacobiWeightedSum = {jsum};")
    lines.append("")

    lines.append("// Invariant factors of (Z/N)^x for N <= 200, packed as N, count, factors...")
    packed = []
    for N in range(1, 201):
        inv = unit_group_invariants(N)
        # cross-check the group order
        assert math.prod(inv) == (int(totient(N)) if N > 1 else 1)
        packed += [N, len(inv)] + inv
    lines.append(f"inline constexpr std::array<std::uint64_t, {len(packed)}> kUnitInvariants{{{{")
    lines.append("    " + ", ".join(f"{x}u" for x in packed) + "}};")
    lines.append("")

    small = [[2], [3], [4], [5], [6], [7], [8], [2, 2], [2, 4], [3, 3], [2, 2, 2], [2, 6], [4, 4], [2, 8]]
    lines.append("// Davenport constants by exhaustive search over zero-sum-free multisets.")
    lines.append(f"inline constexpr std::array<std::pair<std::string_view, std::uint64_t>, {len(small)}> kDavenport{{{{")
    for orders in small:
        lines.append(f'    {{"{",".join(map(str, orders))}", {davenport_bruteforce(orders)}u}},')
    lines.append("}};")
    lines.append("")

    lines.append("// Ideals of Z[zeta_3] coprime to 3 with norm <= Q, from the divisor-sum formula.")
    for Q in (100, 1000, 10000):
        lines.append(f"inline constexpr std::uint64_t kIdealCount{Q} = {ideal_count(Q)}u;")
    f = abs_nu_norm_sums(10 ** 5)
    lines.append("// Partial sums of |nu| N^-s, 40 significant digits, by a per-norm multiplicative formula.")
    for (num, den) in ((7, 12), (1, 3), (1, 1)):
        for Q in (10 ** 3, 10 ** 4, 10 ** 5):
            s = mpmath.mpf(num) / den
            total = mpmath.fsum(mpmath.mpf(f[n]) * mpmath.power(n, -s) for n in range(1, Q + 1) if f[n])
            lines.append(f'inline constexpr std::string_view kZeta_{num}_{den}_{Q} = "{mpmath.nstr(total, 40)}";')
    lines.append(f"inline constexpr std::uint64_t kAbsNuTerms1e5 = {sum(f[1:])}u;")
    lines.append("")

    terms = erdos(25)
    lines.append("// Least-prime sequence q_i with no earlier term dividing q_i - 1.")
    lines.append("inline constexpr std::array<std::uint64_t, 25> kErdos{{" + ", ".join(f"{t}u" for t in terms) + "}};")
    r = Fraction(1)
    for t in terms[:5]:
        r *= Fraction(t - 1, t)
    lines.append(f"inline constexpr std::uint64_t kErdosRatio5Num = {r.numerator}u;")
    lines.append(f"inline constexpr std::uint64_t kErdosRatio5Den = {r.denominator}u;")
    lines.append("")

    lines.append("// Running minimum of phi(n)/n over the corpus, per power of ten.")
    mins = []
    for b in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6, 10 ** 7):
        cands = [(Fraction(int(totient(n)), n), n) for n, _ in carm if n <= b]
        mins.append(min(cands)[1] if cands else 0)
    lines.append("inline constexpr std::array<std::uint64_t, 5> kMinPhiWitness{{" + ", ".join(f"{m}u" for m in mins) + "}};")
    lines.append("")

    chern = [k for k in range(1, 10 ** 4 + 1) if all(sympy.isprime(c * k + 1) for c in (6, 12, 18))]
    lines.append("// k <= 10^4 with 6k+1, 12k+1, 18k+1 all prime.")
    lines.append(f"inline constexpr std::size_t kChernickCount = {len(chern)}u;")
    lines.append(f"inline constexpr std::uint64_t kChernickKSum = {sum(chern)}u;")
    lines.append("")

    # least corpus witness for each class r mod m, m in 3..8
    lines.append("// Least Carmichael number <= 10^7 in r mod m for m = 3..8 (0 when none), packed as r, m, n.")
    packed = []
    for m in range(3, 9):
        for rr in range(m):
            w = next((n for n, _ in carm if n % m == rr), 0)
            packed += [rr, m, w]
    lines.append(f"inline constexpr std::array<std::uint64_t, {len(packed)}> kClassWitness{{{{")
    lines.append("    " + ", ".join(f"{x}u" for x in packed) + "}};")
    lines.append("")
    lines.append("}  // namespace oracle")
    (HERE / "oracle_values.hpp").write_text("\n".join(lines) + "\n")
    print("wrote", HERE / "oracle_values.hpp", file=sys.stderr)


if __name__ == "__main__":
    main()
