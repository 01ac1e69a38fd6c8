#!/usr/bin/env python3
"""Independent reference values for the test suite.

Nothing here calls the C++ library. Degrees of iterates come from composing the homogenized map
restricted to random lines over a prime field; roots and closed forms come from mpmath.

    python3 tests/oracle/oracle.py > tests/oracle_values.hpp
"""

import random

import flint
import mpmath as mp
import sympy as sp

mp.mp.dps = 40
INSTANCES = [(2, 4), (2, 6), (3, 2), (3, 4), (4, 2)]
PRIME = 1_000_000_007  # 2 is a square mod PRIME, so sqrt(2) exists for n = 4


def chi(n, k):
    x = sp.symbols("x")
    return sp.Poly(1 - k * sum(x**l for l in range(1, n)) + x**n, x)


def largest_root(poly):
    return max(mp.re(r) for r in mp.polyroots([mp.mpf(int(c)) for c in poly.all_coeffs()], maxsteps=200, extraprec=200)
               if abs(mp.im(r)) < mp.mpf(10) ** -30)


def det_gram_s(n, k):
    return (1 - sp.Rational(n * k, k + 2)) * ((k + 2) * k) ** n


def c_mod_p(n):
    """c = 2 cos(pi / n) in GF(PRIME)."""
    if n == 2:
        return 0
    if n == 3:
        return 1
    if n == 4:
        r = flint.nmod(2, PRIME).sqrt()
        return int(r)
    raise ValueError(n)


def iterate_degrees(n, k, a, m, seed):
    """Degrees of f^0..f^m restricted to a random line, with common factors removed at each step."""
    rng = random.Random(seed)
    P = lambda coeffs: flint.nmod_poly(coeffs, PRIME)
    c = c_mod_p(n)
    # line t -> [X:Y:Z] = [a0 + a1 t : b0 + b1 t : c0 + c1 t]
    X = P([rng.randrange(1, PRIME), rng.randrange(1, PRIME)])
    Y = P([rng.randrange(1, PRIME), rng.randrange(1, PRIME)])
    Z = P([rng.randrange(1, PRIME), rng.randrange(1, PRIME)])
    degs = [1]
    for _ in range(m):
        Yk = Y**k
        second = -X * Yk + c * Y**(k + 1) + Z**(k + 1)
        for l, al in a.items():
            second += (al % PRIME) * Y**(k - l) * Z**(l + 1)
        X, Y, Z = Y * Yk, second, Z * Yk
        g = X.gcd(Y).gcd(Z)
        X, Y, Z = X // g, Y // g, Z // g
        degs.append(max(X.degree(), Y.degree(), Z.degree()))
    return degs


def degrees(n, k, a, limit=6000):
    """Longest prefix with degree below limit; maximum over two lines guards against special lines."""
    m = 0
    lam = float(largest_root(chi(n, k)))
    while (k + 1) * lam ** (m + 1) < limit:
        m += 1
    d1 = iterate_degrees(n, k, a, m, 1)
    d2 = iterate_degrees(n, k, a, m, 2)
    return [max(u, v) for u, v in zip(d1, d2)]


def fixed_points(k, c, a):
    """Roots of (2 - c) z^{k+1} - sum a_l z^{k-l} - 1 with traces c - sum l a_l z^{-l-1} - k z^{-k-1}."""
    coeffs = [mp.mpf(0)] * (k + 2)
    coeffs[0] = 2 - mp.mpf(c)
    for l, al in a.items():
        coeffs[1 + l] -= mp.mpf(al)
    coeffs[-1] -= 1
    roots = mp.polyroots(coeffs, maxsteps=400, extraprec=400)
    out = []
    for z in roots:
        tr = c - sum(l * mp.mpf(al) / z ** (l + 1) for l, al in a.items()) - k / z ** (k + 1)
        out.append((complex(z), complex(tr)))
    out.sort(key=lambda t: (round(t[0].real, 12), round(t[0].imag, 12)))
    return out


def trace_rank(k):
    """Rank of d tau_s / d a_l at a = 0, from the analytic derivative (k - l) / z^{l+1}."""
    if k == 2:
        return 0
    zs = [z for z, _ in fixed_points(k, 0.0, {})]
    rows = [[(k - l) / z ** (l + 1) for l in range(2, k, 2)] for z in zs]
    return sp.Matrix(rows).evalf().rank(iszerofunc=lambda v: abs(complex(v)) < 1e-9)


def cxx_array(name, values, typ="double", fmt=repr):
    body = ", ".join(fmt(v) for v in values)
    return f"inline constexpr {typ} {name}[] = {{{body}}};"


def main():
    out = []
    out.append("// Generated by tests/oracle/oracle.py; do not edit by hand.")
    out.append("#pragma once")
    out.append("")
    out.append("#include <cstdint>")
    out.append("")
    out.append("namespace oracle {")
    out.append("")
    out.append("struct Instance {")
    out.append("  int n, k;")
    out.append("  double lambda;")
    out.append("  const char* chi;")
    out.append("  std::int64_t det_gram_s;")
    out.append("};")
    out.append("")
    out.append("inline constexpr Instance kInstances[] = {")
    for n, k in INSTANCES:
        lam = largest_root(chi(n, k))
        coeffs = " ".join(str(int(c)) for c in chi(n, k).all_coeffs())
        out.append(f'    {{{n}, {k}, {mp.nstr(lam, 17)}, "{coeffs}", {int(det_gram_s(n, k))}}},')
    out.append("};")
    out.append("")

    out.append("// Degrees of f^m computed on random lines over GF(1000000007), a = 0 and a generic a.")
    for n, k in INSTANCES:
        d = degrees(n, k, {})
        out.append(cxx_array(f"kDegrees_{n}_{k}", d, "std::int64_t", str))
        a = {l: 12345 + 7 * l for l in range(2, k, 2)}
        if a:
            assert degrees(n, k, a) == d, (n, k)
    out.append("")

    fig = fixed_points(4, 0.0, {2: -2.64})
    out.append("// Phase-portrait parameters n = 2, k = 4, c = 0, a_2 = -2.64; sorted by (Re, Im).")
    out.append(cxx_array("kPresetZetaRe", [z.real for z, _ in fig]))
    out.append(cxx_array("kPresetZetaIm", [z.imag for z, _ in fig]))
    out.append(cxx_array("kPresetTraceRe", [t.real for _, t in fig]))
    out.append(cxx_array("kPresetTraceIm", [t.imag for _, t in fig]))
    out.append("")
    out.append("// Rank of the trace map at a = 0.")
    out.append(cxx_array("kTraceRank", [trace_rank(k) for k in (2, 4, 6, 8)], "int", str))
    out.append("")
    out.append("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
