"""High-precision reference values for the metric tests.

Prints a C++ header on stdout; the output is frozen into
tests/oracle_values.hpp. Run: python3 compute_oracles.py > ../oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 50

REGULAR = [(8, 8), (6, 6), (8, 3), (7, 3), (5, 4), (12, 3), (4, 5)]
SEMI = [(6, 6, 8), (4, 16, 16), (4, 6, 14), (4, 8, 10), (12, 12, 4), (10, 10, 10), (4, 6, 36)]


def regular(p, q):
    l = 2 * mp.acosh(mp.cos(mp.pi / p) / mp.sin(mp.pi / q))
    a = mp.acosh(mp.cos(mp.pi / q) / mp.sin(mp.pi / p))
    r = mp.acosh(mp.cot(mp.pi / p) * mp.cot(mp.pi / q))
    return l, a, r


def semi(m):
    f = lambda c: sum(mp.asin(mp.cos(mp.pi / k) / c) for k in m) - mp.pi
    # f is decreasing in c; bracket and solve
    lo, hi = mp.mpf(1), mp.mpf(2)
    while f(hi) > 0:
        hi *= 2
    c = mp.findroot(f, (lo + mp.mpf("1e-30"), hi), solver="anderson")
    l = 2 * mp.acosh(c)
    a = [mp.asinh(mp.tanh(l / 2) * mp.cot(mp.pi / k)) for k in m]
    return l, a


def chord(gap, m):
    return mp.acosh(mp.cosh(gap) ** 2 - mp.sinh(gap) ** 2 * mp.cos(4 * mp.pi / m))


def systole(g, orientable):
    k = 4 * g if orientable else 2 * g
    return 2 * mp.acosh(mp.cot(mp.pi / k))


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-100, max_fixed=100)


print("#pragma once")
print("// Generated by tests/oracles/compute_oracles.py (mpmath, 50 digits).")
print()
print("namespace oracle {")
print()
print("struct Regular { int p, q; double edge, apothem, circumradius; };")
print("inline constexpr Regular regular[] = {")
for p, q in REGULAR:
    l, a, r = regular(p, q)
    print(f"    {{{p}, {q}, {fmt(l)}, {fmt(a)}, {fmt(r)}}},")
print("};")
print()
print("// chord[i] is the red chord with class i red and class i+1 intervening.")
print("struct Semi { int m[3]; double edge; double apothem[3]; double chord[3]; };")
print("inline constexpr Semi semi[] = {")
for m in SEMI:
    l, a = semi(m)
    ch = [chord(a[i] + a[(i + 1) % 3], m[(i + 1) % 3]) for i in range(3)]
    print(f"    {{{{{m[0]}, {m[1]}, {m[2]}}}, {fmt(l)}, {{{', '.join(fmt(x) for x in a)}}}, "
          f"{{{', '.join(fmt(x) for x in ch)}}}}},")
print("};")
print()
print("struct Systole { int genus; bool orientable; double length; };")
print("inline constexpr Systole systoles[] = {")
for g, o in [(2, True), (3, True), (5, True), (9, True), (3, False), (4, False), (6, False), (7, False)]:
    print(f"    {{{g}, {'true' if o else 'false'}, {fmt(systole(g, o))}}},")
print("};")
print()
l, a = semi((6, 6, 8))
t = chord(a[2] + a[0], 6)  # red 8-gons, 6-gon between
print("// [6,6,8] on genus 2: systole / red chord, exactly 2 up to the working precision.")
print(f"inline constexpr double ratio_668_g2 = {fmt(systole(2, True) / t)};")
print(f"inline constexpr double ratio_668_g2_error = {mp.nstr(abs(systole(2, True) / t - 2), 5)};")


def estimate(m, g, orientable):
    # independent re-derivation of the geometric estimate
    l, a = semi(m)
    L = systole(g, orientable)
    best = None
    for red in range(3):
        nxt, oth = (red + 1) % 3, (red + 2) % 3
        dx = 2 * int(mp.ceil(L / chord(a[red] + a[nxt], m[nxt]) - mp.mpf("1e-30")))
        dz = int(mp.ceil(L / (a[nxt] + a[oth]) - mp.mpf("1e-30")))
        d = min(dx, dz)
        best = d if best is None else min(best, d)
    return max(2, best)


GENUS2 = [(4, 6, 14), (4, 6, 16), (4, 6, 18), (4, 6, 20), (4, 6, 24), (4, 6, 36), (4, 8, 10), (4, 8, 12),
          (4, 8, 16), (4, 8, 24), (4, 10, 10), (4, 10, 20), (4, 12, 12), (4, 16, 16), (6, 6, 8), (6, 6, 10),
          (6, 6, 12), (6, 6, 18), (6, 8, 8), (6, 12, 12), (8, 8, 8), (10, 10, 10)]
print()
print("struct Estimate { int m[3]; int genus; bool orientable; int d; };")
print("inline constexpr Estimate estimates[] = {")
for m in GENUS2:
    print(f"    {{{{{m[0]}, {m[1]}, {m[2]}}}, 2, true, {estimate(m, 2, True)}}},")
for g in range(3, 10):
    print(f"    {{{{6, 6, 8}}, {g}, true, {estimate((6, 6, 8), g, True)}}},")
for g in (3, 4, 5, 6, 7):
    print(f"    {{{{6, 6, 8}}, {g}, false, {estimate((6, 6, 8), g, False)}}},")
print("};")
print()
print("}  // namespace oracle")
