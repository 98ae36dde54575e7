#pragma once
// Generated by tests/oracles/compute_oracles.py (mpmath, 50 digits).

namespace oracle {

struct Regular { int p, q; double edge, apothem, circumradius; };
inline constexpr Regular regular[] = {
    {8, 8, 3.0571418389619963225, 1.5285709194809981613, 2.44845244767807579},
    {6, 6, 2.2924316695611776878, 1.1462158347805888439, 1.7627471740390860505},
    {8, 3, 0.72703983935051470928, 0.76428545974049908064, 0.86070630416378054036},
    {7, 3, 0.56625630673531475233, 0.54527483175354308723, 0.62067173755638587164},
    {5, 4, 1.061275061905035652, 0.62686966290617781414, 0.84248208146200745911},
    {12, 3, 0.95164306423752197838, 1.2766868683803454204, 1.4019943234053324102},
    {4, 5, 1.2537393258123556283, 0.53063753095251782602, 0.84248208146200745911},
};

// chord[i] is the red chord with class i red and class i+1 intervening.
struct Semi { int m[3]; double edge; double apothem[3]; double chord[3]; };
inline constexpr Semi semi[] = {
    {{6, 6, 8}, 0.43583315698283862762, {0.36351991967525735464, 0.36351991967525735464, 0.49718638448852318573}, {1.2832905599804685281, 1.2832905599804685281, 1.5285709194809981613}},
    {{4, 16, 16}, 0.63902235755851727312, {0.30434469564196026627, 1.224226223839037895, 1.224226223839037895}, {1.5285709194809981613, 3.0571418389619963225, 3.0571418389619963225}},
    {{4, 6, 14}, 0.20886091423896844303, {0.10386562378240729588, 0.17926252958525008029, 0.44140920797113579135}, {0.49199328110379110299, 0.56625630673531475233, 1.0905496635070861745}},
    {{4, 8, 10}, 0.31900745470421914626, {0.15751255619834409052, 0.37312497475417373549, 0.46935710670783372362}, {0.76719721825131944333, 1.061275061905035652, 1.2537393258123556283}},
    {{12, 12, 4}, 0.5493061443340548457, {0.88137358701954302523, 0.88137358701954302523, 0.26484224776104581867}, {2.2924316695611776878, 2.2924316695611776878, 1.3169578969248167086}},
    {{10, 10, 10}, 0.87917928086795556106, {1.061275061905035652, 1.061275061905035652, 1.061275061905035652}, {3.2338433350237730276, 3.2338433350237730276, 3.2338433350237730276}},
    {{4, 6, 36}, 0.38913668432062918877, {0.19098652723357550496, 0.32695654193761129023, 1.528120593381476041}, {0.90640688774155539568, 1.0358861383423735904, 3.4382142412301030919}},
};

struct Systole { int genus; bool orientable; double length; };
inline constexpr Systole systoles[] = {
    {2, true, 3.0571418389619963225},
    {3, true, 3.9833047820988736481},
    {5, true, 5.0590919514333204507},
    {9, true, 6.2549483032687852652},
    {3, false, 2.2924316695611776878},
    {4, false, 3.0571418389619963225},
    {6, false, 3.9833047820988736481},
    {7, false, 4.3144074125084709494},
};

// [6,6,8] on genus 2: systole / red chord, exactly 2 up to the working precision.
inline constexpr double ratio_668_g2 = 2.0;
inline constexpr double ratio_668_g2_error = 0.0;

struct Estimate { int m[3]; int genus; bool orientable; int d; };
inline constexpr Estimate estimates[] = {
    {{4, 6, 14}, 2, true, 5},
    {{4, 6, 16}, 2, true, 4},
    {{4, 6, 18}, 2, true, 3},
    {{4, 6, 20}, 2, true, 3},
    {{4, 6, 24}, 2, true, 3},
    {{4, 6, 36}, 2, true, 2},
    {{4, 8, 10}, 2, true, 4},
    {{4, 8, 12}, 2, true, 3},
    {{4, 8, 16}, 2, true, 2},
    {{4, 8, 24}, 2, true, 2},
    {{4, 10, 10}, 2, true, 3},
    {{4, 10, 20}, 2, true, 2},
    {{4, 12, 12}, 2, true, 2},
    {{4, 16, 16}, 2, true, 2},
    {{6, 6, 8}, 2, true, 4},
    {{6, 6, 10}, 2, true, 3},
    {{6, 6, 12}, 2, true, 3},
    {{6, 6, 18}, 2, true, 2},
    {{6, 8, 8}, 2, true, 3},
    {{6, 12, 12}, 2, true, 2},
    {{8, 8, 8}, 2, true, 2},
    {{10, 10, 10}, 2, true, 2},
    {{6, 6, 8}, 3, true, 5},
    {{6, 6, 8}, 4, true, 6},
    {{6, 6, 8}, 5, true, 6},
    {{6, 6, 8}, 6, true, 7},
    {{6, 6, 8}, 7, true, 7},
    {{6, 6, 8}, 8, true, 7},
    {{6, 6, 8}, 9, true, 8},
    {{6, 6, 8}, 3, false, 3},
    {{6, 6, 8}, 4, false, 4},
    {{6, 6, 8}, 5, false, 5},
    {{6, 6, 8}, 6, false, 5},
    {{6, 6, 8}, 7, false, 6},
};

}  // namespace oracle
