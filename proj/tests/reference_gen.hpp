// Generated by scripts/gen_reference.py -- frozen reference values computed
// with an independent high-precision evaluator.  Do not edit by hand.
#pragma once

namespace refdata {

struct KernelRef { const char* name; double at_one; };
inline constexpr KernelRef kKernelAtOne[] = {
    {"T0k1.f1", 0.0025721089683252317},
    {"T0k1.f2", 0.00790828196064345},
    {"T0k2.f1", 0.019005457459517774},
    {"T0k2.f2", 0.039429281593837955},
    {"T0k3.f1", 0.14043239135421684},
    {"T0k3.f2", 0.15091278228318553},
    {"T1k1.f1", 0.005144217936650463},
    {"T1k1.f2", 0.013244454952961669},
    {"T1k1.f3", 0.016797827447509128},
    {"T1k2.f1", 0.03801091491903555},
    {"T1k2.f2", 0.05985310572815813},
    {"T1k2.f3", 0.0452615261621261},
    {"T1k3.f1", 0.2808647827084337},
    {"T1k3.f2", 0.1613931732121542},
    {"T1k3.f3", 0.03261439136879603},
    {"T2k1.f1", 0.010288435873300927},
    {"T2k1.f2", 0.021344691969272876},
    {"T2k1.f3", 0.02035119994205659},
    {"T2k1.f4", 0.011281577079423498},
    {"T2k2.f1", 0.0760218298380711},
    {"T2k2.f2", 0.0816952965372807},
    {"T2k2.f3", 0.030669946596094073},
    {"T2k2.f4", -0.0008276939134758497},
    {"T2k3.f1", 0.5617295654168674},
    {"T2k3.f2", 0.04192156371587473},
    {"T2k3.f3", -0.09616439047456214},
    {"T2k3.f4", -0.024533862378936285},
    {"T3k1.f1", 0.020576871746601853},
    {"T3k1.f2", 0.03240094806524482},
    {"T3k1.f3", 0.019357707914840303},
    {"T3k1.f4", 0.0022119542167904067},
    {"T3k1.f5", -0.004166706996523402},
    {"T3k2.f1", 0.1520436596761422},
    {"T3k2.f2", 0.08736876323649033},
    {"T3k2.f3", -0.020355403345092563},
    {"T3k2.f4", -0.032325334423045776},
    {"T3k2.f5", -0.009181608675447178},
    {"T3k3.f1", 1.1234591308337347},
    {"T3k3.f2", -0.4778864379851179},
    {"T3k3.f3", -0.234250344664999},
    {"T3k3.f4", 0.047096665716689565},
    {"T3k3.f5", 0.03502202758061643},
    {"U0k1.g1", 0.0025721089683252317},
    {"U0k1.g2", 0.018388672889612132},
    {"U0k2.g1", 0.019005457459517774},
    {"U0k2.g2", 0.11686947810671146},
    {"U0k3.g1", 0.14043239135421684},
    {"U0k3.g2", 0.7231227386290215},
    {"U1k1.g1", 0.005144217936650463},
    {"U1k1.g2", 0.034205236810899035},
    {"U1k1.g3", 0.11503207441452722},
    {"U1k2.g1", 0.03801091491903555},
    {"U1k2.g2", 0.21473349875390513},
    {"U1k2.g3", 0.6162394948118838},
    {"U1k3.g1", 0.2808647827084337},
    {"U1k3.g2", 1.3058130859038262},
    {"U1k3.g3", 3.10718272028365},
    {"U2k1.g1", 0.010288435873300927},
    {"U2k1.g2", 0.0632662556851476},
    {"U2k1.g3", 0.1958589120181554},
    {"U2k1.g4", 0.41366511950914275},
    {"U2k2.g1", 0.0760218298380711},
    {"U2k2.g2", 0.39145608258877473},
    {"U2k2.g3", 1.0177454908698624},
    {"U2k2.g4", 1.8304509370866457},
    {"U2k3.g1", 0.5617295654168674},
    {"U2k3.g2", 2.330761389099219},
    {"U2k3.g3", 4.908552354663473},
    {"U2k3.g4", 7.357750017024177},
    {"U3k1.g1", 0.020576871746601853},
    {"U3k1.g2", 0.11624407549699428},
    {"U3k1.g3", 0.3284515683511632},
    {"U3k1.g4", 0.6314713270001301},
    {"U3k1.g5", 0.9687972831609207},
    {"U3k2.g1", 0.1520436596761422},
    {"U3k2.g2", 0.7068903353394783},
    {"U3k2.g3", 1.6440348991509501},
    {"U3k2.g4", 2.6431563833034293},
    {"U3k2.g5", 3.5691734325123226},
    {"U3k3.g1", 1.1234591308337347},
    {"U3k3.g2", 4.09979321278157},
    {"U3k3.g3", 7.486343320227728},
    {"U3k3.g4", 9.80694767938488},
    {"U3k3.g5", 12.092593714232676},
};

struct SeriesRef { const char* id; double eta1; double value; };
inline constexpr SeriesRef kDirectValues[] = {
    {"T0k1", 0.01, 3002.1429074128114},
    {"T0k1", 0.0316227766016838, 287.0111423554167},
    {"T0k1", 0.1, 25.510242361055283},
    {"T0k1", 0.5, 0.5713100274225348},
    {"T0k1", 1.0, 0.06671618038376523},
    {"T1k2", 0.01, 7727.97536907036},
    {"T1k2", 0.0316227766016838, 628.8797176320826},
    {"T1k2", 0.1, 48.49055527428631},
    {"T1k2", 0.5, 1.1279692953770124},
    {"T1k2", 1.0, 0.18872165574849295},
    {"T2k3", 0.01, 1142752.2535580469},
    {"T2k3", 0.0316227766016838, 36137.5922285093},
    {"T2k3", 0.1, 1142.958747190023},
    {"T2k3", 0.5, 9.184969877944825},
    {"T2k3", 1.0, 1.1679927641404209},
    {"T3k1", 0.01, 5568472.12997054},
    {"T3k1", 0.0316227766016838, 55703.46889166181},
    {"T3k1", 0.1, 558.9072646076969},
    {"T3k1", 0.5, 0.9712521114809158},
    {"T3k1", 1.0, 0.06997899758143836},
    {"U0k1", 0.01, 1168.6084282371876},
    {"U0k1", 0.0316227766016838, 104.15883769089861},
    {"U0k1", 0.1, 7.595568355128028},
    {"U0k1", 0.5, 0.05194688149907426},
    {"U0k1", 1.0, 0.001059499853923412},
    {"U1k3", 0.01, 9680.430584064792},
    {"U1k3", 0.0316227766016838, 766.6265728963511},
    {"U1k3", 0.1, 49.93148560936877},
    {"U1k3", 0.5, 0.3414319050768951},
    {"U1k3", 1.0, 0.01131282149763518},
    {"U2k2", 0.01, 190042.12360738474},
    {"U2k2", 0.0316227766016838, 5266.569894937456},
    {"U2k2", 0.1, 117.50757289478696},
    {"U2k2", 0.5, 0.17785605775385563},
    {"U2k2", 1.0, 0.0033050361481638387},
    {"U3k3", 0.01, 297522776.0643183},
    {"U3k3", 0.0316227766016838, 2723683.888145351},
    {"U3k3", 0.1, 20630.34874267519},
    {"U3k3", 0.5, 6.605537683701917},
    {"U3k3", 1.0, 0.05582004502756038},
    {"U0k2", 0.01, 1212.9558342166517},
    {"U0k2", 0.0316227766016838, 113.59189632614911},
    {"U0k2", 0.1, 9.183466360653114},
    {"U0k2", 0.5, 0.09108962229440012},
    {"U0k2", 1.0, 0.0029202060640689583},
};

// percentage errors 100 |direct - closed| / direct at xi = 1e-3, 1e-2,
// from an independent high-precision evaluation of both paths
struct PctRef { const char* id; double at_1e3; double at_1e2; };
inline constexpr PctRef kPctReference[] = {
    {"T0k1", 3.861558650907758e-05, 0.0013633991220119827},
    {"T1k1", 0.0014136738620064001, 0.019833828492119784},
    {"T2k1", 0.04575665231430251, 0.44406876771663567},
    {"T3k1", 0.07003417920160367, 0.5995614272006536},
    {"T0k2", 3.35255211079356e-07, 1.0137699098491877e-06},
    {"T1k2", 0.0022093038447619368, 0.028624103218511734},
    {"T2k2", 0.0004069719999477453, 0.013489443297359217},
    {"T3k2", 0.018615792781384827, 0.1832420406910486},
    {"T0k3", 0.40575513396079516, 1.208445307465624},
    {"T1k3", 0.0006118769861403318, 0.007156990551531227},
    {"T2k3", 0.0036695213850001735, 0.0376374117643867},
    {"T3k3", 0.0015355573700890578, 0.016328916468568322},
    {"U0k1", 6.050787133377453e-05, 0.011949107740208308},
    {"U1k1", 0.003973787070815538, 0.12543593979806938},
    {"U2k1", 0.053465601039574304, 0.5559767885873687},
    {"U3k1", 0.08330345725172286, 1.0219445707786505},
    {"U0k2", 0.14637717236071765, 1.625755331626533},
    {"U1k2", 0.01750054152873446, 0.38735214381130495},
    {"U2k2", 0.00029780062617423944, 0.004102446432235259},
    {"U3k2", 0.020179726131902807, 0.22815516085885834},
    {"U0k3", 0.0425537672606484, 0.9105495481587007},
    {"U1k3", 0.02274342899720919, 0.812917215242246},
    {"U2k3", 0.0024446532313987645, 0.11007426854195435},
    {"U3k3", 0.0015968055152532014, 0.031256506674194544},
};

struct ForceRef { double u; double F[10]; };
inline constexpr ForceRef kForceCoefficients[] = {
    {0.8, {0.16849426517308957, -0.04885177659450315, -0.15487011126590103, 0.1548701112658788, 0.019560864947946427, -0.1502396324179265, 0.019560864947939703, -0.06396419639820794, 0.060354923204941326, -0.06035492320494984}},
    {1.2, {0.03894820088891168, -0.01647666222541881, -0.047837899204246984, 0.047837899204227874, 0.0036442868513857475, -0.07690826880716882, 0.003644286851382088, -0.017911559715203414, 0.022110515883356063, -0.022110515883368764}},
};

inline constexpr ForceRef kForceNearContact[] = {
    {0.001, {20227.106838329022, -0.10419765063257322, -12296.878191036323, 12296.878191036323, 1868.9297702361312, -3738.013265864819, 1868.9297702361312, -0.5858560874842027, 0.39943080991373514, -0.39943080991373514}},  // xi = 1e-6
    {0.01, {390.72011480097626, -0.10418797121392917, -237.77558332326527, 237.77558332326527, 36.162066004485936, -72.47785013886043, 36.162066004485936, -0.5210529662361587, 0.36002371978657827, -0.36002371978657827}},  // xi = 1e-4
    {0.1, {9.547763634358684, -0.10322043114658559, -5.990420633396053, 5.990420633396053, 0.9256993003288455, -2.0043918362570916, 0.9256993003288455, -0.375598221088512, 0.2706965570031378, -0.2706965570031378}},  // xi = 1e-2
};

}  // namespace refdata
