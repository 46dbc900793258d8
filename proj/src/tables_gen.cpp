// Generated by scripts/gen_tables.py -- do not edit by hand.
#include "tables.hpp"
#include <cstring>

namespace bisphere::detail {

static const KernelSpec kKernels[] = {
    {"T0k1.f1", 2, 2, 1, {{0, {1.0, 0.0, 0.0, 0.0}}}},
    {"T0k1.f2", 2, 3, 2, {{0, {1.0, 0.0, 0.0, 0.0}}, {1, {3.0, 0.0, 0.0, 0.0}}}},
    {"T0k2.f1", 4, 2, 1, {{0, {1.0, 0.0, 0.0, 0.0}}}},
    {"T0k2.f2", 4, 3, 2, {{0, {2.0, 0.0, 0.0, 0.0}}, {1, {2.0, 0.0, 0.0, 0.0}}}},
    {"T0k3.f1", 6, 2, 1, {{0, {1.0, 0.0, 0.0, 0.0}}}},
    {"T0k3.f2", 6, 3, 2, {{0, {3.0, 0.0, 0.0, 0.0}}, {1, {1.0, 0.0, 0.0, 0.0}}}},
    {"T1k1.f1", 2, 2, 1, {{0, {0.0, 2.0, 0.0, 0.0}}}},
    {"T1k1.f2", 2, 3, 2, {{0, {1.0, 2.0, 0.0, 0.0}}, {1, {-1.0, 6.0, 0.0, 0.0}}}},
    {"T1k1.f3", 2, 4, 3, {{0, {1.0, 1.0, 0.0, 0.0}}, {1, {2.0, 14.0, 0.0, 0.0}}, {2, {-3.0, 9.0, 0.0, 0.0}}}},
    {"T1k2.f1", 4, 2, 1, {{0, {0.0, 2.0, 0.0, 0.0}}}},
    {"T1k2.f2", 4, 3, 2, {{0, {1.0, 4.0, 0.0, 0.0}}, {1, {-1.0, 4.0, 0.0, 0.0}}}},
    {"T1k2.f3", 4, 4, 3, {{0, {2.0, 4.0, 0.0, 0.0}}, {1, {0.0, 16.0, 0.0, 0.0}}, {2, {-2.0, 4.0, 0.0, 0.0}}}},
    {"T1k3.f1", 6, 2, 1, {{0, {0.0, 2.0, 0.0, 0.0}}}},
    {"T1k3.f2", 6, 3, 2, {{0, {1.0, 6.0, 0.0, 0.0}}, {1, {-1.0, 2.0, 0.0, 0.0}}}},
    {"T1k3.f3", 6, 4, 3, {{0, {3.0, 9.0, 0.0, 0.0}}, {1, {-2.0, 14.0, 0.0, 0.0}}, {2, {-1.0, 1.0, 0.0, 0.0}}}},
    {"T2k1.f1", 2, 2, 1, {{0, {0.0, 0.0, 4.0, 0.0}}}},
    {"T2k1.f2", 2, 3, 2, {{0, {0.0, 4.0, 4.0, 0.0}}, {1, {0.0, -4.0, 12.0, 0.0}}}},
    {"T2k1.f3", 2, 4, 3, {{0, {1.0, 4.0, 2.0, 0.0}}, {1, {-2.0, 8.0, 28.0, 0.0}}, {2, {1.0, -12.0, 18.0, 0.0}}}},
    {"T2k1.f4", 2, 5, 4, {{0, {1.0, 2.0, 0.6666666666666666, 0.0}}, {1, {1.0, 26.0, 32.666666666666664, 0.0}}, {2, {-5.0, -10.0, 76.66666666666667, 0.0}}, {3, {3.0, -18.0, 18.0, 0.0}}}},
    {"T2k2.f1", 4, 2, 1, {{0, {0.0, 0.0, 4.0, 0.0}}}},
    {"T2k2.f2", 4, 3, 2, {{0, {0.0, 4.0, 8.0, 0.0}}, {1, {0.0, -4.0, 8.0, 0.0}}}},
    {"T2k2.f3", 4, 4, 3, {{0, {1.0, 8.0, 8.0, 0.0}}, {1, {-2.0, 0.0, 32.0, 0.0}}, {2, {1.0, -8.0, 8.0, 0.0}}}},
    {"T2k2.f4", 4, 5, 4, {{0, {2.0, 8.0, 5.333333333333333, 0.0}}, {1, {-2.0, 24.0, 58.666666666666664, 0.0}}, {2, {-2.0, -24.0, 58.666666666666664, 0.0}}, {3, {2.0, -8.0, 5.333333333333333, 0.0}}}},
    {"T2k3.f1", 6, 2, 1, {{0, {0.0, 0.0, 4.0, 0.0}}}},
    {"T2k3.f2", 6, 3, 2, {{0, {0.0, 4.0, 12.0, 0.0}}, {1, {0.0, -4.0, 4.0, 0.0}}}},
    {"T2k3.f3", 6, 4, 3, {{0, {1.0, 12.0, 18.0, 0.0}}, {1, {-2.0, -8.0, 28.0, 0.0}}, {2, {1.0, -4.0, 2.0, 0.0}}}},
    {"T2k3.f4", 6, 5, 4, {{0, {3.0, 18.0, 18.0, 0.0}}, {1, {-5.0, 10.0, 76.66666666666667, 0.0}}, {2, {1.0, -26.0, 32.666666666666664, 0.0}}, {3, {1.0, -2.0, 0.6666666666666666, 0.0}}}},
    {"T3k1.f1", 2, 2, 1, {{0, {0.0, 0.0, 0.0, 8.0}}}},
    {"T3k1.f2", 2, 3, 2, {{0, {0.0, 0.0, 12.0, 8.0}}, {1, {0.0, 0.0, -12.0, 24.0}}}},
    {"T3k1.f3", 2, 4, 3, {{0, {0.0, 6.0, 12.0, 4.0}}, {1, {0.0, -12.0, 24.0, 56.0}}, {2, {0.0, 6.0, -36.0, 36.0}}}},
    {"T3k1.f4", 2, 5, 4, {{0, {1.0, 6.0, 6.0, 1.3333333333333333}}, {1, {-3.0, 6.0, 78.0, 65.33333333333333}}, {2, {3.0, -30.0, -30.0, 153.33333333333334}}, {3, {-1.0, 18.0, -54.0, 36.0}}}},
    {"T3k1.f5", 2, 6, 5, {{0, {1.0, 3.0, 2.0, 0.3333333333333333}}, {1, {0.0, 36.0, 96.0, 52.0}}, {2, {-6.0, -54.0, 132.0, 306.0}}, {3, {8.0, -12.0, -176.0, 254.66666666666666}}, {4, {-3.0, 27.0, -54.0, 27.0}}}},
    {"T3k2.f1", 4, 2, 1, {{0, {0.0, 0.0, 0.0, 8.0}}}},
    {"T3k2.f2", 4, 3, 2, {{0, {0.0, 0.0, 12.0, 16.0}}, {1, {0.0, 0.0, -12.0, 16.0}}}},
    {"T3k2.f3", 4, 4, 3, {{0, {0.0, 6.0, 24.0, 16.0}}, {1, {0.0, -12.0, 0.0, 64.0}}, {2, {0.0, 6.0, -24.0, 16.0}}}},
    {"T3k2.f4", 4, 5, 4, {{0, {1.0, 12.0, 24.0, 10.666666666666666}}, {1, {-3.0, -12.0, 72.0, 117.33333333333333}}, {2, {3.0, -12.0, -72.0, 117.33333333333333}}, {3, {-1.0, 12.0, -24.0, 10.666666666666666}}}},
    {"T3k2.f5", 4, 6, 5, {{0, {2.0, 12.0, 16.0, 5.333333333333333}}, {1, {-4.0, 24.0, 160.0, 138.66666666666666}}, {2, {0.0, -72.0, 0.0, 352.0}}, {3, {4.0, 24.0, -160.0, 138.66666666666666}}, {4, {-2.0, 12.0, -16.0, 5.333333333333333}}}},
    {"T3k3.f1", 6, 2, 1, {{0, {0.0, 0.0, 0.0, 8.0}}}},
    {"T3k3.f2", 6, 3, 2, {{0, {0.0, 0.0, 12.0, 24.0}}, {1, {0.0, 0.0, -12.0, 8.0}}}},
    {"T3k3.f3", 6, 4, 3, {{0, {0.0, 6.0, 36.0, 36.0}}, {1, {0.0, -12.0, -24.0, 56.0}}, {2, {0.0, 6.0, -12.0, 4.0}}}},
    {"T3k3.f4", 6, 5, 4, {{0, {1.0, 18.0, 54.0, 36.0}}, {1, {-3.0, -30.0, 30.0, 153.33333333333334}}, {2, {3.0, 6.0, -78.0, 65.33333333333333}}, {3, {-1.0, 6.0, -6.0, 1.3333333333333333}}}},
    {"T3k3.f5", 6, 6, 5, {{0, {3.0, 27.0, 54.0, 27.0}}, {1, {-8.0, -12.0, 176.0, 254.66666666666666}}, {2, {6.0, -54.0, -132.0, 306.0}}, {3, {0.0, 36.0, -96.0, 52.0}}, {4, {-1.0, 3.0, -2.0, 0.3333333333333333}}}},
    {"U0k1.g1", 2, 2, 1, {{0, {1.0, 0.0, 0.0, 0.0}}}},
    {"U0k1.g2", 2, 3, 2, {{0, {1.0, 0.0, 0.0, 0.0}}, {1, {7.0, 0.0, 0.0, 0.0}}}},
    {"U0k2.g1", 4, 2, 1, {{0, {1.0, 0.0, 0.0, 0.0}}}},
    {"U0k2.g2", 4, 3, 2, {{0, {2.0, 0.0, 0.0, 0.0}}, {1, {6.0, 0.0, 0.0, 0.0}}}},
    {"U0k3.g1", 6, 2, 1, {{0, {1.0, 0.0, 0.0, 0.0}}}},
    {"U0k3.g2", 6, 3, 2, {{0, {3.0, 0.0, 0.0, 0.0}}, {1, {5.0, 0.0, 0.0, 0.0}}}},
    {"U1k1.g1", 2, 2, 1, {{0, {0.0, 2.0, 0.0, 0.0}}}},
    {"U1k1.g2", 2, 3, 2, {{0, {1.0, 2.0, 0.0, 0.0}}, {1, {-1.0, 14.0, 0.0, 0.0}}}},
    {"U1k1.g3", 2, 4, 3, {{0, {1.0, 1.0, 0.0, 0.0}}, {1, {6.0, 54.0, 0.0, 0.0}}, {2, {-7.0, 49.0, 0.0, 0.0}}}},
    {"U1k2.g1", 4, 2, 1, {{0, {0.0, 2.0, 0.0, 0.0}}}},
    {"U1k2.g2", 4, 3, 2, {{0, {1.0, 4.0, 0.0, 0.0}}, {1, {-1.0, 12.0, 0.0, 0.0}}}},
    {"U1k2.g3", 4, 4, 3, {{0, {2.0, 4.0, 0.0, 0.0}}, {1, {4.0, 64.0, 0.0, 0.0}}, {2, {-6.0, 36.0, 0.0, 0.0}}}},
    {"U1k3.g1", 6, 2, 1, {{0, {0.0, 2.0, 0.0, 0.0}}}},
    {"U1k3.g2", 6, 3, 2, {{0, {1.0, 6.0, 0.0, 0.0}}, {1, {-1.0, 10.0, 0.0, 0.0}}}},
    {"U1k3.g3", 6, 4, 3, {{0, {3.0, 9.0, 0.0, 0.0}}, {1, {2.0, 70.0, 0.0, 0.0}}, {2, {-5.0, 25.0, 0.0, 0.0}}}},
    {"U2k1.g1", 2, 2, 1, {{0, {0.0, 0.0, 4.0, 0.0}}}},
    {"U2k1.g2", 2, 3, 2, {{0, {0.0, 4.0, 4.0, 0.0}}, {1, {0.0, -4.0, 28.0, 0.0}}}},
    {"U2k1.g3", 2, 4, 3, {{0, {1.0, 4.0, 2.0, 0.0}}, {1, {-2.0, 24.0, 108.0, 0.0}}, {2, {1.0, -28.0, 98.0, 0.0}}}},
    {"U2k1.g4", 2, 5, 4, {{0, {1.0, 2.0, 0.6666666666666666, 0.0}}, {1, {5.0, 106.0, 243.33333333333334, 0.0}}, {2, {-13.0, -10.0, 807.3333333333334, 0.0}}, {3, {7.0, -98.0, 228.66666666666666, 0.0}}}},
    {"U2k2.g1", 4, 2, 1, {{0, {0.0, 0.0, 4.0, 0.0}}}},
    {"U2k2.g2", 4, 3, 2, {{0, {0.0, 4.0, 8.0, 0.0}}, {1, {0.0, -4.0, 24.0, 0.0}}}},
    {"U2k2.g3", 4, 4, 3, {{0, {1.0, 8.0, 8.0, 0.0}}, {1, {-2.0, 16.0, 128.0, 0.0}}, {2, {1.0, -24.0, 72.0, 0.0}}}},
    {"U2k2.g4", 4, 5, 4, {{0, {2.0, 8.0, 5.333333333333333, 0.0}}, {1, {2.0, 120.0, 357.3333333333333, 0.0}}, {2, {-10.0, -56.0, 773.3333333333334, 0.0}}, {3, {6.0, -72.0, 144.0, 0.0}}}},
    {"U2k3.g1", 6, 2, 1, {{0, {0.0, 0.0, 4.0, 0.0}}}},
    {"U2k3.g2", 6, 3, 2, {{0, {0.0, 4.0, 12.0, 0.0}}, {1, {0.0, -4.0, 20.0, 0.0}}}},
    {"U2k3.g3", 6, 4, 3, {{0, {1.0, 12.0, 18.0, 0.0}}, {1, {-2.0, 8.0, 140.0, 0.0}}, {2, {1.0, -20.0, 50.0, 0.0}}}},
    {"U2k3.g4", 6, 5, 4, {{0, {3.0, 18.0, 18.0, 0.0}}, {1, {-1.0, 122.0, 479.3333333333333, 0.0}}, {2, {-7.0, -90.0, 699.3333333333334, 0.0}}, {3, {5.0, -50.0, 83.33333333333333, 0.0}}}},
    {"U3k1.g1", 2, 2, 1, {{0, {0.0, 0.0, 0.0, 8.0}}}},
    {"U3k1.g2", 2, 3, 2, {{0, {0.0, 0.0, 12.0, 8.0}}, {1, {0.0, 0.0, -12.0, 56.0}}}},
    {"U3k1.g3", 2, 4, 3, {{0, {0.0, 6.0, 12.0, 4.0}}, {1, {0.0, -12.0, 72.0, 216.0}}, {2, {0.0, 6.0, -84.0, 196.0}}}},
    {"U3k1.g4", 2, 5, 4, {{0, {1.0, 6.0, 6.0, 1.3333333333333333}}, {1, {-3.0, 30.0, 318.0, 486.6666666666667}}, {2, {3.0, -78.0, -30.0, 1614.6666666666667}}, {3, {-1.0, 42.0, -294.0, 457.3333333333333}}}},
    {"U3k1.g5", 2, 6, 5, {{0, {1.0, 3.0, 2.0, 0.3333333333333333}}, {1, {4.0, 156.0, 728.0, 825.3333333333334}}, {2, {-18.0, -174.0, 1692.0, 6956.666666666667}}, {3, {20.0, -132.0, -1736.0, 6905.333333333333}}, {4, {-7.0, 147.0, -686.0, 800.3333333333334}}}},
    {"U3k2.g1", 4, 2, 1, {{0, {0.0, 0.0, 0.0, 8.0}}}},
    {"U3k2.g2", 4, 3, 2, {{0, {0.0, 0.0, 12.0, 16.0}}, {1, {0.0, 0.0, -12.0, 48.0}}}},
    {"U3k2.g3", 4, 4, 3, {{0, {0.0, 6.0, 24.0, 16.0}}, {1, {0.0, -12.0, 48.0, 256.0}}, {2, {0.0, 6.0, -72.0, 144.0}}}},
    {"U3k2.g4", 4, 5, 4, {{0, {1.0, 12.0, 24.0, 10.666666666666666}}, {1, {-3.0, 12.0, 360.0, 714.6666666666666}}, {2, {3.0, -60.0, -168.0, 1546.6666666666667}}, {3, {-1.0, 36.0, -216.0, 288.0}}}},
    {"U3k2.g5", 4, 6, 5, {{0, {2.0, 12.0, 16.0, 5.333333333333333}}, {1, {0.0, 168.0, 1056.0, 1418.6666666666667}}, {2, {-12.0, -264.0, 1248.0, 7946.666666666667}}, {3, {16.0, -24.0, -1888.0, 5685.333333333333}}, {4, {-6.0, 108.0, -432.0, 432.0}}}},
    {"U3k3.g1", 6, 2, 1, {{0, {0.0, 0.0, 0.0, 8.0}}}},
    {"U3k3.g2", 6, 3, 2, {{0, {0.0, 0.0, 12.0, 24.0}}, {1, {0.0, 0.0, -12.0, 40.0}}}},
    {"U3k3.g3", 6, 4, 3, {{0, {0.0, 6.0, 36.0, 36.0}}, {1, {0.0, -12.0, 24.0, 280.0}}, {2, {0.0, 6.0, -60.0, 100.0}}}},
    {"U3k3.g4", 6, 5, 4, {{0, {1.0, 18.0, 54.0, 36.0}}, {1, {-3.0, -6.0, 366.0, 958.6666666666666}}, {2, {3.0, -42.0, -270.0, 1398.6666666666667}}, {3, {-1.0, 30.0, -150.0, 166.66666666666666}}}},
    {"U3k3.g5", 6, 6, 5, {{0, {3.0, 27.0, 54.0, 27.0}}, {1, {-4.0, 156.0, 1384.0, 2233.3333333333335}}, {2, {-6.0, -318.0, 660.0, 8588.666666666666}}, {3, {12.0, 60.0, -1848.0, 4430.666666666667}}, {4, {-5.0, 75.0, -250.0, 208.33333333333334}}}},
};

static const ConstantSpec kConstants[] = {
    {"C_11", 0, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0620776, 5e-06, false},
    {"C_12", 0, kDom01, 3, {{0.0625, 2}, {-0.125, 1}, {0.041666666666666664, 0}}, {0.0, 0.08333333333333333, -0.058333333333333334, -0.03888888888888889, 0.041005291005291, 0.0164021164021164, -0.02351851851851852, -0.00671957671957672, 0.01228956228956229, 0.002731013842124953, -0.006091986398864706, -0.0011076338907026737, 0.0029184258813888444, 0.00044898859713674526, -0.0013648239116648704, -0.00018197652155531603, 0.0006269017645459927}, 0.0204109, 5e-06, false},
    {"C_13", 1, kDom0Inf, 2, {{0.0625, 3}, {-0.0625, 2}}, {-0.041666666666666664, 0.058333333333333334, 0.058333333333333334, -0.082010582010582, -0.041005291005291, 0.07055555555555555, 0.02351851851851852, -0.04915824915824916, -0.01228956228956229, 0.03045993199432353, 0.006091986398864706, -0.017510555288333066, -0.0029184258813888444, 0.009553767381654091, 0.0013648239116648704, -0.005015214116367942, -0.0006269017645459927}, 0.0208333, 5e-06, false},
    {"C_21", 6, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.000984324, 5e-06, false},
    {"C_22", 6, kDom01, 2, {{0.125, 1}, {-0.25, 0}}, {0.0, 0.08333333333333333, 0.16666666666666666, -0.11666666666666667, -0.07777777777777778, 0.082010582010582, 0.0328042328042328, -0.04703703703703704, -0.01343915343915344, 0.02457912457912458, 0.005462027684249906, -0.012183972797729412, -0.0022152677814053475, 0.005836851762777689, 0.0008979771942734905, -0.0027296478233297407, -0.00036395304311063207}, 0.06559053, 5e-06, false},
    {"C_23", 7, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0599279, 5e-06, false},
    {"C_24", 7, kDom01, 2, {{0.0625, 2}, {-0.041666666666666664, 0}}, {0.0, -0.16666666666666666, 0.175, 0.15555555555555556, -0.20502645502645503, -0.09841269841269841, 0.16462962962962963, 0.05375661375661376, -0.11060606060606061, -0.027310138421249533, 0.06701185038751176, 0.013291606688432085, -0.03793953645805498, -0.006285840359914434, 0.020472358674973053, 0.0029116243448850565, -0.010657329997281875}, -0.0234054, 5e-06, false},
    {"C_25", 8, kDom0Inf, 1, {{0.03125, 3}}, {0.041666666666666664, -0.0875, -0.11666666666666667, 0.20502645502645503, 0.12301587301587301, -0.24694444444444444, -0.09407407407407407, 0.22121212121212122, 0.061447811447811446, -0.1675296259687794, -0.036551918393188235, 0.11381860937416494, 0.02042898116972191, -0.07165325536240569, -0.010918591293318963, 0.0426293199891275, 0.005642115880913934}, -0.0104167, 5e-06, false},
    {"C_31", 15, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.00234029, 5e-06, false},
    {"C_32", 15, kDom01, 1, {{0.25, 0}}, {0.0, -0.5, 0.16666666666666666, 0.3333333333333333, -0.23333333333333334, -0.15555555555555556, 0.164021164021164, 0.0656084656084656, -0.09407407407407407, -0.02687830687830688, 0.04915824915824916, 0.010924055368499812, -0.024367945595458823, -0.004430535562810695, 0.011673703525555378, 0.001795954388546981, -0.0054592956466594815}, -0.16139, 5.000000005000001e-06, false},
    {"C_33", 16, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.005144, 5e-06, false},
    {"C_34", 16, kDom01, 1, {{0.25, 0}}, {0.0, -0.16666666666666666, -0.5, 0.4666666666666667, 0.3888888888888889, -0.49206349206349204, -0.22962962962962963, 0.3762962962962963, 0.12095238095238095, -0.24579124579124578, -0.060082304526748974, 0.14620767357275294, 0.02879848115826952, -0.08171592467888764, -0.01346965791410236, 0.04367436517327585, 0.0061872017328807455}, -0.130144, 5e-06, false},
    {"C_35", 17, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0053361, 5e-06, false},
    {"C_36", 17, kDom01, 1, {{0.041666666666666664, 0}}, {0.0, 0.25, -0.35, -0.3888888888888889, 0.6150793650793651, 0.34444444444444444, -0.6585185185185185, -0.2419047619047619, 0.553030303030303, 0.15020576131687244, -0.4020711023250706, -0.08639544347480856, 0.26557675520638485, 0.04714380269935826, -0.16377886939978442, -0.024748806931522982, 0.09591596997553688}, 0.0154972, 5e-06, false},
    {"C_37", 18, kDom0Inf, 0, {{0.0, 0}}, {-0.041666666666666664, 0.11666666666666667, 0.19444444444444445, -0.41005291005291006, -0.28703703703703703, 0.6585185185185185, 0.2822222222222222, -0.7373737373737373, -0.22530864197530864, 0.6701185038751176, 0.15839164637048234, -0.5311535104127697, -0.10214490584860955, 0.3821506952661637, 0.061872017328807455, -0.255775919934765, -0.03573340057912158}, 0.00698606, 5e-06, true},
    {"C_41", 27, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.5, -1.0, 0.3333333333333333, 0.6666666666666666, -0.4666666666666667, -0.3111111111111111, 0.328042328042328, 0.1312169312169312, -0.18814814814814815, -0.05375661375661376, 0.09831649831649832, 0.021848110736999625, -0.048735891190917646, -0.00886107112562139, 0.023347407051110755, 0.003591908777093962}, 0.0556826, 5e-06, false},
    {"C_42", 28, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0102884, 5e-06, false},
    {"C_43", 28, kDom01, 1, {{-0.25, 0}}, {0.0, 1.0, -0.5, -1.3333333333333333, 1.1666666666666667, 0.9333333333333333, -1.1481481481481481, -0.5248677248677248, 0.8466666666666667, 0.2687830687830688, -0.5407407407407407, -0.13108866442199776, 0.3167832927409647, 0.06202749787934973, -0.17510555288333066, -0.028735270216751697, 0.09280802599321118}, 0.239712, 5e-06, false},
    {"C_44", 29, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.00810024, 5e-06, false},
    {"C_45", 29, kDom01, 1, {{-0.25, 0}}, {0.0, 0.25, 1.0, -1.1666666666666667, -1.1666666666666667, 1.7222222222222223, 0.9185185185185185, -1.6933333333333334, -0.6047619047619047, 1.3518518518518519, 0.36049382716049383, -0.9503498782228941, -0.20158936810788664, 0.6128694350916574, 0.10775726331281887, -0.37123210397284473, -0.05568481559592671}, 0.1794, 5.0000000050000005e-05, false},
    {"C_46", 30, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.00322628, 5e-06, false},
    {"C_47", 30, kDom01, 1, {{-0.041666666666666664, 0}}, {0.0, -0.3333333333333333, 0.5833333333333334, 0.7777777777777778, -1.4351851851851851, -0.9185185185185185, 1.9755555555555555, 0.8063492063492064, -2.0277777777777777, -0.6008230452674898, 1.742308110075306, 0.40317873621577327, -1.3278837760319242, -0.25143361439657735, 0.9280802599321117, 0.1484928415891379, -0.6074678098450669}, -0.00322628, 5e-06, false},
    {"C_48", 31, kDom0Inf, 0, {{0.0, 0}}, {0.041666666666666664, -0.14583333333333334, -0.2916666666666667, 0.7175925925925926, 0.5740740740740741, -1.4816666666666667, -0.7055555555555556, 2.0277777777777777, 0.6759259259259259, -2.1778851375941324, -0.5543707622966882, 1.9918256640478862, 0.4085796233944382, -1.6241404548811955, -0.27842407797963353, 1.2149356196901338, 0.1786670028956079}, -0.005243, 5e-06, true},
    {"C_51", 2, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0578357, 5e-06, false},
    {"C_52", 2, kDom01, 2, {{0.0625, 2}, {-0.08333333333333333, 0}}, {0.0, 0.0, 0.06666666666666667, 0.0, -0.042328042328042326, 0.0, 0.023703703703703703, 0.0, -0.012313612313612313, 0.0, 0.006094962454750815, 0.0, -0.0029187821780414375, 0.0, 0.0013648655640563516, 0.0, -0.0006269065474633775}, 0.016169, 5e-06, false},
    {"C_53", 3, kDom0Inf, 1, {{0.0625, 3}}, {0.0, -0.06666666666666667, 0.0, 0.08465608465608465, 0.0, -0.07111111111111111, 0.0, 0.04925444925444925, 0.0, -0.030474812273754072, 0.0, 0.017512693068248625, 0.0, -0.009554058948394461, 0.0, 0.00501525237970702, 0.0}, -0.0416667, 5e-06, false},
    {"C_61", 9, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0116394, 5e-06, false},
    {"C_62", 9, kDom01, 1, {{0.125, 1}}, {0.0, -0.16666666666666666, 0.0, 0.13333333333333333, 0.0, -0.08465608465608465, 0.0, 0.047407407407407405, 0.0, -0.024627224627224626, 0.0, 0.01218992490950163, 0.0, -0.005837564356082875, 0.0, 0.002729731128112703, 0.0}, -0.0599262, 5e-06, false},
    {"C_63", 10, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0434945, 5e-06, false},
    {"C_64", 10, kDom01, 2, {{0.0625, 2}, {0.08333333333333333, 0}}, {0.0, 0.0, -0.2, 0.0, 0.21164021164021163, 0.0, -0.16592592592592592, 0.0, 0.11082251082251082, 0.0, -0.06704458700225896, 0.0, 0.03794416831453869, 0.0, -0.020472983460845272, 0.0, 0.010657411306877418}, -0.0398388, 5e-06, false},
    {"C_65", 11, kDom0Inf, 1, {{0.03125, 3}}, {0.0, 0.1, 0.0, -0.21164021164021163, 0.0, 0.24888888888888888, 0.0, -0.22164502164502164, 0.0, 0.1676114675056474, 0.0, -0.11383250494361606, 0.0, 0.07165544211295845, 0.0, -0.04262964522750967, 0.0}, 0.0208333, 5e-06, false},
    {"C_71", 19, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0302001, 5e-06, false},
    {"C_72", 19, kDom01, 1, {{0.25, 0}}, {0.0, 0.0, -0.3333333333333333, 0.0, 0.26666666666666666, 0.0, -0.1693121693121693, 0.0, 0.09481481481481481, 0.0, -0.04925444925444925, 0.0, 0.02437984981900326, 0.0, -0.01167512871216575, 0.0, 0.005459462256225406}, -0.0745833, 5e-06, false},
    {"C_73", 20, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.3333333333333333, 0.0, -0.5333333333333333, 0.0, 0.5079365079365079, 0.0, -0.37925925925925924, 0.0, 0.24627224627224628, 0.0, -0.14627909891401955, 0.0, 0.08172590098516025, 0.0, -0.04367569804980325, 0.0}, 0.125, 0.0005000000005, false},
    {"C_74", 21, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0204238, 5e-06, false},
    {"C_75", 21, kDom01, 1, {{-0.08333333333333333, 0}}, {0.0, 0.0, 0.4, 0.0, -0.6349206349206349, 0.0, 0.6637037037037037, 0.0, -0.5541125541125541, 0.0, 0.40226752201355376, 0.0, -0.26560917820177077, 0.0, 0.16378386768676217, 0.0, -0.09591670176189676}, 0.0629095, 5e-06, false},
    {"C_76", 22, kDom0Inf, 0, {{0.0, 0}}, {0.0, -0.13333333333333333, 0.0, 0.42328042328042326, 0.0, -0.6637037037037037, 0.0, 0.7388167388167388, 0.0, -0.6704458700225896, 0.0, 0.5312183564035415, 0.0, -0.3821623579357784, 0.0, 0.25577787136505803, 0.0}, -0.0138888, 5e-06, false},
    {"C_81", 32, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.5, 0.0, -0.6666666666666666, 0.0, 0.5333333333333333, 0.0, -0.3386243386243386, 0.0, 0.18962962962962962, 0.0, -0.0985088985088985, 0.0, 0.04875969963800652, 0.0, -0.0233502574243315, 0.0}, 0.225386, 5e-06, false},
    {"C_82", 33, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0760218, 5e-06, false},
    {"C_83", 33, kDom01, 1, {{-0.25, 0}}, {0.0, 0.0, 1.0, 0.0, -1.3333333333333333, 0.0, 1.1851851851851851, 0.0, -0.8533333333333334, 0.0, 0.5417989417989418, 0.0, -0.31693804764704236, 0.0, 0.17512693068248625, 0.0, -0.0928108583558319}, 0.173978, 5e-06, false},
    {"C_84", 34, kDom0Inf, 0, {{0.0, 0}}, {0.0, -0.5, 0.0, 1.3333333333333333, 0.0, -1.7777777777777777, 0.0, 1.7066666666666668, 0.0, -1.3544973544973544, 0.0, 0.9508141429411271, 0.0, -0.6129442573887018, 0.0, 0.3712434334233276, 0.0}, -0.0625, 5.0000000050000005e-05, false},
    {"C_85", 35, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.00339257, 5e-06, false},
    {"C_86", 35, kDom01, 1, {{0.08333333333333333, 0}}, {0.0, 0.0, -0.6666666666666666, 0.0, 1.4814814814814814, 0.0, -1.991111111111111, 0.0, 2.0317460317460316, 0.0, -1.743159262058733, 0.0, 1.328045891008854, 0.0, -0.928108583558319, 0.0, 0.6074724444920128}, -0.0799408, 5e-06, false},
    {"C_87", 36, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.16666666666666666, 0.0, -0.7407407407407407, 0.0, 1.4933333333333334, 0.0, -2.0317460317460316, 0.0, 2.1789490775734164, 0.0, -1.992068836513281, 0.0, 1.6241900212270584, 0.0, -1.2149448889840255, 0.0}, 0.010415, 5e-06, false},
    {"C_91", 4, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.00600775, 5e-06, false},
    {"C_92", 4, kDom01, 3, {{0.0625, 2}, {0.125, 1}, {0.041666666666666664, 0}}, {0.0, -0.08333333333333333, -0.058333333333333334, 0.03888888888888889, 0.041005291005291, -0.0164021164021164, -0.02351851851851852, 0.00671957671957672, 0.01228956228956229, -0.002731013842124953, -0.006091986398864706, 0.0011076338907026737, 0.0029184258813888444, -0.00044898859713674526, -0.0013648239116648704, 0.00018197652155531603, 0.0006269017645459927}, -0.0476744, 5e-06, false},
    {"C_93", 5, kDom0Inf, 2, {{0.0625, 3}, {0.0625, 2}}, {0.041666666666666664, 0.058333333333333334, -0.058333333333333334, -0.082010582010582, 0.041005291005291, 0.07055555555555555, -0.02351851851851852, -0.04915824915824916, 0.01228956228956229, 0.03045993199432353, -0.006091986398864706, -0.017510555288333066, 0.0029184258813888444, 0.009553767381654091, -0.0013648239116648704, -0.005015214116367942, 0.0006269017645459927}, -0.0235338, 5e-06, true},
    {"C_101", 12, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.204961, 5e-06, false},
    {"C_102", 12, kDom01, 2, {{0.125, 1}, {0.25, 0}}, {0.0, 0.08333333333333333, -0.16666666666666666, -0.11666666666666667, 0.07777777777777778, 0.082010582010582, -0.0328042328042328, -0.04703703703703704, 0.01343915343915344, 0.02457912457912458, -0.005462027684249906, -0.012183972797729412, 0.0022152677814053475, 0.005836851762777689, -0.0008979771942734905, -0.0027296478233297407, 0.00036395304311063207}, -0.0215362, 5e-06, false},
    {"C_103", 13, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0779324, 5e-06, false},
    {"C_104", 13, kDom01, 2, {{0.0625, 2}, {-0.041666666666666664, 0}}, {0.0, 0.16666666666666666, 0.175, -0.15555555555555556, -0.20502645502645503, 0.09841269841269841, 0.16462962962962963, -0.05375661375661376, -0.11060606060606061, 0.027310138421249533, 0.06701185038751176, -0.013291606688432085, -0.03793953645805498, 0.006285840359914434, 0.020472358674973053, -0.0029116243448850565, -0.010657329997281875}, 0.0887343, 5e-06, false},
    {"C_105", 14, kDom0Inf, 1, {{0.03125, 3}}, {-0.041666666666666664, -0.0875, 0.11666666666666667, 0.20502645502645503, -0.12301587301587301, -0.24694444444444444, 0.09407407407407407, 0.22121212121212122, -0.061447811447811446, -0.1675296259687794, 0.036551918393188235, 0.11381860937416494, -0.02042898116972191, -0.07165325536240569, 0.010918591293318963, 0.0426293199891275, -0.005642115880913934}, 0.03125, 5.000000005000001e-06, true},
    {"C_111", 23, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.681334, 5e-06, false},
    {"C_112", 23, kDom01, 1, {{0.25, 0}}, {0.0, 0.5, 0.16666666666666666, -0.3333333333333333, -0.23333333333333334, 0.15555555555555556, 0.164021164021164, -0.0656084656084656, -0.09407407407407407, 0.02687830687830688, 0.04915824915824916, -0.010924055368499812, -0.024367945595458823, 0.004430535562810695, 0.011673703525555378, -0.001795954388546981, -0.0054592956466594815}, 0.211416, 5e-06, false},
    {"C_113", 24, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.280865, 5e-06, false},
    {"C_114", 24, kDom01, 1, {{-0.25, 0}}, {0.0, -0.16666666666666666, 0.5, 0.4666666666666667, -0.3888888888888889, -0.49206349206349204, 0.22962962962962963, 0.3762962962962963, -0.12095238095238095, -0.24579124579124578, 0.060082304526748974, 0.14620767357275294, -0.02879848115826952, -0.08171592467888764, 0.01346965791410236, 0.04367436517327585, -0.0061872017328807455}, 0.0941352, 5e-06, false},
    {"C_115", 25, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0104804, 5e-06, false},
    {"C_116", 25, kDom01, 1, {{0.041666666666666664, 0}}, {0.0, -0.25, -0.35, 0.3888888888888889, 0.6150793650793651, -0.34444444444444444, -0.6585185185185185, 0.2419047619047619, 0.553030303030303, -0.15020576131687244, -0.4020711023250706, 0.08639544347480856, 0.26557675520638485, -0.04714380269935826, -0.16377886939978442, 0.024748806931522982, 0.09591596997553688}, -0.114647, 5e-06, false},
    {"C_117", 26, kDom0Inf, 0, {{0.0, 0}}, {0.041666666666666664, 0.11666666666666667, -0.19444444444444445, -0.41005291005291006, 0.28703703703703703, 0.6585185185185185, -0.2822222222222222, -0.7373737373737373, 0.22530864197530864, 0.6701185038751176, -0.15839164637048234, -0.5311535104127697, 0.10214490584860955, 0.3821506952661637, -0.061872017328807455, -0.255775919934765, 0.03573340057912158}, -0.0160274, 5e-06, true},
    {"C_121", 37, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.5, 1.0, 0.3333333333333333, -0.6666666666666666, -0.4666666666666667, 0.3111111111111111, 0.328042328042328, -0.1312169312169312, -0.18814814814814815, 0.05375661375661376, 0.09831649831649832, -0.021848110736999625, -0.048735891190917646, 0.00886107112562139, 0.023347407051110755, -0.003591908777093962}, 3.09972, 5.000000005000001e-06, false},
    {"C_122", 38, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.56173, 5.000000005000001e-06, false},
    {"C_123", 38, kDom01, 1, {{-0.25, 0}}, {0.0, -1.0, -0.5, 1.3333333333333333, 1.1666666666666667, -0.9333333333333333, -1.1481481481481481, 0.5248677248677248, 0.8466666666666667, -0.2687830687830688, -0.5407407407407407, 0.13108866442199776, 0.3167832927409647, -0.06202749787934973, -0.17510555288333066, 0.028735270216751697, 0.09280802599321118}, -0.31173, 5.000000005000001e-06, false},
    {"C_124", 39, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.119472, 5e-06, false},
    {"C_125", 39, kDom01, 1, {{0.25, 0}}, {0.0, 0.25, -1.0, -1.1666666666666667, 1.1666666666666667, 1.7222222222222223, -0.9185185185185185, -1.6933333333333334, 0.6047619047619047, 1.3518518518518519, -0.36049382716049383, -0.9503498782228941, 0.20158936810788664, 0.6128694350916574, -0.10775726331281887, -0.37123210397284473, 0.05568481559592671}, -0.193028, 5e-06, false},
    {"C_126", 40, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0390417, 5e-06, false},
    {"C_127", 40, kDom01, 1, {{-0.041666666666666664, 0}}, {0.0, 0.3333333333333333, 0.5833333333333334, -0.7777777777777778, -1.4351851851851851, 0.9185185185185185, 1.9755555555555555, -0.8063492063492064, -2.0277777777777777, 0.6008230452674898, 1.742308110075306, -0.40317873621577327, -1.3278837760319242, 0.25143361439657735, 0.9280802599321117, -0.1484928415891379, -0.6074678098450669}, 0.122375, 5e-06, false},
    {"C_128", 41, kDom0Inf, 0, {{0.0, 0}}, {-0.041666666666666664, -0.14583333333333334, 0.2916666666666667, 0.7175925925925926, -0.5740740740740741, -1.4816666666666667, 0.7055555555555556, 2.0277777777777777, -0.6759259259259259, -2.1778851375941324, 0.5543707622966882, 1.9918256640478862, -0.4085796233944382, -1.6241404548811955, 0.27842407797963353, 1.2149356196901338, -0.1786670028956079}, 0.00588708, 5e-06, true},
    {"C_131", 42, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0620776, 5e-06, false},
    {"C_132", 42, kDom01, 3, {{0.0625, 2}, {-0.125, 1}, {0.041666666666666664, 0}}, {0.0, 0.08333333333333333, -0.058333333333333334, -0.03888888888888889, 0.041005291005291, 0.0164021164021164, -0.02351851851851852, -0.00671957671957672, 0.01228956228956229, 0.002731013842124953, -0.006091986398864706, -0.0011076338907026737, 0.0029184258813888444, 0.00044898859713674526, -0.0013648239116648704, -0.00018197652155531603, 0.0006269017645459927}, 0.0204109, 5e-06, false},
    {"C_133", 43, kDom1Inf, 2, {{0.125, 3}, {-0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0029945, 5e-06, false},
    {"C_134", 43, kDom01, 3, {{0.125, 3}, {-0.0625, 2}, {-0.125, 1}}, {-0.041666666666666664, 0.2, 0.058333333333333334, -0.2029100529100529, -0.041005291005291, 0.15751322751322752, 0.02351851851851852, -0.10503607503607504, -0.01228956228956229, 0.06365087783077202, 0.006091986398864706, -0.03612874446736881, -0.0029184258813888444, 0.01955652336044493, 0.0013648239116648704, -0.010212404754291199, -0.0006269017645459927}, 0.0386722, 5e-06, false},
    {"C_141", 48, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.000984324, 5e-06, false},
    {"C_142", 48, kDom01, 2, {{0.125, 1}, {-0.25, 0}}, {0.0, 0.08333333333333333, 0.16666666666666666, -0.11666666666666667, -0.07777777777777778, 0.082010582010582, 0.0328042328042328, -0.04703703703703704, -0.01343915343915344, 0.02457912457912458, 0.005462027684249906, -0.012183972797729412, -0.0022152677814053475, 0.005836851762777689, 0.0008979771942734905, -0.0027296478233297407, -0.00036395304311063207}, 0.0655905, 5e-06, false},
    {"C_143", 49, kDom1Inf, 1, {{0.1875, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.180949, 5e-06, false},
    {"C_144", 49, kDom01, 2, {{0.1875, 2}, {-0.2916666666666667, 0}}, {0.0, -0.16666666666666666, 0.4583333333333333, 0.15555555555555556, -0.44682539682539685, -0.09841269841269841, 0.33854497354497354, 0.05375661375661376, -0.22236171236171237, -0.027310138421249533, 0.13339374206040872, 0.013291606688432085, -0.07517591481612645, -0.006285840359914434, 0.04047787063255473, 0.0029116243448850565, -0.021051711273128392}, 0.0391906, 5e-06, false},
    {"C_145", 50, kDom1Inf, 1, {{0.28125, 3}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.118708, 5e-06, false},
    {"C_146", 50, kDom01, 2, {{0.28125, 3}, {-0.08333333333333333, 1}}, {0.041666666666666664, -0.4652777777777778, -0.11666666666666667, 0.9304232804232804, 0.12301587301587301, -1.0585493827160495, -0.09407407407407407, 0.9289979156645823, 0.061447811447811446, -0.6985847593519551, -0.036551918393188235, 0.4737702668355226, 0.02042898116972191, -0.2983823908816647, -0.010918591293318963, 0.1777562765751322, 0.005642115880913934}, -0.0861535, 5e-06, false},
    {"C_151", 57, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.00234029, 5e-06, false},
    {"C_152", 57, kDom01, 1, {{0.25, 0}}, {0.0, -0.5, 0.16666666666666666, 0.3333333333333333, -0.23333333333333334, -0.15555555555555556, 0.164021164021164, 0.0656084656084656, -0.09407407407407407, -0.02687830687830688, 0.04915824915824916, 0.010924055368499812, -0.024367945595458823, -0.004430535562810695, 0.011673703525555378, 0.001795954388546981, -0.0054592956466594815}, -0.16139, 5.000000005000001e-06, false},
    {"C_153", 58, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0145974, 5e-06, false},
    {"C_154", 58, kDom01, 2, {{0.25, 1}, {0.25, 0}}, {0.0, -0.6666666666666666, -0.5, 1.0333333333333334, 0.3888888888888889, -0.9756613756613757, -0.22962962962962963, 0.7241269841269842, 0.12095238095238095, -0.4693025493025493, -0.060082304526748974, 0.27897145691854686, 0.02879848115826952, -0.15618868139503062, -0.01346965791410236, 0.0836853890884392, 0.0061872017328807455}, -0.290497, 5e-06, false},
    {"C_155", 59, kDom1Inf, 1, {{0.375, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.329424, 5e-06, false},
    {"C_156", 59, kDom01, 2, {{0.375, 2}, {0.125, 0}}, {0.0, 0.25, -1.3888888888888888, -0.3888888888888889, 2.3076719576719578, 0.34444444444444444, -2.455643738977072, -0.2419047619047619, 2.080357543690877, 0.15020576131687244, -1.530563260764319, -0.08639544347480856, 1.0227164484871716, 0.04714380269935826, -0.6372426523958841, -0.024748806931522982, 0.3765642644233928}, -0.144309, 5e-06, false},
    {"C_157", 60, kDom1Inf, 1, {{0.5625, 3}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.185521, 5e-06, false},
    {"C_158", 60, kDom01, 2, {{0.5625, 3}, {-0.16666666666666666, 1}}, {-0.041666666666666664, 0.8972222222222223, 0.19444444444444445, -3.016931216931217, -0.28703703703703703, 4.9647001763668435, 0.2822222222222222, -5.733314093314093, -0.22530864197530864, 5.358163742978558, 0.15839164637048234, -4.348694445145944, -0.10214490584860955, 3.191075361601661, 0.061872017328807455, -2.1712847013863983, -0.03573340057912158}, 0.11082, 5.000000005000001e-06, false},
    {"C_161", 69, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.5, -1.0, 0.3333333333333333, 0.6666666666666666, -0.4666666666666667, -0.3111111111111111, 0.328042328042328, 0.1312169312169312, -0.18814814814814815, -0.05375661375661376, 0.09831649831649832, 0.021848110736999625, -0.048735891190917646, -0.00886107112562139, 0.023347407051110755, 0.003591908777093962}, 0.0556826, 5e-06, false},
    {"C_162", 70, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0332989, 5e-06, false},
    {"C_163", 70, kDom01, 1, {{0.25, 0}}, {0.0, 1.0, -1.5, -1.3333333333333333, 2.3, 0.9333333333333333, -2.1153439153439155, -0.5248677248677248, 1.5423280423280423, 0.2687830687830688, -0.9877633477633477, -0.13108866442199776, 0.5823108594325526, 0.06202749787934973, -0.3240510663156166, -0.028735270216751697, 0.17283007382353788}, 0.0452349, 5e-06, false},
    {"C_164", 71, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0968758, 5e-06, false},
    {"C_165", 71, kDom01, 2, {{0.5, 1}, {-0.25, 0}}, {0.0, 0.9166666666666666, 1.0, -3.811111111111111, -1.1666666666666667, 5.591005291005291, 0.9185185185185185, -5.635414462081129, -0.6047619047619047, 4.630017636684303, 0.36049382716049383, -3.3400979784471847, -0.20158936810788664, 2.201621578369374, 0.10775726331281887, -1.3581706938802074, -0.05568481559592671}, 0.205491, 5e-06, false},
    {"C_166", 72, kDom1Inf, 1, {{0.75, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.56128, 5.000000005000001e-06, false},
    {"C_167", 72, kDom01, 2, {{0.75, 2}, {-0.4583333333333333, 0}}, {0.0, -0.3333333333333333, 3.183333333333333, 0.7777777777777778, -8.341534391534392, -0.9185185185185185, 12.385044091710759, 0.8063492063492064, -13.546985730319063, -0.6008230452674898, 12.246890746721435, 0.40317873621577327, -9.72010533877906, -0.25143361439657735, 7.019393375599206, 0.1484928415891379, -4.719133667196189}, 0.251585, 5e-06, false},
    {"C_168", 73, kDom1Inf, 1, {{1.125, 3}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.280511, 5e-06, false},
    {"C_169", 73, kDom01, 2, {{1.125, 3}, {-0.3333333333333333, 1}}, {0.041666666666666664, -1.1736111111111112, -0.2916666666666667, 7.549338624338624, 0.5740740740740741, -18.03085537918871, -0.7055555555555556, 27.412105713216825, 0.6759259259259259, -31.860959536837843, -0.5543707622966882, 30.97084867278518, 0.4085796233944382, -26.501230518536932, -0.27842407797963353, 20.61186784542701, 0.1786670028956079}, 0.00467345, 5e-06, true},
    {"C_171", 44, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0578357, 5e-06, false},
    {"C_172", 44, kDom01, 2, {{0.0625, 2}, {-0.08333333333333333, 0}}, {0.0, 0.0, 0.06666666666666667, 0.0, -0.042328042328042326, 0.0, 0.023703703703703703, 0.0, -0.012313612313612313, 0.0, 0.006094962454750815, 0.0, -0.0029187821780414375, 0.0, 0.0013648655640563516, 0.0, -0.0006269065474633775}, 0.016169, 5e-06, false},
    {"C_173", 45, kDom0Inf, 2, {{0.125, 3}, {0.125, 2}}, {-0.16666666666666666, -0.13333333333333333, 0.13333333333333333, 0.1693121693121693, -0.08465608465608465, -0.14222222222222222, 0.047407407407407405, 0.0985088985088985, -0.024627224627224626, -0.060949624547508144, 0.01218992490950163, 0.03502538613649725, -0.005837564356082875, -0.019108117896788922, 0.002729731128112703, 0.01003050475941404, -0.001253813094926755}, -0.159166, 5e-06, true},
    {"C_181", 51, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0116394, 5e-06, false},
    {"C_182", 51, kDom01, 1, {{0.125, 1}}, {0.0, -0.16666666666666666, 0.0, 0.13333333333333333, 0.0, -0.08465608465608465, 0.0, 0.047407407407407405, 0.0, -0.024627224627224626, 0.0, 0.01218992490950163, 0.0, -0.005837564356082875, 0.0, 0.002729731128112703, 0.0}, -0.0599262, 5e-06, false},
    {"C_183", 52, kDom1Inf, 1, {{0.1875, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.121546, 5e-06, false},
    {"C_184", 52, kDom01, 3, {{0.1875, 2}, {0.25, 1}, {0.08333333333333333, 0}}, {0.0, -0.3333333333333333, -0.3333333333333333, 0.26666666666666666, 0.38095238095238093, -0.1693121693121693, -0.30814814814814817, 0.09481481481481481, 0.20933140933140934, -0.04925444925444925, -0.12799421154976712, 0.02437984981900326, 0.07296955445103594, -0.01167512871216575, -0.039581101357634194, 0.005459462256225406, 0.02068791606629146}, -0.183361, 5e-06, false},
    {"C_185", 53, kDom1Inf, 2, {{0.28125, 3}, {0.375, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.327741, 5e-06, false},
    {"C_186", 53, kDom01, 3, {{0.28125, 3}, {0.375, 2}, {0.16666666666666666, 1}}, {0.16666666666666666, 0.05555555555555555, -0.6666666666666666, -0.5417989417989418, 0.7619047619047619, 0.7997178130511464, -0.6162962962962963, -0.782324835658169, 0.4186628186628187, 0.6223721643827463, -0.25598842309953423, -0.43615800438375396, 0.14593910890207187, 0.2804306924684557, -0.07916220271526839, -0.16938656559574192, 0.04137583213258292}, 0.00641461, 5e-06, false},
    {"C_191", 61, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0302001, 5e-06, false},
    {"C_192", 61, kDom01, 1, {{0.25, 0}}, {0.0, 0.0, -0.3333333333333333, 0.0, 0.26666666666666666, 0.0, -0.1693121693121693, 0.0, 0.09481481481481481, 0.0, -0.04925444925444925, 0.0, 0.02437984981900326, 0.0, -0.01167512871216575, 0.0, 0.005459462256225406}, -0.0745833, 5e-06, false},
    {"C_193", 62, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.159701, 5e-06, false},
    {"C_194", 62, kDom01, 2, {{0.25, 1}, {0.5, 0}}, {0.0, 0.3333333333333333, -0.6666666666666666, -0.8, 0.5333333333333333, 0.8465608465608465, -0.3386243386243386, -0.6637037037037037, 0.18962962962962962, 0.4432900432900433, -0.0985088985088985, -0.26817834800903584, 0.04875969963800652, 0.15177667325815475, -0.0233502574243315, -0.08189193384338109, 0.010918924512450813}, -0.0950408, 5e-06, false},
    {"C_195", 63, kDom1Inf, 1, {{0.375, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0472824, 5e-06, false},
    {"C_196", 63, kDom01, 3, {{0.375, 2}, {0.5, 1}, {0.25, 0}}, {0.0, 0.6666666666666666, 0.4444444444444444, -1.6, -1.4645502645502646, 1.693121693121693, 1.907583774250441, -1.3274074074074074, -1.7739810806477474, 0.8865800865800866, 1.3727385403152599, -0.5363566960180717, -0.9452855632185438, 0.3035533465163095, 0.6004424862945457, -0.16378386768676217, -0.3594610472577753}, 0.117059, 5e-06, false},
    {"C_197", 64, kDom1Inf, 2, {{0.5625, 3}, {0.75, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.279644, 5e-06, false},
    {"C_198", 64, kDom01, 3, {{0.5625, 3}, {0.75, 2}, {0.3333333333333333, 1}}, {-0.16666666666666666, 0.022222222222222223, 1.7777777777777777, 1.0497354497354496, -3.64021164021164, -2.924585537918871, 4.266666666666667, 4.155433702100368, -3.8008016674683343, -4.315391385021015, 2.8768222786423845, 3.7228863542232147, -1.955584059287763, -2.83900653422803, 1.2320186491548666, 1.9821709972133192, -0.7334806605321517}, 0.109213, 5e-06, false},
    {"C_201", 74, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.5, 0.0, -0.6666666666666666, 0.0, 0.5333333333333333, 0.0, -0.3386243386243386, 0.0, 0.18962962962962962, 0.0, -0.0985088985088985, 0.0, 0.04875969963800652, 0.0, -0.0233502574243315, 0.0}, 0.225386, 5e-06, false},
    {"C_202", 75, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.407214, 5e-06, false},
    {"C_203", 75, kDom01, 1, {{0.25, 0}}, {0.0, 1.0, 1.0, -1.3333333333333333, -1.8666666666666667, 1.0666666666666667, 1.8624338624338623, -0.6772486772486772, -1.4222222222222223, 0.37925925925925924, 0.9358345358345358, -0.197017797017797, -0.5607365458370749, 0.09751939927601304, 0.31522847522847525, -0.046700514848663, -0.16924332994298757}, 0.410407, 5e-06, false},
    {"C_204", 76, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 1.00228, 5.000000005000001e-06, false},
    {"C_205", 76, kDom01, 2, {{0.5, 1}, {0.5, 0}}, {0.0, 0.16666666666666666, 2.0, 1.6888888888888889, -3.7333333333333334, -3.7756613756613757, 3.7248677248677247, 4.478871252204586, -2.8444444444444446, -3.991252204585538, 1.8716690716690716, 3.013655428639556, -1.1214730916741498, -2.0423477996952424, 0.6304569504569505, 1.2827769064324723, -0.33848665988597515}, 0.442949, 5e-06, false},
    {"C_206", 77, kDom1Inf, 1, {{0.75, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.900755, 5e-06, false},
    {"C_207", 77, kDom01, 3, {{0.75, 2}, {1.0, 1}, {0.4166666666666667, 0}}, {0.0, -1.0, -0.4, 5.155555555555556, 3.564021164021164, -8.973544973544973, -7.756754850088184, 9.860740740740741, 10.084848484848484, -8.488183421516755, -10.00352131035729, 6.29000125330284, 8.391058271664974, -4.214721465091835, -6.2784555547506065, 2.627821165996495, 4.323803041684414}, 0.0770848, 5e-06, false},
    {"C_208", 78, kDom1Inf, 2, {{1.125, 3}, {1.5, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.0290593, 5e-06, false},
    {"C_209", 78, kDom01, 3, {{1.125, 3}, {1.5, 2}, {0.6666666666666666, 1}}, {0.16666666666666666, -0.2777777777777778, -3.466666666666667, -1.1978835978835978, 12.105820105820106, 7.694673721340388, -20.48, -16.418423387312277, 23.962289562289563, 22.575745342644815, -22.502601382940007, -24.172850428427147, 18.27741399889548, 21.982829185035996, -13.397520376777146, -17.81058550762985, 9.098921629883462}, -0.0857387, 5e-06, true},
    {"C_211", 46, kDom1Inf, 1, {{0.0625, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.00600775, 5e-06, false},
    {"C_212", 46, kDom01, 3, {{0.0625, 2}, {0.125, 1}, {0.041666666666666664, 0}}, {0.0, -0.08333333333333333, -0.058333333333333334, 0.03888888888888889, 0.041005291005291, -0.0164021164021164, -0.02351851851851852, 0.00671957671957672, 0.01228956228956229, -0.002731013842124953, -0.006091986398864706, 0.0011076338907026737, 0.0029184258813888444, -0.00044898859713674526, -0.0013648239116648704, 0.00018197652155531603, 0.0006269017645459927}, -0.0476744, 5e-06, false},
    {"C_213", 47, kDom1Inf, 2, {{0.125, 3}, {0.3125, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, -0.0290443, 5e-06, false},
    {"C_214", 47, kDom01, 3, {{0.125, 3}, {0.3125, 2}, {0.375, 1}}, {0.20833333333333334, -0.13333333333333333, -0.2916666666666667, -0.04735449735449736, 0.20502645502645503, 0.0919047619047619, -0.1175925925925926, -0.07815776815776816, 0.061447811447811446, 0.0527268224622722, -0.03045993199432353, -0.03169820890455811, 0.014592129406944222, 0.01776056897189795, -0.006824119558324351, -0.009484498668069935, 0.0031345088227299634}, 0.070711, 5e-06, false},
    {"C_221", 54, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.204961, 5e-06, false},
    {"C_222", 54, kDom01, 2, {{0.125, 1}, {0.25, 0}}, {0.0, 0.08333333333333333, -0.16666666666666666, -0.11666666666666667, 0.07777777777777778, 0.082010582010582, -0.0328042328042328, -0.04703703703703704, 0.01343915343915344, 0.02457912457912458, -0.005462027684249906, -0.012183972797729412, 0.0022152677814053475, 0.005836851762777689, -0.0008979771942734905, -0.0027296478233297407, 0.00036395304311063207}, -0.0215362, 5e-06, false},
    {"C_223", 55, kDom1Inf, 1, {{0.1875, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.776757, 5e-06, false},
    {"C_224", 55, kDom01, 3, {{0.1875, 2}, {0.5, 1}, {0.7083333333333334, 0}}, {0.0, 0.5, -0.20833333333333334, -0.6222222222222222, -0.1357142857142857, 0.4264550264550265, 0.20732804232804233, -0.2419047619047619, -0.16860509860509862, 0.12562663673774785, 0.1115456313234091, -0.06202749787934973, -0.06631484369050507, 0.029633247411025188, 0.03688596185546077, -0.013830215638204019, -0.019595899100685862}, 0.0651856, 5e-06, false},
    {"C_225", 56, kDom1Inf, 2, {{0.28125, 3}, {0.75, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 1.38567, 5.000000005000001e-06, false},
    {"C_226", 56, kDom01, 3, {{0.28125, 3}, {0.75, 2}, {0.9166666666666666, 1}}, {0.7916666666666666, 0.8680555555555556, 0.6166666666666667, -0.6251322751322751, -1.2880952380952382, -0.008813932980599647, 1.1858201058201059, 0.33767516434183104, -0.8433814333814333, -0.39271120903396034, 0.5264306651608239, 0.32313205769995895, -0.30341049818298493, -0.22654421533978542, 0.16564625626934995, 0.14427259660895406, -0.08693733662854244}, 1.14317, 5.000000005000001e-06, false},
    {"C_231", 65, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 0.681334, 5e-06, false},
    {"C_232", 65, kDom01, 1, {{0.25, 0}}, {0.0, 0.5, 0.16666666666666666, -0.3333333333333333, -0.23333333333333334, 0.15555555555555556, 0.164021164021164, -0.0656084656084656, -0.09407407407407407, 0.02687830687830688, 0.04915824915824916, -0.010924055368499812, -0.024367945595458823, 0.004430535562810695, 0.011673703525555378, -0.001795954388546981, -0.0054592956466594815}, 0.211416, 5e-06, false},
    {"C_233", 66, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 3.01566, 5.000000005000001e-06, false},
    {"C_234", 66, kDom01, 2, {{0.25, 1}, {0.75, 0}}, {0.0, 1.3333333333333333, 1.1666666666666667, -0.3, -1.3222222222222222, -0.35343915343915344, 0.8857142857142857, 0.4616931216931217, -0.4972486772486773, -0.36178932178932177, 0.2567153011597456, 0.23527523544454762, -0.12627026354010482, -0.13846653914378781, 0.06016447201632387, 0.07650157153425127, -0.028024384319518668}, 0.779446, 5e-06, false},
    {"C_235", 67, kDom1Inf, 1, {{0.375, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 6.28767, 5.000000005000001e-06, false},
    {"C_236", 67, kDom01, 3, {{0.375, 2}, {1.0, 1}, {1.125, 0}}, {0.0, 1.0833333333333333, 1.9444444444444444, 1.8555555555555556, -1.1145502645502645, -3.002645502645503, -0.2249559082892416, 2.6135449735449736, 0.8439554272887606, -1.8123895035006146, -0.8969680493913298, 1.1148888282009974, 0.7125789590904229, -0.6364542437769951, -0.4899743925350316, 0.3451227281769039, 0.308141092318594}, 1.152, 0.0005000000005, false},
    {"C_237", 68, kDom1Inf, 2, {{0.5625, 3}, {1.5, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 8.08805, 5.000000005000001e-06, false},
    {"C_238", 68, kDom01, 3, {{0.5625, 3}, {1.5, 2}, {1.8333333333333333, 1}}, {1.2083333333333333, -0.10277777777777777, 0.027777777777777776, 3.2497354497354496, 3.9177248677248677, -2.5591093474426807, -6.5182010582010586, 0.3274971941638608, 6.575662978996312, 1.289622243325947, -5.275631595525775, -1.8878642731623332, 3.7026980975129122, 1.8002497456472972, -2.378565859326934, -1.4219632077639608, 1.4342603575119457}, 1.92445, 5.000000005000001e-06, false},
    {"C_241", 79, kDom0Inf, 0, {{0.0, 0}}, {0.0, 0.5, 1.0, 0.3333333333333333, -0.6666666666666666, -0.4666666666666667, 0.3111111111111111, 0.328042328042328, -0.1312169312169312, -0.18814814814814815, 0.05375661375661376, 0.09831649831649832, -0.021848110736999625, -0.048735891190917646, 0.00886107112562139, 0.023347407051110755, -0.003591908777093962}, 3.09972, 5.000000005000001e-06, false},
    {"C_242", 80, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 10.9156, 5.0000000050000005e-05, false},
    {"C_243", 80, kDom01, 1, {{0.25, 0}}, {0.0, 1.0, 2.5, 2.6666666666666665, -0.36666666666666664, -2.8, -0.870899470899471, 1.837037037037037, 1.0174603174603174, -1.0213756613756613, -0.7727368927368927, 0.524354657687991, 0.49491841648455404, -0.25697106264302033, -0.28860678181313104, 0.12212489842119471, 0.15846243871516202}, 1.56177, 5.000000005000001e-06, false},
    {"C_244", 81, kDom1Inf, 0, {{0.0, 0}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 22.97, 0.0050000000050000005, false},
    {"C_245", 81, kDom01, 2, {{0.5, 1}, {1.25, 0}}, {0.0, 0.9166666666666666, 1.0, 4.188888888888889, 5.033333333333333, -1.8756613756613756, -6.891005291005291, -0.9116049382716049, 5.724338624338625, 2.049700176366843, -3.881494308160975, -2.0292113342272073, 2.3560479199421, 1.5636244573246336, -1.3330729595703141, -1.0564503566043144, 0.7182698406733266}, 1.9442, 5.0000000050000005e-05, false},
    {"C_246", 82, kDom1Inf, 1, {{0.75, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 31.5006, 5.0000000050000005e-05, false},
    {"C_247", 82, kDom01, 3, {{0.75, 2}, {2.0, 1}, {2.5416666666666665, 0}}, {0.0, 1.3333333333333333, -2.15, -1.8, 7.614021164021164, 10.838095238095239, -4.89326278659612, -15.64994708994709, -0.18896103896103897, 14.963715461493239, 3.476212536043224, -11.666152019252548, -4.488307505415089, 8.04185043880282, 4.090473883829626, -5.102254446830772, -3.1520675078465152}, 1.1744, 5.0000000050000005e-05, false},
    {"C_248", 83, kDom1Inf, 2, {{1.125, 3}, {3.0, 2}}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}, 30.8516, 5.0000000050000005e-05, false},
    {"C_249", 83, kDom01, 3, {{1.125, 3}, {3.0, 2}, {3.6666666666666665, 1}}, {2.7916666666666665, 2.1597222222222223, -0.30833333333333335, -8.272883597883597, -7.184656084656084, 15.437927689594357, 23.652433862433863, -11.798899577788466, -34.97392175725509, 2.7085407571068947, 36.69524463582665, 5.084338302888567, -31.698016714228356, -9.063999584078486, 24.131912858513957, 9.708079485552666, -16.804516053084217}, 3.12108, 5.000000005000001e-06, false},
};

static const AggregateSpec kAggregates[] = {
    {"K_11", "C_11", "C_12", -0.0416667, 5e-06, false},
    {"K_21", "C_21", "C_22", 0.0665749, 5e-06, false},
    {"K_22", "C_23", "C_24", -0.0833333, 5e-06, false},
    {"K_31", "C_31", "C_32", -0.15905, 5.000000005000001e-06, false},
    {"K_32", "C_33", "C_34", -0.125, 0.0005000000005, false},
    {"K_33", "C_35", "C_36", 0.0208333, 5e-06, false},
    {"K_41", "C_42", "C_43", 0.25, 0.0050000000050000005, false},
    {"K_42", "C_44", "C_45", 0.1875, 5.0000000050000005e-05, false},
    {"K_43", "C_46", "C_47", 1.9893e-09, 5e-06, false},
    {"K_51", "C_51", "C_52", -0.0416667, 5e-06, false},
    {"K_61", "C_61", "C_62", -0.0482868, 5e-06, false},
    {"K_62", "C_63", "C_64", -0.0833333, 5e-06, false},
    {"K_71", "C_71", "C_72", -0.0443832, 5e-06, false},
    {"K_72", "C_74", "C_75", 0.0833333, 5e-06, false},
    {"K_81", "C_82", "C_83", 0.25, 0.0050000000050000005, false},
    {"K_82", "C_85", "C_86", -0.0833333, 5e-06, false},
    {"K_91", "C_91", "C_92", -0.0416667, 5e-06, false},
    {"K_101", "C_101", "C_102", 0.183425, 5e-06, false},
    {"K_102", "C_103", "C_104", 0.166667, 5e-06, false},
    {"K_111", "C_111", "C_112", 0.89275, 5.000000005000001e-06, false},
    {"K_112", "C_113", "C_114", 0.375, 0.0005000000005, false},
    {"K_113", "C_115", "C_116", -0.104167, 5e-06, false},
    {"K_121", "C_122", "C_123", 0.25, 0.0050000000050000005, false},
    {"K_122", "C_124", "C_125", -0.3125, 5.0000000050000005e-05, false},
    {"K_123", "C_126", "C_127", 0.0833333, 5e-06, false},
    {"K_131", "C_131", "C_132", -0.0416667, 5e-06, false},
    {"K_132", "C_133", "C_134", 0.0416667, 5e-06, false},
    {"K_141", "C_141", "C_142", 0.0665749, 5e-06, false},
    {"K_142", "C_143", "C_144", -0.141758, 5e-06, false},
    {"K_143", "C_145", "C_146", -0.204861, 5e-06, false},
    {"K_151", "C_151", "C_152", -0.15905, 5.000000005000001e-06, false},
    {"K_152", "C_153", "C_154", -0.2759, 5.0000000050000005e-05, false},
    {"K_153", "C_155", "C_156", -0.473734, 5e-06, false},
    {"K_154", "C_157", "C_158", -0.0747, 5.0000000050000005e-05, false},
    {"K_161", "C_162", "C_163", 0.0785338, 5e-06, false},
    {"K_162", "C_164", "C_165", 0.302367, 5e-06, false},
    {"K_163", "C_166", "C_167", -0.309695, 5e-06, false},
    {"K_164", "C_168", "C_169", -0.275837, 5e-06, true},
    {"K_171", "C_171", "C_172", -0.0416667, 5e-06, false},
    {"K_181", "C_181", "C_182", -0.0482868, 5e-06, false},
    {"K_182", "C_183", "C_184", -0.304907, 5e-06, false},
    {"K_183", "C_185", "C_186", -0.321327, 5e-06, false},
    {"K_191", "C_191", "C_192", -0.0443832, 5e-06, false},
    {"K_192", "C_193", "C_194", 0.0646599, 5e-06, false},
    {"K_193", "C_195", "C_196", 0.164342, 5e-06, false},
    {"K_194", "C_197", "C_198", -0.170431, 5e-06, false},
    {"K_201", "C_202", "C_203", 0.817622, 5e-06, false},
    {"K_202", "C_204", "C_205", 1.44523, 5.000000005000001e-06, false},
    {"K_203", "C_206", "C_207", 0.977839, 5e-06, false},
    {"K_204", "C_208", "C_209", -0.0566794, 5e-06, true},
    {"K_211", "C_211", "C_212", -0.0416667, 5e-06, false},
    {"K_212", "C_213", "C_214", 0.0416667, 5e-06, false},
    {"K_221", "C_221", "C_222", 0.183425, 5e-06, false},
    {"K_222", "C_223", "C_224", 0.841942, 5e-06, false},
    {"K_223", "C_225", "C_226", 2.52884, 5.000000005000001e-06, false},
    {"K_231", "C_231", "C_232", 0.89275, 5.000000005000001e-06, false},
    {"K_232", "C_233", "C_234", 3.7951, 5.0000000050000005e-05, false},
    {"K_233", "C_235", "C_236", 7.43967, 5.000000005000001e-06, false},
    {"K_234", "C_237", "C_238", 10.0125, 5.0000000050000005e-05, false},
    {"K_241", "C_242", "C_243", 12.4774, 5.0000000050000005e-05, false},
    {"K_242", "C_244", "C_245", 24.9142, 5.0000000050000005e-05, false},
    {"K_243", "C_246", "C_247", 32.675, 0.0005000000005, false},
    {"K_244", "C_248", "C_249", 33.9727, 5.0000000050000005e-05, false},
};

static const FormSpec kForms[] = {
    {"T0k1", 6,
     {{kFtPi2, 0.03125, -2, 0, nullptr},
      {kFtGamma, -0.125, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtRat, 0.041666666666666664, -1, 0, nullptr},
      {kFtConst, 1.0, -1, 0, "K_11"},
      {kFtConst, -1.0, 0, 0, "C_13"}}},
    {"T1k1", 7,
     {{kFtGamma, 0.125, -2, 0, nullptr},
      {kFtRat, -0.25, -2, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtConst, 1.0, -2, 0, "K_21"},
      {kFtConst, -1.0, -1, 0, "K_22"},
      {kFtConst, 1.0, 0, 0, "C_25"}}},
    {"T2k1", 8,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, -0.125, -2, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtConst, 1.0, -3, 0, "K_31"},
      {kFtConst, -1.0, -2, 0, "K_32"},
      {kFtConst, 1.0, -1, 0, "K_33"},
      {kFtConst, -1.0, 0, 0, "C_37"}}},
    {"T3k1", 9,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, -0.125, -2, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtConst, 1.0, -4, 0, "C_41"},
      {kFtConst, -1.0, -3, 0, "K_41"},
      {kFtConst, 1.0, -2, 0, "K_42"},
      {kFtConst, -1.0, -1, 0, "K_43"},
      {kFtConst, 1.0, 0, 0, "C_48"}}},
    {"T0k2", 5,
     {{kFtPi2, 0.03125, -2, 0, nullptr},
      {kFtRat, -0.041666666666666664, 0, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtConst, 1.0, -1, 0, "K_51"},
      {kFtConst, -1.0, 0, 0, "C_53"}}},
    {"T1k2", 6,
     {{kFtGamma, 0.125, -2, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtRat, -0.041666666666666664, 0, 0, nullptr},
      {kFtConst, 1.0, -2, 0, "K_61"},
      {kFtConst, -1.0, -1, 0, "K_62"},
      {kFtConst, 1.0, 0, 0, "C_65"}}},
    {"T2k2", 8,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, 0.125, -2, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtRat, -0.041666666666666664, 0, 0, nullptr},
      {kFtConst, 1.0, -3, 0, "K_71"},
      {kFtConst, -1.0, -2, 0, "C_73"},
      {kFtConst, 1.0, -1, 0, "K_72"},
      {kFtConst, -1.0, 0, 0, "C_76"}}},
    {"T3k2", 9,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, 0.125, -2, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtRat, -0.041666666666666664, 0, 0, nullptr},
      {kFtConst, 1.0, -4, 0, "C_81"},
      {kFtConst, -1.0, -3, 0, "K_81"},
      {kFtConst, 1.0, -2, 0, "C_84"},
      {kFtConst, -1.0, -1, 0, "K_82"},
      {kFtConst, 1.0, 0, 0, "C_87"}}},
    {"T0k3", 4,
     {{kFtPi2, 0.03125, -2, 0, nullptr},
      {kFtGamma, 0.125, -1, 0, nullptr},
      {kFtRat, -0.041666666666666664, -1, 0, nullptr},
      {kFtRat, -0.020833333333333332, 0, 0, nullptr}}},
    {"T1k3", 7,
     {{kFtGamma, 0.125, -2, 0, nullptr},
      {kFtRat, 0.25, -2, 0, nullptr},
      {kFtRat, 0.16666666666666666, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtConst, 1.0, -2, 0, "K_101"},
      {kFtConst, -1.0, -1, 0, "K_102"},
      {kFtRat, -0.010416666666666666, 0, 0, nullptr}}},
    {"T2k3", 8,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, 0.375, -2, 0, nullptr},
      {kFtRat, 0.16666666666666666, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtConst, 1.0, -3, 0, "K_111"},
      {kFtConst, -1.0, -2, 0, "K_112"},
      {kFtConst, 1.0, -1, 0, "K_113"},
      {kFtRat, -0.00690272, 0, 0, nullptr}}},
    {"T3k3", 9,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, 0.375, -2, 0, nullptr},
      {kFtRat, 0.16666666666666666, -1, 0, nullptr},
      {kFtRat, 0.020833333333333332, 0, 0, nullptr},
      {kFtConst, 1.0, -4, 0, "C_121"},
      {kFtConst, -1.0, -3, 0, "K_121"},
      {kFtConst, 1.0, -2, 0, "K_122"},
      {kFtConst, -1.0, -1, 0, "K_123"},
      {kFtConst, 1.0, 0, 0, "C_128"}}},
    {"U0k1", 7,
     {{kFtRat, 0.125, -2, 0, nullptr},
      {kFtGamma, 0.125, 0, 0, nullptr},
      {kFtGamma, -0.125, -1, 0, nullptr},
      {kFtRat, -0.0625, 0, 0, nullptr},
      {kFtRat, 0.041666666666666664, -1, 0, nullptr},
      {kFtConst, 1.0, -1, 0, "K_131"},
      {kFtConst, -1.0, 0, 0, "K_132"}}},
    {"U1k1", 8,
     {{kFtGamma, 0.125, -2, 2, nullptr},
      {kFtGamma, -0.08333333333333333, 0, 2, nullptr},
      {kFtRat, -0.25, -2, 0, nullptr},
      {kFtRat, 0.16666666666666666, -1, 0, nullptr},
      {kFtRat, 0.14583333333333334, 0, 0, nullptr},
      {kFtConst, 1.0, -2, 0, "K_141"},
      {kFtConst, -1.0, -1, 0, "K_142"},
      {kFtConst, 1.0, 0, 0, "K_143"}}},
    {"U2k1", 10,
     {{kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, -0.125, -2, 0, nullptr},
      {kFtGamma, 0.16666666666666666, 0, 2, nullptr},
      {kFtGamma, -0.25, -2, 2, nullptr},
      {kFtRat, 0.0625, 0, 0, nullptr},
      {kFtConst, 1.0, -3, 0, "K_151"},
      {kFtConst, -1.0, -2, 0, "K_152"},
      {kFtConst, 1.0, -1, 0, "K_153"},
      {kFtConst, -1.0, 0, 0, "K_154"},
      {kFtRat, 0.125, 0, 0, nullptr}}},
    {"U3k1", 11,
     {{kFtRat, -0.25, -3, 0, nullptr},
      {kFtRat, -0.375, -2, 0, nullptr},
      {kFtRat, 0.3333333333333333, -1, 0, nullptr},
      {kFtGamma, 0.5, -2, 2, nullptr},
      {kFtGamma, -0.3333333333333333, 0, 2, nullptr},
      {kFtRat, 0.22916666666666666, 0, 0, nullptr},
      {kFtConst, 1.0, -4, 0, "C_161"},
      {kFtConst, -1.0, -3, 0, "K_161"},
      {kFtConst, 1.0, -2, 0, "K_162"},
      {kFtConst, -1.0, -1, 0, "K_163"},
      {kFtConst, 1.0, 0, 0, "K_164"}}},
    {"U0k2", 5,
     {{kFtRat, 0.125, -2, 0, nullptr},
      {kFtRat, -0.3333333333333333, -1, 0, nullptr},
      {kFtRat, 0.125, 0, 0, nullptr},
      {kFtConst, 1.0, -1, 0, "K_171"},
      {kFtConst, -1.0, 0, 0, "C_173"}}},
    {"U1k2", 9,
     {{kFtGamma, 0.125, -2, 2, nullptr},
      {kFtGamma, -0.25, -1, 2, nullptr},
      {kFtGamma, 0.16666666666666666, 0, 2, nullptr},
      {kFtRat, -0.041666666666666664, 0, 0, nullptr},
      {kFtRat, -0.08333333333333333, -1, 0, nullptr},
      {kFtConst, 1.0, -2, 0, "K_181"},
      {kFtConst, -1.0, -1, 0, "K_182"},
      {kFtConst, 1.0, 0, 0, "K_183"},
      {kFtRat, -0.041666666666666664, 0, 0, nullptr}}},
    {"U2k2", 10,
     {{kFtGamma, -0.25, -2, 2, nullptr},
      {kFtGamma, 0.5, -1, 2, nullptr},
      {kFtGamma, -0.3333333333333333, 0, 2, nullptr},
      {kFtRat, 0.125, 0, 0, nullptr},
      {kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, -0.375, -2, 0, nullptr},
      {kFtConst, 1.0, -3, 0, "K_191"},
      {kFtConst, -1.0, -2, 0, "K_192"},
      {kFtConst, 1.0, -1, 0, "K_193"},
      {kFtConst, -1.0, 0, 0, "K_194"}}},
    {"U3k2", 12,
     {{kFtGamma, 0.5, -2, 2, nullptr},
      {kFtGamma, -1.0, -1, 2, nullptr},
      {kFtGamma, 0.6666666666666666, 0, 2, nullptr},
      {kFtRat, -0.25, -3, 0, nullptr},
      {kFtRat, 0.375, -2, 0, nullptr},
      {kFtRat, -0.16666666666666666, -1, 0, nullptr},
      {kFtRat, -0.20833333333333334, 0, 0, nullptr},
      {kFtConst, 1.0, -4, 0, "C_201"},
      {kFtConst, -1.0, -3, 0, "K_201"},
      {kFtConst, 1.0, -2, 0, "K_202"},
      {kFtConst, -1.0, -1, 0, "K_203"},
      {kFtConst, 1.0, 0, 0, "K_204"}}},
    {"U0k3", 7,
     {{kFtGamma, 0.125, -1, 2, nullptr},
      {kFtGamma, -0.375, 0, 2, nullptr},
      {kFtRat, 0.1875, 0, 0, nullptr},
      {kFtRat, 0.125, -2, 0, nullptr},
      {kFtRat, -0.20833333333333334, -1, 0, nullptr},
      {kFtConst, 1.0, -1, 0, "K_211"},
      {kFtConst, -1.0, 0, 0, "K_212"}}},
    {"U1k3", 9,
     {{kFtGamma, 0.125, -2, 2, nullptr},
      {kFtGamma, -0.5, -1, 2, nullptr},
      {kFtGamma, 0.9166666666666666, 0, 2, nullptr},
      {kFtRat, -0.5833333333333334, -1, 0, nullptr},
      {kFtRat, -0.3541666666666667, 0, 0, nullptr},
      {kFtRat, 0.25, -2, 0, nullptr},
      {kFtConst, 1.0, -2, 0, "K_221"},
      {kFtConst, -1.0, -1, 0, "K_222"},
      {kFtConst, 1.0, 0, 0, "K_223"}}},
    {"U2k3", 11,
     {{kFtGamma, -0.25, -2, 2, nullptr},
      {kFtGamma, 1.0, -1, 2, nullptr},
      {kFtGamma, -1.8333333333333333, 0, 2, nullptr},
      {kFtRat, 0.5625, 0, 0, nullptr},
      {kFtRat, 0.25, -3, 0, nullptr},
      {kFtRat, -0.625, -2, 0, nullptr},
      {kFtRat, 0.75, -1, 0, nullptr},
      {kFtConst, 1.0, -3, 0, "K_231"},
      {kFtConst, -1.0, -2, 0, "K_232"},
      {kFtConst, 1.0, -1, 0, "K_233"},
      {kFtConst, -1.0, 0, 0, "K_234"}}},
    {"U3k3", 12,
     {{kFtGamma, 0.5, -2, 2, nullptr},
      {kFtGamma, -2.0, -1, 2, nullptr},
      {kFtGamma, 3.6666666666666665, 0, 2, nullptr},
      {kFtRat, 1.125, -2, 0, nullptr},
      {kFtRat, -1.9166666666666667, -1, 0, nullptr},
      {kFtRat, -0.25, -3, 0, nullptr},
      {kFtRat, -1.2708333333333333, 0, 0, nullptr},
      {kFtConst, 1.0, -4, 0, "C_241"},
      {kFtConst, -1.0, -3, 0, "K_241"},
      {kFtConst, 1.0, -2, 0, "K_242"},
      {kFtConst, -1.0, -1, 0, "K_243"},
      {kFtConst, 1.0, 0, 0, "K_244"}}},
};

static const PctRow kPct[] = {
    {"T0k1", 1.7e-05, 0.00128, 1},
    {"T1k1", 0.00102, 0.0193, 1},
    {"T2k1", 0.0458, 0.444, 2},
    {"T3k1", 0.07, 0.6, 3},
    {"T0k2", 3.35e-07, 1.01e-06, 1},
    {"T1k2", 0.00252, 0.029, 1},
    {"T2k2", 0.000407, 0.0135, 1},
    {"T3k2", 0.0186, 0.183, 2},
    {"T0k3", 0.4057, 1.208, 3},
    {"T1k3", 0.000436, 0.00695, 1},
    {"T2k3", 0.00367, 0.0376, 1},
    {"T3k3", 0.00154, 0.0163, 1},
    {"U0k1", 0.000118, 0.0122, 1},
    {"U1k1", 0.0333, 0.124, 2},
    {"U2k1", 0.0533, 0.555, 3},
    {"U3k1", 0.0833, 1.02, 3},
    {"U0k2", 0.146, 1.62, 3},
    {"U1k2", 0.018, 0.388, 2},
    {"U2k2", 0.000228, 0.00436, 1},
    {"U3k2", 0.0202, 0.228, 2},
    {"U0k3", 0.0426, 0.91, 3},
    {"U1k3", 0.0225, 0.812, 3},
    {"U2k3", 0.00246, 0.11, 2},
    {"U3k3", 0.0016, 0.0312, 1},
};

const KernelSpec* kernels(std::size_t* n) { *n = sizeof(kKernels) / sizeof(kKernels[0]); return kKernels; }
const ConstantSpec* constants(std::size_t* n) { *n = sizeof(kConstants) / sizeof(kConstants[0]); return kConstants; }
const AggregateSpec* aggregates(std::size_t* n) { *n = sizeof(kAggregates) / sizeof(kAggregates[0]); return kAggregates; }
const FormSpec* forms(std::size_t* n) { *n = sizeof(kForms) / sizeof(kForms[0]); return kForms; }
const PctRow* pct_table(std::size_t* n) { *n = sizeof(kPct) / sizeof(kPct[0]); return kPct; }

int kernel_index(const char* name) {
    std::size_t n; const KernelSpec* ks = kernels(&n);
    for (std::size_t i = 0; i < n; ++i)
        if (std::strcmp(ks[i].name, name) == 0) return static_cast<int>(i);
    return -1;
}

}  // namespace bisphere::detail
