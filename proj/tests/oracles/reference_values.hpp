// Generated by tests/oracles/generate.py (mpmath, 30 digits). Do not edit.
#pragma once
#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace oracle {
using cplx = std::complex<double>;

inline constexpr double theta_one = 1.086434811213308014575316;
inline constexpr double psi2 = 4.37687923045295327767354;
inline constexpr double feller_mass = 1.894633974746304560828081;
inline constexpr double D2_at_4 = 4.281430660805780585620777;
inline constexpr double D1_at_4 = 2.00815471239588867875737;
inline constexpr double completed_zeta_half = -3.97696622550651287930219;
inline constexpr double xi0_at_2 = 0.5443965225759005326251722;

inline const std::vector<std::pair<cplx, cplx>> riemann_xi = {
    {{0.5, 0.0}, {0.49712077818831410991, 0.0}},
    {{2.0, 0.0}, {0.52359877559829887308, 0.0}},
    {{0.5, 14.13472499999999954}, {0.00000000019597928344536816591, 1.5844418479156225595e-40}},
    {{0.2999999999999999889, 7.0}, {0.15200945338940678119, -0.010817164613535753875}},
    {{3.0, -2.0}, {0.51072099437714915859, -0.11967579827594063821}},
    {{-1.5, 4.0}, {0.35116204298913689327, -0.1390124765996160797}},
    {{0.5, 30.0}, {-0.000000015016622479802074296, -1.2611886671408910404e-38}},
    {{0.5, 45.0}, {0.0000000000012755608300304362456, 1.5417593616092505999e-42}},
    {{0.5, 60.0}, {-0.0000000000000000029092748239358864396, -4.6604892293080741807e-48}},
    {{0.5, 100.0}, {-7.4100447940672859102e-31, -2.0271313364770860914e-60}},
    {{1.0, 1.0}, {0.48845380224722557061, 0.011301371570289481548}},
    {{-4.0, 0.5}, {0.77983948599359585463, -0.078923446487899726847}},
    {{6.0, 6.0}, {0.021489549691228571706, 0.47142355626545377936}},
    {{0.25, -20.0}, {-0.00003494519536409097685, -0.000014612186144330016826}},
    {{0.75, 80.0}, {-0.0000000000000000000000025995131669263193527, 0.00000000000000000000000046067823910149304551}},
    {{2.5, 12.0}, {-0.0010537649541849540424, 0.013428442014828374479}},
    {{-0.5, -9.0}, {0.059911263097964629638, 0.032333153144585181801}},
    {{0.5, 150.0}, {4.4892661359885437778e-49, 1.7908614534439881028e-78}},
    {{5.0, 25.0}, {-0.000009073062116351494972, -0.000019582894221343437681}},
    {{0.9000000000000000222, 3.2999999999999998224}, {0.38642078634959353041, 0.024025783153094154145}},
};
inline const std::vector<std::pair<cplx, cplx>> xi_u2 = {
    {{1.0, 5.0}, {0.25376667901239784985, 3.2076086986198034941e-32}},
    {{3.0, 1.0}, {0.5234007748170639939, 0.052727039674769776938}},
    {{1.0, 30.0}, {0.000000065967785624501911146, 5.3211392960286243227e-38}},
    {{-2.0, 4.0}, {0.33927879990408820982, -0.23990181419722368482}},
    {{1.5, 60.0}, {-0.0000000000000000069930105674164028359, -0.0000000000000000017285090858688263199}},
};
inline const std::vector<std::pair<cplx, cplx>> xi_u4 = {
    {{3.0, 1.0}, {0.44053795834844845906, 0.027839324846115595415}},
    {{2.0, 10.0}, {-0.012479939633709870451, -3.0027112802101983697e-33}},
    {{1.0, 28.269400000000000972}, {-0.00000000000041984109887969002506, 0.0000000000045234522421856859093}},
    {{5.0, -3.0}, {0.38267566795087686075, -0.24235540537563215595}},
    {{2.0, 40.0}, {0.00000000021027008913500687724, 2.4010721974951263956e-40}},
};
inline const std::vector<std::pair<cplx, cplx>> xi_u8 = {
    {{5.0, 1.0}, {0.16548039283949541675, 0.030477910268466006775}},
    {{4.0, 10.0}, {-0.082998400444310555037, -1.2546488358258856727e-32}},
    {{4.0, 30.0}, {-0.0000015593583660179671959, -1.2250185858271411348e-36}},
    {{1.0, 2.0}, {0.20165803207178512023, -0.21562088153905705109}},
};
inline const std::vector<std::pair<cplx, cplx>> xi_u0 = {
    {{3.0, 0.0}, {0.60517607077594468387, 0.0}},
    {{1.0, 4.0}, {0.35710378926860771912, 0.062502219030800443824}},
    {{-2.5, 0.5}, {0.56721930431069322739, -0.030061003547800237806}},
    {{0.0, 5.0}, {0.29135166271073449781, -2.2961981434711529673e-32}},
    {{0.0, 17.300000000000000711}, {0.00018739096659578966085, 1.5445804661894702129e-35}},
    {{4.0, 9.0}, {-0.0098047444757103476105, 0.12793995829499447918}},
    {{-7.0, 3.0}, {0.76542073712263945227, -0.88811964537500603965}},
    {{1.0, 11.0}, {0.027441085421959510522, 0.016763605189656890475}},
    {{0.0, 30.0}, {0.000000043464632008591026841, 1.1935177196582697404e-39}},
    {{2.0, 18.129400000000000404}, {-0.0000000041670346039353383335, 0.0000000015552235565306816451}},
};
inline const std::vector<double> zeta_zeros = {
    14.1347251417346938,
    21.022039638771555,
    25.0108575801456888,
    30.4248761258595132,
    32.9350615877391897,
    37.5861781588256713,
    40.9187190121474952,
    43.3270732809149995,
    48.0051508811671597,
    49.7738324776723022,
    52.9703214777144606,
    56.4462476970633948,
    59.3470440026023531,
    60.8317785246098098,
    65.1125440480816067,
    67.0798105294941737,
    69.5464017111739793,
    72.0671576744819076,
    75.7046906990839332,
    77.1448400688748054,
    79.3373750202493679,
    82.9103808540860302,
    84.7354929805170501,
    87.4252746131252294,
    88.8091112076344654,
    92.4918992705584843,
    94.651344040519887,
    95.8706342282453098,
    98.8311942181936922,
    101.317851005731391,
    103.725538040478339,
    105.446623052326094,
    107.168611184276408,
    111.029535543169675,
    111.874659176992637,
};
// 2 x ordinates of zeros of zeta(s) L(s, chi_-4), i.e. zeros of xi(2, .).
inline const std::vector<double> u2_zeros = {
    12.0418978093951933,
    20.4875406083331091,
    25.976196024624845,
    28.2694502834693876,
    32.6852142091744444,
    36.5839863922470697,
    42.04407927754311,
    42.901222687966921,
    46.5567530409190631,
    50.0217151602913775,
    51.4575128501774551,
    56.7192686860506556,
    59.3127680291863054,
    60.8497522517190264,
    65.1843730542343103,
    65.8701231754783794,
    68.3999150184262938,
    72.2857609166062757,
    75.1723563176513425,
    77.0238462834373826,
    80.6453481333810884,
    81.8374380242949904,
    83.6141692400091247,
    86.654146561829999,
    89.2357821173246068,
    91.1991687935831335,
    95.4831245618782825,
    96.0103017623343195,
    99.4462586475651721,
    99.5476649553446044,
};
// Coefficients of theta^3: r_3(m), brute force.
inline const std::vector<long> r3 = {1, 6, 12, 8, 6, 24, 24, 0, 12, 30, 24, 24, 8, 24, 48, 0, 6, 48, 36, 24, 24, 48, 24, 0, 24, 30, 72, 32, 0, 72, 48, 0, 12, 48, 48, 48, 30, 24, 72, 0, 24};
// (d^2 + w d)((theta(e^{2x})^w - 1)/w) by numerical differentiation at 30 digits: {w, x, value}.
inline const std::vector<std::array<double, 3>> gamma_kernel = {
    {1.5, -0.4, 0.49224658401706737974},
    {1.5, 0.0, 1.720855893949227995},
    {1.5, 0.3, 0.59905394002708398292},
    {-0.7, -0.4, 0.24487992553182027927},
    {-0.7, 0.0, 1.9529493240802238339},
    {-0.7, 0.3, 0.74113567710596976203},
    {3.0, -0.4, 0.77417417028616350517},
    {3.0, 0.0, 1.4678363903742643008},
    {3.0, 0.3, 0.4997471683390183759},
};
}  // namespace oracle
