#pragma once

// Frozen output of generate_fixtures.py (mpmath, 40 digits).

#include <array>

namespace fixtures {

struct ComplexRef {
  double re;
  double im;
};

inline constexpr ComplexRef kLogGamma3p4i{-1.756626784603784110530604181623, 4.742664438034657928194889407550};
inline constexpr ComplexRef kLogGammaM2p5p05i{-0.93508562129827747868, -8.87096288524745919865};
inline constexpr ComplexRef kLogGamma025m7i{-10.56295333904000193272, -6.23016050052965131256};

// |b|^2 for j = -1 (k = 2), m = 1.
inline constexpr double kBargmannK2M1Mp1T05 = 0.88362791597647760865;
inline constexpr double kBargmannK2M1Mp2T1 = 0.26416416999043718756;

inline constexpr ComplexRef kCFunctionK2Mp1M05T03{0.51733839568021526555, 0.16809225817395205462};
// m -> 0 limits for even k.
inline constexpr ComplexRef kCFunctionK2Mp3M0T04{0.18005619111319314031, 0.0};
inline constexpr ComplexRef kCFunctionK4Mp5M0T11{0.0, -0.35627140247379036180};
inline constexpr ComplexRef kLFunctionSigma0{0.05993813214188178095, 0.02301350253613511575};
inline constexpr ComplexRef kLFunctionSigma1{-0.20566986446517340052, -0.69113109486130930885};

// d^2(1), rows m' = -2..2, columns m = -2..2, from expm of the generator.
inline constexpr std::array<std::array<double, 5>, 5> kDMatrixJ2Theta1{{
    {0.59313279836567706033, -0.64805984911036867718, 0.43360464379963389532, -0.19341113569752782948,
     0.052830492497537342925},
    {0.64805984911036867718, 0.062077734660498665202, -0.55682868003716119112, 0.4782245712076410522,
     -0.19341113569752782948},
    {0.43360464379963389532, 0.55682868003716119112, -0.062110127410356790248, -0.55682868003716119112,
     0.43360464379963389532},
    {0.19341113569752782948, 0.4782245712076410522, 0.55682868003716119112, 0.062077734660498665202,
     -0.64805984911036867718},
    {0.052830492497537342925, 0.19341113569752782948, 0.43360464379963389532, 0.64805984911036867718,
     0.59313279836567706033},
}};

struct SeriesRef {
  double raw_mass;
  double h_joint;
  double h1;
  double h2;
  double slack;
};

// k = 2, m = 0.5, t = 0.3, truncation 64.
inline constexpr SeriesRef kMixedReport{1.634529751685358376, 3.0573449524705150564, 0.69301335429971535178,
                                        2.5282873300930485231, 0.16395573192224881845};
// s = 0.5, m = 0.5, t = 0.2, integer lattice, truncation 64.
inline constexpr SeriesRef kContinuousSigma0{1.3658196812947120496, 3.2177730073889280946, 0.69314694654309895571,
                                             2.724620636241848512, 0.19999457539601937308};
inline constexpr SeriesRef kContinuousSigma1{1.9099694847634416594, 2.9065660002098702488, 0.67025156544707651753,
                                             2.3100426867936725096, 0.073728252030878778316};

}  // namespace fixtures
